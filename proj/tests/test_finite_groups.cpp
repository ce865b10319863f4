#include "htaut/errors.hpp"
#include "htaut/finite_group.hpp"
#include "htaut/permutation.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace htaut;

namespace {

Permutation random_permutation(std::mt19937& rng, int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation(images);
}

// Closure by repeated multiplication, independent of the library's enumeration.
std::set<std::vector<int>> closure(int n, const std::vector<Permutation>& gens) {
    std::set<std::vector<int>> seen{Permutation::identity(n).images()};
    std::vector<Permutation> frontier{Permutation::identity(n)};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier)
            for (const auto& s : gens) {
                Permutation q = s * p;
                if (seen.insert(q.images()).second) next.push_back(q);
            }
        frontier = std::move(next);
    }
    return seen;
}

}  // namespace

TEST_CASE("permutation product composes right to left") {
    const Permutation p = Permutation::from_cycles(3, {{0, 1}});
    const Permutation q = Permutation::from_cycles(3, {{1, 2}});
    CHECK((p * q)(1) == p(q(1)));
    CHECK((p * q).to_string() == "(1 2 3)");
    CHECK(Permutation::from_cycles(5, {{0, 1, 2}, {3, 4}}).order() == 6);
    CHECK(Permutation::from_cycles(5, {{0, 1, 2}, {3, 4}}).cycle_type() == std::vector<int>{3, 2});
    CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0}), ValidationError);
}

TEST_CASE("permutation algebra on random samples") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const Permutation a = random_permutation(rng, 6), b = random_permutation(rng, 6), c = random_permutation(rng, 6);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * a.inverse()).is_identity());
        CHECK(a.pow(a.order()).is_identity());
        CHECK(a.pow(-1) == a.inverse());
    }
}

TEST_CASE("group orders match an independent closure") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 5)(rng);
        std::vector<Permutation> gens{random_permutation(rng, n), random_permutation(rng, n)};
        const GroupPtr g = FiniteGroup::from_generators(n, gens);
        CHECK(g->order() == static_cast<int>(closure(n, gens).size()));
        CHECK(g->permutation(g->identity()).is_identity());
    }
    CHECK(FiniteGroup::symmetric(4)->order() == 24);
    CHECK(FiniteGroup::cyclic(7)->order() == 7);
    CHECK(FiniteGroup::trivial()->order() == 1);
    CHECK(FiniteGroup::direct_product(*FiniteGroup::symmetric(3), *FiniteGroup::cyclic(2))->order() == 12);
    CHECK_FALSE(FiniteGroup::symmetric(3)->is_abelian());
}

TEST_CASE("element arithmetic mirrors permutation arithmetic") {
    const GroupPtr g = FiniteGroup::symmetric(4);
    for (Element a = 0; a < g->order(); ++a)
        for (Element b = 0; b < g->order(); b += 5) {
            CHECK(g->permutation(g->multiply(a, b)) == g->permutation(a) * g->permutation(b));
            CHECK(g->permutation(g->conjugate(a, b)) ==
                  g->permutation(a) * g->permutation(b) * g->permutation(a).inverse());
        }
    CHECK_THROWS_AS(g->element_of(Permutation::identity(5)), ValidationError);
}

TEST_CASE("cosets partition the group and orbits obey orbit-stabilizer") {
    std::mt19937 rng(23);
    const GroupPtr g = FiniteGroup::symmetric(4);
    for (int trial = 0; trial < 60; ++trial) {
        const Element x = std::uniform_int_distribution<int>(0, 23)(rng);
        const Element y = std::uniform_int_distribution<int>(0, 23)(rng);
        const Subgroup h = Subgroup::generated_by(g, {x});
        const Subgroup k = Subgroup::generated_by(g, {y});
        CHECK(g->order() % h.order() == 0);
        const CosetSpace cs = coset_space(k);
        CHECK(cs.size() * k.order() == g->order());
        for (Element t = 0; t < g->order(); ++t)
            CHECK(cs.coset_of[static_cast<std::size_t>(t)] == cs.coset_of[static_cast<std::size_t>(g->multiply(t, y))]);
        int total = 0;
        for (const auto& orbit : orbit_on_cosets(h, k)) {
            total += static_cast<int>(orbit.cosets.size());
            const Subgroup stab = h.intersect(k.conjugate_by(orbit.representative));
            CHECK(static_cast<int>(orbit.cosets.size()) * stab.order() == h.order());
        }
        CHECK(total == cs.size());
    }
}

TEST_CASE("quotients by normal subgroups") {
    const GroupPtr s4 = FiniteGroup::symmetric(4);
    const Subgroup v4 = Subgroup::generated_by(
        s4, {s4->element_of(Permutation::from_cycles(4, {{0, 1}, {2, 3}})),
             s4->element_of(Permutation::from_cycles(4, {{0, 2}, {1, 3}}))});
    REQUIRE(v4.order() == 4);
    REQUIRE(v4.is_normal());
    const QuotientGroup q(s4, v4);
    CHECK(q.group()->order() == 6);
    for (Element a = 0; a < s4->order(); ++a) {
        CHECK(q.project(q.lift(q.project(a))) == q.project(a));
        for (Element b = 0; b < s4->order(); ++b)
            CHECK(q.project(s4->multiply(a, b)) == q.group()->multiply(q.project(a), q.project(b)));
    }
    const Subgroup not_normal = Subgroup::cyclic(s4, s4->element_of(Permutation::from_cycles(4, {{0, 1}})));
    CHECK(not_normal.normality_witness().has_value());
    CHECK_THROWS_AS(QuotientGroup(s4, not_normal), ValidationError);
    CHECK_THROWS_AS(Subgroup::from_elements(s4, {0, s4->element_of(Permutation::from_cycles(4, {{0, 1, 2}}))}),
                    ValidationError);
}
