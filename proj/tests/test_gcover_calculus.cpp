#include "htaut/errors.hpp"
#include "htaut/gc_degrees.hpp"
#include "htaut/graph_enumeration.hpp"
#include "htaut/hbar_intersection.hpp"
#include "htaut/hbar_pullback.hpp"
#include "htaut/hurwitz_count.hpp"
#include "htaut/res_cores.hpp"
#include "support/random_ggraph.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace htaut;
using namespace htaut::testing;

namespace {

Element gen(const GroupPtr& g, int power = 1) { return g->power(g->generator_elements().front(), power); }

// Cover of a genus-0 quotient vertex by its stabilizer, with the given legs.
BuiltGGraph single_vertex(const GroupPtr& g, const std::vector<Element>& legs, int quotient_genus = 0) {
    QuotientData q;
    q.group = g;
    q.genera = {quotient_genus};
    for (Element h : legs) q.legs.push_back({0, h});
    q.extra_stabilizer = {{}};
    return build_ggraph(q);
}

// Z/2 over a chain of two genus-0 quotient vertices, each with two fixed legs; the edge orbit is free.
BuiltGGraph banana() {
    const GroupPtr g = FiniteGroup::cyclic(2);
    QuotientData q;
    q.group = g;
    q.genera = {0, 0};
    q.edges.push_back({0, 1, 0, 0, false, false});
    q.legs = {{0, 1}, {0, 1}, {1, 1}, {1, 1}};
    q.extra_stabilizer = {{}, {}};
    return build_ggraph(q);
}

// m-gon of genus-1 vertices with Z/m rotating it.
BuiltGGraph polygon(int m) {
    const GroupPtr g = FiniteGroup::cyclic(m);
    QuotientData q;
    q.group = g;
    q.genera = {1};
    q.edges.push_back({0, 0, 0, gen(g), false, false});
    q.extra_stabilizer = {{}};
    return build_ggraph(q);
}

struct HurwitzOracle {
    Integer tuples = 0;
    Rational orbits;
};

std::vector<Permutation> all_permutations(int d) {
    std::vector<int> p(static_cast<std::size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> out;
    do out.emplace_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<int> full_type(std::vector<int> t, int d) {
    int s = std::accumulate(t.begin(), t.end(), 0);
    while (s++ < d) t.push_back(1);
    std::sort(t.rbegin(), t.rend());
    return t;
}

bool transitive(const std::vector<Permutation>& gens, int d) {
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (const auto& s : gens)
            if (!seen[static_cast<std::size_t>(s(x))]) {
                seen[static_cast<std::size_t>(s(x))] = true;
                stack.push_back(s(x));
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// Direct enumeration of all tuples and conjugation classes.
HurwitzOracle hurwitz_oracle(int d, const std::vector<std::vector<int>>& types) {
    const auto perms = all_permutations(d);
    std::vector<std::vector<Permutation>> classes;
    for (const auto& t : types) {
        classes.emplace_back();
        for (const auto& p : perms)
            if (p.cycle_type() == full_type(t, d)) classes.back().push_back(p);
    }
    HurwitzOracle out;
    std::set<std::vector<std::vector<int>>> canonical;
    std::vector<Permutation> tuple(types.size());
    auto rec = [&](auto& self, std::size_t i, const Permutation& product) -> void {
        if (i == types.size()) {
            if (!product.is_identity() || !transitive(tuple, d)) return;
            ++out.tuples;
            std::vector<std::vector<int>> best;
            for (const auto& c : perms) {
                std::vector<std::vector<int>> conj;
                for (const auto& s : tuple) conj.push_back((c * s * c.inverse()).images());
                if (best.empty() || conj < best) best = conj;
            }
            canonical.insert(best);
            return;
        }
        for (const auto& s : classes[i]) {
            tuple[i] = s;
            self(self, i + 1, product * s);
        }
    };
    rec(rec, 0, Permutation::identity(d));
    out.orbits = Rational(static_cast<long>(canonical.size()));
    return out;
}

Rational pair_with_psi(const StratumClass& cls, int rest) {
    if (rest < 0) return Rational(0);
    StratumClass m(cls.genus, cls.legs);
    Decoration d = cls.legs > 0 && rest > 0 ? psi_leg(0, rest) : (rest > 0 ? kappa_at(0, 1, rest) : Decoration{});
    m.add(Rational(1), StableGraph::edgeless(cls.genus, cls.legs), d);
    return integrate_stratum_class(multiply_by_pure(cls, m));
}

StratumClass push_H_terms(const std::vector<HIntersectionTerm>& terms, int g, int n) {
    StratumClass out(g, n);
    for (const auto& t : terms)
        for (const auto& [d, c] : t.excess().terms) out.add(c, t.gamma.graph(), d);
    return out;
}

}  // namespace

TEST_CASE("Riemann-Hurwitz target genus") {
    const auto triv = riemann_hurwitz_target(2, {FiniteGroup::trivial(), {}});
    CHECK(triv.target_genus == 2);
    CHECK(triv.marked_points == 0);
    const GroupPtr z2 = FiniteGroup::cyclic(2);
    const auto id = riemann_hurwitz_target(4, {z2, {1, 1}});
    CHECK(id.target_genus == 2);
    CHECK(id.marked_points == 2);
    CHECK(id.branch_points() == 2);
    CHECK_THROWS_AS(riemann_hurwitz_target(2, {z2, {1}}), ValidationError);
}

TEST_CASE("validator on hand-built graphs") {
    const auto plain = AdmissibleGGraph::trivial_group(StableGraph::edgeless(2, 0));
    CHECK(validate_admissible_g_graph(plain, riemann_hurwitz_target(2, {plain.group(), {}})).ok());

    const GroupPtr z2 = FiniteGroup::cyclic(2);
    const StableGraph loop = StableGraph::from_edges({1}, {0, 0}, {{0, 1}}, {});
    const AdmissibleGGraph flipped(z2, loop, {GraphAction{{0}, {1, 0}, {}}}, {0, 0}, {}, {});
    const auto report = validate_admissible_g_graph(flipped, HurwitzSpaceId{2, {z2, {}}, 0, 0});
    CHECK(report.labels() == std::vector<std::string>{"edge_collapse"});

    const StableGraph bridge = StableGraph::from_edges({1, 1}, {0, 1}, {{0, 1}}, {});
    const GroupPtr z3 = FiniteGroup::cyclic(3);
    const Element r = gen(z3);
    const AdmissibleGGraph unbalanced(z3, bridge, {GraphAction{{0, 1}, {0, 1}, {}}}, {r, r}, {}, {});
    const auto report2 = validate_admissible_g_graph(unbalanced, HurwitzSpaceId{2, {z3, {}}, 0, 0});
    const auto labels2 = report2.labels();
    CHECK(std::find(labels2.begin(), labels2.end(), "balancing") != labels2.end());

    CHECK_THROWS_AS(AdmissibleGGraph(z2, loop, {GraphAction{{0}, {0, 0}, {}}}, {0, 0}, {}, {}), ValidationError);
}

TEST_CASE("random valid G-graphs pass validation") {
    GGraphSampler s(101);
    for (int i = 0; i < 120; ++i) {
        const BuiltGGraph b = s.valid();
        const auto report = validate_admissible_g_graph(b.graph, b.id);
        CHECK_MESSAGE(report.ok(), (report.ok() ? "" : report.violations.front().message));
        CHECK(riemann_hurwitz_target(b.id.genus, b.id.xi).target_genus == b.id.target_genus);
    }
}

TEST_CASE("single-condition mutations are caught with the matching label") {
    GGraphSampler s(202);
    for (const auto& label : mutation_labels()) {
        int produced = 0;
        for (int attempt = 0; attempt < 2000 && produced < 12; ++attempt) {
            const auto m = try_mutation(s, label);
            if (!m) continue;
            ++produced;
            const auto report = validate_admissible_g_graph(m->graph, m->id);
            CHECK(report.labels() == std::vector<std::string>{label});
        }
        CHECK(produced == 12);
    }
}

TEST_CASE("restriction and corestriction of monodromy") {
    const GroupPtr z4 = FiniteGroup::cyclic(4);
    const Element h = gen(z4);
    const Subgroup sq = Subgroup::cyclic(z4, z4->power(h, 2));
    CHECK(restriction_exponent(*z4, h, sq) == 2);
    const RealizedSubgroup g1 = realize_subgroup(sq);
    const MonodromyDatum xi{z4, {h}};
    const RelabelingData rel = canonical_relabeling(xi, sq);
    const MonodromyDatum res = restriction_monodromy(xi, g1, rel);
    CHECK(rel.order.size() == 1);
    for (Element x : res.elements) CHECK(g1.lift(x) == z4->power(h, 2));

    const GroupPtr s3 = FiniteGroup::symmetric(3);
    const Element t12 = s3->element_of(Permutation::from_cycles(3, {{0, 1}}));
    const Subgroup a3 = Subgroup::generated_by(s3, {s3->element_of(Permutation::from_cycles(3, {{0, 1, 2}}))});
    const MonodromyDatum xs{s3, {t12}};
    const RelabelingData rel3 = canonical_relabeling(xs, a3);
    CHECK(rel3.order.size() == 1);
    CHECK(restriction_monodromy(xs, realize_subgroup(a3), rel3).elements == std::vector<Element>{0});

    const QuotientGroup q(s3, a3);
    const MonodromyDatum cq = corestriction_monodromy(MonodromyDatum{s3, {t12, t12}}, q);
    CHECK(cq.elements.size() == 2);
    CHECK(q.group()->order_of(cq.elements[0]) == 2);
    CHECK(cq.elements[0] == cq.elements[1]);
    const QuotientGroup whole(s3, Subgroup::whole(s3));
    CHECK(corestriction_monodromy(xs, whole).elements == std::vector<Element>{0});
    const MonodromyDatum same = restriction_monodromy(xs, realize_subgroup(Subgroup::whole(s3)),
                                                      canonical_relabeling(xs, Subgroup::whole(s3)));
    CHECK(same.elements.size() == 1);
}

TEST_CASE("relabeling data must hit every orbit once") {
    const GroupPtr z4 = FiniteGroup::cyclic(4);
    const MonodromyDatum xi{z4, {gen(z4, 2)}};
    const Subgroup triv = Subgroup::trivial(z4);
    RelabelingData rel = canonical_relabeling(xi, triv);
    CHECK(rel.order.size() == 2);
    rel.representatives[0][1] = rel.representatives[0][0];
    CHECK_THROWS_AS(check_relabeling(xi, triv, rel), ValidationError);
}

TEST_CASE("restricted and corestricted random G-graphs stay admissible") {
    GGraphSampler s(303);
    int restricted = 0, corestricted = 0;
    for (int i = 0; i < 80; ++i) {
        const BuiltGGraph b = s.valid();
        const GroupPtr& g = b.graph.group();
        const Subgroup h = Subgroup::generated_by(g, {s.element(*g)});
        const RealizedSubgroup rh = realize_subgroup(h);
        const RelabelingData rel = canonical_relabeling(b.id.xi, h);
        const AdmissibleGGraph r = restrict_graph(b.graph, rh, rel);
        const auto rr = validate_admissible_g_graph(r, restriction_id(b.id, rh, rel));
        CHECK_MESSAGE(rr.ok(), (rr.ok() ? "" : rr.violations.front().message));
        ++restricted;

        const Subgroup n = Subgroup::generated_by(g, {s.element(*g), s.element(*g)});
        if (!n.is_normal()) continue;
        const QuotientGroup q(g, n);
        const Corestriction c = corestrict_graph(b.graph, q);
        const auto cr = validate_admissible_g_graph(c.graph, corestriction_id(b.id, q));
        CHECK_MESSAGE(cr.ok(), (cr.ok() ? "" : cr.violations.front().message));
        CHECK(c.graph.graph().total_genus() == corestriction_id(b.id, q).genus);
        ++corestricted;
    }
    CHECK(restricted == 80);
    CHECK(corestricted > 20);
}

TEST_CASE("restriction to the trivial group separates every leg") {
    const BuiltGGraph b = single_vertex(FiniteGroup::cyclic(2), {1, 1, 1, 1, 1, 1});
    const Subgroup triv = Subgroup::trivial(b.graph.group());
    const RealizedSubgroup rt = realize_subgroup(triv);
    const RelabelingData rel = canonical_relabeling(b.id.xi, triv);
    const AdmissibleGGraph r = restrict_graph(b.graph, rt, rel);
    CHECK(r.leg_orbits().size() == 6);
    CHECK(r.group()->order() == 1);
    const auto whole = realize_subgroup(Subgroup::whole(b.graph.group()));
    const AdmissibleGGraph same =
        restrict_graph(b.graph, whole, canonical_relabeling(b.id.xi, Subgroup::whole(b.graph.group())));
    CHECK(same.graph() == b.graph.graph());
}

TEST_CASE("corestriction of a rotated polygon is a single loop") {
    for (int m = 2; m <= 6; ++m) {
        const BuiltGGraph p = polygon(m);
        REQUIRE(p.graph.graph().num_vertices() == m);
        const QuotientGroup q(p.graph.group(), Subgroup::whole(p.graph.group()));
        const Corestriction c = corestrict_graph(p.graph, q);
        CHECK(c.graph.graph().num_vertices() == 1);
        CHECK(c.graph.graph().num_edges() == 1);
        CHECK(c.graph.graph().vertex_genus(0) == 1);
        const QuotientGroup none(p.graph.group(), Subgroup::trivial(p.graph.group()));
        CHECK(are_isomorphic(corestrict_graph(p.graph, none).graph.graph(), p.graph.graph()));
    }
}

TEST_CASE("corestriction of the swapped two-component curve") {
    // Two genus-2 components exchanged by Z/2, both glued to a rational bridge carrying the two fixed points.
    const GroupPtr z2 = FiniteGroup::cyclic(2);
    QuotientData q;
    q.group = z2;
    q.genera = {2, 0};
    q.edges.push_back({0, 1, 0, 0, false, false});
    q.legs = {{1, 1}, {1, 1}};
    q.extra_stabilizer = {{}, {}};
    const BuiltGGraph b = build_ggraph(q);
    REQUIRE(b.graph.graph().num_vertices() == 3);
    CHECK(validate_admissible_g_graph(b.graph, b.id).ok());
    const QuotientGroup all(z2, Subgroup::whole(z2));
    const Corestriction c = corestrict_graph(b.graph, all);
    CHECK(c.graph.graph().num_vertices() == 2);
    CHECK(c.graph.graph().num_edges() == 1);
    std::vector<int> genera = c.graph.graph().genera();
    std::sort(genera.begin(), genera.end());
    CHECK(genera == std::vector<int>{0, 2});
    CHECK(validate_admissible_g_graph(c.graph, corestriction_id(b.id, all)).ok());
}

TEST_CASE("Hurwitz counts match direct enumeration") {
    const std::vector<std::pair<int, std::vector<std::vector<int>>>> cases{
        {2, {{2}, {2}}},
        {3, {{3}, {2}, {2, 1}}},
        {3, {{2}, {2}, {2}, {2}}},
        {4, {{4}, {2}, {3, 1}}},
        {4, {{2}, {2}, {2, 2}, {2, 2}}},
        {4, {{2}, {2}, {3, 1}, {3, 1}}},
        {4, {{3}, {3}, {2, 2}}},
        {5, {{5}, {2}, {4, 1}}},
        {5, {{5}, {2}, {3, 2}}},
        {5, {{3}, {2}, {2}, {3, 2}}},
    };
    for (const auto& [d, types] : cases) {
        const HurwitzOracle o = hurwitz_oracle(d, types);
        const HurwitzCounts c = hurwitz_cover_counts(d, types);
        CHECK(c.tuples == o.tuples);
        CHECK(c.conjugacy_orbits == o.orbits);
        CHECK(c.centralizer_weighted == Rational(o.tuples) / Rational(factorial(static_cast<unsigned>(d))));
    }
}

TEST_CASE("Hurwitz counts do not depend on the order of branch points") {
    std::vector<std::vector<int>> types{{3, 1}, {2}, {2, 2}, {4}};
    std::sort(types.begin(), types.end());
    const HurwitzCounts base = hurwitz_cover_counts(4, types);
    do {
        const HurwitzCounts c = hurwitz_cover_counts(4, types);
        CHECK(c.tuples == base.tuples);
        CHECK(c.conjugacy_orbits == base.conjugacy_orbits);
    } while (std::next_permutation(types.begin(), types.end()));
}

TEST_CASE("Hurwitz count examples and errors") {
    CHECK(hurwitz_cover_count(2, {{2}, {2}}) == Rational(1));
    CHECK(hurwitz_cover_count(3, {{3}, {2}, {2, 1}}) == Rational(1));
    CHECK(hurwitz_cover_count(4, {{2}, {2}, {3, 1}, {3, 1}}, 0, HurwitzMode::marked_fiber, {2, 3}) == Rational(6));
    CHECK(hurwitz_cover_count(3, {{2}, {2}}) == Rational(0));
    CHECK_THROWS_AS(hurwitz_cover_count(3, {{4}, {2}}), ValidationError);
    CHECK_THROWS_AS(hurwitz_cover_count(9, {{2}, {2}}), UnsupportedError);
    CHECK_THROWS_AS(hurwitz_cover_count(3, {{3}, {3}}, 1), UnsupportedError);
}

TEST_CASE("equivariant intersection with a smooth space") {
    const BuiltGGraph a = single_vertex(FiniteGroup::cyclic(2), {1, 1, 1, 1});
    const BuiltGGraph b = banana();
    REQUIRE(a.id.genus == b.id.genus);
    REQUIRE(a.id.xi.elements == b.id.xi.elements);
    const auto terms = boundary_intersection_H(a.graph, b.graph);
    REQUIRE_FALSE(terms.empty());
    for (const auto& t : terms) {
        CHECK(t.excess_edges.empty());
        CHECK(are_isomorphic(t.gamma.graph(), b.graph.graph()));
    }
}

TEST_CASE("equivariant self-intersection along a free edge orbit") {
    const BuiltGGraph b = banana();
    const auto edge_orbits = b.graph.edge_orbits();
    REQUIRE(edge_orbits.size() == 1);
    REQUIRE(edge_orbits[0].size() == 2);
    const auto terms = boundary_intersection_H(b.graph, b.graph);
    REQUIRE_FALSE(terms.empty());
    for (const auto& t : terms) {
        CHECK(are_isomorphic(t.gamma.graph(), b.graph.graph()));
        CHECK(t.excess_edges.size() == 1);
        CHECK(t.excess().terms.size() == 2);
    }
}

TEST_CASE("equivariant intersection rejects different Hurwitz data") {
    const BuiltGGraph a = single_vertex(FiniteGroup::cyclic(2), {1, 1, 1, 1});
    const BuiltGGraph c = single_vertex(FiniteGroup::cyclic(2), {1, 1, 1, 1, 1, 1});
    CHECK_THROWS_AS(boundary_intersection_H(a.graph, c.graph), ValidationError);
}

TEST_CASE("trivial-group intersections reduce to the plain calculus") {
    for (int g = 0; g <= 1; ++g)
        for (int n = 1; n <= 3; ++n) {
            if (2 * g - 2 + n <= 0) continue;
            const int dim = 3 * g - 3 + n;
            const auto graphs = stable_graphs(g, n, 2);
            for (const auto& a : graphs)
                for (const auto& b : graphs) {
                    const auto plain = boundary_intersection(a, b);
                    const auto equi =
                        boundary_intersection_H(AdmissibleGGraph::trivial_group(a), AdmissibleGGraph::trivial_group(b));
                    CHECK(equi.size() == plain.terms.size());
                    const int rest = dim - a.num_edges() - b.num_edges();
                    CHECK(pair_with_psi(push_H_terms(equi, g, n), rest) == pair_with_psi(plain.push_forward(), rest));
                }
        }
}

TEST_CASE("restriction boundary exponents") {
    const BuiltGGraph p = polygon(2);
    const AdmissibleGGraph& gamma = p.graph;
    const GroupPtr& g = gamma.group();
    const auto identity = identity_morphism(gamma.graph());
    const auto all = restriction_boundary_exponents(gamma, Subgroup::whole(g), gamma.graph(), identity);
    REQUIRE(all.size() == 1);
    CHECK(all[0].k == 1);
    const auto triv = restriction_boundary_exponents(gamma, Subgroup::trivial(g), gamma.graph(), identity);
    REQUIRE(triv.size() == 1);
    CHECK(triv[0].k == 2);
    const Contraction c = contract_edges(gamma.graph(), {0, 1});
    CHECK_THROWS_AS(restriction_boundary_exponents(gamma, Subgroup::trivial(g), c.graph, c.morphism), ValidationError);
}

TEST_CASE("corestriction boundary multiplicities") {
    const BuiltGGraph b = banana();
    const GroupPtr& z2 = b.graph.group();
    CHECK(corestriction_boundary_multiplicity(b.graph, QuotientGroup(z2, Subgroup::trivial(z2))).multiplicity ==
          Rational(1));

    // Z/2 fixing a bridge with monodromy of order two, quotiented by all of Z/2.
    QuotientData q;
    q.group = z2;
    q.genera = {0, 0};
    q.edges.push_back({0, 1, 1, 0, false, false});
    q.legs = {{0, 1}, {0, 1}, {0, 1}, {1, 1}, {1, 1}, {1, 1}};
    q.extra_stabilizer = {{}, {}};
    const BuiltGGraph fixed = build_ggraph(q);
    REQUIRE(validate_admissible_g_graph(fixed.graph, fixed.id).ok());
    CHECK(corestriction_boundary_multiplicity(fixed.graph, QuotientGroup(z2, Subgroup::whole(z2))).multiplicity ==
          Rational(2));

    // Ramification 2 over a node with common ramification lcm(2,3) = 6.
    const GroupPtr z6 = FiniteGroup::cyclic(6);
    const Element s = gen(z6);
    QuotientData r;
    r.group = z6;
    r.genera = {0, 0};
    r.edges.push_back({0, 1, s, 0, false, false});
    r.legs = {{0, z6->power(s, 3)}, {0, z6->power(s, 2)}, {1, z6->power(s, 3)}, {1, z6->power(s, 4)}};
    r.extra_stabilizer = {{}, {}};
    const BuiltGGraph node = build_ggraph(r);
    REQUIRE(validate_admissible_g_graph(node.graph, node.id).ok());
    const QuotientGroup by3(z6, Subgroup::cyclic(z6, z6->power(s, 2)));
    CHECK(corestriction_boundary_multiplicity(node.graph, by3).multiplicity == Rational(3));
}

TEST_CASE("normal bundle Chern class has one factor per edge orbit") {
    const BuiltGGraph a = single_vertex(FiniteGroup::cyclic(2), {1, 1, 1, 1});
    const NormalBundleChern none = normal_bundle_chern_H(a.graph);
    CHECK(none.factor_edges.empty());
    REQUIRE(none.total.terms.size() == 1);
    CHECK(none.total.terms.begin()->first.is_trivial());

    const NormalBundleChern one = normal_bundle_chern_H(banana().graph);
    CHECK(one.factor_edges.size() == 1);
    CHECK(one.total.terms.size() == 3);

    // Two edge orbits: the degree-two part is the product of the two linear factors.
    const GroupPtr z2 = FiniteGroup::cyclic(2);
    QuotientData q;
    q.group = z2;
    q.genera = {0, 1, 0};
    q.edges = {{0, 1, 0, 0, false, false}, {1, 2, 0, 0, false, false}};
    q.legs = {{0, 1}, {0, 1}, {2, 1}, {2, 1}};
    q.extra_stabilizer = {{}, {}, {}};
    const BuiltGGraph chain = build_ggraph(q);
    const NormalBundleChern two = normal_bundle_chern_H(chain.graph);
    REQUIRE(two.factor_edges.size() == 2);
    const StableGraph& g = chain.graph.graph();
    const auto [h1, k1] = g.edges()[static_cast<std::size_t>(two.factor_edges[0])];
    const auto [h2, k2] = g.edges()[static_cast<std::size_t>(two.factor_edges[1])];
    int quadratic = 0;
    for (const auto& [d, c] : two.total.terms) {
        if (d.degree() != 2) continue;
        ++quadratic;
        CHECK(c == Rational(1));
        CHECK(d.half_edge_psi.size() == 2);
        const bool first = d.half_edge_psi.count(h1) || d.half_edge_psi.count(k1);
        const bool second = d.half_edge_psi.count(h2) || d.half_edge_psi.count(k2);
        CHECK((first && second));
    }
    CHECK(quadratic == 4);
}

TEST_CASE("pullback formulas") {
    const GroupPtr z4 = FiniteGroup::cyclic(4);
    const Element h = gen(z4);
    const MonodromyDatum xi{z4, {h, z4->inverse(h)}};
    const Subgroup n = Subgroup::cyclic(z4, z4->power(h, 2));
    const QuotientGroup q(z4, n);
    const auto core = pullback_corestriction(xi, q, {HClassKind::psi, 1});
    REQUIRE(core.size() == 1);
    CHECK(core[0].coefficient == Rational(2));
    CHECK(pullback_corestriction(xi, q, {HClassKind::kappa, 2})[0].coefficient == Rational(Integer(1), Integer(2)));

    const auto rel = canonical_relabeling(xi, n);
    const auto res = pullback_restriction(xi, n, rel, {HClassKind::psi, 1});
    REQUIRE(res.size() == 1);
    CHECK(res[0].coefficient == Rational(1));

    const GroupPtr s3 = FiniteGroup::symmetric(3);
    const auto forget = pullback_forgetful(MonodromyDatum{s3, {s3->element_of(Permutation::from_cycles(3, {{0, 1}}))}},
                                           {HClassKind::kappa, 2});
    REQUIRE(forget.size() == 2);
    CHECK(forget[0].class_name == "kappa");
    CHECK(forget[1].coefficient == Rational(-6));
    CHECK(forget[1].point == 2);
    CHECK(forget[1].exponent == 2);
    CHECK(to_string(forget) == "1*kappa_2 - 6*psi_2^2");
}

TEST_CASE("corestriction pullback composes with the target comparisons") {
    GGraphSampler s(404);
    for (const auto& g : sample_groups()) {
        for (int trial = 0; trial < 10; ++trial) {
            const Subgroup n = Subgroup::generated_by(g, {s.element(*g)});
            if (!n.is_normal()) continue;
            const QuotientGroup q(g, n);
            const MonodromyDatum xi{g, {s.element(*g), s.element(*g)}};
            const MonodromyDatum xq = corestriction_monodromy(xi, q);
            for (int i = 1; i <= 2; ++i) {
                const Rational direct = pullback_target(xi, {HClassKind::psi, i})[0].coefficient;
                const Rational via = pullback_target(xq, {HClassKind::psi, i})[0].coefficient *
                                     pullback_corestriction(xi, q, {HClassKind::psi, i})[0].coefficient;
                CHECK(direct == via);
            }
            const Rational kd = pullback_target(xi, {HClassKind::kappa, 1})[0].coefficient;
            const Rational kv = pullback_target(xq, {HClassKind::kappa, 1})[0].coefficient *
                                pullback_corestriction(xi, q, {HClassKind::kappa, 1})[0].coefficient;
            CHECK(kd == kv);
        }
    }
}

TEST_CASE("boundary pullback of kappa sums over vertex orbits") {
    const BuiltGGraph b = banana();
    const auto terms = pullback_boundary(b.graph, {HClassKind::kappa, 1});
    REQUIRE(terms.size() == 2);
    for (const auto& t : terms) CHECK(t.coefficient == Rational(1));
    const auto psi = pullback_boundary(b.graph, {HClassKind::psi, 3});
    REQUIRE(psi.size() == 1);
    CHECK(psi[0].vertex == b.graph.graph().leg_vertex(b.graph.distinguished_legs()[2]));
}

TEST_CASE("degree formulas on substituted data") {
    const GroupPtr s3 = FiniteGroup::symmetric(3);
    std::vector<Element> id_images(static_cast<std::size_t>(s3->order()));
    std::iota(id_images.begin(), id_images.end(), 0);
    const GroupMap f{s3, s3, id_images};
    std::vector<std::pair<Element, Element>> diagonal;
    for (Element x : s3->generator_elements()) diagonal.emplace_back(x, x);
    CHECK(cores_cores_degree(f, f, diagonal, 1) == Rational(6));
    CHECK(cores_cores_degree(f, f, diagonal, 3) == Rational(6 * 36));
    CHECK_THROWS_AS(cores_cores_degree(f, f, {{1, 1}}, 1), ValidationError);

    const Element t = s3->element_of(Permutation::from_cycles(3, {{0, 1}}));
    CHECK(res_res_count(s3, {{t, Subgroup::trivial(s3)}}) == Rational(3));

    const Subgroup triv = Subgroup::trivial(s3);
    CHECK(res_cores_degree(triv, triv, {t, t}, 6, 6) == Rational(1));
    CHECK_THROWS_AS(res_cores_degree(Subgroup::whole(s3), triv, {t}, 6, 6), ValidationError);
}

TEST_CASE("fiber products of surjections") {
    const GroupPtr s3 = FiniteGroup::symmetric(3);
    const GroupPtr z2 = FiniteGroup::cyclic(2);
    std::vector<Element> sign(static_cast<std::size_t>(s3->order()));
    for (Element x = 0; x < s3->order(); ++x) {
        const auto type = s3->permutation(x).cycle_type();
        sign[static_cast<std::size_t>(x)] = type.front() == 2 ? 1 : 0;
    }
    const GroupMap f{s3, z2, sign};
    CHECK_NOTHROW(check_surjective_homomorphism(f));
    CHECK(fiber_product(f, f).group.order() == 18);
    GroupMap broken = f;
    broken.images[1] = 1 - broken.images[1];
    CHECK_THROWS_AS(check_surjective_homomorphism(broken), ValidationError);
}
