#include "htaut/errors.hpp"
#include "htaut/graph_enumeration.hpp"
#include "htaut/stable_graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace htaut;

namespace {

// Relabel vertices and half-edges of g by random permutations.
StableGraph shuffled(const StableGraph& g, std::mt19937& rng) {
    std::vector<int> vp(static_cast<std::size_t>(g.num_vertices())), hp(static_cast<std::size_t>(g.num_half_edges()));
    std::iota(vp.begin(), vp.end(), 0);
    std::iota(hp.begin(), hp.end(), 0);
    std::shuffle(vp.begin(), vp.end(), rng);
    std::shuffle(hp.begin(), hp.end(), rng);
    std::vector<int> genera(vp.size()), hv(hp.size()), inv(hp.size()), legs;
    for (int v = 0; v < g.num_vertices(); ++v) genera[static_cast<std::size_t>(vp[static_cast<std::size_t>(v)])] = g.vertex_genus(v);
    for (int h = 0; h < g.num_half_edges(); ++h) {
        hv[static_cast<std::size_t>(hp[static_cast<std::size_t>(h)])] = vp[static_cast<std::size_t>(g.half_edge_vertex(h))];
        inv[static_cast<std::size_t>(hp[static_cast<std::size_t>(h)])] = hp[static_cast<std::size_t>(g.partner(h))];
    }
    for (int l = 0; l < g.num_legs(); ++l) legs.push_back(vp[static_cast<std::size_t>(g.leg_vertex(l))]);
    return StableGraph(genera, hv, inv, legs);
}

}  // namespace

TEST_CASE("stable graph construction rejects malformed data") {
    CHECK_THROWS_AS(StableGraph::edgeless(0, 2), ValidationError);
    CHECK_THROWS_AS(StableGraph::from_edges({0, 0}, {0, 1}, {{0, 1}}, {0, 0, 1}), ValidationError);
    CHECK_THROWS_AS(StableGraph({1}, {0, 0}, {0, 1}, {0}), ValidationError);
    CHECK_THROWS_AS(StableGraph::from_edges({1, 1}, {}, {}, {0, 1}), ValidationError);
    const StableGraph loop = StableGraph::from_edges({0}, {0, 0}, {{0, 1}}, {0});
    CHECK(loop.total_genus() == 1);
    CHECK(loop.loops_at(0) == 1);
    CHECK(loop.valence(0) == 3);
}

TEST_CASE("strata counts of small moduli spaces") {
    CHECK(stable_graphs(0, 4, 1).size() == 4);
    CHECK(stable_graphs(0, 5, 2).size() == 1 + 10 + 15);
    CHECK(stable_graphs(1, 1, 2).size() == 2);
    CHECK(stable_graphs(1, 2, 2).size() == 5);
    CHECK(stable_graphs(2, 0, 3).size() == 7);
    for (const auto& g : stable_graphs(2, 1, 2)) CHECK(g.total_genus() == 2);
}

TEST_CASE("automorphism group orders") {
    const StableGraph loop = StableGraph::from_edges({0}, {0, 0}, {{0, 1}}, {0});
    CHECK(automorphism_group(loop).size() == 2);
    const StableGraph two_loops = StableGraph::from_edges({0}, {0, 0, 0, 0}, {{0, 1}, {2, 3}}, {});
    CHECK(automorphism_group(two_loops).size() == 8);
    const StableGraph theta = StableGraph::from_edges({0, 0}, {0, 0, 0, 1, 1, 1}, {{0, 3}, {1, 4}, {2, 5}}, {});
    CHECK(automorphism_group(theta).size() == 12);
    const StableGraph split = StableGraph::from_edges({1, 1}, {0, 1}, {{0, 1}}, {});
    CHECK(automorphism_group(split).size() == 2);
}

TEST_CASE("isomorphism classes are stable under relabeling") {
    std::mt19937 rng(29);
    for (int g = 0; g <= 2; ++g)
        for (int n = 0; n <= 3; ++n) {
            if (2 * g - 2 + n <= 0 || (g == 2 && n > 1)) continue;
            const auto graphs = stable_graphs(g, n, 2);
            for (const auto& graph : graphs) {
                const StableGraph s = shuffled(graph, rng);
                CHECK(are_isomorphic(graph, s));
                CHECK(graph.invariant_key() == s.invariant_key());
                int matches = 0;
                for (const auto& other : graphs) matches += are_isomorphic(s, other) ? 1 : 0;
                CHECK(matches == 1);
            }
        }
}

TEST_CASE("automorphisms form a group") {
    for (const auto& g : stable_graphs(1, 2, 2)) {
        const auto auts = automorphism_group(g);
        for (const auto& a : auts) {
            CHECK(std::find(auts.begin(), auts.end(), inverse(a)) != auts.end());
            for (const auto& b : auts) CHECK(std::find(auts.begin(), auts.end(), compose(a, b)) != auts.end());
        }
    }
}

TEST_CASE("edge contraction preserves genus and yields a morphism") {
    for (const auto& g : stable_graphs(1, 3, 2)) {
        for (int e = 0; e < g.num_edges(); ++e) {
            const Contraction c = contract_edges(g, {e});
            CHECK(c.graph.total_genus() == g.total_genus());
            CHECK(c.graph.num_edges() == g.num_edges() - 1);
            CHECK_NOTHROW(check_morphism(g, c.graph, c.morphism));
            const auto morphisms = all_morphisms(g, c.graph);
            CHECK(std::find(morphisms.begin(), morphisms.end(), c.morphism) != morphisms.end());
            for (const auto& f : morphisms) CHECK_NOTHROW(check_morphism(g, c.graph, f));
        }
        for (const auto& d : one_edge_degenerations(g)) {
            CHECK(d.num_edges() == g.num_edges() + 1);
            CHECK(d.total_genus() == g.total_genus());
        }
    }
}

TEST_CASE("generic (A,B)-graphs cover both edge sets") {
    const auto graphs = stable_graphs(0, 5, 2);
    for (const auto& a : graphs)
        for (const auto& b : graphs) {
            for (const auto& t : enumerate_generic_AB(a, b)) {
                CHECK_NOTHROW(check_morphism(t.gamma, a, t.to_A));
                CHECK_NOTHROW(check_morphism(t.gamma, b, t.to_B));
                auto ea = image_edges(t.gamma, t.to_A), eb = image_edges(t.gamma, t.to_B);
                std::vector<int> all = ea;
                all.insert(all.end(), eb.begin(), eb.end());
                std::sort(all.begin(), all.end());
                all.erase(std::unique(all.begin(), all.end()), all.end());
                CHECK(static_cast<int>(all.size()) == t.gamma.num_edges());
                CHECK(static_cast<int>(t.common_edges().size()) == a.num_edges() + b.num_edges() - t.gamma.num_edges());
            }
        }
}

TEST_CASE("one-loop self-intersection has two triples on a single graph") {
    const StableGraph loop = StableGraph::from_edges({0}, {0, 0}, {{0, 1}}, {0});
    const auto triples = enumerate_generic_AB(loop, loop);
    int same_as_loop = 0;
    for (const auto& t : triples) same_as_loop += are_isomorphic(t.gamma, loop) ? 1 : 0;
    CHECK(same_as_loop == 2);
}
