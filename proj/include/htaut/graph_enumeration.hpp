#pragma once

#include "htaut/stable_graph.hpp"

#include <vector>

namespace htaut {

// All stable graphs of type (g, n) with at most max_edges edges, one per isomorphism class,
// ordered by edge count and then by discovery order.
std::vector<StableGraph> stable_graphs(int genus, int legs, int max_edges);

// One-edge degenerations of a graph (not deduplicated).
std::vector<StableGraph> one_edge_degenerations(const StableGraph& g);

// Every morphism source -> target.
std::vector<GraphMorphism> all_morphisms(const StableGraph& source, const StableGraph& target);

struct GenericABGraph {
    StableGraph gamma;
    GraphMorphism to_A;
    GraphMorphism to_B;
    // Edges of gamma hit by both morphisms.
    std::vector<int> common_edges() const;
};

// Triples (Gamma, Gamma -> A, Gamma -> B) with E(A) + E(B) -> E(Gamma) surjective,
// one per isomorphism class of triples.
std::vector<GenericABGraph> enumerate_generic_AB(const StableGraph& a, const StableGraph& b);

}  // namespace htaut
