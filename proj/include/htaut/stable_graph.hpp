#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace htaut {

// Dual graph of a nodal marked curve. Vertices, half-edges and legs are 0-based;
// leg i carries the marking i+1.
class StableGraph {
public:
    StableGraph() = default;
    // Validates the involution, stability and (unless allowed) connectivity.
    StableGraph(std::vector<int> genera, std::vector<int> half_edge_vertex, std::vector<int> involution,
                std::vector<int> leg_vertex, bool allow_disconnected = false);

    static StableGraph edgeless(int genus, int legs);
    // Builds the involution from a list of half-edge pairs.
    static StableGraph from_edges(std::vector<int> genera, std::vector<int> half_edge_vertex,
                                  const std::vector<std::pair<int, int>>& edges, std::vector<int> leg_vertex);

    int num_vertices() const { return static_cast<int>(genera_.size()); }
    int num_half_edges() const { return static_cast<int>(half_edge_vertex_.size()); }
    int num_edges() const { return num_half_edges() / 2; }
    int num_legs() const { return static_cast<int>(leg_vertex_.size()); }

    int vertex_genus(int v) const { return genera_.at(static_cast<std::size_t>(v)); }
    int half_edge_vertex(int h) const { return half_edge_vertex_.at(static_cast<std::size_t>(h)); }
    int partner(int h) const { return involution_.at(static_cast<std::size_t>(h)); }
    int leg_vertex(int i) const { return leg_vertex_.at(static_cast<std::size_t>(i)); }

    const std::vector<int>& genera() const { return genera_; }
    const std::vector<int>& half_edge_vertices() const { return half_edge_vertex_; }
    const std::vector<int>& involution() const { return involution_; }
    const std::vector<int>& leg_vertices() const { return leg_vertex_; }

    // Edges as (h, partner(h)) with h < partner(h), ordered by h.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_of(int h) const { return edge_index_.at(static_cast<std::size_t>(h)); }
    bool is_loop(int edge) const;

    std::vector<int> half_edges_at(int v) const;
    std::vector<int> legs_at(int v) const;
    int valence(int v) const;  // n(v): half-edges plus legs
    int loops_at(int v) const;
    int h1() const;
    int total_genus() const;
    bool is_connected() const;

    // Isomorphism-invariant summary, used as a bucket key before exact isomorphism tests.
    std::string invariant_key() const;
    std::string to_string() const;

    friend bool operator==(const StableGraph& a, const StableGraph& b) {
        return a.genera_ == b.genera_ && a.half_edge_vertex_ == b.half_edge_vertex_ &&
               a.involution_ == b.involution_ && a.leg_vertex_ == b.leg_vertex_;
    }
    friend auto operator<=>(const StableGraph& a, const StableGraph& b) {
        return std::tie(a.genera_, a.half_edge_vertex_, a.involution_, a.leg_vertex_) <=>
               std::tie(b.genera_, b.half_edge_vertex_, b.involution_, b.leg_vertex_);
    }

private:
    std::vector<int> genera_;
    std::vector<int> half_edge_vertex_;
    std::vector<int> involution_;
    std::vector<int> leg_vertex_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> edge_index_;
};

int graph_genus(const StableGraph& g);

// Morphism source -> target: vertex surjection forward, half-edge injection backward.
struct GraphMorphism {
    std::vector<int> vertex_map;     // V(source) -> V(target)
    std::vector<int> half_edge_map;  // H(target) -> H(source)
    friend bool operator==(const GraphMorphism&, const GraphMorphism&) = default;
    friend auto operator<=>(const GraphMorphism&, const GraphMorphism&) = default;
};

// Throws ValidationError describing the first failed compatibility condition.
void check_morphism(const StableGraph& source, const StableGraph& target, const GraphMorphism& f);

GraphMorphism compose(const GraphMorphism& first, const GraphMorphism& second);  // second after first
GraphMorphism identity_morphism(const StableGraph& g);
// Edges of the source that are images of target edges (edge indices of the source).
std::vector<int> image_edges(const StableGraph& source, const GraphMorphism& f);

// Automorphism as forward permutations; legs are fixed.
struct GraphAutomorphism {
    std::vector<int> vertex_perm;
    std::vector<int> half_edge_perm;
    friend bool operator==(const GraphAutomorphism&, const GraphAutomorphism&) = default;
    friend auto operator<=>(const GraphAutomorphism&, const GraphAutomorphism&) = default;
};

GraphAutomorphism compose(const GraphAutomorphism& first, const GraphAutomorphism& second);
GraphAutomorphism inverse(const GraphAutomorphism& a);
GraphMorphism as_morphism(const GraphAutomorphism& a);

// All leg-preserving isomorphisms a -> b, as forward maps.
std::vector<GraphAutomorphism> isomorphisms(const StableGraph& a, const StableGraph& b, bool first_only = false);
bool are_isomorphic(const StableGraph& a, const StableGraph& b);
std::vector<GraphAutomorphism> automorphism_group(const StableGraph& g);

struct Contraction {
    StableGraph graph;
    GraphMorphism morphism;  // original -> contracted
};

// Contract the edges with the given indices.
Contraction contract_edges(const StableGraph& g, const std::vector<int>& edges);

}  // namespace htaut
