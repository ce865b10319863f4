#pragma once

#include "htaut/graph_enumeration.hpp"
#include "htaut/rational.hpp"
#include "htaut/stable_graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace htaut {

// psi/kappa monomial on Mbar_Gamma = prod_v Mbar_{g(v), n(v)}.
struct Decoration {
    std::map<int, int> leg_psi;                   // leg index -> exponent
    std::map<int, int> half_edge_psi;             // half-edge index -> exponent
    std::map<int, std::map<int, int>> kappa;      // vertex -> (kappa index -> exponent)

    int degree() const;
    bool is_trivial() const { return leg_psi.empty() && half_edge_psi.empty() && kappa.empty(); }
    // Throws ValidationError if the decoration refers to flags or vertices missing from g.
    void check(const StableGraph& g) const;
    // psi exponents of the flags at v (legs first, then half-edges, each ascending) and kappa at v.
    std::vector<int> vertex_psi(const StableGraph& g, int v) const;

    friend Decoration operator*(const Decoration& a, const Decoration& b);
    friend bool operator==(const Decoration&, const Decoration&) = default;
    friend auto operator<=>(const Decoration&, const Decoration&) = default;
};

Decoration psi_leg(int leg, int exponent = 1);
Decoration psi_half_edge(int half_edge, int exponent = 1);
Decoration kappa_at(int vertex, int index, int exponent = 1);

// Linear combination of decorations on a fixed graph: a class on Mbar_Gamma.
struct GraphClass {
    StableGraph graph;
    std::map<Decoration, Rational> terms;

    void add(const Decoration& d, const Rational& c);
    GraphClass& operator*=(const GraphClass& other);
    std::string to_string() const;
};

struct StratumTerm {
    Rational coefficient;
    StableGraph graph;
    Decoration decoration;
    int codimension() const { return graph.num_edges() + decoration.degree(); }
};

// Formal combination of pushforwards xi_{Gamma*}(decoration) on Mbar_{g,n}; pushforwards carry no
// automorphism factors.
struct StratumClass {
    int genus = 0;
    int legs = 0;
    std::vector<StratumTerm> terms;

    StratumClass() = default;
    StratumClass(int g, int n) : genus(g), legs(n) {}

    void add(const Rational& c, const StableGraph& graph, const Decoration& d);
    // Drops zero terms and merges identical (graph, decoration) pairs, keeping first-seen order.
    StratumClass simplified() const;
    StratumClass& operator+=(const StratumClass& other);
    friend StratumClass operator*(const Rational& c, const StratumClass& s);
    // All terms must be supported on the edgeless graph.
    bool is_pure() const;
    std::string to_string() const;
};

StratumClass psi_class(int genus, int legs, int leg, int exponent = 1);
StratumClass kappa_class(int genus, int legs, int index, int exponent = 1);
// kappa_i - sum_j psi_j^i on the edgeless stratum.
StratumClass kappa_tilde_class(int genus, int legs, int index);
// Product of two pure classes.
StratumClass pure_product(const StratumClass& a, const StratumClass& b);

// Mbar_{g,n+1} -> Mbar_{g,n} pullbacks.
StratumClass pullback_psi_forgetful(int genus, int legs, int leg);
StratumClass pullback_kappa_forgetful(int genus, int legs, int index);
// The rational-tail graph carrying legs i and n+1 (1-based leg i).
StableGraph rational_tail_graph(int genus, int legs, int leg);

// xi_Gamma^* of a pure class, returned as a class on Mbar_Gamma.
GraphClass pullback_by_boundary(const StratumClass& cls, const StableGraph& gamma);

// prod over edges of (-psi_h - psi_h'), expanded.
GraphClass excess_class(const StableGraph& gamma, const std::vector<int>& edges);

struct IntersectionTerm {
    GenericABGraph triple;
    GraphClass excess;  // class on Mbar_Gamma
};

// xi_A^* xi_{B*}(1) as a class on Mbar_A.
struct BoundaryIntersection {
    StableGraph base;
    std::vector<IntersectionTerm> terms;
    // Pushed forward along xi_A to Mbar_{g,n}.
    StratumClass push_forward() const;
};

BoundaryIntersection boundary_intersection(const StableGraph& a, const StableGraph& b);

// Product xi_{Gamma*}(d) times a pure class, as a class on Mbar_{g,n}.
StratumClass multiply_by_pure(const StratumClass& strata, const StratumClass& pure);

Rational integrate_stratum_class(const StratumClass& cls);

}  // namespace htaut
