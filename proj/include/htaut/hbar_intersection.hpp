#pragma once

#include "htaut/ggraph.hpp"
#include "htaut/graph_enumeration.hpp"
#include "htaut/res_cores.hpp"
#include "htaut/tautological.hpp"

#include <vector>

namespace htaut {

struct HIntersectionTerm {
    AdmissibleGGraph gamma;
    GraphMorphism to_A;
    GraphMorphism to_B;
    // Smallest edge of each G-orbit of common edges; one (-psi_h - psi_h') factor each.
    std::vector<int> excess_edges;
    GraphClass excess() const { return excess_class(gamma.graph(), excess_edges); }
};

// The G-structure on each generic (A, B)-graph is forced by the two maps; triples where it is
// inconsistent or not admissible are dropped. Throws ValidationError when A and B differ in
// group, genus, legs or leg data.
std::vector<HIntersectionTerm> boundary_intersection_H(const AdmissibleGGraph& a, const AdmissibleGGraph& b);

struct EdgeExponent {
    int edge;  // representative of a G-orbit of edges of Gamma
    int k;
};

// alpha: Gamma -> A for the G1-structures. k counts G1-orbits in G.e n im(alpha_E).
std::vector<EdgeExponent> restriction_boundary_exponents(const AdmissibleGGraph& gamma, const Subgroup& g1,
                                                         const StableGraph& a, const GraphMorphism& alpha);

struct CorestrictionMultiplicity {
    Rational multiplicity;
    int automorphisms = 0;  // equivariant automorphisms of Gamma inducing the identity on Gamma/N
};

// iso maps the corestriction of gamma onto a (forward vertex and half-edge maps) and must respect
// the G/N-action and monodromy.
CorestrictionMultiplicity corestriction_boundary_multiplicity(const AdmissibleGGraph& gamma, const QuotientGroup& q,
                                                              const AdmissibleGGraph& a, const GraphAutomorphism& iso);
// Uses the corestriction itself as A.
CorestrictionMultiplicity corestriction_boundary_multiplicity(const AdmissibleGGraph& gamma, const QuotientGroup& q);

struct NormalBundleChern {
    std::vector<int> factor_edges;  // one per G-orbit of edges
    GraphClass total;               // prod (1 - psi_h - psi_h')
};

NormalBundleChern normal_bundle_chern_H(const AdmissibleGGraph& gamma);

}  // namespace htaut
