#pragma once

#include "htaut/finite_group.hpp"
#include "htaut/ggraph.hpp"

#include <utility>
#include <vector>

namespace htaut {

// A subgroup realized as a standalone permutation group with index maps to and from its parent.
struct RealizedSubgroup {
    Subgroup subgroup;
    GroupPtr group;
    std::vector<Element> to_parent;    // element of group -> element of parent
    std::vector<Element> from_parent;  // element of parent -> element of group, -1 outside

    Element lift(Element x) const { return to_parent.at(static_cast<std::size_t>(x)); }
    Element restrict(Element g) const;  // throws if g is outside the subgroup
};

RealizedSubgroup realize_subgroup(const Subgroup& h);

struct RelabelingData {
    // representatives[i][j] = t_ij, one per G1-orbit on G/<h_i>.
    std::vector<std::vector<Element>> representatives;
    // Global order of the pairs (i, j).
    std::vector<std::pair<int, int>> order;
};

// Orbit representatives from orbit_on_cosets, ordered lexicographically by (i, j).
RelabelingData canonical_relabeling(const MonodromyDatum& xi, const Subgroup& g1);
void check_relabeling(const MonodromyDatum& xi, const Subgroup& g1, const RelabelingData& rel);

// Least r with h^r in G1, i.e. ord(h) / #(<h> n G1).
int restriction_exponent(const FiniteGroup& g, Element h, const Subgroup& g1);

MonodromyDatum restriction_monodromy(const MonodromyDatum& xi, const RealizedSubgroup& g1, const RelabelingData& rel);
MonodromyDatum corestriction_monodromy(const MonodromyDatum& xi, const QuotientGroup& q);

HurwitzSpaceId restriction_id(const HurwitzSpaceId& id, const RealizedSubgroup& g1, const RelabelingData& rel);
HurwitzSpaceId corestriction_id(const HurwitzSpaceId& id, const QuotientGroup& q);

AdmissibleGGraph restrict_graph(const AdmissibleGGraph& gg, const RealizedSubgroup& g1, const RelabelingData& rel);

struct Corestriction {
    AdmissibleGGraph graph;
    std::vector<int> vertex_class;     // vertex of the original -> vertex of the quotient
    std::vector<int> half_edge_class;
    std::vector<int> leg_class;
};

Corestriction corestrict_graph(const AdmissibleGGraph& gg, const QuotientGroup& q);

}  // namespace htaut
