#pragma once

#include "htaut/finite_group.hpp"
#include "htaut/rational.hpp"
#include "htaut/stable_graph.hpp"

#include <string>
#include <vector>

namespace htaut {

struct MonodromyDatum {
    GroupPtr group;
    std::vector<Element> elements;
};

struct HurwitzSpaceId {
    int genus = 0;
    MonodromyDatum xi;
    int target_genus = 0;  // from Riemann-Hurwitz
    int marked_points = 0; // r = sum #G / ord(h_i)
    int branch_points() const { return static_cast<int>(xi.elements.size()); }
};

// Solves 2g-2 = #G[(2g'-2) + sum (ord h_i - 1)/ord h_i]; throws ValidationError unless g' is a
// non-negative integer.
HurwitzSpaceId riemann_hurwitz_target(int genus, const MonodromyDatum& xi);

// Images of vertices, half-edges and legs under one group element.
struct GraphAction {
    std::vector<int> vertex;
    std::vector<int> half_edge;
    std::vector<int> leg;
    friend bool operator==(const GraphAction&, const GraphAction&) = default;
};

class AdmissibleGGraph {
public:
    // generator_actions[i] is the action of group->generators()[i]. The full action is derived and
    // must be a homomorphism into Aut(graph) (legs may move); ValidationError otherwise.
    AdmissibleGGraph(GroupPtr group, StableGraph graph, const std::vector<GraphAction>& generator_actions,
                     std::vector<Element> half_edge_monodromy, std::vector<Element> leg_monodromy,
                     std::vector<int> distinguished_legs);

    const GroupPtr& group() const { return group_; }
    const StableGraph& graph() const { return graph_; }
    const GraphAction& action(Element g) const { return action_.at(static_cast<std::size_t>(g)); }
    const std::vector<GraphAction>& actions() const { return action_; }
    Element half_edge_monodromy(int h) const { return half_edge_monodromy_.at(static_cast<std::size_t>(h)); }
    Element leg_monodromy(int leg) const { return leg_monodromy_.at(static_cast<std::size_t>(leg)); }
    const std::vector<Element>& half_edge_monodromies() const { return half_edge_monodromy_; }
    const std::vector<Element>& leg_monodromies() const { return leg_monodromy_; }
    const std::vector<int>& distinguished_legs() const { return distinguished_legs_; }
    std::vector<GraphAction> generator_actions() const;

    // Orbits, each sorted ascending and listed by smallest member.
    std::vector<std::vector<int>> vertex_orbits() const;
    std::vector<std::vector<int>> edge_orbits() const;  // edge indices
    std::vector<std::vector<int>> leg_orbits() const;
    Subgroup vertex_stabilizer(int v) const;
    Subgroup half_edge_stabilizer(int h) const;
    Subgroup leg_stabilizer(int leg) const;
    // Smallest edge index of each edge orbit.
    std::vector<int> edge_orbit_representatives() const;
    std::vector<int> vertex_orbit_representatives() const;

    // Replace monodromy or distinguished data (used for mutation and relabeling).
    AdmissibleGGraph with_half_edge_monodromy(std::vector<Element> m) const;
    AdmissibleGGraph with_leg_monodromy(std::vector<Element> m) const;
    AdmissibleGGraph with_distinguished_legs(std::vector<int> d) const;

    static AdmissibleGGraph trivial_group(const StableGraph& graph);

private:
    AdmissibleGGraph() = default;
    GroupPtr group_;
    StableGraph graph_;
    std::vector<GraphAction> action_;
    std::vector<Element> half_edge_monodromy_;
    std::vector<Element> leg_monodromy_;
    std::vector<int> distinguished_legs_;
};

struct Violation {
    std::string label;    // genus, leg_orbits, stabilizer, xi_agreement, equivariance, edge_collapse, balancing
    std::string message;
    std::string flag;     // "half_edge:<i>", "leg:<i>", "edge:<i>" or empty
    int element = -1;     // witness group element, -1 if none
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    // Distinct labels in order of first appearance.
    std::vector<std::string> labels() const;
};

ValidationReport validate_admissible_g_graph(const AdmissibleGGraph& graph, const HurwitzSpaceId& id);

}  // namespace htaut
