#include "htaut/ggraph.hpp"

#include "htaut/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>

namespace htaut {

HurwitzSpaceId riemann_hurwitz_target(int genus, const MonodromyDatum& xi) {
    if (!xi.group) throw ValidationError("monodromy datum without a group");
    if (genus < 0) throw ValidationError("negative source genus");
    const int order = xi.group->order();
    Rational branch_sum;
    int marked = 0;
    for (Element h : xi.elements) {
        const int o = xi.group->order_of(h);
        branch_sum += Rational(o - 1) / Rational(o);
        marked += order / o;
    }
    // 2g' - 2 = (2g - 2)/#G - sum
    const Rational twice_target = Rational(2 * genus - 2) / Rational(order) - branch_sum + Rational(2);
    if (!twice_target.is_integer() || twice_target.to_long() % 2 != 0 || twice_target.sign() < 0)
        throw ValidationError("Riemann-Hurwitz has no non-negative integral target genus: 2g'-2 = " +
                              (twice_target - Rational(2)).to_string());
    HurwitzSpaceId id;
    id.genus = genus;
    id.xi = xi;
    id.target_genus = static_cast<int>(twice_target.to_long() / 2);
    id.marked_points = marked;
    return id;
}

namespace {

void check_permutation(const std::vector<int>& images, int size, const char* what) {
    if (static_cast<int>(images.size()) != size) throw ValidationError(std::string(what) + " action has the wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(size), false);
    for (int x : images) {
        if (x < 0 || x >= size || seen[static_cast<std::size_t>(x)])
            throw ValidationError(std::string(what) + " action is not a permutation");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

void check_automorphism(const StableGraph& g, const GraphAction& a) {
    check_permutation(a.vertex, g.num_vertices(), "vertex");
    check_permutation(a.half_edge, g.num_half_edges(), "half-edge");
    check_permutation(a.leg, g.num_legs(), "leg");
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.vertex_genus(a.vertex[static_cast<std::size_t>(v)]) != g.vertex_genus(v))
            throw ValidationError("group action does not preserve vertex genera");
    for (int h = 0; h < g.num_half_edges(); ++h) {
        const int gh = a.half_edge[static_cast<std::size_t>(h)];
        if (g.half_edge_vertex(gh) != a.vertex[static_cast<std::size_t>(g.half_edge_vertex(h))])
            throw ValidationError("group action does not respect half-edge attachment");
        if (a.half_edge[static_cast<std::size_t>(g.partner(h))] != g.partner(gh))
            throw ValidationError("group action does not commute with the involution");
    }
    for (int l = 0; l < g.num_legs(); ++l)
        if (g.leg_vertex(a.leg[static_cast<std::size_t>(l)]) != a.vertex[static_cast<std::size_t>(g.leg_vertex(l))])
            throw ValidationError("group action does not respect leg attachment");
}

GraphAction compose_action(const GraphAction& outer, const GraphAction& inner) {
    GraphAction r;
    for (int x : inner.vertex) r.vertex.push_back(outer.vertex[static_cast<std::size_t>(x)]);
    for (int x : inner.half_edge) r.half_edge.push_back(outer.half_edge[static_cast<std::size_t>(x)]);
    for (int x : inner.leg) r.leg.push_back(outer.leg[static_cast<std::size_t>(x)]);
    return r;
}

GraphAction identity_action(const StableGraph& g) {
    GraphAction a;
    a.vertex.resize(static_cast<std::size_t>(g.num_vertices()));
    a.half_edge.resize(static_cast<std::size_t>(g.num_half_edges()));
    a.leg.resize(static_cast<std::size_t>(g.num_legs()));
    std::iota(a.vertex.begin(), a.vertex.end(), 0);
    std::iota(a.half_edge.begin(), a.half_edge.end(), 0);
    std::iota(a.leg.begin(), a.leg.end(), 0);
    return a;
}

std::vector<std::vector<int>> orbits_of(int size, const std::vector<GraphAction>& actions,
                                        const std::vector<int> GraphAction::*member) {
    std::vector<int> orbit_of(static_cast<std::size_t>(size), -1);
    std::vector<std::vector<int>> orbits;
    for (int x = 0; x < size; ++x) {
        if (orbit_of[static_cast<std::size_t>(x)] != -1) continue;
        std::vector<int> orbit;
        for (const auto& a : actions) {
            const int y = (a.*member)[static_cast<std::size_t>(x)];
            if (orbit_of[static_cast<std::size_t>(y)] == -1) {
                orbit_of[static_cast<std::size_t>(y)] = static_cast<int>(orbits.size());
                orbit.push_back(y);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

}  // namespace

AdmissibleGGraph::AdmissibleGGraph(GroupPtr group, StableGraph graph, const std::vector<GraphAction>& generator_actions,
                                   std::vector<Element> half_edge_monodromy, std::vector<Element> leg_monodromy,
                                   std::vector<int> distinguished_legs)
    : group_(std::move(group)),
      graph_(std::move(graph)),
      half_edge_monodromy_(std::move(half_edge_monodromy)),
      leg_monodromy_(std::move(leg_monodromy)),
      distinguished_legs_(std::move(distinguished_legs)) {
    if (!group_) throw ValidationError("G-graph without a group");
    const auto gens = group_->generator_elements();
    if (generator_actions.size() != gens.size())
        throw ValidationError("expected one action per group generator (" + std::to_string(gens.size()) + ")");
    for (const auto& a : generator_actions) check_automorphism(graph_, a);

    std::vector<std::optional<GraphAction>> table(static_cast<std::size_t>(group_->order()));
    table[0] = identity_action(graph_);
    std::deque<Element> queue{0};
    while (!queue.empty()) {
        const Element x = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const Element y = group_->multiply(gens[i], x);
            GraphAction candidate = compose_action(generator_actions[i], *table[static_cast<std::size_t>(x)]);
            auto& slot = table[static_cast<std::size_t>(y)];
            if (!slot) {
                slot = std::move(candidate);
                queue.push_back(y);
            } else if (!(*slot == candidate)) {
                throw ValidationError("generator actions do not define a group action (relation violated at " +
                                      group_->permutation(y).to_string() + ")");
            }
        }
    }
    for (auto& a : table) action_.push_back(std::move(*a));

    if (static_cast<int>(half_edge_monodromy_.size()) != graph_.num_half_edges())
        throw ValidationError("half-edge monodromy table has the wrong length");
    if (static_cast<int>(leg_monodromy_.size()) != graph_.num_legs())
        throw ValidationError("leg monodromy table has the wrong length");
    for (Element e : half_edge_monodromy_) group_->permutation(e);
    for (Element e : leg_monodromy_) group_->permutation(e);
    for (int l : distinguished_legs_)
        if (l < 0 || l >= graph_.num_legs()) throw ValidationError("distinguished leg out of range");
}

std::vector<GraphAction> AdmissibleGGraph::generator_actions() const {
    std::vector<GraphAction> out;
    for (Element g : group_->generator_elements()) out.push_back(action(g));
    return out;
}

std::vector<std::vector<int>> AdmissibleGGraph::vertex_orbits() const {
    return orbits_of(graph_.num_vertices(), action_, &GraphAction::vertex);
}

std::vector<std::vector<int>> AdmissibleGGraph::leg_orbits() const {
    return orbits_of(graph_.num_legs(), action_, &GraphAction::leg);
}

std::vector<std::vector<int>> AdmissibleGGraph::edge_orbits() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(static_cast<std::size_t>(graph_.num_edges()), false);
    for (int e = 0; e < graph_.num_edges(); ++e) {
        if (seen[static_cast<std::size_t>(e)]) continue;
        std::vector<int> orbit;
        const int h = graph_.edges()[static_cast<std::size_t>(e)].first;
        for (const auto& a : action_) {
            const int f = graph_.edge_of(a.half_edge[static_cast<std::size_t>(h)]);
            if (!seen[static_cast<std::size_t>(f)]) {
                seen[static_cast<std::size_t>(f)] = true;
                orbit.push_back(f);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

std::vector<int> AdmissibleGGraph::edge_orbit_representatives() const {
    std::vector<int> reps;
    for (const auto& o : edge_orbits()) reps.push_back(o.front());
    return reps;
}

std::vector<int> AdmissibleGGraph::vertex_orbit_representatives() const {
    std::vector<int> reps;
    for (const auto& o : vertex_orbits()) reps.push_back(o.front());
    return reps;
}

Subgroup AdmissibleGGraph::vertex_stabilizer(int v) const {
    std::vector<Element> els;
    for (Element g = 0; g < group_->order(); ++g)
        if (action_[static_cast<std::size_t>(g)].vertex.at(static_cast<std::size_t>(v)) == v) els.push_back(g);
    return Subgroup::from_elements(group_, els);
}

Subgroup AdmissibleGGraph::half_edge_stabilizer(int h) const {
    std::vector<Element> els;
    for (Element g = 0; g < group_->order(); ++g)
        if (action_[static_cast<std::size_t>(g)].half_edge.at(static_cast<std::size_t>(h)) == h) els.push_back(g);
    return Subgroup::from_elements(group_, els);
}

Subgroup AdmissibleGGraph::leg_stabilizer(int leg) const {
    std::vector<Element> els;
    for (Element g = 0; g < group_->order(); ++g)
        if (action_[static_cast<std::size_t>(g)].leg.at(static_cast<std::size_t>(leg)) == leg) els.push_back(g);
    return Subgroup::from_elements(group_, els);
}

AdmissibleGGraph AdmissibleGGraph::with_half_edge_monodromy(std::vector<Element> m) const {
    return AdmissibleGGraph(group_, graph_, generator_actions(), std::move(m), leg_monodromy_, distinguished_legs_);
}

AdmissibleGGraph AdmissibleGGraph::with_leg_monodromy(std::vector<Element> m) const {
    return AdmissibleGGraph(group_, graph_, generator_actions(), half_edge_monodromy_, std::move(m), distinguished_legs_);
}

AdmissibleGGraph AdmissibleGGraph::with_distinguished_legs(std::vector<int> d) const {
    return AdmissibleGGraph(group_, graph_, generator_actions(), half_edge_monodromy_, leg_monodromy_, std::move(d));
}

AdmissibleGGraph AdmissibleGGraph::trivial_group(const StableGraph& graph) {
    std::vector<int> legs(static_cast<std::size_t>(graph.num_legs()));
    std::iota(legs.begin(), legs.end(), 0);
    return AdmissibleGGraph(FiniteGroup::trivial(), graph, {},
                            std::vector<Element>(static_cast<std::size_t>(graph.num_half_edges()), 0),
                            std::vector<Element>(static_cast<std::size_t>(graph.num_legs()), 0), legs);
}

std::vector<std::string> ValidationReport::labels() const {
    std::vector<std::string> out;
    for (const auto& v : violations)
        if (std::find(out.begin(), out.end(), v.label) == out.end()) out.push_back(v.label);
    return out;
}

namespace {

struct FlagView {
    bool is_leg;
    int index;
    std::string name() const { return (is_leg ? "leg:" : "half_edge:") + std::to_string(index); }
};

}  // namespace

ValidationReport validate_admissible_g_graph(const AdmissibleGGraph& gg, const HurwitzSpaceId& id) {
    const FiniteGroup& group = *gg.group();
    if (!same_group(id.xi.group, gg.group())) throw ValidationError("Hurwitz space and G-graph use different groups");
    const StableGraph& graph = gg.graph();
    ValidationReport report;
    auto add = [&](std::string label, std::string message, std::string flag = {}, int element = -1) {
        report.violations.push_back({std::move(label), std::move(message), std::move(flag), element});
    };

    if (graph.total_genus() != id.genus)
        add("genus", "graph genus " + std::to_string(graph.total_genus()) + " differs from " + std::to_string(id.genus));

    const auto leg_orbits = gg.leg_orbits();
    const auto& dist = gg.distinguished_legs();
    const int b = id.branch_points();
    {
        std::vector<int> orbit_of(static_cast<std::size_t>(graph.num_legs()), -1);
        for (std::size_t o = 0; o < leg_orbits.size(); ++o)
            for (int l : leg_orbits[o]) orbit_of[static_cast<std::size_t>(l)] = static_cast<int>(o);
        std::vector<bool> used(leg_orbits.size(), false);
        bool distinct = true;
        for (int l : dist) {
            const auto o = static_cast<std::size_t>(orbit_of[static_cast<std::size_t>(l)]);
            if (used[o]) distinct = false;
            used[o] = true;
        }
        if (static_cast<int>(leg_orbits.size()) != b || static_cast<int>(dist.size()) != b || !distinct)
            add("leg_orbits", "expected " + std::to_string(b) + " leg orbits each with one distinguished leg, found " +
                                  std::to_string(leg_orbits.size()) + " orbits and " + std::to_string(dist.size()) +
                                  " distinguished legs");
    }

    std::vector<FlagView> flags;
    for (int h = 0; h < graph.num_half_edges(); ++h) flags.push_back({false, h});
    for (int l = 0; l < graph.num_legs(); ++l) flags.push_back({true, l});
    auto image = [&](Element t, const FlagView& f) {
        const auto& a = gg.action(t);
        return f.is_leg ? a.leg[static_cast<std::size_t>(f.index)] : a.half_edge[static_cast<std::size_t>(f.index)];
    };
    auto mono = [&](bool is_leg, int index) { return is_leg ? gg.leg_monodromy(index) : gg.half_edge_monodromy(index); };

    for (const auto& f : flags) {
        const Element h = mono(f.is_leg, f.index);
        const Subgroup generated = Subgroup::cyclic(gg.group(), h);
        for (Element t = 0; t < group.order(); ++t) {
            const bool fixes = image(t, f) == f.index;
            if (fixes != generated.contains(t)) {
                add("stabilizer",
                    "stabilizer of " + f.name() + " is not generated by its monodromy " + group.permutation(h).to_string(),
                    f.name(), t);
                break;
            }
        }
    }

    for (int i = 0; i < std::min(b, static_cast<int>(dist.size())); ++i) {
        const Element h = gg.leg_monodromy(dist[static_cast<std::size_t>(i)]);
        if (h != id.xi.elements[static_cast<std::size_t>(i)])
            add("xi_agreement",
                "monodromy at distinguished leg of orbit " + std::to_string(i + 1) + " is " +
                    group.permutation(h).to_string() + ", expected " +
                    group.permutation(id.xi.elements[static_cast<std::size_t>(i)]).to_string(),
                "leg:" + std::to_string(dist[static_cast<std::size_t>(i)]));
    }

    for (const auto& f : flags) {
        const Element h = mono(f.is_leg, f.index);
        for (Element t = 0; t < group.order(); ++t) {
            if (mono(f.is_leg, image(t, f)) != group.conjugate(t, h)) {
                add("equivariance", "monodromy not conjugation-equivariant along the orbit of " + f.name(), f.name(), t);
                break;
            }
        }
    }

    for (int e = 0; e < graph.num_edges(); ++e) {
        const auto& [h, k] = graph.edges()[static_cast<std::size_t>(e)];
        for (Element t = 0; t < group.order(); ++t) {
            if (gg.action(t).half_edge[static_cast<std::size_t>(h)] == k) {
                add("edge_collapse", "quotient collapses edge " + std::to_string(e), "edge:" + std::to_string(e), t);
                break;
            }
        }
    }

    for (int e = 0; e < graph.num_edges(); ++e) {
        const auto& [h, k] = graph.edges()[static_cast<std::size_t>(e)];
        if (gg.half_edge_monodromy(h) != group.inverse(gg.half_edge_monodromy(k)))
            add("balancing", "balancing fails on edge " + std::to_string(e) + ": monodromies are not mutually inverse",
                "edge:" + std::to_string(e));
    }
    return report;
}

}  // namespace htaut
