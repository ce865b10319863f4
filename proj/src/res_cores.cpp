#include "htaut/res_cores.hpp"

#include "htaut/errors.hpp"
#include "htaut/rational.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace htaut {

Element RealizedSubgroup::restrict(Element g) const {
    const Element x = from_parent.at(static_cast<std::size_t>(g));
    if (x < 0) throw ValidationError("element lies outside the subgroup");
    return x;
}

RealizedSubgroup realize_subgroup(const Subgroup& h) {
    const GroupPtr& parent = h.parent();
    std::vector<Element> gens;
    Subgroup generated = Subgroup::trivial(parent);
    for (Element e : h.elements()) {
        if (generated.contains(e)) continue;
        gens.push_back(e);
        generated = Subgroup::generated_by(parent, gens);
    }
    std::vector<Permutation> perms;
    for (Element e : gens) perms.push_back(parent->permutation(e));
    RealizedSubgroup r{h, FiniteGroup::from_generators(parent->degree(), std::move(perms)), {}, {}};
    r.from_parent.assign(static_cast<std::size_t>(parent->order()), -1);
    for (Element x = 0; x < r.group->order(); ++x) {
        const Element g = parent->element_of(r.group->permutation(x));
        r.to_parent.push_back(g);
        r.from_parent[static_cast<std::size_t>(g)] = x;
    }
    return r;
}

RelabelingData canonical_relabeling(const MonodromyDatum& xi, const Subgroup& g1) {
    if (!same_group(xi.group, g1.parent())) throw ValidationError("subgroup and monodromy datum use different groups");
    RelabelingData rel;
    for (std::size_t i = 0; i < xi.elements.size(); ++i) {
        std::vector<Element> reps;
        for (const auto& orbit : orbit_on_cosets(g1, Subgroup::cyclic(xi.group, xi.elements[i])))
            reps.push_back(orbit.representative);
        for (std::size_t j = 0; j < reps.size(); ++j)
            rel.order.emplace_back(static_cast<int>(i), static_cast<int>(j));
        rel.representatives.push_back(std::move(reps));
    }
    return rel;
}

void check_relabeling(const MonodromyDatum& xi, const Subgroup& g1, const RelabelingData& rel) {
    if (!same_group(xi.group, g1.parent())) throw ValidationError("subgroup and monodromy datum use different groups");
    if (rel.representatives.size() != xi.elements.size())
        throw ValidationError("relabeling data must list representatives for every marked orbit");
    std::size_t total = 0;
    for (std::size_t i = 0; i < xi.elements.size(); ++i) {
        const Subgroup cyc = Subgroup::cyclic(xi.group, xi.elements[i]);
        const CosetSpace space = coset_space(cyc);
        const auto orbits = orbit_on_cosets(g1, cyc);
        std::vector<int> orbit_of(static_cast<std::size_t>(space.size()), -1);
        for (std::size_t o = 0; o < orbits.size(); ++o)
            for (int c : orbits[o].cosets) orbit_of[static_cast<std::size_t>(c)] = static_cast<int>(o);
        std::set<int> hit;
        for (Element t : rel.representatives[i]) {
            xi.group->permutation(t);
            const int o = orbit_of[static_cast<std::size_t>(space.coset_of[static_cast<std::size_t>(t)])];
            if (!hit.insert(o).second)
                throw ValidationError("relabeling representatives for orbit " + std::to_string(i + 1) +
                                      " share a subgroup orbit");
        }
        if (hit.size() != orbits.size())
            throw ValidationError("relabeling representatives for orbit " + std::to_string(i + 1) +
                                  " miss a subgroup orbit");
        total += rel.representatives[i].size();
    }
    std::set<std::pair<int, int>> seen(rel.order.begin(), rel.order.end());
    if (seen.size() != rel.order.size() || rel.order.size() != total)
        throw ValidationError("relabeling order must list every pair (i, j) exactly once");
    for (const auto& [i, j] : rel.order)
        if (i < 0 || i >= static_cast<int>(rel.representatives.size()) || j < 0 ||
            j >= static_cast<int>(rel.representatives[static_cast<std::size_t>(i)].size()))
            throw ValidationError("relabeling order refers to a missing representative");
}

int restriction_exponent(const FiniteGroup& g, Element h, const Subgroup& g1) {
    int r = 1;
    Element x = h;
    while (!g1.contains(x)) {
        x = g.multiply(x, h);
        ++r;
    }
    return r;
}

MonodromyDatum restriction_monodromy(const MonodromyDatum& xi, const RealizedSubgroup& g1, const RelabelingData& rel) {
    check_relabeling(xi, g1.subgroup, rel);
    const FiniteGroup& g = *xi.group;
    MonodromyDatum out{g1.group, {}};
    for (const auto& [i, j] : rel.order) {
        const Element t = rel.representatives[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        const Element c = g.conjugate(t, xi.elements[static_cast<std::size_t>(i)]);
        out.elements.push_back(g1.restrict(g.power(c, restriction_exponent(g, c, g1.subgroup))));
    }
    return out;
}

MonodromyDatum corestriction_monodromy(const MonodromyDatum& xi, const QuotientGroup& q) {
    if (!same_group(xi.group, q.parent())) throw ValidationError("quotient and monodromy datum use different groups");
    MonodromyDatum out{q.group(), {}};
    for (Element h : xi.elements) out.elements.push_back(q.project(h));
    return out;
}

HurwitzSpaceId restriction_id(const HurwitzSpaceId& id, const RealizedSubgroup& g1, const RelabelingData& rel) {
    return riemann_hurwitz_target(id.genus, restriction_monodromy(id.xi, g1, rel));
}

HurwitzSpaceId corestriction_id(const HurwitzSpaceId& id, const QuotientGroup& q) {
    MonodromyDatum xi = corestriction_monodromy(id.xi, q);
    const int order = q.group()->order();
    Rational twice = Rational(order) * Rational(2 * id.target_genus - 2);
    for (Element h : xi.elements) {
        const int o = q.group()->order_of(h);
        twice += Rational(order) * Rational(o - 1) / Rational(o);
    }
    twice += Rational(2);
    if (!twice.is_integer() || twice.to_long() % 2 != 0)
        throw InvariantError("quotient genus is not integral");
    return riemann_hurwitz_target(static_cast<int>(twice.to_long() / 2), xi);
}

namespace {

MonodromyDatum datum_of(const AdmissibleGGraph& gg) {
    MonodromyDatum xi{gg.group(), {}};
    for (int l : gg.distinguished_legs()) xi.elements.push_back(gg.leg_monodromy(l));
    return xi;
}

}  // namespace

AdmissibleGGraph restrict_graph(const AdmissibleGGraph& gg, const RealizedSubgroup& g1, const RelabelingData& rel) {
    if (!same_group(gg.group(), g1.subgroup.parent())) throw ValidationError("subgroup does not belong to the graph's group");
    const FiniteGroup& g = *gg.group();
    check_relabeling(datum_of(gg), g1.subgroup, rel);
    std::vector<GraphAction> actions;
    for (Element x : g1.group->generator_elements()) actions.push_back(gg.action(g1.lift(x)));
    auto restrict_mono = [&](Element h) { return g1.restrict(g.power(h, restriction_exponent(g, h, g1.subgroup))); };
    std::vector<Element> half_edges;
    std::vector<Element> legs;
    for (Element h : gg.half_edge_monodromies()) half_edges.push_back(restrict_mono(h));
    for (Element h : gg.leg_monodromies()) legs.push_back(restrict_mono(h));
    std::vector<int> dist;
    for (const auto& [i, j] : rel.order) {
        const Element t = rel.representatives[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        dist.push_back(gg.action(t).leg[static_cast<std::size_t>(gg.distinguished_legs()[static_cast<std::size_t>(i)])]);
    }
    return AdmissibleGGraph(g1.group, gg.graph(), actions, std::move(half_edges), std::move(legs), std::move(dist));
}

namespace {

// Classes of [0, size) under the N-action, numbered by smallest member.
std::vector<int> classes_under(int size, const std::vector<Element>& normal, const AdmissibleGGraph& gg,
                               const std::vector<int> GraphAction::*member, int& count) {
    std::vector<int> cls(static_cast<std::size_t>(size), -1);
    count = 0;
    for (int x = 0; x < size; ++x) {
        if (cls[static_cast<std::size_t>(x)] != -1) continue;
        for (Element n : normal) cls[static_cast<std::size_t>((gg.action(n).*member)[static_cast<std::size_t>(x)])] = count;
        ++count;
    }
    return cls;
}

}  // namespace

Corestriction corestrict_graph(const AdmissibleGGraph& gg, const QuotientGroup& q) {
    if (!same_group(gg.group(), q.parent())) throw ValidationError("quotient does not belong to the graph's group");
    const StableGraph& graph = gg.graph();
    const Subgroup& normal = q.normal_subgroup();
    int nv = 0, nh = 0, nl = 0;
    auto vcls = classes_under(graph.num_vertices(), normal.elements(), gg, &GraphAction::vertex, nv);
    auto hcls = classes_under(graph.num_half_edges(), normal.elements(), gg, &GraphAction::half_edge, nh);
    auto lcls = classes_under(graph.num_legs(), normal.elements(), gg, &GraphAction::leg, nl);

    std::vector<int> rep_v(static_cast<std::size_t>(nv), -1), rep_h(static_cast<std::size_t>(nh), -1),
        rep_l(static_cast<std::size_t>(nl), -1);
    for (int v = graph.num_vertices() - 1; v >= 0; --v) rep_v[static_cast<std::size_t>(vcls[static_cast<std::size_t>(v)])] = v;
    for (int h = graph.num_half_edges() - 1; h >= 0; --h) rep_h[static_cast<std::size_t>(hcls[static_cast<std::size_t>(h)])] = h;
    for (int l = graph.num_legs() - 1; l >= 0; --l) rep_l[static_cast<std::size_t>(lcls[static_cast<std::size_t>(l)])] = l;

    auto local_order = [&](Element h) {
        return Subgroup::cyclic(gg.group(), h).intersect(normal).order();
    };
    std::vector<int> genera;
    for (int c = 0; c < nv; ++c) {
        const int v = rep_v[static_cast<std::size_t>(c)];
        int stab = 0;
        for (Element n : normal.elements())
            if (gg.action(n).vertex[static_cast<std::size_t>(v)] == v) ++stab;
        long numerator = 2L * graph.vertex_genus(v) - 2;
        for (int h : graph.half_edges_at(v)) numerator -= local_order(gg.half_edge_monodromy(h)) - 1;
        for (int l : graph.legs_at(v)) numerator -= local_order(gg.leg_monodromy(l)) - 1;
        if (numerator % stab != 0 || (numerator / stab) % 2 != 0 || numerator / stab < -2)
            throw ValidationError("Riemann-Hurwitz fails at vertex " + std::to_string(v) + " of the quotient");
        genera.push_back(static_cast<int>((numerator / stab + 2) / 2));
    }
    std::vector<int> half_edge_vertex, involution, leg_vertex;
    for (int c = 0; c < nh; ++c) {
        const int h = rep_h[static_cast<std::size_t>(c)];
        half_edge_vertex.push_back(vcls[static_cast<std::size_t>(graph.half_edge_vertex(h))]);
        const int partner = hcls[static_cast<std::size_t>(graph.partner(h))];
        if (partner == c) throw ValidationError("quotient collapses edge " + std::to_string(graph.edge_of(h)));
        involution.push_back(partner);
    }
    for (int c = 0; c < nl; ++c) leg_vertex.push_back(vcls[static_cast<std::size_t>(graph.leg_vertex(rep_l[static_cast<std::size_t>(c)]))]);
    StableGraph quotient_graph(std::move(genera), std::move(half_edge_vertex), std::move(involution), std::move(leg_vertex));

    std::vector<GraphAction> actions;
    for (Element x : q.group()->generator_elements()) {
        const GraphAction& a = gg.action(q.lift(x));
        GraphAction b;
        for (int c = 0; c < nv; ++c) b.vertex.push_back(vcls[static_cast<std::size_t>(a.vertex[static_cast<std::size_t>(rep_v[static_cast<std::size_t>(c)])])]);
        for (int c = 0; c < nh; ++c) b.half_edge.push_back(hcls[static_cast<std::size_t>(a.half_edge[static_cast<std::size_t>(rep_h[static_cast<std::size_t>(c)])])]);
        for (int c = 0; c < nl; ++c) b.leg.push_back(lcls[static_cast<std::size_t>(a.leg[static_cast<std::size_t>(rep_l[static_cast<std::size_t>(c)])])]);
        actions.push_back(std::move(b));
    }
    std::vector<Element> hmono, lmono;
    for (int c = 0; c < nh; ++c) hmono.push_back(q.project(gg.half_edge_monodromy(rep_h[static_cast<std::size_t>(c)])));
    for (int c = 0; c < nl; ++c) lmono.push_back(q.project(gg.leg_monodromy(rep_l[static_cast<std::size_t>(c)])));
    std::vector<int> dist;
    for (int l : gg.distinguished_legs()) dist.push_back(lcls[static_cast<std::size_t>(l)]);
    return Corestriction{AdmissibleGGraph(q.group(), std::move(quotient_graph), actions, std::move(hmono), std::move(lmono),
                                          std::move(dist)),
                         std::move(vcls), std::move(hcls), std::move(lcls)};
}

}  // namespace htaut
