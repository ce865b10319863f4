#include "htaut/hbar_intersection.hpp"

#include "htaut/errors.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace htaut {

namespace {

void check_same_space(const AdmissibleGGraph& a, const AdmissibleGGraph& b) {
    if (!same_group(a.group(), b.group())) throw ValidationError("G-graphs use different groups");
    if (a.graph().total_genus() != b.graph().total_genus()) throw ValidationError("G-graphs have different genera");
    if (a.graph().num_legs() != b.graph().num_legs()) throw ValidationError("G-graphs have different leg counts");
    if (a.leg_monodromies() != b.leg_monodromies() || a.distinguished_legs() != b.distinguished_legs())
        throw ValidationError("G-graphs carry different monodromy data");
    for (Element g : a.group()->generator_elements())
        if (a.action(g).leg != b.action(g).leg) throw ValidationError("G-graphs act differently on legs");
}

std::vector<int> invert_half_edge_map(const GraphMorphism& f, int gamma_half_edges) {
    std::vector<int> inv(static_cast<std::size_t>(gamma_half_edges), -1);
    for (std::size_t t = 0; t < f.half_edge_map.size(); ++t)
        inv[static_cast<std::size_t>(f.half_edge_map[t])] = static_cast<int>(t);
    return inv;
}

std::optional<AdmissibleGGraph> forced_structure(const AdmissibleGGraph& a, const AdmissibleGGraph& b,
                                                 const GenericABGraph& triple) {
    const StableGraph& gamma = triple.gamma;
    const int nh = gamma.num_half_edges();
    const auto inv_a = invert_half_edge_map(triple.to_A, nh);
    const auto inv_b = invert_half_edge_map(triple.to_B, nh);

    std::vector<GraphAction> actions;
    for (Element s : a.group()->generator_elements()) {
        const GraphAction& act_a = a.action(s);
        const GraphAction& act_b = b.action(s);
        GraphAction act;
        act.half_edge.assign(static_cast<std::size_t>(nh), -1);
        for (int h = 0; h < nh; ++h) {
            int image = -1;
            if (inv_a[static_cast<std::size_t>(h)] >= 0)
                image = triple.to_A.half_edge_map[static_cast<std::size_t>(
                    act_a.half_edge[static_cast<std::size_t>(inv_a[static_cast<std::size_t>(h)])])];
            if (inv_b[static_cast<std::size_t>(h)] >= 0) {
                const int other = triple.to_B.half_edge_map[static_cast<std::size_t>(
                    act_b.half_edge[static_cast<std::size_t>(inv_b[static_cast<std::size_t>(h)])])];
                if (image >= 0 && image != other) return std::nullopt;
                image = other;
            }
            act.half_edge[static_cast<std::size_t>(h)] = image;
        }
        act.vertex.assign(static_cast<std::size_t>(gamma.num_vertices()), -1);
        for (int v = 0; v < gamma.num_vertices(); ++v) {
            const auto hs = gamma.half_edges_at(v);
            if (hs.empty()) {
                act.vertex[static_cast<std::size_t>(v)] = v;
                continue;
            }
            for (int h : hs) {
                const int w = gamma.half_edge_vertex(act.half_edge[static_cast<std::size_t>(h)]);
                if (act.vertex[static_cast<std::size_t>(v)] >= 0 && act.vertex[static_cast<std::size_t>(v)] != w)
                    return std::nullopt;
                act.vertex[static_cast<std::size_t>(v)] = w;
            }
        }
        act.leg = act_a.leg;
        for (int v = 0; v < gamma.num_vertices(); ++v) {
            const int gv = act.vertex[static_cast<std::size_t>(v)];
            if (triple.to_A.vertex_map[static_cast<std::size_t>(gv)] !=
                    act_a.vertex[static_cast<std::size_t>(triple.to_A.vertex_map[static_cast<std::size_t>(v)])] ||
                triple.to_B.vertex_map[static_cast<std::size_t>(gv)] !=
                    act_b.vertex[static_cast<std::size_t>(triple.to_B.vertex_map[static_cast<std::size_t>(v)])])
                return std::nullopt;
        }
        actions.push_back(std::move(act));
    }

    std::vector<Element> mono(static_cast<std::size_t>(nh), -1);
    for (int h = 0; h < nh; ++h) {
        if (inv_a[static_cast<std::size_t>(h)] >= 0)
            mono[static_cast<std::size_t>(h)] = a.half_edge_monodromy(inv_a[static_cast<std::size_t>(h)]);
        if (inv_b[static_cast<std::size_t>(h)] >= 0) {
            const Element m = b.half_edge_monodromy(inv_b[static_cast<std::size_t>(h)]);
            if (mono[static_cast<std::size_t>(h)] >= 0 && mono[static_cast<std::size_t>(h)] != m) return std::nullopt;
            mono[static_cast<std::size_t>(h)] = m;
        }
    }
    try {
        return AdmissibleGGraph(a.group(), gamma, actions, std::move(mono), a.leg_monodromies(), a.distinguished_legs());
    } catch (const ValidationError&) {
        return std::nullopt;
    }
}

}  // namespace

std::vector<HIntersectionTerm> boundary_intersection_H(const AdmissibleGGraph& a, const AdmissibleGGraph& b) {
    check_same_space(a, b);
    std::vector<HIntersectionTerm> out;
    for (const auto& triple : enumerate_generic_AB(a.graph(), b.graph())) {
        auto gamma = forced_structure(a, b, triple);
        if (!gamma) continue;
        const auto common = triple.common_edges();
        std::vector<int> reps;
        for (const auto& orbit : gamma->edge_orbits()) {
            std::vector<int> inside;
            for (int e : orbit)
                if (std::binary_search(common.begin(), common.end(), e)) inside.push_back(e);
            if (inside.empty()) continue;
            if (inside.size() != orbit.size()) throw InvariantError("common edges are not G-stable");
            reps.push_back(inside.front());
        }
        out.push_back(HIntersectionTerm{std::move(*gamma), triple.to_A, triple.to_B, std::move(reps)});
    }
    return out;
}

std::vector<EdgeExponent> restriction_boundary_exponents(const AdmissibleGGraph& gamma, const Subgroup& g1,
                                                         const StableGraph& a, const GraphMorphism& alpha) {
    if (!same_group(g1.parent(), gamma.group())) throw ValidationError("subgroup does not belong to the graph's group");
    check_morphism(gamma.graph(), a, alpha);
    const auto image = image_edges(gamma.graph(), alpha);
    auto in_image = [&](int e) { return std::binary_search(image.begin(), image.end(), e); };
    const StableGraph& graph = gamma.graph();
    std::vector<EdgeExponent> out;
    for (const auto& orbit : gamma.edge_orbits()) {
        std::vector<int> hit;
        for (int e : orbit)
            if (in_image(e)) hit.push_back(e);
        if (hit.empty())
            throw ValidationError("edge map misses the G-orbit of edge " + std::to_string(orbit.front()));
        std::set<int> seen;
        int k = 0;
        for (int e : hit) {
            if (seen.count(e)) continue;
            ++k;
            const int h = graph.edges()[static_cast<std::size_t>(e)].first;
            for (Element t : g1.elements()) {
                const int f = graph.edge_of(gamma.action(t).half_edge[static_cast<std::size_t>(h)]);
                if (!in_image(f))
                    throw ValidationError("image of the edge map is not stable under the subgroup at edge " +
                                          std::to_string(e));
                seen.insert(f);
            }
        }
        out.push_back({orbit.front(), k});
    }
    return out;
}

namespace {

void check_equivariant_iso(const AdmissibleGGraph& source, const AdmissibleGGraph& target, const GraphAutomorphism& iso) {
    const StableGraph& s = source.graph();
    const StableGraph& t = target.graph();
    if (!same_group(source.group(), target.group())) throw ValidationError("isomorphism between graphs over different groups");
    if (s.num_vertices() != t.num_vertices() || s.num_half_edges() != t.num_half_edges() || s.num_legs() != t.num_legs() ||
        static_cast<int>(iso.vertex_perm.size()) != s.num_vertices() ||
        static_cast<int>(iso.half_edge_perm.size()) != s.num_half_edges())
        throw ValidationError("map is not an isomorphism: sizes differ");
    std::vector<bool> vhit(iso.vertex_perm.size(), false), hhit(iso.half_edge_perm.size(), false);
    for (int v : iso.vertex_perm) {
        if (v < 0 || v >= t.num_vertices() || vhit[static_cast<std::size_t>(v)])
            throw ValidationError("map is not an isomorphism: vertex map not bijective");
        vhit[static_cast<std::size_t>(v)] = true;
    }
    for (int h : iso.half_edge_perm) {
        if (h < 0 || h >= t.num_half_edges() || hhit[static_cast<std::size_t>(h)])
            throw ValidationError("map is not an isomorphism: half-edge map not bijective");
        hhit[static_cast<std::size_t>(h)] = true;
    }
    auto iv = [&](int v) { return iso.vertex_perm[static_cast<std::size_t>(v)]; };
    auto ih = [&](int h) { return iso.half_edge_perm[static_cast<std::size_t>(h)]; };
    for (int v = 0; v < s.num_vertices(); ++v)
        if (t.vertex_genus(iv(v)) != s.vertex_genus(v)) throw ValidationError("map is not an isomorphism: genus");
    for (int h = 0; h < s.num_half_edges(); ++h) {
        if (t.half_edge_vertex(ih(h)) != iv(s.half_edge_vertex(h)) || t.partner(ih(h)) != ih(s.partner(h)))
            throw ValidationError("map is not an isomorphism: incidence");
        if (target.half_edge_monodromy(ih(h)) != source.half_edge_monodromy(h))
            throw ValidationError("map is not an isomorphism: monodromy");
    }
    for (int l = 0; l < s.num_legs(); ++l) {
        if (t.leg_vertex(l) != iv(s.leg_vertex(l))) throw ValidationError("map is not an isomorphism: legs");
        if (target.leg_monodromy(l) != source.leg_monodromy(l))
            throw ValidationError("map is not an isomorphism: leg monodromy");
    }
    for (Element g : source.group()->generator_elements()) {
        const auto& as = source.action(g);
        const auto& at = target.action(g);
        for (int v = 0; v < s.num_vertices(); ++v)
            if (iv(as.vertex[static_cast<std::size_t>(v)]) != at.vertex[static_cast<std::size_t>(iv(v))])
                throw ValidationError("map is not an isomorphism: not equivariant");
        for (int h = 0; h < s.num_half_edges(); ++h)
            if (ih(as.half_edge[static_cast<std::size_t>(h)]) != at.half_edge[static_cast<std::size_t>(ih(h))])
                throw ValidationError("map is not an isomorphism: not equivariant");
        if (as.leg != at.leg) throw ValidationError("map is not an isomorphism: not equivariant on legs");
    }
}

}  // namespace

CorestrictionMultiplicity corestriction_boundary_multiplicity(const AdmissibleGGraph& gamma, const QuotientGroup& q,
                                                              const AdmissibleGGraph& a, const GraphAutomorphism& iso) {
    const Corestriction cores = corestrict_graph(gamma, q);
    check_equivariant_iso(cores.graph, a, iso);
    const FiniteGroup& g = *gamma.group();
    const StableGraph& graph = gamma.graph();
    CorestrictionMultiplicity out{Rational(1), 0};
    for (int e : gamma.edge_orbit_representatives()) {
        const Element h = gamma.half_edge_monodromy(graph.edges()[static_cast<std::size_t>(e)].first);
        out.multiplicity *= Rational(g.order_of(h)) / Rational(q.group()->order_of(q.project(h)));
    }
    const auto gens = g.generator_elements();
    for (const auto& phi : automorphism_group(graph)) {
        bool ok = true;
        for (Element s : gens) {
            const auto& act = gamma.action(s);
            for (int v = 0; ok && v < graph.num_vertices(); ++v)
                ok = phi.vertex_perm[static_cast<std::size_t>(act.vertex[static_cast<std::size_t>(v)])] ==
                     act.vertex[static_cast<std::size_t>(phi.vertex_perm[static_cast<std::size_t>(v)])];
            for (int h = 0; ok && h < graph.num_half_edges(); ++h)
                ok = phi.half_edge_perm[static_cast<std::size_t>(act.half_edge[static_cast<std::size_t>(h)])] ==
                     act.half_edge[static_cast<std::size_t>(phi.half_edge_perm[static_cast<std::size_t>(h)])];
            if (!ok) break;
        }
        for (int h = 0; ok && h < graph.num_half_edges(); ++h) {
            const int ph = phi.half_edge_perm[static_cast<std::size_t>(h)];
            ok = gamma.half_edge_monodromy(ph) == gamma.half_edge_monodromy(h) &&
                 cores.half_edge_class[static_cast<std::size_t>(ph)] == cores.half_edge_class[static_cast<std::size_t>(h)];
        }
        for (int v = 0; ok && v < graph.num_vertices(); ++v)
            ok = cores.vertex_class[static_cast<std::size_t>(phi.vertex_perm[static_cast<std::size_t>(v)])] ==
                 cores.vertex_class[static_cast<std::size_t>(v)];
        if (ok) ++out.automorphisms;
    }
    return out;
}

CorestrictionMultiplicity corestriction_boundary_multiplicity(const AdmissibleGGraph& gamma, const QuotientGroup& q) {
    const Corestriction cores = corestrict_graph(gamma, q);
    GraphAutomorphism id;
    for (int v = 0; v < cores.graph.graph().num_vertices(); ++v) id.vertex_perm.push_back(v);
    for (int h = 0; h < cores.graph.graph().num_half_edges(); ++h) id.half_edge_perm.push_back(h);
    return corestriction_boundary_multiplicity(gamma, q, cores.graph, id);
}

NormalBundleChern normal_bundle_chern_H(const AdmissibleGGraph& gamma) {
    NormalBundleChern out{gamma.edge_orbit_representatives(), GraphClass{gamma.graph(), {}}};
    out.total.add(Decoration{}, Rational(1));
    for (int e : out.factor_edges) {
        const auto& [h, k] = gamma.graph().edges()[static_cast<std::size_t>(e)];
        GraphClass factor{gamma.graph(), {}};
        factor.add(Decoration{}, Rational(1));
        factor.add(psi_half_edge(h), Rational(-1));
        factor.add(psi_half_edge(k), Rational(-1));
        out.total *= factor;
    }
    return out;
}

}  // namespace htaut
