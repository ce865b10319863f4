#include "htaut/graph_enumeration.hpp"

#include "htaut/errors.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <tuple>

namespace htaut {

namespace {

struct GraphDraft {
    std::vector<int> genera;
    std::vector<int> attach;
    std::vector<int> involution;
    std::vector<int> legs;

    explicit GraphDraft(const StableGraph& g)
        : genera(g.genera()), attach(g.half_edge_vertices()), involution(g.involution()), legs(g.leg_vertices()) {}

    void add_edge(int v, int w) {
        const int h = static_cast<int>(attach.size());
        attach.push_back(v);
        attach.push_back(w);
        involution.push_back(h + 1);
        involution.push_back(h);
    }

    bool stable() const {
        for (std::size_t v = 0; v < genera.size(); ++v) {
            int valence = static_cast<int>(std::count(attach.begin(), attach.end(), static_cast<int>(v)) +
                                           std::count(legs.begin(), legs.end(), static_cast<int>(v)));
            if (2 * genera[v] - 2 + valence <= 0) return false;
        }
        return true;
    }

    StableGraph build() const { return StableGraph(genera, attach, involution, legs); }
};

}  // namespace

std::vector<StableGraph> one_edge_degenerations(const StableGraph& g) {
    std::vector<StableGraph> out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.vertex_genus(v) >= 1) {
            GraphDraft d(g);
            --d.genera[static_cast<std::size_t>(v)];
            d.add_edge(v, v);
            out.push_back(d.build());
        }
        // Split v: flags in the mask move to a new vertex.
        const std::vector<int> hs = g.half_edges_at(v);
        const std::vector<int> ls = g.legs_at(v);
        const int flags = static_cast<int>(hs.size() + ls.size());
        for (unsigned mask = 0; mask < (1U << flags); ++mask) {
            for (int g2 = 0; g2 <= g.vertex_genus(v); ++g2) {
                GraphDraft d(g);
                const int w = static_cast<int>(d.genera.size());
                d.genera.push_back(g2);
                d.genera[static_cast<std::size_t>(v)] -= g2;
                for (int i = 0; i < flags; ++i) {
                    if (!(mask & (1U << i))) continue;
                    if (i < static_cast<int>(hs.size()))
                        d.attach[static_cast<std::size_t>(hs[static_cast<std::size_t>(i)])] = w;
                    else
                        d.legs[static_cast<std::size_t>(ls[static_cast<std::size_t>(i - static_cast<int>(hs.size()))])] = w;
                }
                d.add_edge(v, w);
                if (d.stable()) out.push_back(d.build());
            }
        }
    }
    return out;
}

namespace {

struct EnumerationCache {
    std::mutex mutex;
    std::map<std::pair<int, int>, std::shared_ptr<std::vector<StableGraph>>> by_type;
    std::map<std::pair<int, int>, int> depth;
};

EnumerationCache& cache() {
    static EnumerationCache c;
    return c;
}

}  // namespace

std::vector<StableGraph> stable_graphs(int genus, int legs, int max_edges) {
    if (genus < 0 || legs < 0 || 2 * genus - 2 + legs <= 0) throw ValidationError("unstable type (g, n)");
    auto& c = cache();
    std::lock_guard lock(c.mutex);
    const std::pair key{genus, legs};
    auto& list = c.by_type[key];
    if (!list) {
        list = std::make_shared<std::vector<StableGraph>>();
        list->push_back(StableGraph::edgeless(genus, legs));
        c.depth[key] = 0;
    }
    int& done = c.depth[key];
    // Each graph lives in Mbar_{g,n}, so the edge count never exceeds 3g - 3 + n.
    const int cap = std::min(max_edges, 3 * genus - 3 + legs);
    while (done < cap) {
        std::map<std::string, std::vector<std::size_t>> buckets;
        std::vector<std::size_t> frontier;
        for (std::size_t i = 0; i < list->size(); ++i)
            if ((*list)[i].num_edges() == done) frontier.push_back(i);
        for (std::size_t i : frontier) {
            for (auto& candidate : one_edge_degenerations((*list)[i])) {
                auto& bucket = buckets[candidate.invariant_key()];
                bool seen = false;
                for (std::size_t j : bucket)
                    if (!isomorphisms((*list)[j], candidate, true).empty()) {
                        seen = true;
                        break;
                    }
                if (seen) continue;
                bucket.push_back(list->size());
                list->push_back(std::move(candidate));
            }
        }
        ++done;
    }
    std::vector<StableGraph> view;
    for (const auto& g : *list)
        if (g.num_edges() <= max_edges) view.push_back(g);
    return view;
}

std::vector<GraphMorphism> all_morphisms(const StableGraph& source, const StableGraph& target) {
    std::vector<GraphMorphism> out;
    const int drop = source.num_edges() - target.num_edges();
    if (drop < 0 || source.num_legs() != target.num_legs() || source.total_genus() != target.total_genus()) return out;
    const int ne = source.num_edges();
    std::vector<int> choose(static_cast<std::size_t>(ne), 0);
    std::fill(choose.end() - drop, choose.end(), 1);
    do {
        std::vector<int> subset;
        for (int e = 0; e < ne; ++e)
            if (choose[static_cast<std::size_t>(e)]) subset.push_back(e);
        const Contraction c = contract_edges(source, subset);
        if (c.graph.invariant_key() != target.invariant_key()) continue;
        for (const auto& iso : isomorphisms(c.graph, target)) out.push_back(compose(c.morphism, as_morphism(iso)));
    } while (std::next_permutation(choose.begin(), choose.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> GenericABGraph::common_edges() const {
    const auto a = image_edges(gamma, to_A);
    const auto b = image_edges(gamma, to_B);
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return common;
}

namespace {

GraphMorphism precompose(const GraphMorphism& f, const GraphAutomorphism& phi, const GraphAutomorphism& phi_inv) {
    GraphMorphism out;
    out.vertex_map.reserve(f.vertex_map.size());
    for (std::size_t v = 0; v < f.vertex_map.size(); ++v)
        out.vertex_map.push_back(f.vertex_map[static_cast<std::size_t>(phi.vertex_perm[v])]);
    out.half_edge_map.reserve(f.half_edge_map.size());
    for (int h : f.half_edge_map) out.half_edge_map.push_back(phi_inv.half_edge_perm[static_cast<std::size_t>(h)]);
    return out;
}

}  // namespace

std::vector<GenericABGraph> enumerate_generic_AB(const StableGraph& a, const StableGraph& b) {
    if (a.total_genus() != b.total_genus() || a.num_legs() != b.num_legs())
        throw ValidationError("graphs A and B have different (g, n)");
    const int g = a.total_genus();
    const int n = a.num_legs();
    const int lo = std::max(a.num_edges(), b.num_edges());
    const int hi = a.num_edges() + b.num_edges();
    std::vector<GenericABGraph> out;
    for (const auto& gamma : stable_graphs(g, n, hi)) {
        if (gamma.num_edges() < lo) continue;
        const auto to_a = all_morphisms(gamma, a);
        if (to_a.empty()) continue;
        const auto to_b = all_morphisms(gamma, b);
        if (to_b.empty()) continue;
        const auto auts = automorphism_group(gamma);
        std::vector<GraphAutomorphism> inverses;
        for (const auto& phi : auts) inverses.push_back(inverse(phi));
        std::set<std::pair<GraphMorphism, GraphMorphism>> seen;
        std::vector<GenericABGraph> found;
        for (const auto& fa : to_a) {
            std::vector<bool> hit(static_cast<std::size_t>(gamma.num_edges()), false);
            for (int e : image_edges(gamma, fa)) hit[static_cast<std::size_t>(e)] = true;
            for (const auto& fb : to_b) {
                auto covered = hit;
                for (int e : image_edges(gamma, fb)) covered[static_cast<std::size_t>(e)] = true;
                if (std::find(covered.begin(), covered.end(), false) != covered.end()) continue;
                std::pair<GraphMorphism, GraphMorphism> best{fa, fb};
                for (std::size_t i = 0; i < auts.size(); ++i) {
                    std::pair<GraphMorphism, GraphMorphism> moved{precompose(fa, auts[i], inverses[i]),
                                                                 precompose(fb, auts[i], inverses[i])};
                    if (moved < best) best = std::move(moved);
                }
                if (seen.insert(best).second) found.push_back({gamma, best.first, best.second});
            }
        }
        std::sort(found.begin(), found.end(), [](const GenericABGraph& x, const GenericABGraph& y) {
            return std::tie(x.to_A, x.to_B) < std::tie(y.to_A, y.to_B);
        });
        for (auto& t : found) out.push_back(std::move(t));
    }
    return out;
}

}  // namespace htaut
