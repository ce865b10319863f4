#include "htaut/stable_graph.hpp"

#include "htaut/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace htaut {

StableGraph::StableGraph(std::vector<int> genera, std::vector<int> half_edge_vertex, std::vector<int> involution,
                         std::vector<int> leg_vertex, bool allow_disconnected)
    : genera_(std::move(genera)),
      half_edge_vertex_(std::move(half_edge_vertex)),
      involution_(std::move(involution)),
      leg_vertex_(std::move(leg_vertex)) {
    const int nv = num_vertices();
    if (nv == 0) throw ValidationError("stable graph without vertices");
    for (int g : genera_)
        if (g < 0) throw ValidationError("negative vertex genus");
    if (involution_.size() != half_edge_vertex_.size())
        throw ValidationError("involution and half-edge attachment have different lengths");
    for (int v : half_edge_vertex_)
        if (v < 0 || v >= nv) throw ValidationError("half-edge attached to a missing vertex");
    for (int v : leg_vertex_)
        if (v < 0 || v >= nv) throw ValidationError("leg attached to a missing vertex");
    const int nh = num_half_edges();
    edge_index_.assign(static_cast<std::size_t>(nh), -1);
    for (int h = 0; h < nh; ++h) {
        const int p = involution_[static_cast<std::size_t>(h)];
        if (p < 0 || p >= nh) throw ValidationError("involution points outside the half-edge set");
        if (p == h) throw ValidationError("involution has a fixed point at half-edge " + std::to_string(h));
        if (involution_[static_cast<std::size_t>(p)] != h) throw ValidationError("involution does not square to the identity");
        if (h < p) {
            edge_index_[static_cast<std::size_t>(h)] = static_cast<int>(edges_.size());
            edge_index_[static_cast<std::size_t>(p)] = static_cast<int>(edges_.size());
            edges_.emplace_back(h, p);
        }
    }
    for (int v = 0; v < nv; ++v) {
        if (2 * genera_[static_cast<std::size_t>(v)] - 2 + valence(v) <= 0)
            throw ValidationError("vertex " + std::to_string(v) + " violates stability");
    }
    if (!allow_disconnected && !is_connected()) throw ValidationError("stable graph is disconnected");
}

StableGraph StableGraph::edgeless(int genus, int legs) {
    return StableGraph({genus}, {}, {}, std::vector<int>(static_cast<std::size_t>(legs), 0));
}

StableGraph StableGraph::from_edges(std::vector<int> genera, std::vector<int> half_edge_vertex,
                                    const std::vector<std::pair<int, int>>& edges, std::vector<int> leg_vertex) {
    std::vector<int> involution(half_edge_vertex.size(), -1);
    for (const auto& [h, k] : edges) {
        const auto nh = static_cast<int>(half_edge_vertex.size());
        if (h < 0 || k < 0 || h >= nh || k >= nh) throw ValidationError("edge refers to a missing half-edge");
        if (involution[static_cast<std::size_t>(h)] != -1 || involution[static_cast<std::size_t>(k)] != -1)
            throw ValidationError("half-edge used by two edges");
        involution[static_cast<std::size_t>(h)] = k;
        involution[static_cast<std::size_t>(k)] = h;
    }
    return StableGraph(std::move(genera), std::move(half_edge_vertex), std::move(involution), std::move(leg_vertex));
}

bool StableGraph::is_loop(int edge) const {
    const auto& [h, k] = edges_.at(static_cast<std::size_t>(edge));
    return half_edge_vertex(h) == half_edge_vertex(k);
}

std::vector<int> StableGraph::half_edges_at(int v) const {
    std::vector<int> out;
    for (int h = 0; h < num_half_edges(); ++h)
        if (half_edge_vertex_[static_cast<std::size_t>(h)] == v) out.push_back(h);
    return out;
}

std::vector<int> StableGraph::legs_at(int v) const {
    std::vector<int> out;
    for (int i = 0; i < num_legs(); ++i)
        if (leg_vertex_[static_cast<std::size_t>(i)] == v) out.push_back(i);
    return out;
}

int StableGraph::valence(int v) const {
    return static_cast<int>(std::count(half_edge_vertex_.begin(), half_edge_vertex_.end(), v) +
                            std::count(leg_vertex_.begin(), leg_vertex_.end(), v));
}

int StableGraph::loops_at(int v) const {
    int count = 0;
    for (int e = 0; e < num_edges(); ++e)
        if (is_loop(e) && half_edge_vertex(edges_[static_cast<std::size_t>(e)].first) == v) ++count;
    return count;
}

int StableGraph::h1() const {
    std::vector<int> parent(static_cast<std::size_t>(num_vertices()));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
    };
    int components = num_vertices();
    for (const auto& [h, k] : edges_) {
        const int a = find(half_edge_vertex(h));
        const int b = find(half_edge_vertex(k));
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return num_edges() - num_vertices() + components;
}

int StableGraph::total_genus() const { return h1() + std::accumulate(genera_.begin(), genera_.end(), 0); }

bool StableGraph::is_connected() const {
    std::vector<bool> seen(static_cast<std::size_t>(num_vertices()), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const auto& [h, k] : edges_) {
            const int a = half_edge_vertex(h);
            const int b = half_edge_vertex(k);
            for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
                if (x == v && !seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = true;
                    ++reached;
                    stack.push_back(y);
                }
            }
        }
    }
    return reached == num_vertices();
}

namespace {

std::vector<std::vector<int>> edge_multiplicities(const StableGraph& g) {
    const auto nv = static_cast<std::size_t>(g.num_vertices());
    std::vector<std::vector<int>> m(nv, std::vector<int>(nv, 0));
    for (const auto& [h, k] : g.edges()) {
        const auto a = static_cast<std::size_t>(g.half_edge_vertex(h));
        const auto b = static_cast<std::size_t>(g.half_edge_vertex(k));
        ++m[a][b];
        if (a != b) ++m[b][a];
    }
    return m;
}

std::string vertex_signature(const StableGraph& g, int v) {
    std::ostringstream os;
    os << g.vertex_genus(v) << ':' << g.half_edges_at(v).size() << ':' << g.loops_at(v) << ':';
    for (int leg : g.legs_at(v)) os << leg << ',';
    return os.str();
}

}  // namespace

std::string StableGraph::invariant_key() const {
    std::vector<std::string> sigs;
    const auto mult = edge_multiplicities(*this);
    for (int v = 0; v < num_vertices(); ++v) {
        std::vector<std::string> nbrs;
        for (int u = 0; u < num_vertices(); ++u)
            if (u != v && mult[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] > 0)
                nbrs.push_back(std::to_string(mult[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) + "x" +
                               vertex_signature(*this, u));
        std::sort(nbrs.begin(), nbrs.end());
        std::string s = vertex_signature(*this, v) + "[";
        for (const auto& n : nbrs) s += n + ";";
        sigs.push_back(s + "]");
    }
    std::sort(sigs.begin(), sigs.end());
    std::string key = std::to_string(num_edges()) + "|";
    for (const auto& s : sigs) key += s + "|";
    return key;
}

std::string StableGraph::to_string() const {
    std::ostringstream os;
    os << "genera=[";
    for (int v = 0; v < num_vertices(); ++v) os << (v ? "," : "") << genera_[static_cast<std::size_t>(v)];
    os << "] edges=[";
    for (std::size_t e = 0; e < edges_.size(); ++e)
        os << (e ? "," : "") << half_edge_vertex(edges_[e].first) << "-" << half_edge_vertex(edges_[e].second);
    os << "] legs=[";
    for (int i = 0; i < num_legs(); ++i) os << (i ? "," : "") << (i + 1) << "@" << leg_vertex(i);
    os << "]";
    return os.str();
}

int graph_genus(const StableGraph& g) { return g.total_genus(); }

void check_morphism(const StableGraph& source, const StableGraph& target, const GraphMorphism& f) {
    if (static_cast<int>(f.vertex_map.size()) != source.num_vertices())
        throw ValidationError("vertex map has the wrong length");
    if (static_cast<int>(f.half_edge_map.size()) != target.num_half_edges())
        throw ValidationError("half-edge map has the wrong length");
    if (source.num_legs() != target.num_legs()) throw ValidationError("leg counts differ");
    std::vector<bool> hit_vertex(static_cast<std::size_t>(target.num_vertices()), false);
    for (int v : f.vertex_map) {
        if (v < 0 || v >= target.num_vertices()) throw ValidationError("vertex map leaves the target");
        hit_vertex[static_cast<std::size_t>(v)] = true;
    }
    if (std::find(hit_vertex.begin(), hit_vertex.end(), false) != hit_vertex.end())
        throw ValidationError("vertex map is not surjective");
    std::vector<bool> used(static_cast<std::size_t>(source.num_half_edges()), false);
    for (int h = 0; h < target.num_half_edges(); ++h) {
        const int s = f.half_edge_map[static_cast<std::size_t>(h)];
        if (s < 0 || s >= source.num_half_edges() || used[static_cast<std::size_t>(s)])
            throw ValidationError("half-edge map is not injective");
        used[static_cast<std::size_t>(s)] = true;
        if (f.half_edge_map[static_cast<std::size_t>(target.partner(h))] != source.partner(s))
            throw ValidationError("half-edge map does not commute with the involutions");
        if (f.vertex_map[static_cast<std::size_t>(source.half_edge_vertex(s))] != target.half_edge_vertex(h))
            throw ValidationError("half-edge map does not respect attachment");
    }
    for (int i = 0; i < source.num_legs(); ++i)
        if (f.vertex_map[static_cast<std::size_t>(source.leg_vertex(i))] != target.leg_vertex(i))
            throw ValidationError("leg " + std::to_string(i + 1) + " is not carried to its target vertex");
    // Fibres over each target vertex, glued along contracted edges, must be connected of the right genus.
    for (int w = 0; w < target.num_vertices(); ++w) {
        std::vector<int> fibre;
        for (int v = 0; v < source.num_vertices(); ++v)
            if (f.vertex_map[static_cast<std::size_t>(v)] == w) fibre.push_back(v);
        std::vector<int> parent(static_cast<std::size_t>(source.num_vertices()));
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
        };
        int contracted = 0;
        int components = static_cast<int>(fibre.size());
        int genus_sum = 0;
        for (int v : fibre) genus_sum += source.vertex_genus(v);
        for (int e = 0; e < source.num_edges(); ++e) {
            const auto& [h, k] = source.edges()[static_cast<std::size_t>(e)];
            if (used[static_cast<std::size_t>(h)]) continue;
            const int a = source.half_edge_vertex(h);
            const int b = source.half_edge_vertex(k);
            if (f.vertex_map[static_cast<std::size_t>(a)] != w) continue;
            if (f.vertex_map[static_cast<std::size_t>(b)] != w) throw ValidationError("contracted edge joins different fibres");
            ++contracted;
            const int ra = find(a);
            const int rb = find(b);
            if (ra != rb) {
                parent[static_cast<std::size_t>(ra)] = rb;
                --components;
            }
        }
        if (components != 1) throw ValidationError("fibre over target vertex " + std::to_string(w) + " is disconnected");
        const int genus = genus_sum + contracted - static_cast<int>(fibre.size()) + 1;
        if (genus != target.vertex_genus(w))
            throw ValidationError("fibre over target vertex " + std::to_string(w) + " has the wrong genus");
    }
}

GraphMorphism compose(const GraphMorphism& first, const GraphMorphism& second) {
    GraphMorphism out;
    out.vertex_map.reserve(first.vertex_map.size());
    for (int v : first.vertex_map) out.vertex_map.push_back(second.vertex_map.at(static_cast<std::size_t>(v)));
    out.half_edge_map.reserve(second.half_edge_map.size());
    for (int h : second.half_edge_map) out.half_edge_map.push_back(first.half_edge_map.at(static_cast<std::size_t>(h)));
    return out;
}

GraphMorphism identity_morphism(const StableGraph& g) {
    GraphMorphism f;
    f.vertex_map.resize(static_cast<std::size_t>(g.num_vertices()));
    std::iota(f.vertex_map.begin(), f.vertex_map.end(), 0);
    f.half_edge_map.resize(static_cast<std::size_t>(g.num_half_edges()));
    std::iota(f.half_edge_map.begin(), f.half_edge_map.end(), 0);
    return f;
}

std::vector<int> image_edges(const StableGraph& source, const GraphMorphism& f) {
    std::vector<int> edges;
    for (int h : f.half_edge_map) edges.push_back(source.edge_of(h));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

GraphAutomorphism compose(const GraphAutomorphism& first, const GraphAutomorphism& second) {
    GraphAutomorphism out;
    for (int v : first.vertex_perm) out.vertex_perm.push_back(second.vertex_perm.at(static_cast<std::size_t>(v)));
    for (int h : first.half_edge_perm) out.half_edge_perm.push_back(second.half_edge_perm.at(static_cast<std::size_t>(h)));
    return out;
}

GraphAutomorphism inverse(const GraphAutomorphism& a) {
    GraphAutomorphism out;
    out.vertex_perm.resize(a.vertex_perm.size());
    out.half_edge_perm.resize(a.half_edge_perm.size());
    for (std::size_t i = 0; i < a.vertex_perm.size(); ++i) out.vertex_perm[static_cast<std::size_t>(a.vertex_perm[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < a.half_edge_perm.size(); ++i)
        out.half_edge_perm[static_cast<std::size_t>(a.half_edge_perm[i])] = static_cast<int>(i);
    return out;
}

GraphMorphism as_morphism(const GraphAutomorphism& a) {
    GraphMorphism f;
    f.vertex_map = a.vertex_perm;
    f.half_edge_map = inverse(a).half_edge_perm;
    return f;
}

std::vector<GraphAutomorphism> isomorphisms(const StableGraph& a, const StableGraph& b, bool first_only) {
    std::vector<GraphAutomorphism> result;
    if (a.num_vertices() != b.num_vertices() || a.num_half_edges() != b.num_half_edges() ||
        a.num_legs() != b.num_legs())
        return result;
    const int nv = a.num_vertices();
    std::vector<std::string> sig_a, sig_b;
    for (int v = 0; v < nv; ++v) {
        sig_a.push_back(vertex_signature(a, v));
        sig_b.push_back(vertex_signature(b, v));
    }
    {
        auto sa = sig_a, sb = sig_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return result;
    }
    const auto mult_a = edge_multiplicities(a);
    const auto mult_b = edge_multiplicities(b);

    // Edge groups of a keyed by endpoint pair.
    std::map<std::pair<int, int>, std::vector<int>> groups_a, groups_b;
    auto key_of = [](const StableGraph& g, int e) {
        const auto& [h, k] = g.edges()[static_cast<std::size_t>(e)];
        const int x = g.half_edge_vertex(h);
        const int y = g.half_edge_vertex(k);
        return std::pair{std::min(x, y), std::max(x, y)};
    };
    for (int e = 0; e < a.num_edges(); ++e) groups_a[key_of(a, e)].push_back(e);
    for (int e = 0; e < b.num_edges(); ++e) groups_b[key_of(b, e)].push_back(e);

    std::vector<int> phi(static_cast<std::size_t>(nv), -1);
    std::vector<bool> used(static_cast<std::size_t>(nv), false);
    bool stop = false;

    auto emit_half_edges = [&]() {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> blocks;  // (edges of a, edges of b)
        for (const auto& [key, edges] : groups_a) {
            const int x = phi[static_cast<std::size_t>(key.first)];
            const int y = phi[static_cast<std::size_t>(key.second)];
            blocks.emplace_back(edges, groups_b.at({std::min(x, y), std::max(x, y)}));
        }
        std::vector<int> hmap(static_cast<std::size_t>(a.num_half_edges()), -1);
        std::function<void(std::size_t)> rec_block;
        std::function<void(std::size_t, std::vector<int>&, std::size_t)> rec_orient;
        rec_block = [&](std::size_t bi) {
            if (stop) return;
            if (bi == blocks.size()) {
                result.push_back({phi, hmap});
                if (first_only) stop = true;
                return;
            }
            std::vector<int> perm = blocks[bi].second;
            std::sort(perm.begin(), perm.end());
            do {
                rec_orient(bi, perm, 0);
                if (stop) return;
            } while (std::next_permutation(perm.begin(), perm.end()));
        };
        rec_orient = [&](std::size_t bi, std::vector<int>& perm, std::size_t j) {
            if (stop) return;
            const auto& src = blocks[bi].first;
            if (j == src.size()) {
                rec_block(bi + 1);
                return;
            }
            const auto& [h, k] = a.edges()[static_cast<std::size_t>(src[j])];
            const auto& [p, q] = b.edges()[static_cast<std::size_t>(perm[j])];
            const bool loop = a.half_edge_vertex(h) == a.half_edge_vertex(k);
            for (int flip = 0; flip < 2; ++flip) {
                const int ph = flip ? q : p;
                const int pk = flip ? p : q;
                if (!loop && phi[static_cast<std::size_t>(a.half_edge_vertex(h))] != b.half_edge_vertex(ph)) continue;
                hmap[static_cast<std::size_t>(h)] = ph;
                hmap[static_cast<std::size_t>(k)] = pk;
                rec_orient(bi, perm, j + 1);
                if (stop) return;
            }
        };
        rec_block(0);
    };

    std::function<void(int)> assign = [&](int v) {
        if (stop) return;
        if (v == nv) {
            emit_half_edges();
            return;
        }
        for (int w = 0; w < nv; ++w) {
            if (used[static_cast<std::size_t>(w)] || sig_a[static_cast<std::size_t>(v)] != sig_b[static_cast<std::size_t>(w)]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = mult_a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] ==
                     mult_b[static_cast<std::size_t>(w)][static_cast<std::size_t>(phi[static_cast<std::size_t>(u)])];
            if (!ok) continue;
            phi[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = true;
            assign(v + 1);
            used[static_cast<std::size_t>(w)] = false;
            phi[static_cast<std::size_t>(v)] = -1;
            if (stop) return;
        }
    };
    assign(0);
    std::sort(result.begin(), result.end());
    return result;
}

bool are_isomorphic(const StableGraph& a, const StableGraph& b) {
    if (a.invariant_key() != b.invariant_key()) return false;
    return !isomorphisms(a, b, true).empty();
}

std::vector<GraphAutomorphism> automorphism_group(const StableGraph& g) { return isomorphisms(g, g); }

Contraction contract_edges(const StableGraph& g, const std::vector<int>& edges) {
    std::vector<bool> contract(static_cast<std::size_t>(g.num_edges()), false);
    for (int e : edges) {
        if (e < 0 || e >= g.num_edges()) throw ValidationError("contracted edge index out of range");
        contract[static_cast<std::size_t>(e)] = true;
    }
    const int nv = g.num_vertices();
    std::vector<int> parent(static_cast<std::size_t>(nv));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
    };
    for (int e = 0; e < g.num_edges(); ++e) {
        if (!contract[static_cast<std::size_t>(e)]) continue;
        const auto& [h, k] = g.edges()[static_cast<std::size_t>(e)];
        const int a = find(g.half_edge_vertex(h));
        const int b = find(g.half_edge_vertex(k));
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::vector<int> new_index(static_cast<std::size_t>(nv), -1);
    std::vector<int> genera;
    std::vector<int> vertex_map(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v) {
        const int r = find(v);
        if (new_index[static_cast<std::size_t>(r)] == -1) {
            new_index[static_cast<std::size_t>(r)] = static_cast<int>(genera.size());
            genera.push_back(0);
        }
        vertex_map[static_cast<std::size_t>(v)] = new_index[static_cast<std::size_t>(r)];
    }
    // genus of a fibre = sum of genera + contracted edges - vertices + 1
    std::vector<int> fibre_size(genera.size(), 0);
    for (int v = 0; v < nv; ++v) {
        genera[static_cast<std::size_t>(vertex_map[static_cast<std::size_t>(v)])] += g.vertex_genus(v);
        ++fibre_size[static_cast<std::size_t>(vertex_map[static_cast<std::size_t>(v)])];
    }
    for (int e = 0; e < g.num_edges(); ++e)
        if (contract[static_cast<std::size_t>(e)])
            ++genera[static_cast<std::size_t>(vertex_map[static_cast<std::size_t>(g.half_edge_vertex(g.edges()[static_cast<std::size_t>(e)].first))])];
    for (std::size_t w = 0; w < genera.size(); ++w) genera[w] += 1 - fibre_size[w];

    std::vector<int> kept;  // old half-edges surviving, in order
    std::vector<int> new_half(static_cast<std::size_t>(g.num_half_edges()), -1);
    for (int h = 0; h < g.num_half_edges(); ++h) {
        if (contract[static_cast<std::size_t>(g.edge_of(h))]) continue;
        new_half[static_cast<std::size_t>(h)] = static_cast<int>(kept.size());
        kept.push_back(h);
    }
    std::vector<int> attach, involution;
    for (int h : kept) {
        attach.push_back(vertex_map[static_cast<std::size_t>(g.half_edge_vertex(h))]);
        involution.push_back(new_half[static_cast<std::size_t>(g.partner(h))]);
    }
    std::vector<int> legs;
    for (int i = 0; i < g.num_legs(); ++i) legs.push_back(vertex_map[static_cast<std::size_t>(g.leg_vertex(i))]);
    Contraction out{StableGraph(std::move(genera), std::move(attach), std::move(involution), std::move(legs)),
                    GraphMorphism{std::move(vertex_map), std::move(kept)}};
    return out;
}

}  // namespace htaut
