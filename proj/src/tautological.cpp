#include "htaut/tautological.hpp"

#include "htaut/errors.hpp"
#include "htaut/psi_integrals.hpp"

#include <sstream>

namespace htaut {

int Decoration::degree() const {
    int d = 0;
    for (const auto& [leg, e] : leg_psi) d += e;
    for (const auto& [h, e] : half_edge_psi) d += e;
    for (const auto& [v, ks] : kappa)
        for (const auto& [i, e] : ks) d += i * e;
    return d;
}

void Decoration::check(const StableGraph& g) const {
    for (const auto& [leg, e] : leg_psi)
        if (leg < 0 || leg >= g.num_legs() || e < 0) throw ValidationError("psi decoration on a missing leg");
    for (const auto& [h, e] : half_edge_psi)
        if (h < 0 || h >= g.num_half_edges() || e < 0) throw ValidationError("psi decoration on a missing half-edge");
    for (const auto& [v, ks] : kappa) {
        if (v < 0 || v >= g.num_vertices()) throw ValidationError("kappa decoration on a missing vertex");
        for (const auto& [i, e] : ks)
            if (i < 1 || e < 0) throw ValidationError("kappa index must be >= 1");
    }
}

std::vector<int> Decoration::vertex_psi(const StableGraph& g, int v) const {
    std::vector<int> exps;
    for (int leg : g.legs_at(v)) {
        auto it = leg_psi.find(leg);
        exps.push_back(it == leg_psi.end() ? 0 : it->second);
    }
    for (int h : g.half_edges_at(v)) {
        auto it = half_edge_psi.find(h);
        exps.push_back(it == half_edge_psi.end() ? 0 : it->second);
    }
    return exps;
}

Decoration operator*(const Decoration& a, const Decoration& b) {
    Decoration r = a;
    for (const auto& [leg, e] : b.leg_psi) r.leg_psi[leg] += e;
    for (const auto& [h, e] : b.half_edge_psi) r.half_edge_psi[h] += e;
    for (const auto& [v, ks] : b.kappa)
        for (const auto& [i, e] : ks) r.kappa[v][i] += e;
    return r;
}

Decoration psi_leg(int leg, int exponent) {
    Decoration d;
    if (exponent > 0) d.leg_psi[leg] = exponent;
    return d;
}

Decoration psi_half_edge(int half_edge, int exponent) {
    Decoration d;
    if (exponent > 0) d.half_edge_psi[half_edge] = exponent;
    return d;
}

Decoration kappa_at(int vertex, int index, int exponent) {
    Decoration d;
    if (exponent > 0) d.kappa[vertex][index] = exponent;
    return d;
}

void GraphClass::add(const Decoration& d, const Rational& c) {
    if (c.is_zero()) return;
    d.check(graph);
    auto& slot = terms[d];
    slot += c;
    if (slot.is_zero()) terms.erase(d);
}

GraphClass& GraphClass::operator*=(const GraphClass& other) {
    if (!(graph == other.graph)) throw ValidationError("product of classes on different graphs");
    std::map<Decoration, Rational> product;
    for (const auto& [d1, c1] : terms)
        for (const auto& [d2, c2] : other.terms) product[d1 * d2] += c1 * c2;
    terms.clear();
    for (auto& [d, c] : product)
        if (!c.is_zero()) terms.emplace(d, c);
    return *this;
}

namespace {

std::string decoration_string(const Decoration& d) {
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first) os << "*";
        first = false;
    };
    for (const auto& [leg, e] : d.leg_psi) {
        sep();
        os << "psi_" << (leg + 1) << (e > 1 ? "^" + std::to_string(e) : "");
    }
    for (const auto& [h, e] : d.half_edge_psi) {
        sep();
        os << "psi_h" << h << (e > 1 ? "^" + std::to_string(e) : "");
    }
    for (const auto& [v, ks] : d.kappa)
        for (const auto& [i, e] : ks) {
            sep();
            os << "kappa_" << i << "@" << v << (e > 1 ? "^" + std::to_string(e) : "");
        }
    if (first) os << "1";
    return os.str();
}

}  // namespace

std::string GraphClass::to_string() const {
    std::ostringstream os;
    for (const auto& [d, c] : terms) os << (os.tellp() > 0 ? " + " : "") << c << "*" << decoration_string(d);
    return os.tellp() > 0 ? os.str() : "0";
}

void StratumClass::add(const Rational& c, const StableGraph& graph, const Decoration& d) {
    if (graph.total_genus() != genus || graph.num_legs() != legs)
        throw ValidationError("stratum graph does not have type (" + std::to_string(genus) + "," + std::to_string(legs) + ")");
    d.check(graph);
    terms.push_back({c, graph, d});
}

StratumClass StratumClass::simplified() const {
    StratumClass out(genus, legs);
    for (const auto& t : terms) {
        bool merged = false;
        for (auto& u : out.terms) {
            if (u.graph == t.graph && u.decoration == t.decoration) {
                u.coefficient += t.coefficient;
                merged = true;
                break;
            }
        }
        if (!merged) out.terms.push_back(t);
    }
    std::erase_if(out.terms, [](const StratumTerm& t) { return t.coefficient.is_zero(); });
    return out;
}

StratumClass& StratumClass::operator+=(const StratumClass& other) {
    if (other.genus != genus || other.legs != legs) throw ValidationError("sum of classes on different spaces");
    terms.insert(terms.end(), other.terms.begin(), other.terms.end());
    return *this;
}

StratumClass operator*(const Rational& c, const StratumClass& s) {
    StratumClass out = s;
    for (auto& t : out.terms) t.coefficient *= c;
    return out;
}

bool StratumClass::is_pure() const {
    for (const auto& t : terms)
        if (t.graph.num_edges() != 0) return false;
    return true;
}

std::string StratumClass::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) os << " + ";
        os << terms[i].coefficient << "*[" << terms[i].graph.to_string() << "; " << decoration_string(terms[i].decoration) << "]";
    }
    return os.str();
}

StratumClass psi_class(int genus, int legs, int leg, int exponent) {
    if (leg < 1 || leg > legs) throw ValidationError("psi index out of range");
    StratumClass c(genus, legs);
    c.add(Rational(1), StableGraph::edgeless(genus, legs), psi_leg(leg - 1, exponent));
    return c;
}

StratumClass kappa_class(int genus, int legs, int index, int exponent) {
    if (index < 1) throw ValidationError("kappa index must be >= 1");
    StratumClass c(genus, legs);
    c.add(Rational(1), StableGraph::edgeless(genus, legs), kappa_at(0, index, exponent));
    return c;
}

StratumClass kappa_tilde_class(int genus, int legs, int index) {
    StratumClass c = kappa_class(genus, legs, index);
    for (int j = 1; j <= legs; ++j) c += Rational(-1) * psi_class(genus, legs, j, index);
    return c;
}

StratumClass pure_product(const StratumClass& a, const StratumClass& b) {
    if (!a.is_pure() || !b.is_pure()) throw ValidationError("pure_product needs classes without boundary strata");
    if (a.genus != b.genus || a.legs != b.legs) throw ValidationError("product of classes on different spaces");
    StratumClass out(a.genus, a.legs);
    for (const auto& x : a.terms)
        for (const auto& y : b.terms) out.add(x.coefficient * y.coefficient, x.graph, x.decoration * y.decoration);
    return out.simplified();
}

StableGraph rational_tail_graph(int genus, int legs, int leg) {
    if (leg < 1 || leg > legs) throw ValidationError("leg index out of range");
    std::vector<int> leg_vertex(static_cast<std::size_t>(legs + 1), 0);
    leg_vertex[static_cast<std::size_t>(leg - 1)] = 1;
    leg_vertex[static_cast<std::size_t>(legs)] = 1;
    return StableGraph::from_edges({genus, 0}, {0, 1}, {{0, 1}}, leg_vertex);
}

StratumClass pullback_psi_forgetful(int genus, int legs, int leg) {
    if (leg < 1 || leg > legs) throw ValidationError("psi index " + std::to_string(leg) + " out of range 1.." + std::to_string(legs));
    if (2 * genus - 2 + legs <= 0) throw ValidationError("unstable base (g, n)");
    StratumClass c(genus, legs + 1);
    c.add(Rational(1), StableGraph::edgeless(genus, legs + 1), psi_leg(leg - 1));
    c.add(Rational(-1), rational_tail_graph(genus, legs, leg), Decoration{});
    return c;
}

StratumClass pullback_kappa_forgetful(int genus, int legs, int index) {
    if (index < 1) throw ValidationError("kappa index must be >= 1 (kappa_0 is the constant 2g-2+n)");
    if (2 * genus - 2 + legs <= 0) throw ValidationError("unstable base (g, n)");
    StratumClass c(genus, legs + 1);
    c.add(Rational(1), StableGraph::edgeless(genus, legs + 1), kappa_at(0, index));
    c.add(Rational(-1), StableGraph::edgeless(genus, legs + 1), psi_leg(legs, index));
    return c;
}

GraphClass pullback_by_boundary(const StratumClass& cls, const StableGraph& gamma) {
    if (!cls.is_pure()) throw ValidationError("pullback_by_boundary needs a pure psi/kappa class; intersect boundary strata first");
    if (gamma.total_genus() != cls.genus || gamma.num_legs() != cls.legs)
        throw ValidationError("graph type does not match the class");
    GraphClass out{gamma, {}};
    for (const auto& t : cls.terms) {
        GraphClass term{gamma, {}};
        term.add(Decoration{}, t.coefficient);
        for (const auto& [leg, e] : t.decoration.leg_psi) {
            GraphClass factor{gamma, {}};
            factor.add(psi_leg(leg, e), Rational(1));
            term *= factor;
        }
        for (const auto& [v, ks] : t.decoration.kappa) {
            for (const auto& [index, e] : ks) {
                GraphClass sum{gamma, {}};
                for (int w = 0; w < gamma.num_vertices(); ++w) sum.add(kappa_at(w, index), Rational(1));
                for (int k = 0; k < e; ++k) term *= sum;
            }
        }
        for (const auto& [d, c] : term.terms) out.add(d, c);
    }
    return out;
}

GraphClass excess_class(const StableGraph& gamma, const std::vector<int>& edges) {
    GraphClass out{gamma, {}};
    out.add(Decoration{}, Rational(1));
    for (int e : edges) {
        const auto& [h, k] = gamma.edges().at(static_cast<std::size_t>(e));
        GraphClass factor{gamma, {}};
        factor.add(psi_half_edge(h), Rational(-1));
        factor.add(psi_half_edge(k), Rational(-1));
        out *= factor;
    }
    return out;
}

StratumClass BoundaryIntersection::push_forward() const {
    StratumClass out(base.total_genus(), base.num_legs());
    for (const auto& t : terms)
        for (const auto& [d, c] : t.excess.terms) out.add(c, t.triple.gamma, d);
    return out;
}

BoundaryIntersection boundary_intersection(const StableGraph& a, const StableGraph& b) {
    BoundaryIntersection out{a, {}};
    for (auto& triple : enumerate_generic_AB(a, b)) {
        GraphClass excess = excess_class(triple.gamma, triple.common_edges());
        out.terms.push_back({std::move(triple), std::move(excess)});
    }
    return out;
}

StratumClass multiply_by_pure(const StratumClass& strata, const StratumClass& pure) {
    if (strata.genus != pure.genus || strata.legs != pure.legs) throw ValidationError("product of classes on different spaces");
    StratumClass out(strata.genus, strata.legs);
    for (const auto& t : strata.terms) {
        const GraphClass pulled = pullback_by_boundary(pure, t.graph);
        for (const auto& [d, c] : pulled.terms) out.add(t.coefficient * c, t.graph, t.decoration * d);
    }
    return out;
}

Rational integrate_stratum_class(const StratumClass& cls) {
    const int dim = 3 * cls.genus - 3 + cls.legs;
    Rational total;
    for (const auto& t : cls.terms) {
        if (t.codimension() != dim)
            throw ValidationError("term of codimension " + std::to_string(t.codimension()) +
                                  " in a top-degree integral on a space of dimension " + std::to_string(dim));
        if (t.coefficient.is_zero()) continue;
        const StableGraph& g = t.graph;
        bool vanishes = false;
        std::vector<std::vector<int>> psis;
        for (int v = 0; v < g.num_vertices() && !vanishes; ++v) {
            psis.push_back(t.decoration.vertex_psi(g, v));
            int deg = 0;
            for (int e : psis.back()) deg += e;
            auto it = t.decoration.kappa.find(v);
            if (it != t.decoration.kappa.end())
                for (const auto& [i, e] : it->second) deg += i * e;
            vanishes = deg != 3 * g.vertex_genus(v) - 3 + g.valence(v);
        }
        if (vanishes) continue;
        Rational product = t.coefficient;
        for (int v = 0; v < g.num_vertices() && !product.is_zero(); ++v) {
            if (g.vertex_genus(v) >= 2)
                throw UnsupportedError("integration needs a genus-" + std::to_string(g.vertex_genus(v)) + " vertex integral");
            auto it = t.decoration.kappa.find(v);
            product *= integrate_psi_kappa(g.vertex_genus(v), psis[static_cast<std::size_t>(v)],
                                           it == t.decoration.kappa.end() ? std::map<int, int>{} : it->second);
        }
        total += product;
    }
    return total;
}

}  // namespace htaut
