#include "htaut/json_io.hpp"

#include "htaut/errors.hpp"

#include <algorithm>

namespace htaut {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw ValidationError(std::string("expected an object with field '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw ValidationError(std::string("missing field '") + key + "'");
    return *it;
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ValidationError(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<int> int_array(const Json& j, const char* what) {
    if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& x : j) out.push_back(as_int(x, what));
    return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw ValidationError("rational numbers must be strings \"p/q\" or integers");
}

Json to_json(const QSeries& s) {
    Json coeffs = Json::array();
    for (int k = 0; k <= s.order(); ++k) coeffs.push_back(to_json(s[k]));
    return Json{{"coefficients", coeffs}, {"order", s.order()}};
}

QSeries qseries_from_json(const Json& j) {
    const Json& c = field(j, "coefficients");
    if (!c.is_array()) throw ValidationError("coefficients must be an array");
    std::vector<Rational> coeffs;
    for (const auto& x : c) coeffs.push_back(rational_from_json(x));
    const int order = j.contains("order") ? as_int(j["order"], "order") : static_cast<int>(coeffs.size()) - 1;
    if (order < 0 || order + 1 > static_cast<int>(coeffs.size()))
        throw ValidationError("order exceeds the number of supplied coefficients");
    coeffs.resize(static_cast<std::size_t>(order + 1));
    return QSeries(std::move(coeffs), order);
}

Json to_json(const Permutation& p) {
    Json out = Json::array();
    for (int x : p.images()) out.push_back(x + 1);
    return out;
}

Permutation permutation_from_json(const Json& j) {
    auto images = int_array(j, "permutation");
    for (int& x : images) x -= 1;
    return Permutation(std::move(images));
}

Json group_to_json(const FiniteGroup& g) {
    Json gens = Json::array();
    for (const auto& p : g.generators()) gens.push_back(to_json(p));
    return Json{{"degree", g.degree()}, {"generators", gens}};
}

GroupPtr group_from_json(const Json& j) {
    if (!j.is_object()) throw ValidationError("group description must be an object");
    if (j.contains("symmetric")) return FiniteGroup::symmetric(as_int(j["symmetric"], "symmetric"));
    if (j.contains("cyclic")) return FiniteGroup::cyclic(as_int(j["cyclic"], "cyclic"));
    if (j.contains("product")) {
        const Json& parts = j["product"];
        if (!parts.is_array() || parts.size() != 2) throw ValidationError("product needs exactly two factors");
        return FiniteGroup::direct_product(*group_from_json(parts[0]), *group_from_json(parts[1]));
    }
    const int degree = as_int(field(j, "degree"), "degree");
    std::vector<Permutation> gens;
    for (const auto& g : field(j, "generators")) {
        Permutation p = permutation_from_json(g);
        if (p.degree() != degree) throw ValidationError("generator degree differs from the group degree");
        gens.push_back(std::move(p));
    }
    return FiniteGroup::from_generators(degree, std::move(gens));
}

Json element_to_json(const FiniteGroup& g, Element e) { return to_json(g.permutation(e)); }

Element element_from_json(const FiniteGroup& g, const Json& j) { return g.element_of(permutation_from_json(j)); }

Json to_json(const StableGraph& g) {
    Json edges = Json::array();
    for (const auto& [h, k] : g.edges()) edges.push_back(Json::array({h, k}));
    Json legs = Json::array();
    for (int l = 0; l < g.num_legs(); ++l) legs.push_back(Json::array({l + 1, g.leg_vertex(l)}));
    return Json{{"genera", g.genera()}, {"half_edge_vertex", g.half_edge_vertices()}, {"edges", edges}, {"legs", legs}};
}

StableGraph stable_graph_from_json(const Json& j) {
    auto genera = int_array(field(j, "genera"), "genera");
    auto half_edge_vertex = j.contains("half_edge_vertex") ? int_array(j["half_edge_vertex"], "half_edge_vertex")
                                                           : std::vector<int>{};
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            auto pair = int_array(e, "edge");
            if (pair.size() != 2) throw ValidationError("edges are pairs of half-edges");
            edges.emplace_back(pair[0], pair[1]);
        }
    }
    std::vector<std::pair<int, int>> labelled;
    if (j.contains("legs")) {
        for (const auto& l : j["legs"]) {
            auto pair = int_array(l, "leg");
            if (pair.size() != 2) throw ValidationError("legs are [label, vertex] pairs");
            labelled.emplace_back(pair[0], pair[1]);
        }
    }
    std::sort(labelled.begin(), labelled.end());
    std::vector<int> leg_vertex;
    for (std::size_t i = 0; i < labelled.size(); ++i) {
        if (labelled[i].first != static_cast<int>(i) + 1) throw ValidationError("leg labels must be exactly 1..n");
        leg_vertex.push_back(labelled[i].second);
    }
    return StableGraph::from_edges(std::move(genera), std::move(half_edge_vertex), edges, std::move(leg_vertex));
}

Json to_json(const GraphMorphism& f) {
    return Json{{"vertex_map", f.vertex_map}, {"half_edge_map", f.half_edge_map}};
}

Json to_json(const Decoration& d) {
    Json legs = Json::array(), half_edges = Json::array(), kappa = Json::array();
    for (const auto& [l, e] : d.leg_psi) legs.push_back(Json::array({l + 1, e}));
    for (const auto& [h, e] : d.half_edge_psi) half_edges.push_back(Json::array({h, e}));
    for (const auto& [v, ks] : d.kappa)
        for (const auto& [i, e] : ks) kappa.push_back(Json::array({v, i, e}));
    return Json{{"psi_legs", legs}, {"psi_half_edges", half_edges}, {"kappa", kappa}};
}

Decoration decoration_from_json(const Json& j) {
    Decoration d;
    if (!j.is_object()) throw ValidationError("decoration must be an object");
    if (j.contains("psi_legs"))
        for (const auto& x : j["psi_legs"]) {
            auto p = int_array(x, "psi_legs entry");
            if (p.size() != 2 || p[0] < 1 || p[1] < 0) throw ValidationError("psi_legs entries are [label, exponent]");
            if (p[1] > 0) d.leg_psi[p[0] - 1] += p[1];
        }
    if (j.contains("psi_half_edges"))
        for (const auto& x : j["psi_half_edges"]) {
            auto p = int_array(x, "psi_half_edges entry");
            if (p.size() != 2 || p[1] < 0) throw ValidationError("psi_half_edges entries are [half_edge, exponent]");
            if (p[1] > 0) d.half_edge_psi[p[0]] += p[1];
        }
    if (j.contains("kappa"))
        for (const auto& x : j["kappa"]) {
            auto p = int_array(x, "kappa entry");
            if (p.size() != 3 || p[1] < 1 || p[2] < 0) throw ValidationError("kappa entries are [vertex, index, exponent]");
            if (p[2] > 0) d.kappa[p[0]][p[1]] += p[2];
        }
    return d;
}

Json to_json(const GraphClass& c) {
    Json terms = Json::array();
    for (const auto& [d, coeff] : c.terms) terms.push_back(Json{{"coefficient", to_json(coeff)}, {"decoration", to_json(d)}});
    return Json{{"graph", to_json(c.graph)}, {"terms", terms}};
}

Json to_json(const StratumClass& c) {
    Json terms = Json::array();
    for (const auto& t : c.terms)
        terms.push_back(Json{{"coefficient", to_json(t.coefficient)}, {"graph", to_json(t.graph)},
                             {"decoration", to_json(t.decoration)}});
    return Json{{"genus", c.genus}, {"legs", c.legs}, {"terms", terms}};
}

StratumClass stratum_class_from_json(const Json& j) {
    StratumClass c(as_int(field(j, "genus"), "genus"), as_int(field(j, "legs"), "legs"));
    for (const auto& t : field(j, "terms")) {
        const StableGraph g = t.contains("graph") ? stable_graph_from_json(t["graph"]) : StableGraph::edgeless(c.genus, c.legs);
        const Decoration d = t.contains("decoration") ? decoration_from_json(t["decoration"]) : Decoration{};
        d.check(g);
        c.add(rational_from_json(field(t, "coefficient")), g, d);
    }
    return c;
}

Json to_json(const MonodromyDatum& xi) {
    Json out = Json::array();
    for (Element e : xi.elements) out.push_back(element_to_json(*xi.group, e));
    return out;
}

Json to_json(const HurwitzSpaceId& id) {
    return Json{{"genus", id.genus},
                {"xi", to_json(id.xi)},
                {"target_genus", id.target_genus},
                {"marked_points", id.marked_points},
                {"branch_points", id.branch_points()}};
}

Json to_json(const AdmissibleGGraph& g, bool include_group) {
    const FiniteGroup& group = *g.group();
    Json out;
    if (include_group) out["group"] = group_to_json(group);
    out["graph"] = to_json(g.graph());
    Json actions = Json::array();
    for (const auto& a : g.generator_actions())
        actions.push_back(Json{{"vertices", a.vertex}, {"half_edges", a.half_edge}, {"legs", a.leg}});
    out["action"] = actions;
    Json he = Json::array(), legs = Json::array();
    for (Element e : g.half_edge_monodromies()) he.push_back(element_to_json(group, e));
    for (Element e : g.leg_monodromies()) legs.push_back(element_to_json(group, e));
    out["monodromy"] = Json{{"half_edges", he}, {"legs", legs}};
    out["distinguished_legs"] = g.distinguished_legs();
    return out;
}

AdmissibleGGraph ggraph_from_json(const Json& j, GroupPtr group) {
    if (j.contains("group")) group = group_from_json(j["group"]);
    if (!group) throw ValidationError("G-graph needs a group");
    StableGraph graph = stable_graph_from_json(field(j, "graph"));
    std::vector<GraphAction> actions;
    for (const auto& a : field(j, "action")) {
        GraphAction act;
        act.vertex = a.contains("vertices") ? int_array(a["vertices"], "vertices") : std::vector<int>{0};
        act.half_edge = a.contains("half_edges") ? int_array(a["half_edges"], "half_edges") : std::vector<int>{};
        act.leg = a.contains("legs") ? int_array(a["legs"], "legs") : std::vector<int>{};
        actions.push_back(std::move(act));
    }
    const Json& mono = field(j, "monodromy");
    std::vector<Element> he, legs;
    if (mono.contains("half_edges"))
        for (const auto& e : mono["half_edges"]) he.push_back(element_from_json(*group, e));
    if (mono.contains("legs"))
        for (const auto& e : mono["legs"]) legs.push_back(element_from_json(*group, e));
    return AdmissibleGGraph(group, std::move(graph), actions, std::move(he), std::move(legs),
                            int_array(field(j, "distinguished_legs"), "distinguished_legs"));
}

HurwitzSpaceId hurwitz_id_from_json(const Json& j, const GroupPtr& group) {
    MonodromyDatum xi{group, {}};
    for (const auto& e : field(j, "xi")) xi.elements.push_back(element_from_json(*group, e));
    return riemann_hurwitz_target(as_int(field(j, "genus"), "genus"), xi);
}

Json to_json(const ValidationReport& r, const FiniteGroup& g) {
    Json violations = Json::array();
    for (const auto& v : r.violations) {
        Json entry{{"label", v.label}, {"message", v.message}, {"flag", v.flag}};
        entry["element"] = v.element >= 0 ? element_to_json(g, v.element) : Json();
        violations.push_back(std::move(entry));
    }
    return Json{{"ok", r.ok()}, {"labels", r.labels()}, {"violations", violations}};
}

Json to_json(const HIntersectionTerm& t) {
    return Json{{"gamma", to_json(t.gamma, false)},
                {"to_A", to_json(t.to_A)},
                {"to_B", to_json(t.to_B)},
                {"excess_edges", t.excess_edges},
                {"excess", to_json(t.excess())}};
}

Json to_json(const HClassTerm& t) {
    Json out{{"coefficient", to_json(t.coefficient)}, {"class", t.class_name}};
    if (t.class_name != "kappa") out["point"] = t.point;
    if (t.class_name == "kappa") out["index"] = t.index;
    if (t.class_name == "psi") out["exponent"] = t.exponent;
    if (t.element >= 0) out["coset_representative"] = t.element;
    if (t.vertex >= 0) out["vertex"] = t.vertex;
    return out;
}

Json to_json(const StratumContribution& c) {
    const auto& p = c.parameters;
    Json params{{"a", p.a}, {"b", p.b}, {"m", p.m}, {"n", p.n}, {"k", p.k}};
    return Json{{"stratum", to_string(c.type)},   {"variant", c.variant},
                {"parameters", params},           {"dimension", c.dimension},
                {"count", to_json(c.count)},      {"reduced_degree", to_json(c.reduced_degree)},
                {"multiplicity", to_json(c.multiplicity)}, {"excess_value", to_json(c.excess_value)},
                {"total", to_json(c.total)}};
}

Json to_json(const QuasimodularFit& f) {
    Json basis = Json::array(), coeffs = Json::array();
    for (const auto& m : f.monomials) basis.push_back(m.to_string());
    for (const auto& c : f.coefficients) coeffs.push_back(to_json(c));
    Json out{{"member", f.member},     {"weight_bound", f.weight_bound}, {"fit_length", f.fit_length},
             {"holdout_length", f.holdout_length}, {"basis", basis},     {"coefficients", coeffs}};
    if (f.witness) {
        out["witness"] = Json{{"index", f.witness->index},
                              {"in_fit", f.witness->in_fit},
                              {"expected", to_json(f.witness->expected)},
                              {"predicted", f.witness->in_fit ? Json() : to_json(f.witness->predicted)}};
    } else {
        out["witness"] = Json();
    }
    return out;
}

}  // namespace htaut
