#include "htaut/delliptic.hpp"
#include "htaut/errors.hpp"
#include "htaut/hbar_intersection.hpp"
#include "htaut/hbar_pullback.hpp"
#include "htaut/hurwitz_count.hpp"
#include "htaut/json_io.hpp"
#include "htaut/psi_integrals.hpp"
#include "htaut/quasimodular.hpp"
#include "htaut/res_cores.hpp"
#include "htaut/tautological.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace htaut;

namespace {

Json read_payload(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw ValidationError("cannot open input file '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
    return j[key];
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw ValidationError("expected a comma-separated integer list, got '" + text + "'");
        }
    }
    return out;
}

StratumClass pure_monomial(int genus, int legs, const Json& j) {
    StratumClass c(genus, legs);
    StableGraph g = StableGraph::edgeless(genus, legs);
    Decoration d = decoration_from_json(j);
    d.check(g);
    c.add(Rational(1), g, d);
    return c;
}

int cmd_integrate(const std::string& input) {
    const Json j = read_payload(input);
    Rational value;
    if (j.contains("class")) {
        value = integrate_stratum_class(stratum_class_from_json(j["class"]));
    } else {
        const int genus = require(j, "genus").get<int>();
        std::vector<int> psi = require(j, "psi").get<std::vector<int>>();
        std::map<int, int> kappa;
        if (j.contains("kappa"))
            for (const auto& e : j["kappa"]) {
                auto p = e.get<std::vector<int>>();
                if (p.size() != 2) throw ValidationError("kappa entries are [index, exponent]");
                kappa[p[0]] += p[1];
            }
        value = integrate_psi_kappa(genus, psi, kappa);
    }
    emit(Json{{"value", to_json(value)}});
    return 0;
}

int cmd_intersect_boundary(const std::string& input) {
    const Json j = read_payload(input);
    const StableGraph a = stable_graph_from_json(require(j, "A"));
    const StableGraph b = stable_graph_from_json(require(j, "B"));
    const BoundaryIntersection bi = boundary_intersection(a, b);
    Json terms = Json::array();
    for (const auto& t : bi.terms)
        terms.push_back(Json{{"gamma", to_json(t.triple.gamma)},
                             {"to_A", to_json(t.triple.to_A)},
                             {"to_B", to_json(t.triple.to_B)},
                             {"common_edges", t.triple.common_edges()},
                             {"excess", to_json(t.excess)}});
    const StratumClass pushed = bi.push_forward().simplified();
    Json out{{"base", to_json(bi.base)}, {"terms", terms}, {"push_forward", to_json(pushed)}};
    if (j.contains("pair_with")) {
        const StratumClass mono = pure_monomial(a.total_genus(), a.num_legs(), j["pair_with"]);
        out["pairing"] = to_json(integrate_stratum_class(multiply_by_pure(pushed, mono)));
    }
    emit(out);
    return 0;
}

int cmd_validate_ggraph(const std::string& input) {
    const Json j = read_payload(input);
    const Json& gj = require(j, "ggraph");
    GroupPtr group = j.contains("group") ? group_from_json(j["group"]) : nullptr;
    const AdmissibleGGraph gg = ggraph_from_json(gj, group);
    const HurwitzSpaceId id = hurwitz_id_from_json(require(j, "hurwitz_id"), gg.group());
    const ValidationReport report = validate_admissible_g_graph(gg, id);
    emit(Json{{"valid", report.ok()}, {"hurwitz_id", to_json(id)}, {"report", to_json(report, *gg.group())}});
    return report.ok() ? 0 : 2;
}

HurwitzMode parse_mode(const std::string& m) {
    if (m == "orbits") return HurwitzMode::conjugacy_orbits;
    if (m == "weighted") return HurwitzMode::centralizer_weighted;
    if (m == "marked") return HurwitzMode::marked_fiber;
    throw ValidationError("mode must be one of orbits, weighted, marked");
}

int cmd_hurwitz_count(int degree, const std::vector<std::string>& type_args, const std::string& marked_arg,
                      const std::string& mode_arg, const std::string& input) {
    int d = degree;
    std::vector<std::vector<int>> types;
    std::vector<int> marked;
    std::string mode = mode_arg;
    if (!input.empty()) {
        const Json j = read_payload(input);
        d = require(j, "degree").get<int>();
        types = require(j, "types").get<std::vector<std::vector<int>>>();
        if (j.contains("marked")) marked = j["marked"].get<std::vector<int>>();
        if (j.contains("mode")) mode = j["mode"].get<std::string>();
    } else {
        for (const auto& t : type_args) types.push_back(parse_int_list(t));
        marked = parse_int_list(marked_arg);
    }
    if (d <= 0) throw ValidationError("--degree is required and must be positive");
    const HurwitzMode m = parse_mode(mode);
    const HurwitzCounts counts = hurwitz_cover_counts(d, types, 0, marked);
    emit(Json{{"degree", d},
              {"types", types},
              {"marked", marked},
              {"mode", mode},
              {"value", to_json(counts.get(m))},
              {"tuples", counts.tuples.get_str()},
              {"conjugacy_orbits", to_json(counts.conjugacy_orbits)},
              {"centralizer_weighted", to_json(counts.centralizer_weighted)},
              {"marked_fiber", to_json(counts.marked_fiber)}});
    return 0;
}

int cmd_intersect_ggraph(const std::string& input) {
    const Json j = read_payload(input);
    const GroupPtr group = group_from_json(require(j, "group"));
    const AdmissibleGGraph a = ggraph_from_json(require(j, "A"), group);
    const AdmissibleGGraph b = ggraph_from_json(require(j, "B"), group);
    Json terms = Json::array();
    for (const auto& t : boundary_intersection_H(a, b)) {
        Json entry = to_json(t);
        entry["normal_bundle"] = to_json(normal_bundle_chern_H(t.gamma).total);
        terms.push_back(std::move(entry));
    }
    emit(Json{{"group", group_to_json(*group)}, {"terms", terms}});
    return 0;
}

std::vector<Element> elements_from_json(const FiniteGroup& g, const Json& j) {
    std::vector<Element> out;
    for (const auto& e : j) out.push_back(element_from_json(g, e));
    return out;
}

HClassRef class_ref_from_json(const Json& j) {
    const std::string kind = require(j, "kind").get<std::string>();
    const int index = require(j, "index").get<int>();
    if (kind == "psi") return {HClassKind::psi, index};
    if (kind == "kappa") return {HClassKind::kappa, index};
    throw ValidationError("class kind must be psi or kappa");
}

int cmd_pullback(const std::string& input) {
    const Json j = read_payload(input);
    const GroupPtr group = group_from_json(require(j, "group"));
    const std::string map = require(j, "map").get<std::string>();
    const HClassRef cls = class_ref_from_json(require(j, "class"));
    std::vector<HClassTerm> terms;
    if (map == "boundary") {
        terms = pullback_boundary(ggraph_from_json(require(j, "ggraph"), group), cls);
    } else {
        const MonodromyDatum xi{group, elements_from_json(*group, require(j, "xi"))};
        if (map == "restriction") {
            const Subgroup g1 = Subgroup::generated_by(group, elements_from_json(*group, require(j, "subgroup")));
            terms = pullback_restriction(xi, g1, canonical_relabeling(xi, g1), cls);
        } else if (map == "corestriction") {
            const Subgroup n = Subgroup::generated_by(group, elements_from_json(*group, require(j, "normal_subgroup")));
            terms = pullback_corestriction(xi, QuotientGroup(group, n), cls);
        } else if (map == "forgetful") {
            terms = pullback_forgetful(xi, cls);
        } else if (map == "target") {
            terms = pullback_target(xi, cls);
        } else {
            throw ValidationError("map must be one of restriction, corestriction, forgetful, target, boundary");
        }
    }
    Json arr = Json::array();
    for (const auto& t : terms) arr.push_back(to_json(t));
    emit(Json{{"map", map}, {"terms", arr}, {"text", to_string(terms)}});
    return 0;
}


int cmd_delliptic(int d_max, bool series, bool human) {
    if (d_max < 2) throw ValidationError("--dmax must be at least 2");
    if (d_max > 60) throw UnsupportedError("--dmax above 60 is outside the supported range");
    if (human) {
        std::cout << std::setw(4) << "d" << std::setw(24) << "delta00" << std::setw(24) << "delta01"
                  << std::setw(20) << "(d-2)!^2" << "\n";
        for (int d = 2; d <= d_max; ++d) {
            const DeltaNumber a = delta00_number(d);
            const DeltaNumber b = delta01_number(d);
            Rational f(1);
            for (int i = 2; i <= d - 2; ++i) f = f * Rational(i);
            std::cout << std::setw(4) << d << std::setw(24) << a.stratum_sum.to_string() << std::setw(24)
                      << b.stratum_sum.to_string() << std::setw(20) << (f * f).to_string() << "\n";
        }
        return 0;
    }
    Json entries = Json::array();
    for (int d = 2; d <= d_max; ++d) {
        const DeltaNumber a = delta00_number(d);
        const DeltaNumber b = delta01_number(d);
        Rational f(1);
        for (int i = 2; i <= d - 2; ++i) f = f * Rational(i);
        const Rational factor = f * f;
        Json aggregates = Json::array();
        for (const auto& r : delta00_stratum_contributions(d)) aggregates.push_back(to_json(r));
        Json l00 = Json::array(), l01 = Json::array();
        for (const auto& c : delta00_ledger(d)) l00.push_back(to_json(c));
        for (const auto& c : delta01_ledger(d)) l01.push_back(to_json(c));
        entries.push_back(Json{
            {"d", d},
            {"marked_point_factor", to_json(factor)},
            {"delta00",
             Json{{"stratum_sum", to_json(a.stratum_sum)},
                  {"closed_form", to_json(a.closed_form)},
                  {"normalized", to_json(a.stratum_sum / factor)},
                  {"aggregates", aggregates},
                  {"ledger", l00}}},
            {"delta01",
             Json{{"stratum_sum", to_json(b.stratum_sum)},
                  {"closed_form", to_json(b.closed_form)},
                  {"normalized", to_json(b.stratum_sum / factor)},
                  {"ledger", l01}}}});
    }
    Json out{{"d_max", d_max}, {"entries", entries}};
    if (series) {
        const NormalizedSeries s = normalized_series(d_max);
        out["series"] = Json{{"delta00", to_json(s.delta00)}, {"delta01", to_json(s.delta01)}};
    }
    emit(out);
    return 0;
}

int cmd_qmod_check(int weight, int fit, int holdout, const std::string& input, const std::string& name) {
    const Json j = read_payload(input);
    const Json* node = &j;
    if (!name.empty()) {
        if (j.contains("series")) node = &j["series"];
        node = &require(*node, name.c_str());
    }
    const QSeries s = qseries_from_json(*node);
    const QuasimodularFit f = is_quasimodular(s, weight, fit, holdout);
    const auto minimal = minimal_quasimodular_weight(s, weight, fit, holdout);
    emit(Json{{"verdict", f.member},
              {"minimal_weight", minimal ? Json(*minimal) : Json()},
              {"fit", to_json(f)}});
    return 0;
}

Json error_json(const std::string& kind, const std::string& message) {
    return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact intersection calculus on moduli of curves and admissible G-covers"};
    app.require_subcommand(1);

    std::string input;
    auto add_input = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--input", input, "JSON payload path, '-' for standard input");
        if (required) opt->required();
    };

    auto* integrate = app.add_subcommand("integrate", "Integrate a psi/kappa monomial or a stratum class");
    add_input(integrate, true);
    auto* intersect_boundary = app.add_subcommand("intersect-boundary", "Intersect two boundary strata");
    add_input(intersect_boundary, true);
    auto* validate = app.add_subcommand("validate-ggraph", "Check the admissibility conditions of a G-graph");
    add_input(validate, true);

    auto* hurwitz = app.add_subcommand("hurwitz-count", "Count covers of P^1 with prescribed branching");
    int degree = 0;
    std::vector<std::string> types;
    std::string marked, mode = "orbits";
    hurwitz->add_option("--degree", degree, "Cover degree");
    hurwitz->add_option("--type", types, "Cycle type of one branch point, e.g. 2,1 (repeatable)");
    hurwitz->add_option("--marked", marked, "0-based branch points with marked fibres, e.g. 2,3");
    hurwitz->add_option("--mode", mode, "orbits, weighted or marked");
    add_input(hurwitz, false);

    auto* intersect_ggraph = app.add_subcommand("intersect-ggraph", "Intersect two boundary strata of a Hurwitz space");
    add_input(intersect_ggraph, true);
    auto* pullback = app.add_subcommand("pullback", "Pull back psi or kappa along a map of Hurwitz spaces");
    add_input(pullback, true);

    auto* delliptic = app.add_subcommand("delliptic", "Genus-two d-elliptic counts with per-stratum ledgers");
    int d_max = 0;
    bool json_flag = false, series_flag = false, human_flag = false;
    delliptic->add_option("--dmax", d_max, "Largest degree")->required();
    delliptic->add_flag("--json", json_flag, "JSON output (default)");
    delliptic->add_flag("--series", series_flag, "Include the normalized q-series");
    delliptic->add_flag("--human", human_flag, "Aligned table instead of JSON");

    auto* qmod = app.add_subcommand("qmod-check", "Test a q-series for quasimodularity");
    int weight = 4, fit = 20, holdout = 18;
    std::string series_name;
    qmod->add_option("--weight", weight, "Weight bound");
    qmod->add_option("--fit", fit, "Number of fitted coefficients");
    qmod->add_option("--holdout", holdout, "Number of verified coefficients");
    qmod->add_option("--series-name", series_name, "Select a named series inside the payload");
    add_input(qmod, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit(error_json("usage", e.what()));
        return 2;
    }

    try {
        if (*integrate) return cmd_integrate(input);
        if (*intersect_boundary) return cmd_intersect_boundary(input);
        if (*validate) return cmd_validate_ggraph(input);
        if (*hurwitz) return cmd_hurwitz_count(degree, types, marked, mode, input);
        if (*intersect_ggraph) return cmd_intersect_ggraph(input);
        if (*pullback) return cmd_pullback(input);
        if (*delliptic) return cmd_delliptic(d_max, series_flag, human_flag && !json_flag);
        if (*qmod) return cmd_qmod_check(weight, fit, holdout, input, series_name);
    } catch (const ValidationError& e) {
        emit(error_json("validation", e.what()));
        return 2;
    } catch (const UnsupportedError& e) {
        emit(error_json("unsupported", e.what()));
        return 2;
    } catch (const Json::exception& e) {
        emit(error_json("validation", e.what()));
        return 2;
    } catch (const std::exception& e) {
        emit(error_json("internal", e.what()));
        return 3;
    }
    return 3;
}
