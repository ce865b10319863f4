#include "htaut/hbar_pullback.hpp"

#include "htaut/errors.hpp"

#include <sstream>

namespace htaut {

std::string to_string(const std::vector<HClassTerm>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms) {
        std::string c = t.coefficient.to_string();
        if (!first) {
            if (c.front() == '-') {
                out << " - ";
                c.erase(0, 1);
            } else {
                out << " + ";
            }
        }
        first = false;
        out << c << "*";
        if (t.class_name == "psi") {
            out << "psi_" << t.point;
            if (t.exponent != 1) out << "^" << t.exponent;
        } else if (t.class_name == "kappa") {
            out << "kappa_" << t.index;
        } else {
            out << "D(" << t.point << "," << t.element << ")";
        }
        if (t.vertex >= 0) out << "@v" << t.vertex;
    }
    return out.str();
}

namespace {

void check_point(const MonodromyDatum& xi, int point) {
    if (point < 1 || point > static_cast<int>(xi.elements.size()))
        throw ValidationError("marked orbit " + std::to_string(point) + " out of range");
}

void check_kappa(int index) {
    if (index < 1) throw ValidationError("kappa index must be at least 1");
}

HClassTerm psi_term(Rational c, int point) { return HClassTerm{std::move(c), "psi", point, 0, 1, -1, -1}; }
HClassTerm kappa_term(Rational c, int index) { return HClassTerm{std::move(c), "kappa", 0, index, 1, -1, -1}; }

}  // namespace

std::vector<HClassTerm> pullback_restriction(const MonodromyDatum& xi, const Subgroup& g1, const RelabelingData& rel,
                                             HClassRef cls) {
    check_relabeling(xi, g1, rel);
    if (cls.kind == HClassKind::kappa) {
        check_kappa(cls.index);
        return {kappa_term(Rational(1), cls.index)};
    }
    if (cls.index < 1 || cls.index > static_cast<int>(rel.order.size()))
        throw ValidationError("marked point " + std::to_string(cls.index) + " out of range for the restricted space");
    return {psi_term(Rational(1), rel.order[static_cast<std::size_t>(cls.index - 1)].first + 1)};
}

std::vector<HClassTerm> pullback_corestriction(const MonodromyDatum& xi, const QuotientGroup& q, HClassRef cls) {
    if (!same_group(xi.group, q.parent())) throw ValidationError("quotient and monodromy datum use different groups");
    if (cls.kind == HClassKind::kappa) {
        check_kappa(cls.index);
        return {kappa_term(Rational(1) / Rational(q.normal_subgroup().order()), cls.index)};
    }
    check_point(xi, cls.index);
    const Element h = xi.elements[static_cast<std::size_t>(cls.index - 1)];
    return {psi_term(Rational(xi.group->order_of(h)) / Rational(q.group()->order_of(q.project(h))), cls.index)};
}

std::vector<HClassTerm> pullback_forgetful(const MonodromyDatum& xi, HClassRef cls) {
    const int order = xi.group->order();
    if (cls.kind == HClassKind::kappa) {
        check_kappa(cls.index);
        HClassTerm extra = psi_term(Rational(-order), static_cast<int>(xi.elements.size()) + 1);
        extra.exponent = cls.index;
        return {kappa_term(Rational(1), cls.index), extra};
    }
    check_point(xi, cls.index);
    std::vector<HClassTerm> out{psi_term(Rational(1), cls.index)};
    const Subgroup cyc = Subgroup::cyclic(xi.group, xi.elements[static_cast<std::size_t>(cls.index - 1)]);
    for (Element g : left_cosets(*xi.group, cyc))
        out.push_back(HClassTerm{Rational(-1), "section", cls.index, 0, 1, g, -1});
    return out;
}

std::vector<HClassTerm> pullback_target(const MonodromyDatum& xi, HClassRef cls) {
    if (cls.kind == HClassKind::kappa) {
        check_kappa(cls.index);
        return {kappa_term(Rational(1) / Rational(xi.group->order()), cls.index)};
    }
    check_point(xi, cls.index);
    return {psi_term(Rational(xi.group->order_of(xi.elements[static_cast<std::size_t>(cls.index - 1)])), cls.index)};
}

std::vector<HClassTerm> pullback_boundary(const AdmissibleGGraph& gamma, HClassRef cls) {
    const int order = gamma.group()->order();
    if (cls.kind == HClassKind::kappa) {
        check_kappa(cls.index);
        std::vector<HClassTerm> out;
        for (int v : gamma.vertex_orbit_representatives()) {
            HClassTerm t = kappa_term(Rational(order) / Rational(gamma.vertex_stabilizer(v).order()), cls.index);
            t.vertex = v;
            out.push_back(t);
        }
        return out;
    }
    const auto& dist = gamma.distinguished_legs();
    if (cls.index < 1 || cls.index > static_cast<int>(dist.size()))
        throw ValidationError("marked orbit " + std::to_string(cls.index) + " out of range");
    HClassTerm t = psi_term(Rational(1), cls.index);
    t.vertex = gamma.graph().leg_vertex(dist[static_cast<std::size_t>(cls.index - 1)]);
    return {t};
}

}  // namespace htaut
