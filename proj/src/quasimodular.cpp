#include "htaut/quasimodular.hpp"

#include "htaut/arithmetic.hpp"
#include "htaut/errors.hpp"

#include <sstream>

namespace htaut {

QSeries eisenstein(int weight, int order) {
    if (order < 1) throw ValidationError("Eisenstein series need order at least 1");
    long factor = 0;
    unsigned power = 0;
    switch (weight) {
    case 2: factor = -24; power = 1; break;
    case 4: factor = 240; power = 3; break;
    case 6: factor = -504; power = 5; break;
    default: throw ValidationError("unsupported Eisenstein weight " + std::to_string(weight));
    }
    QSeries s(order);
    s.set(0, Rational(1));
    for (int n = 1; n <= order; ++n) s.set(n, Rational(factor) * Rational(sigma(power, n)));
    return s;
}

std::string BasisMonomial::to_string() const {
    std::ostringstream out;
    bool any = false;
    auto factor = [&](const char* name, int e) {
        if (e == 0) return;
        if (any) out << "*";
        out << name;
        if (e > 1) out << "^" << e;
        any = true;
    };
    factor("E2", e2);
    factor("E4", e4);
    factor("E6", e6);
    if (!any) out << "1";
    return out.str();
}

QuasimodularBasis quasimodular_basis(int weight_bound, int order) {
    if (weight_bound < 0) throw ValidationError("weight bound must be non-negative");
    QuasimodularBasis basis{weight_bound, order, {}, {}};
    for (int w = 0; w <= weight_bound; w += 2)
        for (int e2 = w / 2; e2 >= 0; --e2)
            for (int e4 = (w - 2 * e2) / 4; e4 >= 0; --e4) {
                const int rest = w - 2 * e2 - 4 * e4;
                if (rest % 6 == 0) basis.monomials.push_back({e2, e4, rest / 6});
            }
    QSeries one(order);
    one.set(0, Rational(1));
    const QSeries e[3] = {eisenstein(2, std::max(order, 1)).truncated(order),
                          eisenstein(4, std::max(order, 1)).truncated(order),
                          eisenstein(6, std::max(order, 1)).truncated(order)};
    for (const auto& m : basis.monomials) {
        QSeries s = one;
        for (int i = 0; i < m.e2; ++i) s = s * e[0];
        for (int i = 0; i < m.e4; ++i) s = s * e[1];
        for (int i = 0; i < m.e6; ++i) s = s * e[2];
        basis.series.push_back(std::move(s));
    }
    return basis;
}

QuasimodularFit is_quasimodular(const QSeries& s, int weight_bound, int fit_length, int holdout_length) {
    if (fit_length < 1 || holdout_length < 0) throw ValidationError("fit length must be positive");
    const int needed = fit_length + holdout_length;
    if (s.order() + 1 < needed)
        throw ValidationError("series known through q^" + std::to_string(s.order()) + " but " + std::to_string(needed) +
                              " coefficients are required");
    const QuasimodularBasis basis = quasimodular_basis(weight_bound, needed - 1);
    const std::size_t cols = basis.monomials.size();
    QuasimodularFit fit;
    fit.weight_bound = weight_bound;
    fit.fit_length = fit_length;
    fit.holdout_length = holdout_length;
    fit.monomials = basis.monomials;

    struct PivotRow {
        std::vector<Rational> a;
        Rational rhs;
        std::size_t pivot;
    };
    std::vector<PivotRow> rows;
    for (int n = 0; n < fit_length; ++n) {
        std::vector<Rational> a(cols);
        for (std::size_t j = 0; j < cols; ++j) a[j] = basis.series[j][n];
        Rational rhs = s[n];
        for (const auto& r : rows) {
            if (a[r.pivot].is_zero()) continue;
            const Rational f = a[r.pivot] / r.a[r.pivot];
            for (std::size_t j = 0; j < cols; ++j) a[j] -= f * r.a[j];
            rhs -= f * r.rhs;
        }
        std::size_t pivot = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (!a[j].is_zero()) {
                pivot = j;
                break;
            }
        if (pivot == cols) {
            if (!rhs.is_zero()) {
                fit.witness = FitWitness{n, true, s[n], Rational()};
                return fit;
            }
            continue;
        }
        rows.push_back({std::move(a), std::move(rhs), pivot});
    }
    std::vector<Rational> x(cols);
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        Rational acc = it->rhs;
        for (std::size_t j = 0; j < cols; ++j)
            if (j != it->pivot) acc -= it->a[j] * x[j];
        x[it->pivot] = acc / it->a[it->pivot];
    }
    fit.coefficients = x;
    for (int n = fit_length; n < needed; ++n) {
        Rational predicted;
        for (std::size_t j = 0; j < cols; ++j) predicted += x[j] * basis.series[j][n];
        if (predicted != s[n]) {
            fit.witness = FitWitness{n, false, s[n], predicted};
            return fit;
        }
    }
    fit.member = true;
    return fit;
}

std::optional<int> minimal_quasimodular_weight(const QSeries& s, int max_weight, int fit_length, int holdout_length) {
    for (int w = 0; w <= max_weight; w += 2)
        if (is_quasimodular(s, w, fit_length, holdout_length).member) return w;
    return std::nullopt;
}

}  // namespace htaut
