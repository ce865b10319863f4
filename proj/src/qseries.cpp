#include "htaut/qseries.hpp"

#include "htaut/errors.hpp"

#include <algorithm>

namespace htaut {

QSeries::QSeries(int order) : coefficients_(), order_(order) {
    if (order < 0) throw ValidationError("negative truncation order");
    coefficients_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

QSeries::QSeries(std::vector<Rational> coefficients, int order) : QSeries(order) {
    for (std::size_t i = 0; i < coefficients.size() && i <= static_cast<std::size_t>(order); ++i)
        coefficients_[i] = std::move(coefficients[i]);
}

const Rational& QSeries::operator[](int k) const {
    if (k < 0 || k > order_) throw ValidationError("coefficient index " + std::to_string(k) + " outside known range");
    return coefficients_[static_cast<std::size_t>(k)];
}

void QSeries::set(int k, const Rational& value) {
    if (k < 0 || k > order_) throw ValidationError("coefficient index " + std::to_string(k) + " outside known range");
    coefficients_[static_cast<std::size_t>(k)] = value;
}

QSeries QSeries::truncated(int order) const {
    if (order > order_) throw ValidationError("cannot extend a truncated series");
    return QSeries(coefficients_, order);
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order_, b.order_));
    for (int k = 0; k <= r.order_; ++k) r.coefficients_[k] = a.coefficients_[k] + b.coefficients_[k];
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order_, b.order_));
    for (int k = 0; k <= r.order_; ++k) r.coefficients_[k] = a.coefficients_[k] - b.coefficients_[k];
    return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order_, b.order_));
    for (int i = 0; i <= r.order_; ++i) {
        if (a.coefficients_[i].is_zero()) continue;
        for (int j = 0; i + j <= r.order_; ++j) r.coefficients_[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
    return r;
}

QSeries operator*(const Rational& c, const QSeries& s) {
    QSeries r(s.order_);
    for (int k = 0; k <= s.order_; ++k) r.coefficients_[k] = c * s.coefficients_[k];
    return r;
}

QSeries series_mul(const QSeries& a, const QSeries& b) { return a * b; }

std::string QSeries::to_string() const {
    std::string out;
    for (int k = 0; k <= order_; ++k) {
        if (coefficients_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += coefficients_[k].to_string();
        if (k > 0) out += "*q^" + std::to_string(k);
    }
    if (out.empty()) out = "0";
    return out + " + O(q^" + std::to_string(order_ + 1) + ")";
}

}  // namespace htaut
