#include "htaut/polynomial.hpp"

#include <algorithm>

namespace htaut {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
    coeffs.back() = c;
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

Rational Polynomial::coefficient(int k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return coefficients_[static_cast<std::size_t>(k)];
}

Polynomial Polynomial::truncated(int max_degree) const {
    if (max_degree < 0) return {};
    std::vector<Rational> c(coefficients_.begin(),
                            coefficients_.begin() + std::min<std::ptrdiff_t>(max_degree + 1, degree() + 1));
    return Polynomial(std::move(c));
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coefficients_.size() > coefficients_.size()) coefficients_.resize(o.coefficients_.size());
    for (std::size_t i = 0; i < o.coefficients_.size(); ++i) coefficients_[i] += o.coefficients_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coefficients_.size() > coefficients_.size()) coefficients_.resize(o.coefficients_.size());
    for (std::size_t i = 0; i < o.coefficients_.size(); ++i) coefficients_[i] -= o.coefficients_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coefficients_.size() + b.coefficients_.size() - 1);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j) c[i + j] += a.coefficients_[i] * b.coefficients_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return Polynomial::constant(c) * p; }

std::string Polynomial::to_string(const std::string& variable) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= degree(); ++k) {
        const Rational& c = coefficients_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += c.to_string();
        if (k >= 1) out += "*" + variable;
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace htaut
