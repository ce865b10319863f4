#pragma once

#include "htaut/rational.hpp"

#include <string>
#include <vector>

namespace htaut {

// Dense univariate polynomial over the rationals; trailing zeros are trimmed.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, int degree);

    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coefficients_.empty(); }
    Rational coefficient(int k) const;
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    Polynomial truncated(int max_degree) const;
    Rational evaluate(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    std::string to_string(const std::string& variable = "x") const;

private:
    void trim();
    std::vector<Rational> coefficients_;
};

}  // namespace htaut
