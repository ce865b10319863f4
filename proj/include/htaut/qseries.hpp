#pragma once

#include "htaut/rational.hpp"

#include <string>
#include <vector>

namespace htaut {

// Power series in q known through q^order; coefficients beyond order are unknown, not zero.
class QSeries {
public:
    explicit QSeries(int order = 0);
    QSeries(std::vector<Rational> coefficients, int order);

    int order() const { return order_; }
    const Rational& operator[](int k) const;
    void set(int k, const Rational& value);
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    QSeries truncated(int order) const;

    // Binary operations truncate to the smaller order.
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const Rational& c, const QSeries& s);
    friend bool operator==(const QSeries& a, const QSeries& b) = default;

    std::string to_string() const;

private:
    std::vector<Rational> coefficients_;
    int order_;
};

QSeries series_mul(const QSeries& a, const QSeries& b);

}  // namespace htaut
