#include "htaut/rational.hpp"

#include "htaut/errors.hpp"

#include <cctype>

namespace htaut {

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) throw ValidationError("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
    std::size_t start = 0;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) start = 1;
    if (start == digits.size()) throw ValidationError("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t i = start; i < digits.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(digits[i])))
            throw ValidationError("malformed rational: '" + std::string(whole) + "'");
    }
    std::string s(digits[0] == '+' ? digits.substr(1) : digits);
    return Integer(s, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    const Integer num = parse_integer(text.substr(0, slash), text);
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text[0] == '-') throw ValidationError("malformed rational: '" + std::string(text) + "'");
    return Rational(num, parse_integer(den_text, text));
}

Rational Rational::inverse() const {
    if (is_zero()) throw ValidationError("inverse of zero");
    Rational r;
    r.value_ = 1 / value_;
    r.value_.canonicalize();
    return r;
}

Rational Rational::pow(int exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Rational result(1);
    Rational base = *this;
    unsigned e = static_cast<unsigned>(exponent);
    while (e != 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ValidationError("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

long Rational::to_long() const {
    if (!is_integer() || !value_.get_num().fits_slong_p())
        throw ValidationError("rational " + to_string() + " is not a machine integer");
    return value_.get_num().get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer integer_pow(const Integer& base, unsigned exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

std::string to_string(const Integer& value) { return value.get_str(); }

}  // namespace htaut
