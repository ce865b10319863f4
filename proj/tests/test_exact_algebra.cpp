#include "htaut/arithmetic.hpp"
#include "htaut/errors.hpp"
#include "htaut/polynomial.hpp"
#include "htaut/qseries.hpp"
#include "htaut/rational.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace htaut;

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 30);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

Polynomial random_polynomial(std::mt19937& rng, int max_degree) {
    std::vector<Rational> c;
    const int deg = std::uniform_int_distribution<int>(0, max_degree)(rng);
    for (int i = 0; i <= deg; ++i) c.push_back(random_rational(rng));
    return Polynomial(c);
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
    CHECK(Rational(Integer(6), Integer(-4)).to_string() == "-3/2");
    CHECK(Rational(Integer(10), Integer(5)).to_string() == "2");
    CHECK(Rational::parse("-12/8") == Rational(Integer(-3), Integer(2)));
    CHECK(Rational::parse("7").is_integer());
    CHECK(Rational(Integer(1), Integer(3)).pow(-2) == Rational(9));
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), ValidationError);
    CHECK_THROWS_AS(Rational::parse("3/"), ValidationError);
    CHECK_THROWS_AS(Rational(0).inverse(), ValidationError);
    CHECK_THROWS(Rational(Integer(1), Integer(2)).to_long());
}

TEST_CASE("rational field axioms on random samples") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(Rational::parse(a.to_string()) == a);
    }
}

TEST_CASE("divisor sums match a direct divisor scan") {
    for (long n = 1; n <= 300; ++n) {
        Integer s1 = 0, s3 = 0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) {
                s1 += d;
                s3 += Integer(d) * d * d;
            }
        CHECK(sigma1(n) == s1);
        CHECK(sigma(3, n) == s3);
        CHECK(static_cast<long>(divisors(n).size()) > 0);
    }
    CHECK(sigma1(12) == 28);
    CHECK_THROWS_AS(sigma1(0), ValidationError);
}

TEST_CASE("gcd and lcm agree with the standard library") {
    for (long a = 1; a <= 60; ++a)
        for (long b = 1; b <= 60; ++b) {
            CHECK(gcd_long(a, b) == std::gcd(a, b));
            CHECK(lcm_long(a, b) == std::lcm(a, b));
        }
}

TEST_CASE("factorials and integer powers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(integer_pow(Integer(3), 5) == 243);
}

TEST_CASE("polynomial products evaluate pointwise") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial p = random_polynomial(rng, 5), q = random_polynomial(rng, 5);
        const Rational x = random_rational(rng);
        CHECK((p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x));
        CHECK((p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x));
        if (!p.is_zero() && !q.is_zero()) CHECK((p * q).degree() == p.degree() + q.degree());
    }
    CHECK((Polynomial::monomial(Rational(2), 3) - Polynomial::monomial(Rational(2), 3)).is_zero());
}

TEST_CASE("q-series products use naive convolution up to the smaller order") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const int na = std::uniform_int_distribution<int>(0, 8)(rng), nb = std::uniform_int_distribution<int>(0, 8)(rng);
        std::vector<Rational> ca, cb;
        for (int i = 0; i <= na; ++i) ca.push_back(random_rational(rng));
        for (int i = 0; i <= nb; ++i) cb.push_back(random_rational(rng));
        const QSeries a(ca, na), b(cb, nb);
        const QSeries p = a * b;
        REQUIRE(p.order() == std::min(na, nb));
        for (int k = 0; k <= p.order(); ++k) {
            Rational s;
            for (int i = 0; i <= k; ++i) s += ca[static_cast<std::size_t>(i)] * cb[static_cast<std::size_t>(k - i)];
            CHECK(p[k] == s);
        }
    }
}

TEST_CASE("q-series coefficients beyond the known order are not readable") {
    QSeries s(3);
    s.set(2, Rational(5));
    CHECK(s[2] == Rational(5));
    CHECK(s[0].is_zero());
    CHECK_THROWS_AS(s[4], ValidationError);
    CHECK(s.truncated(1).order() == 1);
}
