#include "htaut/arithmetic.hpp"

#include "htaut/errors.hpp"

#include <algorithm>
#include <numeric>

namespace htaut {

long gcd_long(long a, long b) { return std::gcd(a, b); }

long lcm_long(long a, long b) { return std::lcm(a, b); }

std::vector<long> divisors(long n) {
    if (n <= 0) throw ValidationError("divisors of a non-positive integer");
    std::vector<long> small, large;
    for (long e = 1; e * e <= n; ++e) {
        if (n % e != 0) continue;
        small.push_back(e);
        if (e != n / e) large.push_back(n / e);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Integer sigma(unsigned k, long n) {
    if (n <= 0) throw ValidationError("sigma requires a positive argument, got " + std::to_string(n));
    Integer total = 0;
    for (long e : divisors(n)) total += integer_pow(Integer(e), k);
    return total;
}

Integer sigma1(long n) { return sigma(1, n); }

}  // namespace htaut
