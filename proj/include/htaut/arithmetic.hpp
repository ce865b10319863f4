#pragma once

#include "htaut/rational.hpp"

#include <vector>

namespace htaut {

long gcd_long(long a, long b);
long lcm_long(long a, long b);

std::vector<long> divisors(long n);

// Sum of k-th powers of the positive divisors of n (n >= 1).
Integer sigma(unsigned k, long n);
Integer sigma1(long n);

}  // namespace htaut
