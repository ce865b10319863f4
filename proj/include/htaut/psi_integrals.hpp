#pragma once

#include "htaut/rational.hpp"

#include <map>
#include <vector>

namespace htaut {

// Base value of the genus-one correlator <tau_1>_1, taken from the Witten-Kontsevich literature.
Rational genus_one_base_correlator();

// <tau_{a_1} ... tau_{a_n}>_g for g in {0, 1}, by the string and dilaton equations.
// Throws ValidationError on dimension mismatch or unstable type, UnsupportedError for g >= 2.
Rational integrate_psi(int genus, const std::vector<int>& exponents);

// Integral over Mbar_{g,n} of prod psi_i^{a_i} times prod kappa_b^{e_b}, with kappa in the
// log-canonical convention. Returns 0 when the degree does not match the dimension.
Rational integrate_psi_kappa(int genus, const std::vector<int>& psi_exponents, const std::map<int, int>& kappa_exponents);

}  // namespace htaut
