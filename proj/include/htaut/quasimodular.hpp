#pragma once

#include "htaut/qseries.hpp"

#include <optional>
#include <string>
#include <vector>

namespace htaut {

// E2, E4 or E6 through q^order.
QSeries eisenstein(int weight, int order);

struct BasisMonomial {
    int e2 = 0;
    int e4 = 0;
    int e6 = 0;
    int weight() const { return 2 * e2 + 4 * e4 + 6 * e6; }
    std::string to_string() const;
};

struct QuasimodularBasis {
    int weight_bound = 0;
    int order = 0;
    std::vector<BasisMonomial> monomials;  // by weight, then by decreasing E2 exponent
    std::vector<QSeries> series;
};

// All monomials E2^i E4^j E6^k of weight at most weight_bound.
QuasimodularBasis quasimodular_basis(int weight_bound, int order);

struct FitWitness {
    int index = 0;      // coefficient index of q
    bool in_fit = false;
    Rational expected;
    Rational predicted;  // in_fit: unused (the fit system is inconsistent)
};

struct QuasimodularFit {
    bool member = false;
    int weight_bound = 0;
    int fit_length = 0;
    int holdout_length = 0;
    std::vector<BasisMonomial> monomials;
    std::vector<Rational> coefficients;  // particular solution, free variables set to zero
    std::optional<FitWitness> witness;
};

// Fits coefficients q^0 .. q^(fit-1) exactly and verifies q^fit .. q^(fit+holdout-1).
QuasimodularFit is_quasimodular(const QSeries& s, int weight_bound, int fit_length, int holdout_length);

// Smallest even weight bound <= max_weight at which s fits, if any.
std::optional<int> minimal_quasimodular_weight(const QSeries& s, int max_weight, int fit_length, int holdout_length);

}  // namespace htaut
