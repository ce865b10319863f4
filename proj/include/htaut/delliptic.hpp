#pragma once

#include "htaut/qseries.hpp"
#include "htaut/quasimodular.hpp"
#include "htaut/rational.hpp"

#include <string>
#include <vector>

namespace htaut {

enum class StratumType { d00_d01, d001_d01, d000_d00, d00_d0, d000_d0 };

std::string to_string(StratumType t);

struct StratumParameters {
    int a = 0;
    int b = 0;
    int m = 0;
    int n = 0;
    int k = 0;  // 0 when the stratum has no k
};

// One family of components. Zero-dimensional families assemble as
// count * reduced_degree * multiplicity; one-dimensional ones as count * reduced_degree * excess_value,
// where excess_value already integrates the Segre and normal-bundle factors per branch.
struct StratumContribution {
    StratumType type;
    std::string variant;
    StratumParameters parameters;
    int dimension = 0;
    Rational count;
    Rational reduced_degree;
    Rational multiplicity;
    Rational excess_value;
    Rational total;
};

std::vector<StratumContribution> delta01_ledger(int d);
// In the order (D00,D01), (D000,D00), (D00,D0), (D000,D0).
std::vector<StratumContribution> delta00_ledger(int d);

struct DeltaNumber {
    Rational stratum_sum;
    Rational closed_form;
};

// 2 (d-2)!^2 sum_{d1+d2=d} sigma1(d1) sigma1(d2)
DeltaNumber delta01_number(int d);
// 4 (d-2)!^2 (d-1) sigma1(d)
DeltaNumber delta00_number(int d);
// The four aggregates, ordered as in delta00_ledger.
std::vector<Rational> delta00_stratum_contributions(int d);

Rational divisor_min_identity(int d);  // sum (mn - am) min(a,b) over am + bn = d
Rational divisor_min_identity_mirrored(int d);  // sum (mn - bn) min(a,b)

enum class SegreVariant { d00_d0, d000_d0, d000_d0_sum_node };

// Integrated excess contribution of one component family per unit of the automorphism weight
// (a^(m-1) b^(n-1), times (a+b)^(k-1) when k is present).
Rational segre_excess_contribution(int a, int b, SegreVariant variant);

// Degree of the target map for simply branched (a,b),(a,b) covers from the degeneration of the
// target: a + b from the first admissible cover plus b^2 (a - b) / b^2 from the second.
Rational two_branch_target_degree(int a, int b);

struct NormalizedSeries {
    QSeries delta00;  // sum delta00(d) / (d-2)!^2 q^d
    QSeries delta01;
};

NormalizedSeries normalized_series(int d_max);

struct QuasimodularityReport {
    int d_max = 0;
    int weight_bound = 4;
    NormalizedSeries series;
    QuasimodularFit delta00_fit;
    QuasimodularFit delta01_fit;
    std::vector<QuasimodularFit> delta00_shifted;  // split moved by -shift and +shift
    std::vector<QuasimodularFit> delta01_shifted;
    std::optional<int> delta00_minimal_weight;
    std::optional<int> delta01_minimal_weight;
};

QuasimodularityReport quasimodularity_report(int d_max, int weight_bound = 4, int fit_length = 20,
                                             int holdout_length = 18, int shift = 5);

}  // namespace htaut
