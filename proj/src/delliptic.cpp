#include "htaut/delliptic.hpp"

#include "htaut/arithmetic.hpp"
#include "htaut/errors.hpp"
#include "htaut/polynomial.hpp"

#include <algorithm>
#include <functional>

namespace htaut {

std::string to_string(StratumType t) {
    switch (t) {
    case StratumType::d00_d01: return "(D00,D01)";
    case StratumType::d001_d01: return "(D001,D01)";
    case StratumType::d000_d00: return "(D000,D00)";
    case StratumType::d00_d0: return "(D00,D0)";
    case StratumType::d000_d0: return "(D000,D0)";
    }
    throw InvariantError("unknown stratum type");
}

namespace {

void check_degree(int d) {
    if (d < 2) throw ValidationError("cover degree must be at least 2");
}

Rational marking_factor(int d) {
    const Rational f(factorial(static_cast<unsigned>(d - 2)));
    return f * f;
}

Rational power(long base, int exponent) { return Rational(base).pow(exponent); }

// a m + b n = d with all four >= lower bounds.
void for_each_split(int d, int m_min, int n_min, const std::function<void(int, int, int, int)>& body) {
    for (int a = 1; a <= d; ++a)
        for (int m = m_min; a * m <= d; ++m) {
            const int rest = d - a * m;
            for (int b = 1; b <= std::max(rest, 1); ++b) {
                if (rest == 0) {
                    if (n_min == 0) body(a, m, b, 0);
                    continue;
                }
                if (rest % b != 0) continue;
                const int n = rest / b;
                if (n >= n_min) body(a, m, b, n);
            }
        }
}

// (a + b) k + a m + b n = d.
void for_each_triple_split(int d, int mn_min, const std::function<void(int, int, int, int, int)>& body) {
    for (int a = 1; a <= d; ++a)
        for (int b = 1; a + b <= d; ++b)
            for (int k = 1; (a + b) * k <= d; ++k)
                for (int m = mn_min; (a + b) * k + a * m <= d; ++m) {
                    const int rest = d - (a + b) * k - a * m;
                    if (rest % b != 0) continue;
                    const int n = rest / b;
                    if (n >= mn_min) body(a, b, k, m, n);
                }
}

// psi^1 coefficient of (1 - (L/e1) x)(1 - (L/e2) x)(mu + mu^2 x).
Rational excess_psi_coefficient(const Rational& e1, const Rational& e2, const Rational& L, const Rational& mu) {
    const Polynomial c1(std::vector<Rational>{Rational(1), -(L / e1)});
    const Polynomial c2(std::vector<Rational>{Rational(1), -(L / e2)});
    const Polynomial s(std::vector<Rational>{mu, mu * mu});
    return (c1 * c2 * s).coefficient(1);
}

long triple_lcm(long a, long b) { return lcm_long(lcm_long(a, b), a + b); }

// Excess value per branch of the normalization.
Rational excess_per_branch(int a, int b, SegreVariant variant) {
    switch (variant) {
    case SegreVariant::d00_d0: {
        const Rational L(lcm_long(a, b));
        const Rational mu = L / Rational(std::max(a, b));
        return excess_psi_coefficient(Rational(a), Rational(b), L, mu) * Rational(2) / L * two_branch_target_degree(a, b);
    }
    case SegreVariant::d000_d0: {
        const Rational L(triple_lcm(a, b));
        const Rational mu = L / Rational(std::max(a, b));
        return excess_psi_coefficient(Rational(a), Rational(b), L, mu) * Rational(2) / L;
    }
    case SegreVariant::d000_d0_sum_node: {
        const Rational L(triple_lcm(a, b));
        const Rational mu = L / Rational(a + b);
        return excess_psi_coefficient(Rational(a + b), Rational(a), L, mu) * Rational(2) / L;
    }
    }
    throw InvariantError("unknown Segre variant");
}

StratumContribution zero_dim(StratumType type, std::string variant, StratumParameters p, Rational count,
                             Rational reduced, Rational mult) {
    StratumContribution c{type, std::move(variant), p, 0, std::move(count), std::move(reduced), std::move(mult),
                          Rational(1), Rational()};
    c.total = c.count * c.reduced_degree * c.multiplicity;
    return c;
}

StratumContribution one_dim(StratumType type, std::string variant, StratumParameters p, Rational count, Rational reduced,
                            Rational mult, Rational excess) {
    StratumContribution c{type, std::move(variant), p, 1, std::move(count), std::move(reduced), std::move(mult),
                          std::move(excess), Rational()};
    c.total = c.count * c.reduced_degree * c.excess_value;
    return c;
}

}  // namespace

Rational two_branch_target_degree(int a, int b) {
    if (a < 1 || b < 1) throw ValidationError("ramification indices must be positive");
    const int hi = std::max(a, b), lo = std::min(a, b);
    Rational degree(a + b);
    if (hi > lo) degree += Rational(lo) * Rational(lo) * Rational(hi - lo) / (Rational(lo) * Rational(lo));
    return degree;
}

Rational segre_excess_contribution(int a, int b, SegreVariant variant) {
    if (a < 1 || b < 1) throw ValidationError("ramification indices must be positive");
    const long g = gcd_long(a, b);
    const Rational branches_per_unit = variant == SegreVariant::d00_d0 ? Rational(g) : Rational(g * g);
    return excess_per_branch(a, b, variant) * branches_per_unit;
}

std::vector<StratumContribution> delta01_ledger(int d) {
    check_degree(d);
    const Rational F = marking_factor(d);
    std::vector<StratumContribution> out;
    for_each_split(d, 1, 1, [&](int a, int m, int b, int n) {
        const long g = gcd_long(a, b);
        const Rational unit = power(a, m - 1) * power(b, n - 1);
        out.push_back(zero_dim(StratumType::d001_d01, "m_gon_self_edge", {a, b, m, n, 0},
                               Rational(2 * m) * F / unit, unit * Rational(g),
                               Rational(lcm_long(a, b)) / Rational(a)));
    });
    return out;
}

std::vector<StratumContribution> delta00_ledger(int d) {
    check_degree(d);
    const Rational F = marking_factor(d);
    std::vector<StratumContribution> out;

    for (long a : divisors(d)) {
        const int m = static_cast<int>(d / a);
        const Rational reduced = power(a, m - 1);
        const StratumParameters p{static_cast<int>(a), 0, m, 0, 0};
        if (m >= 2)
            out.push_back(zero_dim(StratumType::d00_d01, "bridge_distinct_components", p,
                                   Rational(4L * m * (m - 1)) * F / power(a, m - 2), reduced, Rational(1)));
        if (a >= 2)
            out.push_back(zero_dim(StratumType::d00_d01, "bridge_same_component", p,
                                   Rational((a - 1) * 4L * m) * F / power(a, m - 1), reduced, Rational(1)));
    }

    for_each_triple_split(d, 0, [&](int a, int b, int k, int m, int n) {
        const long g = gcd_long(a, b);
        const Rational aut = power(a + b, 2 * k - 2) * power(a, 2 * m) * power(b, 2 * n);
        const Rational reduced =
            power(g, 4) * power(a + b, 2 * k - 3) * power(a, 2 * m - 1) * power(b, 2 * n - 1);
        const Rational L(triple_lcm(a, b));
        const StratumParameters p{a, b, m, n, k};
        const Rational ab_mult = L * L / Rational(static_cast<long>(a) * b);
        if (m > 0)
            out.push_back(zero_dim(StratumType::d000_d00, "a_over_plus", p, Rational(4L * m * (n + 1)) * F / aut,
                                   reduced, ab_mult));
        if (n > 0)
            out.push_back(zero_dim(StratumType::d000_d00, "b_over_plus", p, Rational(4L * (m + 1) * n) * F / aut,
                                   reduced, ab_mult));
        const long sum_count = 8L * (static_cast<long>(k) * (m + 1) + static_cast<long>(k - 1) * m);
        if (sum_count > 0)
            out.push_back(zero_dim(StratumType::d000_d00, "sum_node", p, Rational(sum_count) * F / aut, reduced,
                                   L * L / Rational(static_cast<long>(a) * (a + b))));
    });

    for_each_split(d, 1, 1, [&](int a, int m, int b, int n) {
        const long g = gcd_long(a, b);
        const Rational unit = power(a, m - 1) * power(b, n - 1);
        out.push_back(one_dim(StratumType::d00_d0, "ab_nodes", {a, b, m, n, 0}, Rational(2L * m * n) * F / unit,
                              unit * Rational(g), Rational(lcm_long(a, b)) / Rational(std::max(a, b)),
                              excess_per_branch(a, b, SegreVariant::d00_d0)));
    });

    for_each_triple_split(d, 1, [&](int a, int b, int k, int m, int n) {
        const long g = gcd_long(a, b);
        const Rational unit = power(a, m - 1) * power(b, n - 1) * power(a + b, k - 1);
        const Rational L(triple_lcm(a, b));
        const StratumParameters p{a, b, m, n, k};
        out.push_back(one_dim(StratumType::d000_d0, "ab_nodes", p, Rational(4L * m * n) * F / unit,
                              unit * Rational(g * g), L / Rational(std::max(a, b)),
                              excess_per_branch(a, b, SegreVariant::d000_d0)));
        out.push_back(one_dim(StratumType::d000_d0, "sum_node", p, Rational(8L * k * m) * F / unit,
                              unit * Rational(g * g), L / Rational(a + b),
                              excess_per_branch(a, b, SegreVariant::d000_d0_sum_node)));
    });
    return out;
}

std::vector<Rational> delta00_stratum_contributions(int d) {
    std::vector<Rational> totals(4);
    for (const auto& c : delta00_ledger(d)) {
        switch (c.type) {
        case StratumType::d00_d01: totals[0] += c.total; break;
        case StratumType::d000_d00: totals[1] += c.total; break;
        case StratumType::d00_d0: totals[2] += c.total; break;
        case StratumType::d000_d0: totals[3] += c.total; break;
        case StratumType::d001_d01: throw InvariantError("unexpected stratum in the D00 ledger");
        }
    }
    return totals;
}

DeltaNumber delta01_number(int d) {
    check_degree(d);
    DeltaNumber out;
    for (const auto& c : delta01_ledger(d)) out.stratum_sum += c.total;
    Integer conv = 0;
    for (int d1 = 1; d1 < d; ++d1) conv += sigma1(d1) * sigma1(d - d1);
    out.closed_form = Rational(2) * marking_factor(d) * Rational(conv);
    return out;
}

DeltaNumber delta00_number(int d) {
    check_degree(d);
    DeltaNumber out;
    for (const auto& t : delta00_stratum_contributions(d)) out.stratum_sum += t;
    out.closed_form = Rational(4) * marking_factor(d) * Rational(d - 1) * Rational(sigma1(d));
    return out;
}

Rational divisor_min_identity(int d) {
    if (d < 1) throw ValidationError("degree must be positive");
    long total = 0;
    for_each_split(d, 1, 1, [&](int a, int m, int b, int n) {
        total += (static_cast<long>(m) * n - static_cast<long>(a) * m) * std::min(a, b);
    });
    return Rational(total);
}

Rational divisor_min_identity_mirrored(int d) {
    if (d < 1) throw ValidationError("degree must be positive");
    long total = 0;
    for_each_split(d, 1, 1, [&](int a, int m, int b, int n) {
        total += (static_cast<long>(m) * n - static_cast<long>(b) * n) * std::min(a, b);
    });
    return Rational(total);
}

NormalizedSeries normalized_series(int d_max) {
    check_degree(d_max);
    NormalizedSeries s{QSeries(d_max), QSeries(d_max)};
    for (int d = 2; d <= d_max; ++d) {
        const Rational F = marking_factor(d);
        s.delta00.set(d, delta00_number(d).stratum_sum / F);
        s.delta01.set(d, delta01_number(d).stratum_sum / F);
    }
    return s;
}

QuasimodularityReport quasimodularity_report(int d_max, int weight_bound, int fit_length, int holdout_length,
                                             int shift) {
    if (d_max < 10) throw ValidationError("quasimodularity report needs d_max >= 10");
    QuasimodularityReport r;
    r.d_max = d_max;
    r.weight_bound = weight_bound;
    r.series = normalized_series(d_max);
    r.delta00_fit = is_quasimodular(r.series.delta00, weight_bound, fit_length, holdout_length);
    r.delta01_fit = is_quasimodular(r.series.delta01, weight_bound, fit_length, holdout_length);
    for (int delta : {-shift, shift}) {
        if (shift == 0 || fit_length + delta < 1 || holdout_length - delta < 0) continue;
        r.delta00_shifted.push_back(
            is_quasimodular(r.series.delta00, weight_bound, fit_length + delta, holdout_length - delta));
        r.delta01_shifted.push_back(
            is_quasimodular(r.series.delta01, weight_bound, fit_length + delta, holdout_length - delta));
    }
    r.delta00_minimal_weight = minimal_quasimodular_weight(r.series.delta00, weight_bound, fit_length, holdout_length);
    r.delta01_minimal_weight = minimal_quasimodular_weight(r.series.delta01, weight_bound, fit_length, holdout_length);
    return r;
}

}  // namespace htaut
