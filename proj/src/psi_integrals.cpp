#include "htaut/psi_integrals.hpp"

#include "htaut/errors.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace htaut {

Rational genus_one_base_correlator() { return Rational(1, 24); }

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<int>& key) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int x : key) h = (h ^ static_cast<std::size_t>(x + 1)) * 0x100000001b3ULL;
        return h;
    }
};

// Readers share the lock; a writer inserts a fully computed value, so results never depend on interleaving.
class CorrelatorCache {
public:
    std::optional<Rational> get(const std::vector<int>& key) {
        std::shared_lock lock(mutex_);
        auto it = values_.find(key);
        if (it == values_.end()) return std::nullopt;
        return it->second;
    }
    void put(const std::vector<int>& key, const Rational& value) {
        std::unique_lock lock(mutex_);
        values_.emplace(key, value);
    }

private:
    std::shared_mutex mutex_;
    std::unordered_map<std::vector<int>, Rational, KeyHash> values_;
};

CorrelatorCache& correlator_cache() {
    static CorrelatorCache cache;
    return cache;
}

// exps sorted ascending; key = genus followed by exps.
Rational correlator(int genus, std::vector<int> exps) {
    const int n = static_cast<int>(exps.size());
    if (genus == 0 && n == 3 && exps == std::vector<int>{0, 0, 0}) return Rational(1);
    if (genus == 1 && n == 1 && exps[0] == 1) return genus_one_base_correlator();

    std::vector<int> key{genus};
    key.insert(key.end(), exps.begin(), exps.end());
    if (auto hit = correlator_cache().get(key)) return *hit;

    Rational value;
    if (exps.front() == 0) {
        std::vector<int> rest(exps.begin() + 1, exps.end());
        for (std::size_t j = 0; j < rest.size(); ++j) {
            if (rest[j] == 0) continue;
            auto lowered = rest;
            --lowered[j];
            std::sort(lowered.begin(), lowered.end());
            value += correlator(genus, lowered);
        }
    } else if (exps.front() == 1) {
        std::vector<int> rest(exps.begin() + 1, exps.end());
        value = Rational(2 * genus - 2 + static_cast<int>(rest.size())) * correlator(genus, rest);
    } else {
        throw InvariantError("correlator recursion reached an irreducible term");
    }
    correlator_cache().put(key, value);
    return value;
}

}  // namespace

Rational integrate_psi(int genus, const std::vector<int>& exponents) {
    const int n = static_cast<int>(exponents.size());
    if (genus < 0) throw ValidationError("negative genus");
    if (2 * genus - 2 + n <= 0) throw ValidationError("unstable type (g, n) in psi integral");
    for (int a : exponents)
        if (a < 0) throw ValidationError("negative psi exponent");
    const int degree = std::accumulate(exponents.begin(), exponents.end(), 0);
    if (degree != 3 * genus - 3 + n)
        throw ValidationError("psi monomial of degree " + std::to_string(degree) + " on a space of dimension " +
                              std::to_string(3 * genus - 3 + n));
    if (genus >= 2) throw UnsupportedError("psi integrals in genus >= 2 are not implemented");
    auto sorted = exponents;
    std::sort(sorted.begin(), sorted.end());
    return correlator(genus, sorted);
}

Rational integrate_psi_kappa(int genus, const std::vector<int>& psi_exponents, const std::map<int, int>& kappa_exponents) {
    const int n = static_cast<int>(psi_exponents.size());
    int degree = std::accumulate(psi_exponents.begin(), psi_exponents.end(), 0);
    std::vector<int> kappas;
    for (const auto& [index, exponent] : kappa_exponents) {
        if (index < 1 || exponent < 0) throw ValidationError("kappa index must be >= 1 with non-negative exponent");
        for (int e = 0; e < exponent; ++e) kappas.push_back(index);
        degree += index * exponent;
    }
    if (degree != 3 * genus - 3 + n) return Rational(0);
    if (kappas.empty()) return integrate_psi(genus, psi_exponents);

    // kappa_{b_1}...kappa_{b_m} = sum over set partitions P of (-1)^{m-|P|} pi_*(prod_B psi_B^{b(B)+1}).
    const int m = static_cast<int>(kappas.size());
    Rational total;
    std::vector<int> block_of(static_cast<std::size_t>(m), 0);
    std::function<void(int, int)> partitions = [&](int i, int blocks) {
        if (i == m) {
            std::vector<int> sums(static_cast<std::size_t>(blocks), 0);
            for (int j = 0; j < m; ++j) sums[static_cast<std::size_t>(block_of[static_cast<std::size_t>(j)])] += kappas[static_cast<std::size_t>(j)];
            auto exps = psi_exponents;
            for (int s : sums) exps.push_back(s + 1);
            const Rational sign((m - blocks) % 2 == 0 ? 1 : -1);
            total += sign * integrate_psi(genus, exps);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            block_of[static_cast<std::size_t>(i)] = b;
            partitions(i + 1, std::max(blocks, b + 1));
        }
    };
    partitions(0, 0);
    return total;
}

}  // namespace htaut
