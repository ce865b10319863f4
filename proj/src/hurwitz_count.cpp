#include "htaut/hurwitz_count.hpp"

#include "htaut/errors.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>

namespace htaut {

const Rational& HurwitzCounts::get(HurwitzMode mode) const {
    switch (mode) {
    case HurwitzMode::conjugacy_orbits: return conjugacy_orbits;
    case HurwitzMode::centralizer_weighted: return centralizer_weighted;
    case HurwitzMode::marked_fiber: return marked_fiber;
    }
    throw InvariantError("unknown Hurwitz mode");
}

namespace {

using Perm = std::array<int, max_hurwitz_degree>;

Perm multiply(const Perm& p, const Perm& q, int d) {
    Perm r{};
    for (int i = 0; i < d; ++i) r[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(q[static_cast<std::size_t>(i)])];
    return r;
}

Perm inverse(const Perm& p, int d) {
    Perm r{};
    for (int i = 0; i < d; ++i) r[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = i;
    return r;
}

std::vector<int> cycle_type(const Perm& p, int d) {
    std::vector<int> out;
    std::array<bool, max_hurwitz_degree> seen{};
    for (int s = 0; s < d; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        int len = 0;
        for (int x = s; !seen[static_cast<std::size_t>(x)]; x = p[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<int> normalize_type(std::vector<int> type, int d) {
    int total = 0;
    for (int part : type) {
        if (part < 1) throw ValidationError("cycle type parts must be positive");
        total += part;
    }
    if (total > d) throw ValidationError("cycle type is not a partition of " + std::to_string(d));
    type.insert(type.end(), static_cast<std::size_t>(d - total), 1);
    std::sort(type.rbegin(), type.rend());
    return type;
}

const std::vector<Perm>& conjugacy_class(int d, const std::vector<int>& type) {
    static std::mutex mutex;
    static std::map<std::pair<int, std::vector<int>>, std::vector<Perm>> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(d, type);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Perm> members;
    Perm p{};
    std::iota(p.begin(), p.begin() + d, 0);
    do {
        if (cycle_type(p, d) == type) members.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + d));
    return cache.emplace(key, std::move(members)).first->second;
}

bool transitive(const std::vector<Perm>& gens, int d) {
    std::array<bool, max_hurwitz_degree> seen{};
    std::array<int, max_hurwitz_degree> stack{};
    int top = 0, count = 1;
    seen[0] = true;
    stack[static_cast<std::size_t>(top++)] = 0;
    while (top > 0) {
        const int x = stack[static_cast<std::size_t>(--top)];
        for (const auto& g : gens) {
            const int y = g[static_cast<std::size_t>(x)];
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                ++count;
                stack[static_cast<std::size_t>(top++)] = y;
            }
        }
    }
    return count == d;
}

// Centralizer order of a transitive tuple: each commuting permutation is fixed by the image of 0.
int centralizer_order(const std::vector<Perm>& gens, int d) {
    int count = 0;
    for (int target = 0; target < d; ++target) {
        std::array<int, max_hurwitz_degree> tau;
        tau.fill(-1);
        tau[0] = target;
        std::array<int, max_hurwitz_degree> queue{};
        int head = 0, tail = 0;
        queue[static_cast<std::size_t>(tail++)] = 0;
        bool ok = true;
        while (ok && head < tail) {
            const int x = queue[static_cast<std::size_t>(head++)];
            for (const auto& g : gens) {
                const int gx = g[static_cast<std::size_t>(x)];
                const int want = g[static_cast<std::size_t>(tau[static_cast<std::size_t>(x)])];
                if (tau[static_cast<std::size_t>(gx)] == -1) {
                    tau[static_cast<std::size_t>(gx)] = want;
                    queue[static_cast<std::size_t>(tail++)] = gx;
                } else if (tau[static_cast<std::size_t>(gx)] != want) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) ++count;
    }
    return count;
}

}  // namespace

HurwitzCounts hurwitz_cover_counts(int d, const std::vector<std::vector<int>>& types, int target_genus,
                                   const std::vector<int>& marked) {
    if (d < 1 || d > max_hurwitz_degree)
        throw UnsupportedError("cover degree " + std::to_string(d) + " outside the enumeration range 1.." +
                               std::to_string(max_hurwitz_degree));
    if (target_genus != 0) throw UnsupportedError("only genus-0 targets are supported");
    if (types.empty()) throw ValidationError("at least one branch cycle type is required");
    std::vector<std::vector<int>> norm;
    for (const auto& t : types) norm.push_back(normalize_type(t, d));
    for (int i : marked)
        if (i < 0 || i >= static_cast<int>(norm.size())) throw ValidationError("marked branch index out of range");

    // The count is invariant under reordering the types; fix the smallest class first and solve
    // for the largest one last.
    std::vector<std::size_t> order(norm.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return conjugacy_class(d, norm[a]).size() < conjugacy_class(d, norm[b]).size();
    });
    std::vector<const std::vector<Perm>*> classes;
    for (std::size_t i : order) classes.push_back(&conjugacy_class(d, norm[i]));
    const std::size_t k = classes.size();

    Integer fixed_tuples = 0;
    Rational stabilizer_sum;
    const Perm first = classes[0]->front();
    std::vector<Perm> tuple(k);
    tuple[0] = first;
    const std::vector<int>& last_type = norm[order[k - 1]];

    auto finish = [&](const Perm& partial) {
        // partial = s_1 ... s_{k-1}; the last element is its inverse.
        if (k == 1) {
            for (int i = 0; i < d; ++i)
                if (partial[static_cast<std::size_t>(i)] != i) return;
        } else {
            tuple[k - 1] = inverse(partial, d);
            if (cycle_type(tuple[k - 1], d) != last_type) return;
        }
        if (!transitive(tuple, d)) return;
        fixed_tuples += 1;
        stabilizer_sum += Rational(centralizer_order(tuple, d));
    };

    auto recurse = [&](auto&& self, std::size_t depth, const Perm& partial) -> void {
        if (depth + 1 >= k) {
            finish(partial);
            return;
        }
        for (const Perm& s : *classes[depth]) {
            tuple[depth] = s;
            self(self, depth + 1, multiply(partial, s, d));
        }
    };
    if (k == 1) {
        finish(first);
    } else {
        recurse(recurse, 1, first);
    }

    const Integer class_size = static_cast<long>(classes[0]->size());
    const Rational d_factorial(factorial(static_cast<unsigned>(d)));
    HurwitzCounts counts;
    counts.tuples = fixed_tuples * class_size;
    // orbits = sum over tuples |Stab| / d! = sum over fixed-first tuples |Stab| / |C(s_1)|
    counts.conjugacy_orbits = stabilizer_sum * Rational(class_size) / d_factorial;
    counts.centralizer_weighted = Rational(counts.tuples) / d_factorial;
    Rational fibre_factor(1);
    for (int i : marked) {
        std::map<int, int> mult;
        for (int part : norm[static_cast<std::size_t>(i)]) ++mult[part];
        for (const auto& [part, m] : mult) fibre_factor *= Rational(factorial(static_cast<unsigned>(m)));
    }
    counts.marked_fiber = counts.centralizer_weighted * fibre_factor;
    return counts;
}

Rational hurwitz_cover_count(int d, const std::vector<std::vector<int>>& types, int target_genus, HurwitzMode mode,
                             const std::vector<int>& marked) {
    return hurwitz_cover_counts(d, types, target_genus, marked).get(mode);
}

}  // namespace htaut
