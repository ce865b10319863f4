#include "htaut/permutation.hpp"

#include "htaut/errors.hpp"

#include <algorithm>
#include <numeric>

namespace htaut {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
        if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)])
            throw ValidationError("image array is not a permutation");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    for (const auto& cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const int x = cycle[i];
            if (x < 0 || x >= degree || used[static_cast<std::size_t>(x)])
                throw ValidationError("cycles are not disjoint points of the domain");
            used[static_cast<std::size_t>(x)] = true;
            images[static_cast<std::size_t>(x)] = cycle[(i + 1) % cycle.size()];
        }
    }
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < degree(); ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
    Permutation r;
    r.images_ = std::move(inv);
    return r;
}

int Permutation::order() const {
    long result = 1;
    for (int len : cycle_type()) result = std::lcm(result, static_cast<long>(len));
    return static_cast<int>(result);
}

Permutation Permutation::pow(long exponent) const {
    const int ord = order();
    long e = exponent % ord;
    if (e < 0) e += ord;
    Permutation result = identity(degree());
    for (long i = 0; i < e; ++i) result = *this * result;
    return result;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 0; start < degree(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cycle;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = images_[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            cycle.push_back(x);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> lengths;
    for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw ValidationError("permutation degrees differ");
    std::vector<int> r(p.images_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.images_[static_cast<std::size_t>(q.images_[i])];
    Permutation out;
    out.images_ = std::move(r);
    return out;
}

std::string Permutation::to_string() const {
    std::string out;
    for (const auto& c : cycles()) {
        if (c.size() == 1) continue;
        out += "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += " ";
            out += std::to_string(c[i] + 1);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : p.images()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
}

Permutation direct_sum(const Permutation& p, const Permutation& q) {
    std::vector<int> images = p.images();
    for (int x : q.images()) images.push_back(x + p.degree());
    return Permutation(std::move(images));
}

}  // namespace htaut
