#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace htaut {

// Permutation of {0..n-1} stored as the image array. Product convention: (p*q)(x) = p(q(x)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int degree);
    // Cycles given with 0-based points.
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;
    int order() const;
    Permutation pow(long exponent) const;
    // Cycle lengths in non-increasing order, fixed points included.
    std::vector<int> cycle_type() const;
    std::vector<std::vector<int>> cycles() const;

    friend Permutation operator*(const Permutation& p, const Permutation& q);
    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

    std::string to_string() const;  // cycle notation, 1-based

private:
    std::vector<int> images_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept;
};

// Disjoint union action: p on the first block, q shifted onto the second.
Permutation direct_sum(const Permutation& p, const Permutation& q);

}  // namespace htaut
