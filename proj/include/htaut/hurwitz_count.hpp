#pragma once

#include "htaut/rational.hpp"

#include <vector>

namespace htaut {

enum class HurwitzMode {
    conjugacy_orbits,      // transitive tuples up to simultaneous conjugation
    centralizer_weighted,  // tuples / d!
    marked_fiber,          // tuples * prod over marked branch points of prod_k (m_k)! / d!
};

struct HurwitzCounts {
    Integer tuples;  // transitive tuples with product 1
    Rational conjugacy_orbits;
    Rational centralizer_weighted;
    Rational marked_fiber;

    const Rational& get(HurwitzMode mode) const;
};

inline constexpr int max_hurwitz_degree = 7;

// Cycle types are partitions of d (any order, 1s optional). marked lists 0-based indices of branch
// points whose fibres are marked. Only target genus 0 is supported.
HurwitzCounts hurwitz_cover_counts(int d, const std::vector<std::vector<int>>& types, int target_genus = 0,
                                   const std::vector<int>& marked = {});

Rational hurwitz_cover_count(int d, const std::vector<std::vector<int>>& types, int target_genus = 0,
                             HurwitzMode mode = HurwitzMode::conjugacy_orbits, const std::vector<int>& marked = {});

}  // namespace htaut
