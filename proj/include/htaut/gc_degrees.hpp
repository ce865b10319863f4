#pragma once

#include "htaut/finite_group.hpp"
#include "htaut/rational.hpp"

#include <vector>

namespace htaut {

// Degree of the restriction/corestriction square over a pair of smooth covers.
// k1 <= k2 are subgroups of the Galois closure group; h lists one monodromy element per orbit.
Rational res_cores_degree(const Subgroup& k1, const Subgroup& k2, const std::vector<Element>& h, int h2_order,
                          int g_order);

// A homomorphism H_j -> G given by the image of every element of H_j.
struct GroupMap {
    GroupPtr source;
    GroupPtr target;
    std::vector<Element> images;
};

void check_surjective_homomorphism(const GroupMap& f);

struct FiberProduct {
    GroupPtr ambient;  // H1 x H2
    Subgroup group;    // H1 x_G H2
    int first_degree = 0;  // degree of the H1 permutation block
};

FiberProduct fiber_product(const GroupMap& f1, const GroupMap& f2);

// #H_bullet * #H0^(b - 1), where H0 is generated by the given pairs (a, b) in H1 x H2. Throws unless
// H0 lies in the fiber product and surjects onto both factors.
Rational cores_cores_degree(const GroupMap& f1, const GroupMap& f2,
                            const std::vector<std::pair<Element, Element>>& h0_generators, int b);

struct ResResLeg {
    Element monodromy;     // h_l in H
    Subgroup vertex_normal;  // N_v at the vertex carrying the leg
};

// (#L')! * prod #H / (ord(h_l) * #N_v), ord(h_l) the least k with h_l^k in N_v.
// When `factors` is non-empty every N_v must meet each listed subgroup trivially.
Rational res_res_count(const GroupPtr& h, const std::vector<ResResLeg>& legs, const std::vector<Subgroup>& factors = {});

}  // namespace htaut
