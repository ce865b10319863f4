#pragma once

#include "htaut/ggraph.hpp"
#include "htaut/res_cores.hpp"

#include <string>
#include <vector>

namespace htaut {

enum class HClassKind { psi, kappa };

// psi at marked orbit `index` (1-based) or kappa_index.
struct HClassRef {
    HClassKind kind;
    int index;
};

struct HClassTerm {
    Rational coefficient;
    std::string class_name;  // "psi", "kappa" or "section"
    int point = 0;           // 1-based marked orbit (psi, section)
    int index = 0;           // kappa index
    int exponent = 1;
    int element = -1;        // coset representative for section divisors
    int vertex = -1;         // vertex of Gamma for boundary pullbacks

    friend bool operator==(const HClassTerm&, const HClassTerm&) = default;
};

std::string to_string(const std::vector<HClassTerm>& terms);

// res: H(G) -> H(G1). psi at global position `index` of rel.order pulls back to psi of its orbit.
std::vector<HClassTerm> pullback_restriction(const MonodromyDatum& xi, const Subgroup& g1, const RelabelingData& rel,
                                             HClassRef cls);
// cores: H(G) -> H(G/N).
std::vector<HClassTerm> pullback_corestriction(const MonodromyDatum& xi, const QuotientGroup& q, HClassRef cls);
// Forgetting the extra free orbit b+1 of H(G, (xi, 1)) -> H(G, xi).
std::vector<HClassTerm> pullback_forgetful(const MonodromyDatum& xi, HClassRef cls);
// delta: H(G, xi) -> Mbar_{g', b}.
std::vector<HClassTerm> pullback_target(const MonodromyDatum& xi, HClassRef cls);
// xi_Gamma: Mbar_Gamma -> H(G, xi), as classes on the vertex factors.
std::vector<HClassTerm> pullback_boundary(const AdmissibleGGraph& gamma, HClassRef cls);

}  // namespace htaut
