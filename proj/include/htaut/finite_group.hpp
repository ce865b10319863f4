#pragma once

#include "htaut/permutation.hpp"

#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace htaut {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Elements are addressed by their index in the group's canonical list
// (lexicographic on image arrays, so the identity is always index 0).
using Element = int;

class FiniteGroup {
public:
    static GroupPtr from_generators(int degree, std::vector<Permutation> generators);
    static GroupPtr symmetric(int d);
    static GroupPtr cyclic(int n);
    static GroupPtr trivial();
    static GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b);

    int degree() const { return degree_; }
    int order() const { return static_cast<int>(elements_.size()); }
    const std::vector<Permutation>& generators() const { return generators_; }
    std::vector<Element> generator_elements() const;

    Element identity() const { return 0; }
    const Permutation& permutation(Element g) const;
    // Throws if p is not in the group.
    Element element_of(const Permutation& p) const;
    std::optional<Element> find(const Permutation& p) const;

    Element multiply(Element a, Element b) const;
    Element inverse(Element a) const;
    Element conjugate(Element t, Element h) const;  // t h t^-1
    Element power(Element a, long exponent) const;
    int order_of(Element g) const;
    bool is_abelian() const;

private:
    FiniteGroup() = default;
    int degree_ = 1;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::unordered_map<Permutation, Element, PermutationHash> index_;
    std::vector<Element> inverse_;
};

// Same degree and same element set; element indices then agree.
bool same_group(const GroupPtr& a, const GroupPtr& b);

class Subgroup {
public:
    static Subgroup generated_by(GroupPtr parent, const std::vector<Element>& generators);
    // Validates closure; throws ValidationError with a witness otherwise.
    static Subgroup from_elements(GroupPtr parent, std::vector<Element> elements);
    static Subgroup whole(GroupPtr parent);
    static Subgroup trivial(GroupPtr parent);
    static Subgroup cyclic(GroupPtr parent, Element h);

    const GroupPtr& parent() const { return parent_; }
    const std::vector<Element>& elements() const { return elements_; }
    int order() const { return static_cast<int>(elements_.size()); }
    int index() const { return parent_->order() / order(); }
    bool contains(Element g) const { return member_[static_cast<std::size_t>(g)]; }
    bool is_subgroup_of(const Subgroup& other) const;

    // Returns a witness (g, n) with g n g^-1 not in the subgroup, or nullopt when normal.
    std::optional<std::pair<Element, Element>> normality_witness() const;
    bool is_normal() const { return !normality_witness().has_value(); }

    Subgroup intersect(const Subgroup& other) const;
    Subgroup conjugate_by(Element t) const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.parent_ == b.parent_ && a.elements_ == b.elements_;
    }

private:
    Subgroup(GroupPtr parent, std::vector<Element> sorted_elements);
    GroupPtr parent_;
    std::vector<Element> elements_;
    std::vector<bool> member_;
};

// Left cosets gH, each represented by its smallest element; ordered by representative.
struct CosetSpace {
    std::vector<Element> representatives;
    std::vector<int> coset_of;  // element -> coset index
    int size() const { return static_cast<int>(representatives.size()); }
    int apply(Element g, int coset, const FiniteGroup& group) const;  // g . (t H)
};

CosetSpace coset_space(const Subgroup& h);
std::vector<Element> left_cosets(const FiniteGroup& g, const Subgroup& h);

struct CosetOrbit {
    Element representative;     // coset representative of the first coset in the orbit
    std::vector<int> cosets;    // coset indices, ascending
};

// Orbits of the left action of H on G/K.
std::vector<CosetOrbit> orbit_on_cosets(const Subgroup& h, const Subgroup& k);

// G/N realized as a permutation group on the cosets of N.
class QuotientGroup {
public:
    // Throws ValidationError carrying a witness if N is not normal.
    QuotientGroup(GroupPtr parent, Subgroup normal);

    const GroupPtr& parent() const { return parent_; }
    const Subgroup& normal_subgroup() const { return normal_; }
    const GroupPtr& group() const { return quotient_; }
    const std::vector<Element>& coset_representatives() const { return cosets_.representatives; }
    Element project(Element g) const;
    // Smallest parent element projecting onto x.
    Element lift(Element x) const;

private:
    GroupPtr parent_;
    Subgroup normal_;
    CosetSpace cosets_;
    GroupPtr quotient_;
    std::vector<Element> projection_;
    std::vector<Element> lift_;
};

QuotientGroup quotient(const GroupPtr& g, const Subgroup& n);

}  // namespace htaut
