#include "htaut/finite_group.hpp"

#include "htaut/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace htaut {

namespace {

constexpr int kMaxGroupOrder = 200000;

}  // namespace

GroupPtr FiniteGroup::from_generators(int degree, std::vector<Permutation> generators) {
    if (degree < 1) throw ValidationError("group degree must be positive");
    for (const auto& g : generators)
        if (g.degree() != degree) throw ValidationError("generator degree differs from group degree");

    auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    group->degree_ = degree;
    group->generators_ = generators;

    std::unordered_map<Permutation, Element, PermutationHash> seen;
    std::vector<Permutation> found{Permutation::identity(degree)};
    seen.emplace(found.front(), 0);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const Permutation current = found[queue.front()];
        queue.pop_front();
        for (const auto& s : generators) {
            Permutation next = s * current;
            if (seen.contains(next)) continue;
            if (static_cast<int>(found.size()) >= kMaxGroupOrder) throw UnsupportedError("group too large to enumerate");
            seen.emplace(next, static_cast<Element>(found.size()));
            found.push_back(std::move(next));
            queue.push_back(found.size() - 1);
        }
    }
    std::sort(found.begin(), found.end());
    group->elements_ = std::move(found);
    for (std::size_t i = 0; i < group->elements_.size(); ++i)
        group->index_.emplace(group->elements_[i], static_cast<Element>(i));
    group->inverse_.resize(group->elements_.size());
    for (std::size_t i = 0; i < group->elements_.size(); ++i)
        group->inverse_[i] = group->index_.at(group->elements_[i].inverse());
    return group;
}

GroupPtr FiniteGroup::symmetric(int d) {
    if (d < 1) throw ValidationError("symmetric group degree must be positive");
    std::vector<Permutation> gens;
    if (d >= 2) {
        gens.push_back(Permutation::from_cycles(d, {{0, 1}}));
        std::vector<int> cycle(static_cast<std::size_t>(d));
        std::iota(cycle.begin(), cycle.end(), 0);
        if (d >= 3) gens.push_back(Permutation::from_cycles(d, {cycle}));
    }
    return from_generators(d, std::move(gens));
}

GroupPtr FiniteGroup::cyclic(int n) {
    if (n < 1) throw ValidationError("cyclic group order must be positive");
    std::vector<int> cycle(static_cast<std::size_t>(n));
    std::iota(cycle.begin(), cycle.end(), 0);
    return from_generators(n, {Permutation::from_cycles(n, {cycle})});
}

GroupPtr FiniteGroup::trivial() { return from_generators(1, {}); }

bool same_group(const GroupPtr& a, const GroupPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->degree() != b->degree() || a->order() != b->order()) return false;
    for (Element g = 0; g < a->order(); ++g)
        if (a->permutation(g) != b->permutation(g)) return false;
    return true;
}

GroupPtr FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    std::vector<Permutation> gens;
    for (const auto& g : a.generators_) gens.push_back(direct_sum(g, Permutation::identity(b.degree_)));
    for (const auto& g : b.generators_) gens.push_back(direct_sum(Permutation::identity(a.degree_), g));
    return from_generators(a.degree_ + b.degree_, std::move(gens));
}

std::vector<Element> FiniteGroup::generator_elements() const {
    std::vector<Element> out;
    for (const auto& g : generators_) out.push_back(element_of(g));
    return out;
}

const Permutation& FiniteGroup::permutation(Element g) const {
    if (g < 0 || g >= order()) throw ValidationError("element index out of range");
    return elements_[static_cast<std::size_t>(g)];
}

std::optional<Element> FiniteGroup::find(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Element FiniteGroup::element_of(const Permutation& p) const {
    auto found = find(p);
    if (!found) throw ValidationError("permutation " + p.to_string() + " is not in the group");
    return *found;
}

Element FiniteGroup::multiply(Element a, Element b) const { return index_.at(permutation(a) * permutation(b)); }

Element FiniteGroup::inverse(Element a) const {
    permutation(a);
    return inverse_[static_cast<std::size_t>(a)];
}

Element FiniteGroup::conjugate(Element t, Element h) const { return multiply(multiply(t, h), inverse(t)); }

Element FiniteGroup::power(Element a, long exponent) const { return index_.at(permutation(a).pow(exponent)); }

int FiniteGroup::order_of(Element g) const { return permutation(g).order(); }

bool FiniteGroup::is_abelian() const {
    for (const auto& a : generators_)
        for (const auto& b : generators_)
            if (a * b != b * a) return false;
    return true;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> sorted_elements)
    : parent_(std::move(parent)), elements_(std::move(sorted_elements)) {
    member_.assign(static_cast<std::size_t>(parent_->order()), false);
    for (Element e : elements_) member_[static_cast<std::size_t>(e)] = true;
    if (parent_->order() % order() != 0) throw InvariantError("subgroup order does not divide group order");
}

Subgroup Subgroup::generated_by(GroupPtr parent, const std::vector<Element>& generators) {
    std::vector<bool> seen(static_cast<std::size_t>(parent->order()), false);
    std::vector<Element> found{parent->identity()};
    seen[0] = true;
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (Element s : generators) {
            const Element next = parent->multiply(s, found[i]);
            if (seen[static_cast<std::size_t>(next)]) continue;
            seen[static_cast<std::size_t>(next)] = true;
            found.push_back(next);
        }
    }
    std::sort(found.begin(), found.end());
    return Subgroup(std::move(parent), std::move(found));
}

Subgroup Subgroup::from_elements(GroupPtr parent, std::vector<Element> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty() || elements.front() != parent->identity())
        throw ValidationError("subset does not contain the identity");
    std::vector<bool> member(static_cast<std::size_t>(parent->order()), false);
    for (Element e : elements) {
        if (e < 0 || e >= parent->order()) throw ValidationError("element index out of range");
        member[static_cast<std::size_t>(e)] = true;
    }
    for (Element a : elements) {
        for (Element b : elements) {
            const Element ab = parent->multiply(a, parent->inverse(b));
            if (!member[static_cast<std::size_t>(ab)])
                throw ValidationError("subset not closed: " + parent->permutation(a).to_string() + " * " +
                                      parent->permutation(b).to_string() + "^-1 escapes");
        }
    }
    return Subgroup(std::move(parent), std::move(elements));
}

Subgroup Subgroup::whole(GroupPtr parent) {
    std::vector<Element> all(static_cast<std::size_t>(parent->order()));
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent) { return Subgroup(std::move(parent), {0}); }

Subgroup Subgroup::cyclic(GroupPtr parent, Element h) { return generated_by(std::move(parent), {h}); }

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
    if (parent_ != other.parent_) return false;
    for (Element e : elements_)
        if (!other.contains(e)) return false;
    return true;
}

std::optional<std::pair<Element, Element>> Subgroup::normality_witness() const {
    for (Element g : parent_->generator_elements())
        for (Element n : elements_)
            if (!contains(parent_->conjugate(g, n))) return std::make_pair(g, n);
    return std::nullopt;
}

Subgroup Subgroup::intersect(const Subgroup& other) const {
    if (parent_ != other.parent_) throw ValidationError("intersection of subgroups of different groups");
    std::vector<Element> common;
    for (Element e : elements_)
        if (other.contains(e)) common.push_back(e);
    return Subgroup(parent_, std::move(common));
}

Subgroup Subgroup::conjugate_by(Element t) const {
    std::vector<Element> conj;
    for (Element e : elements_) conj.push_back(parent_->conjugate(t, e));
    std::sort(conj.begin(), conj.end());
    return Subgroup(parent_, std::move(conj));
}

int CosetSpace::apply(Element g, int coset, const FiniteGroup& group) const {
    return coset_of[static_cast<std::size_t>(group.multiply(g, representatives[static_cast<std::size_t>(coset)]))];
}

CosetSpace coset_space(const Subgroup& h) {
    const FiniteGroup& g = *h.parent();
    CosetSpace space;
    space.coset_of.assign(static_cast<std::size_t>(g.order()), -1);
    for (Element t = 0; t < g.order(); ++t) {
        if (space.coset_of[static_cast<std::size_t>(t)] != -1) continue;
        const int index = space.size();
        space.representatives.push_back(t);
        for (Element x : h.elements()) space.coset_of[static_cast<std::size_t>(g.multiply(t, x))] = index;
    }
    return space;
}

std::vector<Element> left_cosets(const FiniteGroup& g, const Subgroup& h) {
    if (h.parent().get() != &g) throw ValidationError("subgroup does not belong to the given group");
    return coset_space(h).representatives;
}

std::vector<CosetOrbit> orbit_on_cosets(const Subgroup& h, const Subgroup& k) {
    if (!same_group(h.parent(), k.parent())) throw ValidationError("subgroups of different groups");
    const FiniteGroup& g = *h.parent();
    const CosetSpace space = coset_space(k);
    std::vector<bool> seen(static_cast<std::size_t>(space.size()), false);
    std::vector<CosetOrbit> orbits;
    for (int c = 0; c < space.size(); ++c) {
        if (seen[static_cast<std::size_t>(c)]) continue;
        CosetOrbit orbit{space.representatives[static_cast<std::size_t>(c)], {}};
        for (Element x : h.elements()) {
            const int image = space.apply(x, c, g);
            if (!seen[static_cast<std::size_t>(image)]) {
                seen[static_cast<std::size_t>(image)] = true;
                orbit.cosets.push_back(image);
            }
        }
        std::sort(orbit.cosets.begin(), orbit.cosets.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

QuotientGroup::QuotientGroup(GroupPtr parent, Subgroup normal) : parent_(std::move(parent)), normal_(std::move(normal)) {
    if (!same_group(normal_.parent(), parent_)) throw ValidationError("normal subgroup belongs to a different group");
    if (auto w = normal_.normality_witness()) {
        throw ValidationError("subgroup is not normal: conjugating " + parent_->permutation(w->second).to_string() +
                              " by " + parent_->permutation(w->first).to_string() + " leaves the subgroup");
    }
    cosets_ = coset_space(normal_);
    const int m = cosets_.size();
    auto action = [&](Element g) {
        std::vector<int> images(static_cast<std::size_t>(m));
        for (int c = 0; c < m; ++c) images[static_cast<std::size_t>(c)] = cosets_.apply(g, c, *parent_);
        return Permutation(std::move(images));
    };
    std::vector<Permutation> gens;
    for (Element g : parent_->generator_elements()) gens.push_back(action(g));
    quotient_ = FiniteGroup::from_generators(m, std::move(gens));
    projection_.resize(static_cast<std::size_t>(parent_->order()));
    lift_.assign(static_cast<std::size_t>(quotient_->order()), -1);
    for (Element g = 0; g < parent_->order(); ++g) {
        const Element x = quotient_->element_of(action(g));
        projection_[static_cast<std::size_t>(g)] = x;
        if (lift_[static_cast<std::size_t>(x)] == -1) lift_[static_cast<std::size_t>(x)] = g;
    }
}

Element QuotientGroup::project(Element g) const {
    parent_->permutation(g);
    return projection_[static_cast<std::size_t>(g)];
}

Element QuotientGroup::lift(Element x) const {
    quotient_->permutation(x);
    return lift_[static_cast<std::size_t>(x)];
}

QuotientGroup quotient(const GroupPtr& g, const Subgroup& n) { return QuotientGroup(g, n); }

}  // namespace htaut
