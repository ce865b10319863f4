#include "htaut/gc_degrees.hpp"

#include "htaut/errors.hpp"

namespace htaut {

Rational res_cores_degree(const Subgroup& k1, const Subgroup& k2, const std::vector<Element>& h, int h2_order,
                          int g_order) {
    if (!same_group(k1.parent(), k2.parent())) throw ValidationError("subgroups of different groups");
    if (!k1.is_subgroup_of(k2)) throw ValidationError("the first subgroup must lie in the second");
    if (g_order <= 0 || h2_order <= 0 || h2_order % g_order != 0)
        throw ValidationError("#H2 must be a positive multiple of #G");
    const int exponent = h2_order / g_order;
    Rational degree(1);
    for (Element x : h) {
        const Subgroup cyc = Subgroup::cyclic(k1.parent(), x);
        degree *= Rational(k2.order() / cyc.intersect(k2).order());
        degree *= Rational(k1.order() / cyc.intersect(k1).order()).pow(exponent);
    }
    return degree;
}

void check_surjective_homomorphism(const GroupMap& f) {
    if (!f.source || !f.target) throw ValidationError("group map without groups");
    if (static_cast<int>(f.images.size()) != f.source->order())
        throw ValidationError("group map must list an image for every element");
    std::vector<bool> hit(static_cast<std::size_t>(f.target->order()), false);
    for (Element y : f.images) {
        f.target->permutation(y);
        hit[static_cast<std::size_t>(y)] = true;
    }
    for (bool b : hit)
        if (!b) throw ValidationError("group map is not surjective");
    const auto gens = f.source->generator_elements();
    for (Element a = 0; a < f.source->order(); ++a)
        for (Element s : gens)
            if (f.images[static_cast<std::size_t>(f.source->multiply(s, a))] !=
                f.target->multiply(f.images[static_cast<std::size_t>(s)], f.images[static_cast<std::size_t>(a)]))
                throw ValidationError("group map is not a homomorphism");
}

namespace {

Element pair_in(const FiniteGroup& ambient, const FiniteGroup& h1, const FiniteGroup& h2, Element a, Element b) {
    return ambient.element_of(direct_sum(h1.permutation(a), h2.permutation(b)));
}

}  // namespace

FiberProduct fiber_product(const GroupMap& f1, const GroupMap& f2) {
    check_surjective_homomorphism(f1);
    check_surjective_homomorphism(f2);
    if (f1.target != f2.target) throw ValidationError("fiber product over different groups");
    GroupPtr ambient = FiniteGroup::direct_product(*f1.source, *f2.source);
    std::vector<Element> members;
    for (Element a = 0; a < f1.source->order(); ++a)
        for (Element b = 0; b < f2.source->order(); ++b)
            if (f1.images[static_cast<std::size_t>(a)] == f2.images[static_cast<std::size_t>(b)])
                members.push_back(pair_in(*ambient, *f1.source, *f2.source, a, b));
    return FiberProduct{ambient, Subgroup::from_elements(ambient, std::move(members)), f1.source->degree()};
}

Rational cores_cores_degree(const GroupMap& f1, const GroupMap& f2,
                            const std::vector<std::pair<Element, Element>>& h0_generators, int b) {
    if (b < 1) throw ValidationError("at least one branch orbit is required");
    const FiberProduct fp = fiber_product(f1, f2);
    std::vector<Element> gens;
    for (const auto& [x, y] : h0_generators) {
        const Element e = pair_in(*fp.ambient, *f1.source, *f2.source, x, y);
        if (!fp.group.contains(e)) throw ValidationError("H0 generator lies outside the fiber product");
        gens.push_back(e);
    }
    const Subgroup h0 = Subgroup::generated_by(fp.ambient, gens);
    std::vector<bool> hit1(static_cast<std::size_t>(f1.source->order()), false),
        hit2(static_cast<std::size_t>(f2.source->order()), false);
    for (Element e : h0.elements()) {
        const auto& img = fp.ambient->permutation(e).images();
        std::vector<int> left(img.begin(), img.begin() + fp.first_degree);
        std::vector<int> right;
        for (auto it = img.begin() + fp.first_degree; it != img.end(); ++it) right.push_back(*it - fp.first_degree);
        hit1[static_cast<std::size_t>(f1.source->element_of(Permutation(left)))] = true;
        hit2[static_cast<std::size_t>(f2.source->element_of(Permutation(right)))] = true;
    }
    for (bool x : hit1)
        if (!x) throw ValidationError("H0 does not surject onto H1");
    for (bool x : hit2)
        if (!x) throw ValidationError("H0 does not surject onto H2");
    return Rational(fp.group.order()) * Rational(h0.order()).pow(b - 1);
}

Rational res_res_count(const GroupPtr& h, const std::vector<ResResLeg>& legs, const std::vector<Subgroup>& factors) {
    Rational count(factorial(static_cast<unsigned>(legs.size())));
    for (const auto& leg : legs) {
        if (!same_group(leg.vertex_normal.parent(), h)) throw ValidationError("vertex subgroup belongs to another group");
        for (const auto& f : factors)
            if (leg.vertex_normal.intersect(f).order() != 1)
                throw ValidationError("vertex subgroup meets a factor subgroup nontrivially");
        int ord = 1;
        Element x = leg.monodromy;
        while (!leg.vertex_normal.contains(x)) {
            x = h->multiply(x, leg.monodromy);
            ++ord;
        }
        count *= Rational(h->order()) / Rational(ord * leg.vertex_normal.order());
    }
    return count;
}

}  // namespace htaut
