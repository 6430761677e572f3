#pragma once

#include <string>
#include <vector>

#include "sset/core.hpp"

namespace sset {

struct FiniteCategory {
    struct Morphism {
        std::string name;
        int src = 0;
        int tgt = 0;
    };
    std::vector<std::string> objects;
    std::vector<Morphism> morphisms;
    std::vector<int> identity;           // per object
    std::vector<std::vector<int>> comp;  // comp[g][f] = g ∘ f, or -1 when not composable

    int compose(int g, int f) const { return comp[g][f]; }
    bool is_identity(int m) const { return identity[morphisms[m].src] == m; }
    bool thin() const;
    int object(const std::string &name) const;
    std::vector<int> hom(int a, int b) const;
    Report validate() const;

    // Poset on the given objects; leq(a, b) must be a partial order.
    template <class Leq>
    static FiniteCategory poset(std::vector<std::string> objs, Leq leq);
    static FiniteCategory linear(int n);
    // Codiscrete groupoid: exactly one morphism between any two objects.
    static FiniteCategory codiscrete(std::vector<std::string> objs);
    static FiniteCategory discrete(std::vector<std::string> objs);
};

FiniteCategory make_poset(std::vector<std::string> objs, const std::vector<std::vector<bool>> &leq);

template <class Leq>
FiniteCategory FiniteCategory::poset(std::vector<std::string> objs, Leq leq) {
    std::vector<std::vector<bool>> rel(objs.size(), std::vector<bool>(objs.size()));
    for (size_t a = 0; a < objs.size(); ++a)
        for (size_t b = 0; b < objs.size(); ++b) rel[a][b] = leq(static_cast<int>(a), static_cast<int>(b));
    return make_poset(std::move(objs), rel);
}

// A strict functor between finite categories.
struct Functor {
    std::vector<int> on_objects;
    std::vector<int> on_morphisms;
};

Report validate_functor(const FiniteCategory &src, const FiniteCategory &tgt, const Functor &f);
Functor compose(const Functor &g, const Functor &f);

// A strict functor C^op -> Cat: fibres per object, and for each morphism u: c -> c' a functor F(c') -> F(c).
struct CategoryValuedFunctor {
    FiniteCategory base;
    std::vector<FiniteCategory> fibres;
    std::vector<Functor> pullbacks;
};

Report validate(const CategoryValuedFunctor &F);

struct Grothendieck {
    FiniteCategory total;
    Functor projection;
    std::vector<bool> cartesian;  // morphisms (u, φ) with φ invertible
    std::vector<std::pair<int, int>> object_pairs;
};

Grothendieck grothendieck(const CategoryValuedFunctor &F);

bool is_isomorphism(const FiniteCategory &c, int m);

}  // namespace sset
