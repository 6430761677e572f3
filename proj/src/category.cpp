#include "sset/category.hpp"

#include <map>
#include <tuple>

namespace sset {

bool FiniteCategory::thin() const {
    std::set<std::pair<int, int>> seen;
    for (const auto &m : morphisms)
        if (!seen.insert({m.src, m.tgt}).second) return false;
    return true;
}

int FiniteCategory::object(const std::string &name) const {
    for (size_t i = 0; i < objects.size(); ++i)
        if (objects[i] == name) return static_cast<int>(i);
    throw InvalidInput("no object named '" + name + "'");
}

std::vector<int> FiniteCategory::hom(int a, int b) const {
    std::vector<int> out;
    for (size_t m = 0; m < morphisms.size(); ++m)
        if (morphisms[m].src == a && morphisms[m].tgt == b) out.push_back(static_cast<int>(m));
    return out;
}

Report FiniteCategory::validate() const {
    int n = static_cast<int>(morphisms.size());
    if (identity.size() != objects.size()) return Report::failure("identity table has wrong size");
    if (static_cast<int>(comp.size()) != n) return Report::failure("composition table has wrong size");
    for (size_t o = 0; o < objects.size(); ++o) {
        int e = identity[o];
        if (e < 0 || e >= n || morphisms[e].src != static_cast<int>(o) || morphisms[e].tgt != static_cast<int>(o))
            return Report::failure("bad identity at object '" + objects[o] + "'");
    }
    for (int g = 0; g < n; ++g) {
        if (static_cast<int>(comp[g].size()) != n) return Report::failure("composition table has wrong size");
        for (int f = 0; f < n; ++f) {
            bool composable = morphisms[f].tgt == morphisms[g].src;
            int h = comp[g][f];
            if (composable != (h >= 0)) return Report::failure("composition defined on a non-composable pair");
            if (!composable) continue;
            if (h >= n || morphisms[h].src != morphisms[f].src || morphisms[h].tgt != morphisms[g].tgt)
                return Report::failure("composite has wrong endpoints");
        }
    }
    for (int f = 0; f < n; ++f) {
        if (comp[f][identity[morphisms[f].src]] != f || comp[identity[morphisms[f].tgt]][f] != f)
            return Report::failure("unit law fails at '" + morphisms[f].name + "'");
    }
    for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g) {
            if (comp[g][f] < 0) continue;
            for (int h = 0; h < n; ++h) {
                if (comp[h][g] < 0) continue;
                if (comp[h][comp[g][f]] != comp[comp[h][g]][f])
                    return Report::failure("associativity fails at '" + morphisms[h].name + "','" + morphisms[g].name +
                                           "','" + morphisms[f].name + "'");
            }
        }
    return Report::success();
}

FiniteCategory make_poset(std::vector<std::string> objs, const std::vector<std::vector<bool>> &leq) {
    FiniteCategory c;
    c.objects = std::move(objs);
    int n = static_cast<int>(c.objects.size());
    std::map<std::pair<int, int>, int> id;
    c.identity.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!leq[a][b]) continue;
            if (a != b && leq[b][a]) throw InvalidInput("relation is not antisymmetric");
            int m = static_cast<int>(c.morphisms.size());
            std::string nm = a == b ? "id(" + c.objects[a] + ")" : c.objects[a] + "->" + c.objects[b];
            c.morphisms.push_back({nm, a, b});
            id[{a, b}] = m;
            if (a == b) c.identity[a] = m;
        }
    for (int a = 0; a < n; ++a)
        if (c.identity[a] < 0) throw InvalidInput("relation is not reflexive");
    int k = static_cast<int>(c.morphisms.size());
    c.comp.assign(k, std::vector<int>(k, -1));
    for (int g = 0; g < k; ++g)
        for (int f = 0; f < k; ++f) {
            if (c.morphisms[f].tgt != c.morphisms[g].src) continue;
            auto it = id.find({c.morphisms[f].src, c.morphisms[g].tgt});
            if (it == id.end()) throw InvalidInput("relation is not transitive");
            c.comp[g][f] = it->second;
        }
    return c;
}

FiniteCategory FiniteCategory::linear(int n) {
    std::vector<std::string> objs;
    for (int i = 0; i <= n; ++i) objs.push_back(std::to_string(i));
    return poset(objs, [](int a, int b) { return a <= b; });
}

FiniteCategory FiniteCategory::codiscrete(std::vector<std::string> objs) {
    FiniteCategory c;
    c.objects = std::move(objs);
    int n = static_cast<int>(c.objects.size());
    c.identity.assign(n, -1);
    std::vector<std::vector<int>> id(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            id[a][b] = static_cast<int>(c.morphisms.size());
            c.morphisms.push_back({a == b ? "id(" + c.objects[a] + ")" : c.objects[a] + "->" + c.objects[b], a, b});
            if (a == b) c.identity[a] = id[a][b];
        }
    int k = static_cast<int>(c.morphisms.size());
    c.comp.assign(k, std::vector<int>(k, -1));
    for (int g = 0; g < k; ++g)
        for (int f = 0; f < k; ++f)
            if (c.morphisms[f].tgt == c.morphisms[g].src) c.comp[g][f] = id[c.morphisms[f].src][c.morphisms[g].tgt];
    return c;
}

FiniteCategory FiniteCategory::discrete(std::vector<std::string> objs) {
    return poset(std::move(objs), [](int a, int b) { return a == b; });
}

Report validate_functor(const FiniteCategory &src, const FiniteCategory &tgt, const Functor &f) {
    if (f.on_objects.size() != src.objects.size() || f.on_morphisms.size() != src.morphisms.size())
        return Report::failure("functor tables have wrong size");
    for (size_t m = 0; m < src.morphisms.size(); ++m) {
        int fm = f.on_morphisms[m];
        if (fm < 0 || fm >= static_cast<int>(tgt.morphisms.size())) return Report::failure("morphism image out of range");
        if (tgt.morphisms[fm].src != f.on_objects[src.morphisms[m].src] ||
            tgt.morphisms[fm].tgt != f.on_objects[src.morphisms[m].tgt])
            return Report::failure("functor does not respect endpoints at '" + src.morphisms[m].name + "'");
    }
    for (size_t o = 0; o < src.objects.size(); ++o)
        if (f.on_morphisms[src.identity[o]] != tgt.identity[f.on_objects[o]])
            return Report::failure("functor does not preserve identities");
    for (size_t g = 0; g < src.morphisms.size(); ++g)
        for (size_t h = 0; h < src.morphisms.size(); ++h) {
            int c = src.comp[g][h];
            if (c < 0) continue;
            if (f.on_morphisms[c] != tgt.comp[f.on_morphisms[g]][f.on_morphisms[h]])
                return Report::failure("functor does not preserve composition");
        }
    return Report::success();
}

Functor compose(const Functor &g, const Functor &f) {
    Functor h;
    for (int o : f.on_objects) h.on_objects.push_back(g.on_objects[o]);
    for (int m : f.on_morphisms) h.on_morphisms.push_back(g.on_morphisms[m]);
    return h;
}

Report validate(const CategoryValuedFunctor &F) {
    Report r = F.base.validate();
    if (!r.ok) return r;
    if (F.fibres.size() != F.base.objects.size() || F.pullbacks.size() != F.base.morphisms.size())
        return Report::failure("functor tables have wrong size");
    for (const auto &fib : F.fibres) {
        r = fib.validate();
        if (!r.ok) return r;
    }
    for (size_t u = 0; u < F.base.morphisms.size(); ++u) {
        const auto &m = F.base.morphisms[u];
        r = validate_functor(F.fibres[m.tgt], F.fibres[m.src], F.pullbacks[u]);
        if (!r.ok) return r;
    }
    for (size_t o = 0; o < F.base.objects.size(); ++o) {
        const Functor &e = F.pullbacks[F.base.identity[o]];
        for (size_t a = 0; a < F.fibres[o].objects.size(); ++a)
            if (e.on_objects[a] != static_cast<int>(a)) return Report::failure("identity is not sent to the identity");
        for (size_t a = 0; a < F.fibres[o].morphisms.size(); ++a)
            if (e.on_morphisms[a] != static_cast<int>(a)) return Report::failure("identity is not sent to the identity");
    }
    for (size_t v = 0; v < F.base.morphisms.size(); ++v)
        for (size_t u = 0; u < F.base.morphisms.size(); ++u) {
            int vu = F.base.comp[v][u];
            if (vu < 0) continue;
            Functor lhs = compose(F.pullbacks[u], F.pullbacks[v]);
            if (lhs.on_objects != F.pullbacks[vu].on_objects || lhs.on_morphisms != F.pullbacks[vu].on_morphisms)
                return Report::failure("F(v∘u) differs from F(u)∘F(v)");
        }
    return Report::success();
}

bool is_isomorphism(const FiniteCategory &c, int m) {
    const auto &mm = c.morphisms[m];
    for (int g : c.hom(mm.tgt, mm.src))
        if (c.comp[g][m] == c.identity[mm.src] && c.comp[m][g] == c.identity[mm.tgt]) return true;
    return false;
}

Grothendieck grothendieck(const CategoryValuedFunctor &F) {
    Report r = validate(F);
    if (!r.ok) throw InvalidInput("invalid category-valued functor: " + r.message);
    Grothendieck G;
    auto &T = G.total;
    std::map<std::pair<int, int>, int> obj;
    for (size_t c = 0; c < F.base.objects.size(); ++c)
        for (size_t a = 0; a < F.fibres[c].objects.size(); ++a) {
            obj[{static_cast<int>(c), static_cast<int>(a)}] = static_cast<int>(T.objects.size());
            T.objects.push_back(F.base.objects[c] + "/" + F.fibres[c].objects[a]);
            G.object_pairs.push_back({static_cast<int>(c), static_cast<int>(a)});
            G.projection.on_objects.push_back(static_cast<int>(c));
        }
    T.identity.assign(T.objects.size(), -1);
    // morphism (u, φ) from (c, a) to (c', a'): u: c -> c', φ: a -> F(u)(a') in F(c)
    std::vector<std::pair<int, int>> parts;
    std::map<std::tuple<int, int, int>, int> mor;
    for (size_t u = 0; u < F.base.morphisms.size(); ++u) {
        int c = F.base.morphisms[u].src, c2 = F.base.morphisms[u].tgt;
        const Functor &Fu = F.pullbacks[u];
        const auto &fib = F.fibres[c];
        for (size_t a2 = 0; a2 < F.fibres[c2].objects.size(); ++a2) {
            int target_in_fibre = Fu.on_objects[a2];
            for (size_t phi = 0; phi < fib.morphisms.size(); ++phi) {
                if (fib.morphisms[phi].tgt != target_in_fibre) continue;
                int a = fib.morphisms[phi].src;
                int m = static_cast<int>(T.morphisms.size());
                int s = obj[{c, a}], t = obj[{c2, static_cast<int>(a2)}];
                bool ident = F.base.is_identity(static_cast<int>(u)) && fib.is_identity(static_cast<int>(phi));
                std::string nm = ident ? "id(" + T.objects[s] + ")"
                                       : "(" + F.base.morphisms[u].name + "," + fib.morphisms[phi].name + ")";
                T.morphisms.push_back({nm, s, t});
                parts.push_back({static_cast<int>(u), static_cast<int>(phi)});
                mor[{static_cast<int>(u), static_cast<int>(phi), static_cast<int>(a2)}] = m;
                if (ident) T.identity[s] = m;
                G.projection.on_morphisms.push_back(static_cast<int>(u));
                G.cartesian.push_back(is_isomorphism(fib, static_cast<int>(phi)));
            }
        }
    }
    int k = static_cast<int>(T.morphisms.size());
    T.comp.assign(k, std::vector<int>(k, -1));
    for (int g = 0; g < k; ++g)
        for (int f = 0; f < k; ++f) {
            if (T.morphisms[f].tgt != T.morphisms[g].src) continue;
            auto [u, phi] = parts[f];
            auto [v, psi] = parts[g];
            int vu = F.base.comp[v][u];
            int c = F.base.morphisms[u].src;
            int psi_pulled = F.pullbacks[u].on_morphisms[psi];
            int chi = F.fibres[c].comp[psi_pulled][phi];
            int a3 = G.object_pairs[T.morphisms[g].tgt].second;
            T.comp[g][f] = mor.at({vu, chi, a3});
        }
    r = T.validate();
    if (!r.ok) throw Error("grothendieck construction produced an invalid category: " + r.message);
    return G;
}

}  // namespace sset
