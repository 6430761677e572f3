#include "sset/straighten.hpp"

#include <algorithm>
#include <numeric>

#include "sset/iso.hpp"

namespace sset {

namespace {

// z = s_j y with j a repeat position of z: returns y.
Simplex strip(const Simplex &z, int j) {
    Mono eta = delta::surjection(z.word, z.cell.dim);
    eta.erase(eta.begin() + j);
    return Simplex{delta::word_of(eta), z.cell};
}

std::optional<int> common_repeat(const Simplex &a, const Simplex &b) {
    for (int j : a.word)
        if (std::find(b.word.begin(), b.word.end(), j) != b.word.end()) return j;
    return std::nullopt;
}

struct UnionFind {
    std::vector<int> parent;
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool marked_or_degenerate(const MarkedSimplicialSet &x, const Simplex &e) {
    return e.degenerate() || x.marked.count(e.cell.index);
}

}  // namespace

// ---- path categories -------------------------------------------------------

PathCategory::PathCategory(SSetPtr base, MappingOptions opts) : base_(std::move(base)), opts_(opts) {}

const MappingComplex &PathCategory::hom(int a, int b) const {
    auto &slot = homs_[{a, b}];
    if (!slot) slot = std::make_shared<MappingComplex>(mapping_complex(base_, a, b, opts_));
    return *slot;
}

Simplex PathCategory::compose(int a, int b, int c, const Simplex &x, const Simplex &y) const {
    return sset::compose(hom(b, c), hom(a, b), hom(a, c), x, y);
}

Simplex PathCategory::identity(int a, int k) const { return hom(a, a).simplex(identity_necklace(*base_, a, k)); }

Simplex PathFunctor::on_hom(int a, int b, const Simplex &sigma) const {
    return tgt->hom(on_object(a), on_object(b)).simplex(push_forward(map, src->hom(a, b).necklace(sigma)));
}

// ---- simplicial functors ---------------------------------------------------

Report SimplicialFunctor::validate(int max_dim) const {
    const auto &C = *domain;
    int n = C.objects();
    if (static_cast<int>(values.size()) != n) return Report::failure("one value per object is required");
    for (const auto &v : values)
        if (auto r = sset::validate(v); !r.ok) return r;
    int top = std::min(max_dim, bound());
    for (int k = 0; k <= top; ++k) {
        for (int a = 0; a < n; ++a)
            for (const auto &g : values[a].space->all_simplices(k))
                if (act(a, a, C.identity(a, k), g) != g) return Report::failure("identities do not act trivially");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                auto sigmas = C.hom(a, b).space->all_simplices(k);
                auto gs = values[b].space->all_simplices(k);
                for (const auto &s : sigmas)
                    for (const auto &g : gs) {
                        Simplex r = act(a, b, s, g);
                        for (int l = 0; l <= k && k > 0; ++l) {
                            Simplex lhs = values[a].space->face(r, l);
                            Simplex rhs = act(a, b, C.hom(a, b).space->face(s, l), values[b].space->face(g, l));
                            if (lhs != rhs) return Report::failure("the action does not commute with faces");
                        }
                    }
                for (int c = 0; c < n; ++c) {
                    auto ts = C.hom(b, c).space->all_simplices(k);
                    auto hs = values[c].space->all_simplices(k);
                    for (const auto &s : sigmas)
                        for (const auto &t : ts) {
                            Simplex ts_ = C.compose(a, b, c, t, s);
                            for (const auto &h : hs)
                                if (act(a, b, s, act(b, c, t, h)) != act(a, c, ts_, h))
                                    return Report::failure("the action is not associative");
                        }
                }
            }
    }
    return Report::success();
}

void close_markings(SimplicialFunctor &g) {
    const auto &C = *g.domain;
    if (g.bound() < 1) return;
    int n = C.objects();
    for (bool changed = true; changed;) {
        changed = false;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const auto &hom = *C.hom(a, b).space;
                if (hom.empty()) continue;
                auto sigmas = hom.all_simplices(1);
                for (const auto &e : g.values[b].space->all_simplices(1)) {
                    if (!marked_or_degenerate(g.values[b], e)) continue;
                    for (const auto &s : sigmas) {
                        Simplex r = g.act(a, b, s, e);
                        if (!r.degenerate() && g.values[a].marked.insert(r.cell.index).second) changed = true;
                    }
                }
            }
    }
}

ActionTable action_table(const SimplicialFunctor &g) {
    ActionTable t;
    const auto &C = *g.domain;
    for (int a = 0; a < C.objects(); ++a)
        for (int b = 0; b < C.objects(); ++b)
            for (int k = 0; k <= g.bound(); ++k) {
                const auto &hom = *C.hom(a, b).space;
                if (hom.empty() || g.values[b].space->empty()) continue;
                auto gs = g.values[b].space->all_simplices(k);
                for (const auto &s : hom.all_simplices(k))
                    for (const auto &x : gs)
                        if (!common_repeat(s, x)) t[{a, b, s, x}] = g.act(a, b, s, x);
            }
    return t;
}

std::function<Simplex(int, int, const Simplex &, const Simplex &)> action_from_table(
    std::shared_ptr<const ActionTable> table, std::vector<SSetPtr> values) {
    auto fn = std::make_shared<std::function<Simplex(int, int, const Simplex &, const Simplex &)>>();
    std::weak_ptr<std::function<Simplex(int, int, const Simplex &, const Simplex &)>> self = fn;
    *fn = [table, values, self](int a, int b, const Simplex &s, const Simplex &x) -> Simplex {
        if (auto j = common_repeat(s, x)) return values[a]->degeneracy((*self.lock())(a, b, strip(s, *j), strip(x, *j)), *j);
        auto it = table->find({a, b, s, x});
        if (it == table->end()) throw Inconclusive("action entry outside the stored table");
        return it->second;
    };
    return [fn](int a, int b, const Simplex &s, const Simplex &x) { return (*fn)(a, b, s, x); };
}

SimplicialFunctor constant_functor(const PathPtr &base, const MarkedSimplicialSet &value) {
    SimplicialFunctor g;
    g.domain = base;
    g.values.assign(base->objects(), value);
    g.act = [](int, int, const Simplex &, const Simplex &x) { return x; };
    return g;
}

SimplicialFunctor representable(const PathPtr &base, int s) {
    SimplicialFunctor g;
    g.domain = base;
    for (int a = 0; a < base->objects(); ++a) g.values.push_back(MarkedSimplicialSet::flat(base->hom(a, s).space));
    g.act = [base, s](int a, int b, const Simplex &sigma, const Simplex &x) { return base->compose(a, b, s, x, sigma); };
    return g;
}

// ---- cone base and straightening -------------------------------------------

ConeBase cone_base(const SimplicialMap &p) {
    ConeBase c;
    c.p = p;
    c.cone = cone(p.dom);
    c.pushout = pushout(p, c.cone.left);
    c.space = c.pushout.space;
    c.i = c.pushout.first;
    c.q = c.pushout.second;
    c.star = c.q.image(c.cone.right.image({0, 0}).cell).cell.index;
    return c;
}

SimplicialMap cone_map(const Join &cx, const Join &cy, const SimplicialMap &f) {
    const Simplex star = cell_simplex({0, 0});
    SimplicialMap m{cx.space, cy.space, {}};
    m.images.resize(cx.space->top() + 1);
    for (int d = 0; d <= cx.space->top(); ++d) m.images[d].resize(cx.space->count(d));
    auto put = [&](const Simplex &from, const Simplex &to) { m.images[from.cell.dim][from.cell.index] = to; };
    put(cx.join(std::nullopt, star), cy.join(std::nullopt, star));
    const auto &X = *f.dom;
    for (int d = 0; d <= X.top(); ++d)
        for (int i = 0; i < X.count(d); ++i) {
            Simplex a = cell_simplex({d, i});
            put(cx.join(a, std::nullopt), cy.join(f(a), std::nullopt));
            if (d + 1 <= cx.space->top()) put(cx.join(a, star), cy.join(f(a), star));
        }
    return m;
}

namespace {

Straightening straighten_impl(const SimplicialMap &p, const PathPtr &base) {
    if (p.cod != base->base() && !same_structure(*p.cod, *base->base()))
        throw InvalidInput("the map does not land in the base of the path category");
    Straightening st;
    st.cone = cone_base(p);
    auto sp = st.cone.space;
    for (int s = 0; s < base->objects(); ++s) {
        st.complexes.push_back(std::make_shared<MappingComplex>(
            mapping_complex(sp, st.cone.i.image({0, s}).cell.index, st.cone.star, base->options())));
        st.functor.values.push_back(MarkedSimplicialSet::flat(st.complexes.back()->space));
    }
    st.functor.domain = base;
    auto complexes = st.complexes;
    auto i = st.cone.i;
    st.functor.act = [base, complexes, i, sp](int a, int b, const Simplex &sigma, const Simplex &g) {
        FlaggedNecklace y = push_forward(i, base->hom(a, b).necklace(sigma));
        FlaggedNecklace x = complexes[b]->necklace(g);
        return complexes[a]->simplex(compose(*sp, x, y));
    };
    return st;
}

}  // namespace

Straightening straighten(const SimplicialMap &p, const PathPtr &base) { return straighten_impl(p, base); }

Straightening straighten_marked(const SimplicialMap &p, const std::set<int> &marked, const PathPtr &base) {
    Straightening st = straighten_impl(p, base);
    const Simplex star = cell_simplex({0, 0});
    const auto &X = *p.dom;
    for (int e : marked) {
        if (e < 0 || e >= X.count(1)) throw InvalidInput("marked edge out of range");
        Simplex bead = st.cone.q(st.cone.cone.join(cell_simplex({1, e}), star));
        int s = p(X.faces({1, e})[1]).cell.index;
        Simplex r = st.complexes[s]->simplex(FlaggedNecklace{{bead}, {0b101, 0b111}});
        if (!r.degenerate()) st.functor.values[s].marked.insert(r.cell.index);
    }
    close_markings(st.functor);
    return st;
}

std::vector<SimplicialMap> straighten_map(const Straightening &a, const Straightening &b, const SimplicialMap &f) {
    auto cm = cone_map(a.cone.cone, b.cone.cone, f);
    auto base_map = descend(a.cone.pushout.colim, a.cone.pushout.diagram, {b.cone.i, compose(b.cone.q, cm)},
                            b.cone.space);
    std::vector<SimplicialMap> out;
    for (size_t s = 0; s < a.complexes.size(); ++s) out.push_back(induced_map(*a.complexes[s], *b.complexes[s], base_map));
    return out;
}

// ---- left Kan extension ----------------------------------------------------

namespace {

using Triple = std::tuple<int, Simplex, Simplex>;  // (c, τ ∈ 𝔠(T)(d,fc), g ∈ G(c))

struct KanValue {
    std::vector<std::vector<Triple>> triples;                    // per dimension
    std::vector<std::map<Triple, int>> class_of;
    std::vector<std::vector<int>> rep;                           // least triple per class
    std::shared_ptr<Built<std::pair<int, int>>> built;
};

}  // namespace

KanExtension kan_extend(const PathFunctor &f, const SimplicialFunctor &g) {
    const auto &S = *f.src;
    const auto &T = *f.tgt;
    if (g.domain != f.src) throw InvalidInput("the functor is not defined on the source of the Kan extension");
    const int D = T.bound();
    int ns = S.objects(), nt = T.objects();

    bool input_truncated = false;
    for (int c = 0; c < ns; ++c) {
        if (g.values[c].space->truncated()) input_truncated = true;
        for (int d = 0; d < nt; ++d)
            if (T.hom(d, f.on_object(c)).space->truncated()) input_truncated = true;
        for (int c2 = 0; c2 < ns; ++c2)
            if (S.hom(c2, c).space->truncated()) input_truncated = true;
    }
    int levels = input_truncated ? D : D + 1;

    auto values = std::make_shared<std::vector<KanValue>>(nt);
    KanExtension out;
    out.functor.domain = f.tgt;
    out.reps.resize(nt);
    for (int d = 0; d < nt; ++d) {
        auto &kv = (*values)[d];
        kv.triples.resize(levels + 1);
        kv.class_of.resize(levels + 1);
        kv.rep.resize(levels + 1);
        auto name = [&](const Triple &t) {
            const auto &[c, tau, x] = t;
            return S.base()->name({0, c}) + ":" + T.hom(d, f.on_object(c)).space->render(tau) + "|" +
                   g.values[c].space->render(x);
        };
        for (int k = 0; k <= levels; ++k) {
            auto &ts = kv.triples[k];
            for (int c = 0; c < ns; ++c) {
                const auto &hom = *T.hom(d, f.on_object(c)).space;
                if (hom.empty() || g.values[c].space->empty()) continue;
                auto xs = g.values[c].space->all_simplices(k);
                for (const auto &tau : hom.all_simplices(k))
                    for (const auto &x : xs) ts.push_back({c, tau, x});
            }
            std::vector<std::string> names;
            for (const auto &t : ts) names.push_back(name(t));
            std::vector<int> order(ts.size());
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) { return names[a] < names[b]; });
            std::vector<Triple> sorted;
            for (int o : order) sorted.push_back(ts[o]);
            ts = std::move(sorted);
            std::map<Triple, int> index;
            for (int x = 0; x < static_cast<int>(ts.size()); ++x) index[ts[x]] = x;
            UnionFind uf;
            uf.parent.resize(ts.size());
            std::iota(uf.parent.begin(), uf.parent.end(), 0);
            for (int c2 = 0; c2 < ns; ++c2)
                for (int c = 0; c < ns; ++c) {
                    const auto &shom = *S.hom(c2, c).space;
                    const auto &thom = *T.hom(d, f.on_object(c2)).space;
                    if (shom.empty() || thom.empty() || g.values[c].space->empty()) continue;
                    auto taus = thom.all_simplices(k);
                    auto xs = g.values[c].space->all_simplices(k);
                    for (const auto &sigma : shom.all_simplices(k)) {
                        Simplex fs = f.on_hom(c2, c, sigma);
                        for (const auto &x : xs) {
                            Simplex moved = g.act(c2, c, sigma, x);
                            for (const auto &tau : taus) {
                                Simplex comp = T.compose(d, f.on_object(c2), f.on_object(c), fs, tau);
                                uf.unite(index.at({c2, tau, moved}), index.at({c, comp, x}));
                            }
                        }
                    }
                }
            std::map<int, int> id;
            for (int x = 0; x < static_cast<int>(ts.size()); ++x) {
                auto [it, fresh] = id.insert({uf.find(x), static_cast<int>(kv.rep[k].size())});
                if (fresh) kv.rep[k].push_back(x);
                kv.class_of[k][ts[x]] = it->second;
            }
        }
        auto rep = [&kv](int k, int x) { return kv.triples[k][kv.rep[k][x]]; };
        auto cls = [&kv](int k, const Triple &t) { return kv.class_of[k].at(t); };
        using Key = std::pair<int, int>;
        OperatorData<Key> data;
        data.simplices = [&kv](int k) {
            std::vector<Key> o;
            for (int x = 0; x < static_cast<int>(kv.rep[k].size()); ++x) o.push_back({k, x});
            return o;
        };
        data.face = [&](const Key &z, int l) {
            auto [c, tau, x] = rep(z.first, z.second);
            const auto &hom = *T.hom(d, f.on_object(c)).space;
            return Key{z.first - 1, cls(z.first - 1, {c, hom.face(tau, l), g.values[c].space->face(x, l)})};
        };
        data.degeneracy = [&](const Key &z, int j) {
            auto [c, tau, x] = rep(z.first, z.second);
            const auto &hom = *T.hom(d, f.on_object(c)).space;
            return Key{z.first + 1, cls(z.first + 1, {c, hom.degeneracy(tau, j), g.values[c].space->degeneracy(x, j)})};
        };
        data.name = [&](const Key &z) { return name(rep(z.first, z.second)); };
        bool truncated = input_truncated;
        if (!truncated)
            for (int x = 0; x < static_cast<int>(kv.rep[D + 1].size()) && !truncated; ++x) {
                bool degenerate = false;
                for (int j = 0; j <= D && !degenerate; ++j) degenerate = data.degeneracy(data.face({D + 1, x}, j), j) == Key{D + 1, x};
                truncated = !degenerate;
            }
        // degeneracies into level D + 1 are not needed below the bound
        kv.built = std::make_shared<Built<Key>>(build_from_operators(data, D, truncated));
        MarkedSimplicialSet value{kv.built->space, {}};
        for (const auto &t : D >= 1 ? kv.triples[1] : std::vector<Triple>{}) {
            const auto &[c, tau, x] = t;
            if (!marked_or_degenerate(g.values[c], x)) continue;
            Simplex z = kv.built->normal_form[1].at({1, kv.class_of[1].at(t)});
            if (!z.degenerate()) value.marked.insert(z.cell.index);
        }
        out.functor.values.push_back(std::move(value));
        out.reps[d].resize(kv.built->space->top() + 1);
        for (int k = 0; k <= kv.built->space->top(); ++k)
            for (const auto &key : kv.built->keys[k]) out.reps[d][k].push_back(rep(key.first, key.second));
    }
    auto tgt = f.tgt;
    auto fo = std::make_shared<PathFunctor>(f);
    out.functor.act = [values, tgt, fo](int d2, int d, const Simplex &rho, const Simplex &z) {
        const auto &kv = (*values)[d];
        auto [c, tau, x] = kv.triples[z.cell.dim][kv.rep[z.cell.dim][kv.built->keys[z.cell.dim][z.cell.index].second]];
        tau = degenerate(tau, z.word);
        x = degenerate(x, z.word);
        Simplex moved = tgt->compose(d2, d, fo->on_object(c), tau, rho);
        const auto &kv2 = (*values)[d2];
        int k = z.dim();
        return kv2.built->normal_form[k].at({k, kv2.class_of[k].at({c, moved, x})});
    };
    return out;
}

SimplicialFunctor restrict(const SimplicialFunctor &g, const PathFunctor &f) {
    if (g.domain != f.tgt) throw InvalidInput("the functor is not defined on the target of the restriction");
    SimplicialFunctor r;
    r.domain = f.src;
    for (int a = 0; a < f.src->objects(); ++a) r.values.push_back(g.values[f.on_object(a)]);
    auto fo = std::make_shared<PathFunctor>(f);
    auto act = g.act;
    r.act = [fo, act](int a, int b, const Simplex &sigma, const Simplex &x) {
        return act(fo->on_object(a), fo->on_object(b), fo->on_hom(a, b, sigma), x);
    };
    return r;
}

// ---- unstraightening -------------------------------------------------------

namespace {

// Str(id_{Δ^n}) as necklace complexes 𝔠(Δ^{n+1})(i, n+1).
struct StrSimplex {
    int n = 0;
    SSetPtr delta;
    std::vector<std::shared_ptr<MappingComplex>> str;
    std::vector<std::pair<int, CellId>> cells;  // ordered by dimension
    std::map<std::pair<int, CellId>, int> pos;
    std::vector<bool> single;                   // single-bead cells are the free generators
    int distinguished = -1;                     // n = 1: the edge 012 with flag {0,2} ⊂ {0,1,2}
};

StrSimplex str_simplex(int n) {
    StrSimplex s;
    s.n = n;
    s.delta = simplex(n + 1);
    for (int i = 0; i <= n; ++i) s.str.push_back(std::make_shared<MappingComplex>(mapping_complex(s.delta, i, n + 1, {n, -1, false})));
    for (int k = 0; k <= n; ++k)
        for (int i = 0; i <= n; ++i)
            for (int c = 0; c < s.str[i]->space->count(k); ++c) {
                s.pos[{i, {k, c}}] = static_cast<int>(s.cells.size());
                s.cells.push_back({i, {k, c}});
                s.single.push_back(s.str[i]->cells[k][c].beads.size() == 1);
            }
    if (n == 1) {
        Simplex e = s.str[0]->simplex(FlaggedNecklace{{cell_simplex({2, 0})}, {0b101, 0b111}});
        s.distinguished = s.pos.at({0, e.cell});
    }
    return s;
}

struct UnKey {
    Simplex z;
    std::vector<Simplex> vals;
    auto operator<=>(const UnKey &) const = default;
};

class Unstraightener {
  public:
    Unstraightener(const SimplicialFunctor &g, int bound) : g_(g), S_(*g.domain->base()) {
        for (int n = 0; n <= bound; ++n) levels_.push_back(str_simplex(n));
    }

    const StrSimplex &level(int n) const { return levels_[n]; }

    std::vector<UnKey> keys(int n) {
        std::vector<UnKey> out;
        for (const auto &z : S_.all_simplices(n)) enumerate(n, z, out);
        return out;
    }

    UnKey apply(const UnKey &k, int n, const Mono &theta) {
        int m = static_cast<int>(theta.size()) - 1;
        const auto &src = levels_[m];
        const auto &tgt = levels_[n];
        std::vector<int> vm(theta.begin(), theta.end());
        vm.push_back(n + 1);
        auto psi = map_by_vertices(src.delta, tgt.delta, vm);
        UnKey out{S_.apply(k.z, theta), {}};
        for (const auto &[i, c] : src.cells) {
            Simplex x = tgt.str[theta[i]]->simplex(push_forward(psi, src.str[i]->cells[c.dim][c.index]));
            out.vals.push_back(eval(tgt, k.vals, theta[i], x));
        }
        return out;
    }

    std::string name(int n, const UnKey &k) const {
        std::string s = S_.render(k.z) + ":";
        const auto &lv = levels_[n];
        auto verts = S_.vertices(k.z);
        bool first = true;
        for (size_t p = 0; p < lv.cells.size(); ++p)
            if (lv.single[p]) {
                s += (first ? "" : ",") + g_.values[verts[lv.cells[p].first]].space->render(k.vals[p]);
                first = false;
            }
        return s;
    }

    bool marked(const UnKey &k) const {
        const auto &lv = levels_[1];
        int v = S_.vertices(k.z)[0];
        return marked_or_degenerate(g_.values[v], k.vals[lv.distinguished]);
    }

  private:
    const SimplicialFunctor &g_;
    const SimplicialSet &S_;
    std::vector<StrSimplex> levels_;

    static Simplex eval(const StrSimplex &lv, const std::vector<Simplex> &vals, int i, const Simplex &x) {
        return degenerate(vals[lv.pos.at({i, x.cell})], x.word);
    }

    // value of a multi-bead cell from its last bead and the front necklace
    Simplex derived(const StrSimplex &lv, const Simplex &z, const std::vector<Simplex> &vals, int i, CellId c) {
        const auto &nk = lv.str[i]->cells[c.dim][c.index];
        const Simplex &last = nk.beads.back();
        int v = nk.vertex_count();
        int off = v - (last.dim() + 1);
        FlaggedNecklace front, tail;
        front.beads.assign(nk.beads.begin(), nk.beads.end() - 1);
        tail.beads.push_back(last);
        VertexMask low = (VertexMask{2} << off) - 1;
        for (auto t : nk.flag) {
            front.flag.push_back(t & low);
            tail.flag.push_back(t >> off);
        }
        int j = lv.delta->cell_vertices(last.cell).front();
        Simplex y = lv.str[j]->simplex(tail);
        FlaggedNecklace pushed{{}, front.flag};
        for (const auto &b : front.beads) pushed.beads.push_back(S_.apply(z, lv.delta->cell_vertices(b.cell)));
        auto verts = S_.vertices(z);
        int a = verts[i], b = verts[j];
        Simplex phi = g_.domain->hom(a, b).simplex(normalize(S_, pushed));
        return g_.act(a, b, phi, eval(lv, vals, j, y));
    }

    void fill_derived(const StrSimplex &lv, const Simplex &z, std::vector<Simplex> &vals, int k) {
        for (size_t p = 0; p < lv.cells.size(); ++p)
            if (!lv.single[p] && lv.cells[p].second.dim == k)
                vals[p] = derived(lv, z, vals, lv.cells[p].first, lv.cells[p].second);
    }

    bool faces_agree(const StrSimplex &lv, const Simplex &z, const std::vector<Simplex> &vals, size_t p,
                     const Simplex &val) {
        auto [i, c] = lv.cells[p];
        const auto &value = *g_.values[S_.vertices(z)[i]].space;
        for (int l = 0; l <= c.dim && c.dim > 0; ++l) {
            Simplex f = lv.str[i]->space->face(cell_simplex(c), l);
            if (value.face(val, l) != eval(lv, vals, i, f)) return false;
        }
        return true;
    }

    void enumerate(int n, const Simplex &z, std::vector<UnKey> &out) {
        const auto &lv = levels_[n];
        auto verts = S_.vertices(z);
        std::vector<size_t> free;
        for (size_t p = 0; p < lv.cells.size(); ++p)
            if (lv.single[p]) free.push_back(p);
        std::vector<Simplex> vals(lv.cells.size());
        std::function<void(size_t, int)> go = [&](size_t idx, int done_dim) {
            int dim = idx < free.size() ? lv.cells[free[idx]].second.dim : n + 1;
            for (int k = done_dim + 1; k < dim; ++k) fill_derived(lv, z, vals, k);
            if (dim > done_dim + 1) done_dim = dim - 1;
            if (idx == free.size()) {
                for (size_t p = 0; p < lv.cells.size(); ++p)
                    if (!lv.single[p] && !faces_agree(lv, z, vals, p, vals[p])) return;
                out.push_back({z, vals});
                return;
            }
            size_t p = free[idx];
            auto [i, c] = lv.cells[p];
            const auto &value = g_.values[verts[i]].space;
            if (c.dim > value->top() && value->truncated()) throw Inconclusive("functor values are truncated below the bound");
            for (const auto &cand : value->all_simplices(c.dim)) {
                if (!faces_agree(lv, z, vals, p, cand)) continue;
                vals[p] = cand;
                go(idx + 1, done_dim);
            }
        };
        go(0, -1);
    }
};

}  // namespace

Unstraightening unstraighten(const SimplicialFunctor &g, int bound) {
    if (bound > g.bound()) throw InvalidInput("unstraightening bound exceeds the functor's bound");
    Unstraightener un(g, bound);
    using Key = std::pair<int, UnKey>;
    OperatorData<Key> data;
    data.simplices = [&](int n) {
        std::vector<Key> out;
        for (auto &k : un.keys(n)) out.push_back({n, std::move(k)});
        return out;
    };
    data.face = [&](const Key &k, int l) { return Key{k.first - 1, un.apply(k.second, k.first, delta::face_map(k.first, l))}; };
    data.degeneracy = [&](const Key &k, int j) {
        return Key{k.first + 1, un.apply(k.second, k.first, delta::degeneracy_map(k.first, j))};
    };
    data.name = [&](const Key &k) { return un.name(k.first, k.second); };
    auto built = build_from_operators(data, bound, true);
    Unstraightening out;
    out.space.space = built.space;
    if (bound >= 1)
        for (int e = 0; e < built.space->count(1); ++e)
            if (un.marked(built.keys[1][e].second)) out.space.marked.insert(e);
    out.projection = SimplicialMap{built.space, g.domain->base(), {}};
    out.projection.images.resize(built.space->top() + 1);
    for (int n = 0; n <= built.space->top(); ++n)
        for (const auto &k : built.keys[n]) out.projection.images[n].push_back(k.second.z);
    return out;
}

// ---- attaching an edge -----------------------------------------------------

EdgeExtension attach_edge(const SSetPtr &s, int vertex) {
    auto pt = simplex(0);
    SimplicialMap at{pt, s, {{cell_simplex({0, vertex})}}};
    auto po = pushout(at, map_by_vertices(pt, simplex(1), {0}));
    return {po.space, po.first, po.second.image({0, 1}).cell.index};
}

SimplicialMap postcompose_edge(const MappingComplex &src, const MappingComplex &tgt, const EdgeExtension &e) {
    const auto &T = *e.space;
    Simplex edge;
    bool found = false;
    for (int i = 0; i < T.count(1) && !found; ++i)
        if (T.cell_vertices({1, i}).back() == e.end) edge = cell_simplex({1, i}), found = true;
    if (!found) throw Error("attached edge not found");
    SimplicialMap m{src.space, tgt.space, {}};
    m.images.resize(src.space->top() + 1);
    for (int k = 0; k <= src.space->top(); ++k)
        for (const auto &nk : src.cells[k]) {
            FlaggedNecklace tail{{edge}, std::vector<VertexMask>(k + 1, 0b11)};
            m.images[k].push_back(tgt.simplex(compose(T, tail, push_forward(e.inclusion, nk))));
        }
    return m;
}

// ---- colimit and base-change checks ---------------------------------------

namespace {

std::set<Simplex> marked_images(const SimplicialMap &f, const MarkedSimplicialSet &x) {
    std::set<Simplex> out;
    for (int e : x.marked) {
        Simplex z = f.image({1, e});
        if (!z.degenerate()) out.insert(z);
    }
    return out;
}

std::set<Simplex> marked_cells(const MarkedSimplicialSet &x) {
    std::set<Simplex> out;
    for (int e : x.marked) out.insert(cell_simplex({1, e}));
    return out;
}

}  // namespace

Report check_base_change(const SimplicialMap &p, const SimplicialMap &pp, const std::set<int> &marked,
                         const MappingOptions &opts) {
    auto sc = std::make_shared<const PathCategory>(p.cod, opts);
    auto xc = std::make_shared<const PathCategory>(p.dom, opts);
    auto whole = straighten_marked(compose(p, pp), marked, sc);
    auto part = straighten_marked(pp, marked, xc);
    auto ext = kan_extend(PathFunctor{xc, sc, p}, part.functor);
    // X_{p'} -> S_{pp'}: p on X, the identity on the cone of Y
    SimplicialMap cone_leg{part.cone.cone.space, whole.cone.space, whole.cone.q.images};
    auto base_map = descend(part.cone.pushout.colim, part.cone.pushout.diagram, {compose(whole.cone.i, p), cone_leg},
                            whole.cone.space);
    const auto &Sp = *whole.cone.space;
    for (int s = 0; s < sc->objects(); ++s) {
        const auto &value = ext.functor.values[s];
        SimplicialMap m{value.space, whole.complexes[s]->space, {}};
        m.images.resize(value.space->top() + 1);
        for (int k = 0; k <= value.space->top(); ++k)
            for (const auto &[c, tau, g] : ext.reps[s][k]) {
                FlaggedNecklace head = push_forward(base_map, part.complexes[c]->necklace(g));
                FlaggedNecklace tail = push_forward(whole.cone.i, sc->hom(s, p.images[0][c].cell.index).necklace(tau));
                m.images[k].push_back(whole.complexes[s]->simplex(compose(Sp, head, tail)));
            }
        std::string where = " at " + p.cod->name({0, s});
        if (auto r = is_isomorphism(m); !r.ok) return Report::failure("comparison is not an isomorphism" + where + ": " + r.message);
        if (marked_images(m, value) != marked_cells(whole.functor.values[s]))
            return Report::failure("markings differ" + where);
    }
    return Report::success();
}

Report check_pushout(const SimplicialMap &f, const SimplicialMap &g, const SimplicialMap &p0, const SimplicialMap &p1,
                     const std::set<int> &marked0, const std::set<int> &marked1, const PathPtr &base) {
    auto P = pushout(f, g);
    auto pp = descend(P.colim, P.diagram, {p0, p1}, p0.cod);
    std::set<int> marked;
    for (int e : marked0)
        if (Simplex z = P.first.image({1, e}); !z.degenerate()) marked.insert(z.cell.index);
    for (int e : marked1)
        if (Simplex z = P.second.image({1, e}); !z.degenerate()) marked.insert(z.cell.index);
    auto sa = straighten_marked(compose(p0, f), {}, base);
    auto s0 = straighten_marked(p0, marked0, base);
    auto s1 = straighten_marked(p1, marked1, base);
    auto sp = straighten_marked(pp, marked, base);
    auto sf = straighten_map(sa, s0, f);
    auto sg = straighten_map(sa, s1, g);
    auto i0 = straighten_map(s0, sp, P.first);
    auto i1 = straighten_map(s1, sp, P.second);
    for (int s = 0; s < base->objects(); ++s) {
        std::string where = " at " + base->base()->name({0, s});
        auto q = pushout(sf[s], sg[s]);
        auto m = descend(q.colim, q.diagram, {i0[s], i1[s]}, sp.complexes[s]->space);
        if (auto r = is_isomorphism(m); !r.ok) return Report::failure("comparison is not an isomorphism" + where + ": " + r.message);
        std::set<Simplex> images;
        for (auto z : marked_images(q.first, s0.functor.values[s])) images.insert(m(z));
        for (auto z : marked_images(q.second, s1.functor.values[s])) images.insert(m(z));
        if (images != marked_cells(sp.functor.values[s])) return Report::failure("markings differ" + where);
    }
    return Report::success();
}

}  // namespace sset
