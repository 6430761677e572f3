#include "sset/homspace.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "sset/iso.hpp"
#include "sset/lifting.hpp"

namespace sset {

namespace {

int top_bit(int mask) { return 31 - std::countl_zero(static_cast<unsigned>(mask)); }

SubsetChain truncate_at(const SubsetChain &c, int i) {
    SubsetChain out(c);
    int keep = ~((1 << i) - 1);
    for (auto &t : out) t &= keep;
    return out;
}

SubsetChain canonical(const SubsetChain &c) { return truncate_at(c, top_bit(c.front())); }

void check_chain(const SubsetChain &c, int n) {
    if (c.empty()) throw InvalidInput("empty subset chain");
    for (size_t j = 0; j < c.size(); ++j) {
        if (c[j] <= 0 || c[j] >= (1 << (n + 1))) throw InvalidInput("subset outside [n]");
        if (j && (c[j - 1] & ~c[j])) throw InvalidInput("subset chain is not increasing");
    }
}

std::vector<int> elements(int mask) {
    std::vector<int> out;
    for (int v = 0; mask >> v; ++v)
        if (mask >> v & 1) out.push_back(v);
    return out;
}

SubsetChain face_chain(const SubsetChain &c, int i) {
    SubsetChain out(c);
    out.erase(out.begin() + i);
    return out;
}

SubsetChain degeneracy_chain(const SubsetChain &c, int j) {
    SubsetChain out(c);
    out.insert(out.begin() + j, c[j]);
    return out;
}

// ---- Q^n as necklaces of I^n --------------------------------------------

QComplex q_necklace(int n, int bound) {
    if (n + 1 >= 10) throw InvalidInput("Q^n supports n < 9");
    auto d = simplex(n + 1);
    std::string front;
    for (int v = 0; v <= n; ++v) front += std::to_string(v);
    auto quo = quotient(d, {{d->at(n, front)}});
    auto in = quo.space;
    // I^n cell <-> its vertex set A ∪ {n+1} in Δ^{n+1}
    std::map<CellId, int> lift;
    std::map<int, CellId> cell_of;
    for (int m = 1; m <= d->top(); ++m)
        for (int i = 0; i < d->count(m); ++i) {
            const auto &vs = d->cell_vertices({m, i});
            if (vs.back() != n + 1) continue;
            Simplex z = quo.projection.image({m, i});
            int a = 0;
            for (int v : vs)
                if (v != n + 1) a |= 1 << v;
            lift[z.cell] = a;
            cell_of[a] = z.cell;
        }
    auto mc = std::make_shared<MappingComplex>(
        mapping_complex(in, quo.points[0].index, in->at(0, std::to_string(n + 1)).index, {bound, -1, false}));

    QComplex q;
    q.n = n;
    q.bound = bound;
    q.method = QMethod::necklace;
    q.space = mc->space;
    q.reps.resize(q.space->top() + 1);
    for (int k = 0; k <= q.space->top(); ++k)
        for (const auto &nk : mc->cells[k]) {
            if (nk.beads.size() != 1) throw Error("Q^n necklace with several beads");
            auto a = elements(lift.at(nk.beads[0].cell));
            SubsetChain c;
            for (VertexMask u : nk.flag) {
                int t = 0;
                for (size_t p = 0; p < a.size(); ++p)
                    if (u >> p & 1) t |= 1 << a[p];
                c.push_back(t);
            }
            q.reps[k].push_back(c);
        }
    q.locate = [n, mc, cell_of](const SubsetChain &chain) {
        check_chain(chain, n);
        SubsetChain c = canonical(chain);
        auto a = elements(c.back());
        FlaggedNecklace nk;
        nk.beads.push_back(cell_simplex(cell_of.at(c.back())));
        for (int t : c) {
            VertexMask u = VertexMask{1} << a.size();
            for (size_t p = 0; p < a.size(); ++p)
                if (t >> a[p] & 1) u |= VertexMask{1} << p;
            nk.flag.push_back(u);
        }
        return mc->simplex(nk);
    };
    return q;
}

// ---- Q^n as a quotient of subset chains ----------------------------------

struct UnionFind {
    std::vector<int> parent;
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

void chains_of_length(int n, int len, SubsetChain &cur, std::vector<SubsetChain> &out) {
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    int full = (1 << (n + 1)) - 1;
    int lo = cur.empty() ? 0 : cur.back();
    // supersets of lo
    int rest = full & ~lo;
    for (int sub = rest;; sub = (sub - 1) & rest) {
        int t = lo | sub;
        if (t) {
            cur.push_back(t);
            chains_of_length(n, len, cur, out);
            cur.pop_back();
        }
        if (!sub) break;
    }
}

QComplex q_chain_quotient(int n, int bound) {
    if (n + 1 >= 10) throw InvalidInput("Q^n supports n < 9");
    struct Level {
        std::vector<SubsetChain> chains;
        std::map<SubsetChain, int> class_of;
        std::vector<int> rep;  // least chain per class
    };
    auto levels = std::make_shared<std::vector<Level>>(bound + 2);
    for (int k = 0; k <= bound + 1; ++k) {
        auto &lv = (*levels)[k];
        SubsetChain cur;
        chains_of_length(n, k + 1, cur, lv.chains);
        std::sort(lv.chains.begin(), lv.chains.end(),
                  [](const auto &a, const auto &b) { return chain_name(a) < chain_name(b); });
        UnionFind uf;
        uf.parent.resize(lv.chains.size());
        std::iota(uf.parent.begin(), uf.parent.end(), 0);
        std::map<std::pair<int, SubsetChain>, int> seen;
        for (int x = 0; x < static_cast<int>(lv.chains.size()); ++x)
            for (int i : elements(lv.chains[x].front())) {
                auto [it, fresh] = seen.insert({{i, truncate_at(lv.chains[x], i)}, x});
                if (!fresh) uf.unite(x, it->second);
            }
        std::map<int, int> id;
        for (int x = 0; x < static_cast<int>(lv.chains.size()); ++x) {
            int r = uf.find(x);
            auto [it, fresh] = id.insert({r, static_cast<int>(lv.rep.size())});
            if (fresh) lv.rep.push_back(x);  // chains are sorted by name, so the first is least
            lv.class_of[lv.chains[x]] = it->second;
        }
    }
    auto cls = [levels](const SubsetChain &c) { return (*levels)[c.size() - 1].class_of.at(c); };
    auto rep = [levels](int k, int x) { return (*levels)[k].chains[(*levels)[k].rep[x]]; };

    // classes are keyed by (dimension, class id)
    using Key = std::pair<int, int>;
    OperatorData<Key> data;
    data.simplices = [levels](int k) {
        std::vector<Key> out;
        for (int x = 0; x < static_cast<int>((*levels)[k].rep.size()); ++x) out.push_back({k, x});
        return out;
    };
    data.face = [&](const Key &z, int i) { return Key{z.first - 1, cls(face_chain(rep(z.first, z.second), i))}; };
    data.degeneracy = [&](const Key &z, int j) {
        return Key{z.first + 1, cls(degeneracy_chain(rep(z.first, z.second), j))};
    };
    data.name = [&](const Key &z) { return chain_name(rep(z.first, z.second)); };

    bool truncated = false;
    for (int x = 0; x < static_cast<int>((*levels)[bound + 1].rep.size()) && !truncated; ++x) {
        auto c = rep(bound + 1, x);
        bool degenerate = false;
        for (int j = 0; j <= bound && !degenerate; ++j)
            degenerate = cls(degeneracy_chain(face_chain(c, j), j)) == x;
        truncated = !degenerate;
    }
    auto built = std::make_shared<Built<Key>>(build_from_operators(data, bound, truncated));

    QComplex q;
    q.n = n;
    q.bound = bound;
    q.method = QMethod::chain_quotient;
    q.space = built->space;
    q.reps.resize(q.space->top() + 1);
    for (int k = 0; k <= q.space->top(); ++k)
        for (const auto &key : built->keys[k]) q.reps[k].push_back(rep(key.first, key.second));
    q.locate = [n, bound, levels, built](const SubsetChain &c) {
        check_chain(c, n);
        int k = static_cast<int>(c.size()) - 1;
        if (k > bound) throw Inconclusive("subset chain above the dimension bound");
        return built->normal_form[k].at({k, (*levels)[k].class_of.at(c)});
    };
    return q;
}

std::string render_list(const SimplicialSet &x, const SimplicialMap &f) {
    std::string out;
    for (const auto &level : f.images)
        for (const auto &z : level) out += (out.empty() ? "" : ",") + x.render(z);
    return out;
}

SimplicialMap terminal_map(const SSetPtr &x) {
    SimplicialMap f{x, point(), {}};
    f.images.resize(x->top() + 1);
    for (int d = 0; d <= x->top(); ++d) {
        Word w(d);
        std::iota(w.begin(), w.end(), 0);
        f.images[d].assign(x->count(d), Simplex{w, {0, 0}});
    }
    return f;
}

}  // namespace

QMethod q_method(const std::string &name) {
    if (name == "necklace") return QMethod::necklace;
    if (name == "chain-quotient" || name == "chain_quotient") return QMethod::chain_quotient;
    if (name == "both") return QMethod::both;
    throw InvalidInput("unknown Q method: " + name);
}

std::string subset_name(int mask) {
    std::string out;
    for (int v : elements(mask)) out += std::to_string(v);
    return out;
}

std::string chain_name(const SubsetChain &c) {
    std::string out;
    for (size_t j = 0; j < c.size(); ++j) out += (j ? "<" : "") + subset_name(c[j]);
    return out;
}

QComplex q_complex(int n, int bound, QMethod method) {
    if (n < 0 || bound < 0) throw InvalidInput("Q^n needs n >= 0 and a non-negative bound");
    if (method == QMethod::necklace) return q_necklace(n, bound);
    if (method == QMethod::chain_quotient) return q_chain_quotient(n, bound);
    auto a = q_necklace(n, bound);
    auto b = q_chain_quotient(n, bound);
    auto r = iso_check(*a.space, *b.space);
    if (!r.iso) throw Error("the two models of Q^" + std::to_string(n) + " disagree: " + r.reason);
    a.method = QMethod::both;
    return a;
}

SimplicialMap q_operator(const QComplex &src, const QComplex &tgt, const Mono &theta) {
    if (static_cast<int>(theta.size()) != src.n + 1) throw InvalidInput("operator has the wrong source");
    for (size_t i = 0; i < theta.size(); ++i)
        if (theta[i] < 0 || theta[i] > tgt.n || (i && theta[i - 1] > theta[i]))
            throw InvalidInput("operator is not monotone into the target");
    SimplicialMap f{src.space, tgt.space, {}};
    f.images.resize(src.space->top() + 1);
    for (int k = 0; k <= src.space->top(); ++k)
        for (const auto &c : src.reps[k]) {
            SubsetChain img;
            for (int t : c) {
                int u = 0;
                for (int v : elements(t)) u |= 1 << theta[v];
                img.push_back(u);
            }
            f.images[k].push_back(tgt.locate(img));
        }
    return f;
}

SimplicialMap q_to_delta(const QComplex &q) {
    auto d = simplex(q.n);
    Simplex top = cell_simplex({q.n, 0});
    SimplicialMap f{q.space, d, {}};
    f.images.resize(q.space->top() + 1);
    for (int k = 0; k <= q.space->top(); ++k)
        for (const auto &c : q.reps[k]) {
            Mono seq;
            for (int t : c) seq.push_back(top_bit(t));
            f.images[k].push_back(d->apply(top, seq));
        }
    return f;
}

Realization realize_q(const SSetPtr &x, int bound) {
    Realization r;
    r.partial = x->truncated();
    std::map<int, QComplex> cache;
    auto piece = [&](int m) -> const QComplex & {
        auto it = cache.find(m);
        if (it == cache.end()) it = cache.emplace(m, q_complex(m, bound)).first;
        return it->second;
    };
    std::map<CellId, int> index;
    for (int m = 0; m <= x->top(); ++m)
        for (int i = 0; i < x->count(m); ++i) {
            index[{m, i}] = r.diagram.add_piece(piece(m).space, 0, x->name({m, i}));
            r.piece_cell.push_back({m, i});
            r.pieces.push_back(piece(m));
        }
    if (r.piece_cell.empty()) {
        r.space = empty_set();
        r.colim.space = r.space;
        return r;
    }
    for (int m = 1; m <= x->top(); ++m)
        for (int i = 0; i < x->count(m); ++i)
            for (int f = 0; f <= m; ++f) {
                Simplex y = x->faces({m, i})[f];
                const auto &qm = piece(m);
                const auto &qf = piece(m - 1);
                auto inc = q_operator(qf, qm, delta::face_map(m, f));
                auto proj = q_operator(qf, piece(y.cell.dim), delta::surjection(y.word, y.cell.dim));
                r.diagram.relate(index[{m, i}], index[y.cell], inc, proj);
            }
    r.colim = colimit(r.diagram, bound);
    r.space = r.colim.space;
    return r;
}

Singular sing_q(const SSetPtr &x, int bound) {
    if (x->truncated() && x->dim() < bound) throw Inconclusive("Sing needs the target up to the dimension bound");
    std::vector<QComplex> q;
    for (int n = 0; n <= bound; ++n) q.push_back(q_complex(n, n));
    std::vector<std::vector<SimplicialMap>> faces(bound + 2), degens(bound + 2);
    for (int n = 1; n <= bound; ++n)
        for (int i = 0; i <= n; ++i) faces[n].push_back(q_operator(q[n - 1], q[n], delta::face_map(n, i)));
    for (int n = 0; n < bound; ++n)
        for (int j = 0; j <= n; ++j) degens[n].push_back(q_operator(q[n + 1], q[n], delta::degeneracy_map(n, j)));
    std::vector<std::vector<SimplicialMap>> maps(bound + 1);
    for (int n = 0; n <= bound; ++n) maps[n] = all_maps(q[n].space, x);

    using Key = std::pair<int, std::vector<std::vector<Simplex>>>;
    OperatorData<Key> data;
    data.simplices = [&](int n) {
        std::vector<Key> out;
        for (const auto &f : maps[n]) out.push_back({n, f.images});
        return out;
    };
    auto as_map = [&](const Key &k) { return SimplicialMap{q[k.first].space, x, k.second}; };
    data.face = [&](const Key &k, int i) { return Key{k.first - 1, compose(as_map(k), faces[k.first][i]).images}; };
    data.degeneracy = [&](const Key &k, int j) {
        return Key{k.first + 1, compose(as_map(k), degens[k.first][j]).images};
    };
    data.name = [&](const Key &k) {
        if (k.first == 0) return x->render(k.second[0][0]);
        return "(" + render_list(*x, as_map(k)) + ")";
    };
    auto built = build_from_operators(data, bound, true);
    Singular s;
    s.space = built.space;
    s.maps.resize(bound + 1);
    for (int n = 0; n <= bound; ++n)
        for (const auto &k : built.keys[n]) s.maps[n].push_back(as_map(k));
    return s;
}

Comparison comparison_map(const SSetPtr &s, int from, int to, const ComparisonOptions &opts) {
    const int D = opts.bound;
    if (opts.check_precondition) {
        auto v = classify_fibration(terminal_map(s), FibrationKind::inner, D + 1);
        if (v.outcome == Outcome::fails) throw InvalidInput("the base is not an inner fibrant object: " + v.detail);
    }
    Comparison c;
    c.hom = hom_right(*s, s->name({0, from}), s->name({0, to}), D);
    c.source = realize_q(c.hom, D);
    c.target = mapping_complex(s, from, to, {D, opts.bead_bound, opts.allow_partial});
    if (c.source.piece_cell.empty()) {
        c.map = SimplicialMap{c.source.space, c.target.space, {}};
        return c;
    }
    std::vector<SimplicialMap> legs;
    for (size_t p = 0; p < c.source.piece_cell.size(); ++p) {
        CellId y = c.source.piece_cell[p];
        Simplex sigma;
        bool found = false;
        for (const auto &z : s->all_simplices(y.dim + 1))
            if (s->render(z) == c.hom->name(y)) {
                sigma = z;
                found = true;
                break;
            }
        if (!found) throw Error("hom cell without a simplex of the base");
        const auto &q = c.source.pieces[p];
        SimplicialMap leg{q.space, c.target.space, {}};
        leg.images.resize(q.space->top() + 1);
        for (int k = 0; k <= q.space->top(); ++k)
            for (const auto &chain : q.reps[k]) {
                int top = chain.back() | 1 << (y.dim + 1);
                Mono theta = elements(top);
                FlaggedNecklace nk;
                nk.beads.push_back(s->apply(sigma, theta));
                for (int t : chain) {
                    VertexMask u = VertexMask{1} << (theta.size() - 1);
                    for (size_t i = 0; i + 1 < theta.size(); ++i)
                        if (t >> theta[i] & 1) u |= VertexMask{1} << i;
                    nk.flag.push_back(u);
                }
                leg.images[k].push_back(c.target.simplex(nk));
            }
        legs.push_back(std::move(leg));
    }
    c.map = descend(c.source.colim, c.source.diagram, legs, c.target.space);
    return c;
}

// ---- diagrams of simplicial sets -----------------------------------------

Report SSetDiagram::validate() const {
    const auto &c = category;
    if (values.size() != c.objects.size()) return Report::failure("one value per object is required");
    if (maps.size() != c.morphisms.size()) return Report::failure("one map per morphism is required");
    for (size_t m = 0; m < maps.size(); ++m) {
        const auto &f = maps[m];
        const auto &mor = c.morphisms[m];
        if (f.dom != values[mor.src] || f.cod != values[mor.tgt])
            return Report::failure("map of " + mor.name + " has the wrong endpoints");
        if (auto r = sset::validate(f); !r.ok) return Report::failure(mor.name + ": " + r.message);
        if (c.is_identity(static_cast<int>(m)) && !(f == SimplicialMap::identity(values[mor.src])))
            return Report::failure("identity " + mor.name + " is not sent to an identity");
    }
    for (size_t g = 0; g < maps.size(); ++g)
        for (size_t f = 0; f < maps.size(); ++f) {
            int h = c.compose(static_cast<int>(g), static_cast<int>(f));
            if (h < 0) continue;
            if (!(compose(maps[g], maps[f]) == maps[h]))
                return Report::failure("composite " + c.morphisms[g].name + "∘" + c.morphisms[f].name +
                                       " is not preserved");
        }
    return Report::success();
}

Colimit diagram_colimit(const SSetDiagram &f) {
    Diagram d;
    for (size_t o = 0; o < f.values.size(); ++o) d.add_piece(f.values[o], 0, f.category.objects[o]);
    for (size_t m = 0; m < f.maps.size(); ++m) {
        if (f.category.is_identity(static_cast<int>(m))) continue;
        const auto &mor = f.category.morphisms[m];
        d.relate(mor.src, mor.tgt, SimplicialMap::identity(f.values[mor.src]), f.maps[m]);
    }
    return colimit(d);
}

HocolimResult bousfield_kan_hocolim(const SSetDiagram &f, int bound) {
    if (auto r = f.validate(); !r.ok) throw InvalidInput("invalid diagram: " + r.message);
    const auto &C = f.category;
    int top = bound;
    bool truncated = false;
    int fdim = -1;
    for (const auto &v : f.values) {
        if (v->truncated()) {
            truncated = true;
            top = std::min(top, v->dim());
        }
        fdim = std::max(fdim, v->dim());
    }
    // longest chain of composable non-identity morphisms, capped past the bound
    std::vector<int> longest(C.objects.size(), 0);
    for (int len = 1; len <= bound + 1; ++len) {
        std::vector<int> next(C.objects.size(), 0);
        for (size_t m = 0; m < C.morphisms.size(); ++m)
            if (!C.is_identity(static_cast<int>(m)) && longest[C.morphisms[m].tgt] >= len - 1)
                next[C.morphisms[m].src] = std::max(next[C.morphisms[m].src], len);
        for (size_t o = 0; o < next.size(); ++o) longest[o] = std::max(longest[o], next[o]);
    }
    int nerve_dim = *std::max_element(longest.begin(), longest.end());
    if (nerve_dim + fdim > top) truncated = true;

    // (c0, morphisms c0 -> c1 -> ... -> cn, x in F(c0)_n)
    struct Key {
        int c0;
        std::vector<int> chain;
        Simplex x;
        auto operator<=>(const Key &) const = default;
    };
    auto target = [&](const Key &k) { return k.chain.empty() ? k.c0 : C.morphisms[k.chain.back()].tgt; };
    OperatorData<Key> data;
    data.simplices = [&](int n) {
        std::vector<Key> chains;
        for (size_t o = 0; o < C.objects.size(); ++o) chains.push_back({static_cast<int>(o), {}, {}});
        for (int step = 0; step < n; ++step) {
            std::vector<Key> grown;
            for (const auto &k : chains)
                for (size_t m = 0; m < C.morphisms.size(); ++m)
                    if (C.morphisms[m].src == target(k)) {
                        Key g = k;
                        g.chain.push_back(static_cast<int>(m));
                        grown.push_back(std::move(g));
                    }
            chains = std::move(grown);
        }
        std::vector<Key> out;
        for (const auto &k : chains)
            for (const auto &x : f.values[k.c0]->all_simplices(n)) {
                Key z = k;
                z.x = x;
                out.push_back(std::move(z));
            }
        return out;
    };
    data.face = [&](const Key &k, int i) {
        const auto &X = *f.values[k.c0];
        int n = static_cast<int>(k.chain.size());
        Key out = k;
        if (i == 0) {
            out.c0 = C.morphisms[k.chain[0]].tgt;
            out.x = f.maps[k.chain[0]](X.face(k.x, 0));
            out.chain.erase(out.chain.begin());
        } else if (i == n) {
            out.x = X.face(k.x, n);
            out.chain.pop_back();
        } else {
            out.x = X.face(k.x, i);
            out.chain[i - 1] = C.compose(k.chain[i], k.chain[i - 1]);
            out.chain.erase(out.chain.begin() + i);
        }
        return out;
    };
    data.degeneracy = [&](const Key &k, int j) {
        Key out = k;
        int at = j == 0 ? k.c0 : C.morphisms[k.chain[j - 1]].tgt;
        out.chain.insert(out.chain.begin() + j, C.identity[at]);
        out.x = f.values[k.c0]->degeneracy(k.x, j);
        return out;
    };
    data.name = [&](const Key &k) {
        std::string s = C.objects[k.c0];
        for (int m : k.chain) s += "," + C.morphisms[m].name;
        return s + "|" + f.values[k.c0]->render(k.x);
    };
    auto built = build_from_operators(data, top, truncated);

    HocolimResult r;
    r.space = built.space;
    r.colim = diagram_colimit(f);
    r.augmentation = SimplicialMap{r.space, r.colim.space, {}};
    r.augmentation.images.resize(r.space->top() + 1);
    for (int n = 0; n <= r.space->top(); ++n)
        for (const auto &k : built.keys[n]) r.augmentation.images[n].push_back(r.colim.legs[k.c0](k.x));
    return r;
}

}  // namespace sset
