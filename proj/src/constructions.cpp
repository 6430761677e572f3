#include "sset/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace sset {

namespace {

std::string seq_name(const std::vector<std::string> &vnames, const std::vector<int> &seq, bool compact) {
    std::string s;
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i && !compact) s += '-';
        s += vnames[seq[i]];
    }
    return s;
}

bool all_single_char(const std::vector<std::string> &names) {
    for (const auto &n : names)
        if (n.size() != 1) return false;
    return true;
}

// Remove repeated consecutive entries; the removed positions form the degeneracy word.
std::pair<std::vector<int>, Word> collapse(const std::vector<int> &seq) {
    std::vector<int> core;
    Word w;
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i > 0 && seq[i] == seq[i - 1])
            w.push_back(static_cast<int>(i) - 1);
        else
            core.push_back(seq[i]);
    }
    return {core, w};
}

std::map<std::vector<int>, CellId> vertex_index(const SimplicialSet &x) {
    std::map<std::vector<int>, CellId> idx;
    for (int d = 0; d <= x.top(); ++d)
        for (int i = 0; i < x.count(d); ++i) {
            if (!idx.emplace(x.cell_vertices({d, i}), CellId{d, i}).second)
                throw InvalidInput("simplices are not determined by their vertices");
        }
    return idx;
}

std::vector<std::vector<int>> subsets_of(int n, const std::function<bool(const std::vector<int> &)> &keep) {
    std::vector<std::vector<int>> out;
    for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
        std::vector<int> s;
        for (int v = 0; v <= n; ++v)
            if (mask & (1 << v)) s.push_back(v);
        if (keep(s)) out.push_back(s);
    }
    std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

SSetPtr from_subsets(int n, const std::function<bool(const std::vector<int> &)> &keep) {
    auto kept = subsets_of(n, keep);
    std::vector<int> index(n + 1, -1);
    std::vector<std::string> names;
    for (const auto &s : kept)
        if (s.size() == 1) {
            index[s[0]] = static_cast<int>(names.size());
            names.push_back(std::to_string(s[0]));
        }
    std::vector<std::vector<std::vector<int>>> cells(n + 1);
    for (auto s : kept) {
        for (auto &v : s) v = index[v];
        cells[s.size() - 1].push_back(s);
    }
    return from_vertex_sequences(names, cells);
}

Simplex constant_simplex(CellId pt, int d) {
    Word w(d);
    std::iota(w.begin(), w.end(), 0);
    return Simplex{w, pt};
}

SimplicialMap constant_map(SSetPtr dom, SSetPtr cod, CellId pt) {
    SimplicialMap f{dom, cod, {}};
    f.images.resize(dom->top() + 1);
    for (int d = 0; d <= dom->top(); ++d)
        for (int i = 0; i < dom->count(d); ++i) f.images[d].push_back(constant_simplex(pt, d));
    return f;
}

}  // namespace

SSetPtr from_vertex_sequences(const std::vector<std::string> &vertex_names,
                              const std::vector<std::vector<std::vector<int>>> &cells,
                              std::optional<int> truncation) {
    bool compact = all_single_char(vertex_names);
    Builder b;
    std::map<std::vector<int>, CellId> idx;
    for (size_t v = 0; v < vertex_names.size(); ++v) idx[{static_cast<int>(v)}] = b.add(0, vertex_names[v]);
    for (size_t d = 1; d < cells.size(); ++d) {
        for (const auto &seq : cells[d]) {
            if (seq.size() != d + 1) throw InvalidInput("vertex sequence has the wrong length");
            std::vector<Simplex> faces;
            for (size_t i = 0; i <= d; ++i) {
                std::vector<int> f = seq;
                f.erase(f.begin() + static_cast<long>(i));
                auto [core, w] = collapse(f);
                auto it = idx.find(core);
                if (it == idx.end()) throw InvalidInput("face of " + seq_name(vertex_names, seq, compact) + " missing");
                faces.push_back(Simplex{w, it->second});
            }
            idx[seq] = b.add(static_cast<int>(d), seq_name(vertex_names, seq, compact), faces);
        }
    }
    if (truncation) b.truncate(*truncation);
    return b.build_ptr();
}

SSetPtr simplex(int n) {
    if (n < 0) throw InvalidInput("simplex dimension must be non-negative");
    return from_subsets(n, [](const auto &) { return true; });
}

SSetPtr boundary(int n) {
    if (n < 0) throw InvalidInput("boundary dimension must be non-negative");
    return from_subsets(n, [n](const auto &s) { return static_cast<int>(s.size()) <= n; });
}

SSetPtr horn(int n, int k) {
    if (n < 1) throw InvalidInput("horns need n >= 1");
    if (k < 0 || k > n) throw InvalidInput("horn index out of range");
    return from_subsets(n, [n, k](const auto &s) {
        int missing = n + 1 - static_cast<int>(s.size());
        return missing > 1 || (missing == 1 && std::find(s.begin(), s.end(), k) != s.end());
    });
}

SSetPtr interval_J(int bound) {
    if (bound < 1) throw InvalidInput("J needs a truncation bound >= 1");
    std::vector<std::vector<std::vector<int>>> cells(bound + 1);
    for (int d = 1; d <= bound; ++d)
        for (int start = 0; start < 2; ++start) {
            std::vector<int> seq;
            for (int i = 0; i <= d; ++i) seq.push_back((start + i) % 2);
            cells[d].push_back(seq);
        }
    return from_vertex_sequences({"0", "1"}, cells, bound);
}

SSetPtr complex_K() {
    auto d3 = simplex(3);
    return quotient(d3, {{d3->at(1, "02")}, {d3->at(1, "13")}}).space;
}

SSetPtr empty_set() { return Builder{}.build_ptr(); }

SSetPtr point(const std::string &name) {
    Builder b;
    b.add(0, name);
    return b.build_ptr();
}

SimplicialMap map_by_vertices(SSetPtr dom, SSetPtr cod, const std::vector<int> &vertex_map) {
    auto idx = vertex_index(*cod);
    SimplicialMap f{dom, cod, {}};
    f.images.resize(dom->top() + 1);
    for (int d = 0; d <= dom->top(); ++d)
        for (int i = 0; i < dom->count(d); ++i) {
            std::vector<int> seq;
            for (int v : dom->cell_vertices({d, i})) seq.push_back(vertex_map.at(v));
            auto [core, w] = collapse(seq);
            auto it = idx.find(core);
            if (it == idx.end()) throw InvalidInput("vertex assignment does not define a simplicial map");
            f.images[d].push_back(Simplex{w, it->second});
        }
    return f;
}

SimplicialMap simplex_face_inclusion(const SSetPtr &delta_n, const std::vector<int> &vertices) {
    auto sub = simplex(static_cast<int>(vertices.size()) - 1);
    return map_by_vertices(sub, delta_n, vertices);
}

SSetPtr nerve(const FiniteCategory &c, int bound) {
    Report r = c.validate();
    if (!r.ok) throw InvalidInput("invalid category: " + r.message);
    if (bound < 0) throw InvalidInput("negative bound");
    bool thin = c.thin();
    bool compact = all_single_char(c.objects);
    std::vector<int> nonid;
    for (size_t m = 0; m < c.morphisms.size(); ++m)
        if (!c.is_identity(static_cast<int>(m))) nonid.push_back(static_cast<int>(m));

    Builder b;
    for (const auto &o : c.objects) b.add(0, o);
    // chains of non-identity morphisms; each chain is normalized by dropping identities
    std::map<std::vector<int>, CellId> idx;
    auto chain_name = [&](const std::vector<int> &ch) {
        if (thin) {
            std::vector<int> objs{c.morphisms[ch[0]].src};
            for (int m : ch) objs.push_back(c.morphisms[m].tgt);
            return seq_name(c.objects, objs, compact);
        }
        std::string s;
        for (size_t i = 0; i < ch.size(); ++i) s += (i ? "|" : "") + c.morphisms[ch[i]].name;
        return s;
    };
    auto normal = [&](const std::vector<int> &ch, int start_obj) -> Simplex {
        std::vector<int> core;
        Word w;
        for (size_t i = 0; i < ch.size(); ++i) {
            if (c.is_identity(ch[i]))
                w.push_back(static_cast<int>(i));
            else
                core.push_back(ch[i]);
        }
        if (core.empty()) return Simplex{w, CellId{0, start_obj}};
        return Simplex{w, idx.at(core)};
    };
    std::vector<std::vector<int>> level;
    for (int m : nonid) level.push_back({m});
    bool more = false;
    for (int d = 1; !level.empty(); ++d) {
        if (d > bound) {
            more = true;
            break;
        }
        for (const auto &ch : level) {
            std::vector<Simplex> faces;
            for (int i = 0; i <= d; ++i) {
                std::vector<int> f;
                int start = c.morphisms[ch[0]].src;
                if (i == 0) {
                    f.assign(ch.begin() + 1, ch.end());
                    start = c.morphisms[ch[0]].tgt;
                } else if (i == d) {
                    f.assign(ch.begin(), ch.end() - 1);
                } else {
                    f.assign(ch.begin(), ch.begin() + i - 1);
                    f.push_back(c.comp[ch[i]][ch[i - 1]]);
                    f.insert(f.end(), ch.begin() + i + 1, ch.end());
                }
                faces.push_back(normal(f, start));
            }
            idx[ch] = b.add(d, chain_name(ch), faces);
        }
        std::vector<std::vector<int>> next;
        for (const auto &ch : level)
            for (int m : nonid)
                if (c.morphisms[m].src == c.morphisms[ch.back()].tgt) {
                    auto e = ch;
                    e.push_back(m);
                    next.push_back(e);
                }
        level = std::move(next);
    }
    if (more) b.truncate(bound);
    return b.build_ptr();
}

std::vector<int> nerve_chain(const FiniteCategory &c, const SimplicialSet &n, const Simplex &z) {
    auto vs = n.vertices(z);
    std::vector<int> chain;
    for (int i = 0; i + 1 < static_cast<int>(vs.size()); ++i) {
        Simplex e = n.apply(z, {i, i + 1});
        if (e.degenerate()) {
            chain.push_back(c.identity[vs[i]]);
            continue;
        }
        int found = -1;
        for (int m : c.hom(vs[i], vs[i + 1]))
            if (!c.is_identity(m) && (c.thin() || c.morphisms[m].name == n.name(e.cell))) found = m;
        if (found < 0) throw InvalidInput("edge '" + n.name(e.cell) + "' is not a morphism");
        chain.push_back(found);
    }
    return chain;
}

Simplex nerve_simplex(const FiniteCategory &c, const SimplicialSet &n, const std::vector<int> &chain, int start) {
    std::vector<int> core;
    Word w;
    for (size_t i = 0; i < chain.size(); ++i) {
        if (c.is_identity(chain[i]))
            w.push_back(static_cast<int>(i));
        else
            core.push_back(chain[i]);
    }
    if (!chain.empty()) start = c.morphisms[chain[0]].src;
    if (core.empty()) return Simplex{w, CellId{0, start}};
    std::string name;
    if (c.thin()) {
        std::vector<int> objs{c.morphisms[core[0]].src};
        for (int m : core) objs.push_back(c.morphisms[m].tgt);
        name = seq_name(c.objects, objs, all_single_char(c.objects));
    } else {
        for (size_t i = 0; i < core.size(); ++i) name += (i ? "|" : "") + c.morphisms[core[i]].name;
    }
    int d = static_cast<int>(core.size());
    auto cell = n.find(d, name);
    if (!cell) {
        if (n.truncated() && d > n.dim()) throw Inconclusive("nerve chain above the truncation bound");
        throw InvalidInput("no nerve cell for chain '" + name + "'");
    }
    return Simplex{w, *cell};
}

SimplicialMap nerve_map(const Functor &f, const FiniteCategory &src, const FiniteCategory &tgt, SSetPtr nsrc,
                        SSetPtr ntgt) {
    SimplicialMap m{nsrc, ntgt, {}};
    m.images.resize(nsrc->top() + 1);
    for (int d = 0; d <= nsrc->top(); ++d)
        for (int i = 0; i < nsrc->count(d); ++i) {
            Simplex z = cell_simplex({d, i});
            if (d == 0) {
                m.images[d].push_back(cell_simplex({0, f.on_objects[i]}));
                continue;
            }
            std::vector<int> ch;
            for (int x : nerve_chain(src, *nsrc, z)) ch.push_back(f.on_morphisms[x]);
            m.images[d].push_back(nerve_simplex(tgt, *ntgt, ch, 0));
        }
    return m;
}

Sub subcomplex(const SSetPtr &x, const std::vector<CellId> &generators) {
    std::set<CellId> keep;
    std::vector<CellId> stack(generators.begin(), generators.end());
    while (!stack.empty()) {
        CellId c = stack.back();
        stack.pop_back();
        if (!keep.insert(c).second) continue;
        for (const auto &f : x->faces(c)) stack.push_back(f.cell);
    }
    Builder b;
    std::map<CellId, CellId> remap;
    for (CellId c : keep) {  // ordered by (dim, index)
        std::vector<Simplex> faces;
        for (auto f : x->faces(c)) {
            f.cell = remap.at(f.cell);
            faces.push_back(f);
        }
        remap[c] = b.add(c.dim, x->name(c), faces);
    }
    if (x->truncated()) b.truncate(x->top());
    Sub s{b.build_ptr(), {}};
    s.inclusion = SimplicialMap{s.space, x, {}};
    s.inclusion.images.resize(s.space->top() + 1);
    for (auto [orig, sub] : remap) {
        auto &lvl = s.inclusion.images[sub.dim];
        if (static_cast<int>(lvl.size()) <= sub.index) lvl.resize(sub.index + 1);
        lvl[sub.index] = cell_simplex(orig);
    }
    return s;
}

Sub image(const SimplicialMap &f) {
    std::vector<CellId> gens;
    for (const auto &lvl : f.images)
        for (const auto &z : lvl) gens.push_back(z.cell);
    return subcomplex(f.cod, gens);
}

Pullback pullback(const SimplicialMap &f, const SimplicialMap &g) {
    if (f.cod.get() != g.cod.get() && !same_structure(*f.cod, *g.cod))
        throw InvalidInput("pullback legs have different codomains");
    const auto &X = *f.dom;
    const auto &Y = *g.dom;
    int top = X.top() + Y.top();
    bool truncated = false;
    if (X.truncated()) top = std::min(top, X.top()), truncated = true;
    if (Y.truncated()) top = std::min(top, Y.top()), truncated = true;
    if (X.top() < 0 || Y.top() < 0) top = -1;

    auto index = std::make_shared<std::vector<std::map<std::pair<Simplex, Simplex>, int>>>(std::max(top + 1, 0));
    Builder b;
    std::vector<std::vector<std::pair<Simplex, Simplex>>> cells(std::max(top + 1, 0));
    auto normal = [index, &X, &Y](const Simplex &a, const Simplex &c) -> Simplex {
        Word common;
        std::set_intersection(a.word.begin(), a.word.end(), c.word.begin(), c.word.end(), std::back_inserter(common));
        int m = a.dim();
        if (common.empty()) return cell_simplex(CellId{m, (*index)[m].at({a, c})});
        Mono kept;
        for (int v = 0; v <= m; ++v)
            if (!std::binary_search(common.begin(), common.end(), v - 1)) kept.push_back(v);
        Simplex ca = X.apply(a, kept), cc = Y.apply(c, kept);
        int k = ca.dim();
        return Simplex{common, CellId{k, (*index)[k].at({ca, cc})}};
    };
    for (int m = 0; m <= top; ++m) {
        std::map<Simplex, std::vector<Simplex>> by_image;
        for (const auto &c : Y.all_simplices(m)) by_image[g(c)].push_back(c);
        for (const auto &a : X.all_simplices(m)) {
            auto it = by_image.find(f(a));
            if (it == by_image.end()) continue;
            for (const auto &c : it->second) {
                Word common;
                std::set_intersection(a.word.begin(), a.word.end(), c.word.begin(), c.word.end(),
                                      std::back_inserter(common));
                if (!common.empty()) continue;
                std::vector<Simplex> faces;
                if (m > 0)
                    for (int i = 0; i <= m; ++i) faces.push_back(normal(X.face(a, i), Y.face(c, i)));
                CellId id = b.add(m, "(" + X.render(a) + "," + Y.render(c) + ")", faces);
                (*index)[m][{a, c}] = id.index;
                cells[m].push_back({a, c});
            }
        }
    }
    if (truncated) b.truncate(top);
    Pullback p;
    p.space = b.build_ptr();
    p.first = SimplicialMap{p.space, f.dom, {}};
    p.second = SimplicialMap{p.space, g.dom, {}};
    p.first.images.resize(p.space->top() + 1);
    p.second.images.resize(p.space->top() + 1);
    for (int m = 0; m <= p.space->top(); ++m)
        for (const auto &[a, c] : cells[m]) {
            p.first.images[m].push_back(a);
            p.second.images[m].push_back(c);
        }
    // keep the factors alive for the pairing closure
    auto fx = f.dom, gy = g.dom;
    p.pair = [normal, fx, gy](const Simplex &a, const Simplex &c) { return normal(a, c); };
    return p;
}

Pullback product(const SSetPtr &x, const SSetPtr &y) {
    auto pt = point();
    return pullback(constant_map(x, pt, {0, 0}), constant_map(y, pt, {0, 0}));
}

MarkedSimplicialSet marked_product(const MarkedSimplicialSet &x, const MarkedSimplicialSet &y, const Pullback &p) {
    MarkedSimplicialSet out{p.space, {}};
    for (int e = 0; e < p.space->count(1); ++e)
        if (x.is_marked(p.first.image({1, e})) && y.is_marked(p.second.image({1, e}))) out.marked.insert(e);
    return out;
}

namespace {

using Namer = std::function<std::string(const std::string &, const std::string &)>;

Join join_impl(const SSetPtr &xp, const SSetPtr &yp, const Namer &pair_name) {
    const auto &X = *xp;
    const auto &Y = *yp;
    int top = std::max({X.top(), Y.top(), X.top() + Y.top() + 1});
    bool truncated = false;
    if (X.truncated()) top = std::min(top, X.top()), truncated = true;
    if (Y.truncated()) top = std::min(top, Y.top()), truncated = true;

    // cell index: (optional x cell, optional y cell)
    using Key = std::pair<std::optional<CellId>, std::optional<CellId>>;
    auto index = std::make_shared<std::map<Key, CellId>>();
    Builder b;
    auto normal = [index](const std::optional<Simplex> &a, const std::optional<Simplex> &c) -> Simplex {
        Word w;
        std::optional<CellId> xa, yc;
        int shift = 0;
        if (a) {
            w = a->word;
            xa = a->cell;
            shift = a->dim() + 1;
        }
        if (c) {
            for (int j : c->word) w.push_back(j + shift);
            yc = c->cell;
        }
        return Simplex{w, index->at({xa, yc})};
    };
    for (int m = 0; m <= top; ++m) {
        for (int i = 0; i < X.count(m); ++i) {
            CellId c{m, i};
            std::vector<Simplex> faces;
            for (const auto &f : X.faces(c)) faces.push_back(normal(f, std::nullopt));
            (*index)[{c, std::nullopt}] = b.add(m, X.name(c), faces);
        }
        for (int i = 0; i < Y.count(m); ++i) {
            CellId c{m, i};
            std::vector<Simplex> faces;
            for (const auto &f : Y.faces(c)) faces.push_back(normal(std::nullopt, f));
            std::string nm = Y.name(c);
            while (b.find(m, nm)) nm += "'";
            (*index)[{std::nullopt, c}] = b.add(m, nm, faces);
        }
        for (int p = 0; p < m; ++p) {
            int q = m - p - 1;
            for (int i = 0; i < X.count(p); ++i)
                for (int j = 0; j < Y.count(q); ++j) {
                    CellId xc{p, i}, yc{q, j};
                    std::vector<Simplex> faces;
                    for (int k = 0; k <= m; ++k) {
                        if (k <= p) {
                            if (p == 0)
                                faces.push_back(normal(std::nullopt, cell_simplex(yc)));
                            else
                                faces.push_back(normal(X.faces(xc)[k], cell_simplex(yc)));
                        } else {
                            if (q == 0)
                                faces.push_back(normal(cell_simplex(xc), std::nullopt));
                            else
                                faces.push_back(normal(cell_simplex(xc), Y.faces(yc)[k - p - 1]));
                        }
                    }
                    std::string nm = pair_name(X.name(xc), Y.name(yc));
                    while (b.find(m, nm)) nm += "'";
                    (*index)[{xc, yc}] = b.add(m, nm, faces);
                }
        }
    }
    if (truncated) b.truncate(top);
    Join j;
    j.space = b.build_ptr();
    j.left = SimplicialMap{xp, j.space, {}};
    j.right = SimplicialMap{yp, j.space, {}};
    j.left.images.resize(X.top() + 1);
    j.right.images.resize(Y.top() + 1);
    for (int d = 0; d <= X.top(); ++d)
        for (int i = 0; i < X.count(d); ++i) j.left.images[d].push_back(cell_simplex(index->at({CellId{d, i}, std::nullopt})));
    for (int d = 0; d <= Y.top(); ++d)
        for (int i = 0; i < Y.count(d); ++i)
            j.right.images[d].push_back(cell_simplex(index->at({std::nullopt, CellId{d, i}})));
    j.join = normal;
    return j;
}

}  // namespace

Join join(const SSetPtr &x, const SSetPtr &y) {
    return join_impl(x, y, [](const std::string &a, const std::string &b) { return a + "*" + b; });
}

Join cone(const SSetPtr &x) {
    return join_impl(x, point("*"), [](const std::string &a, const std::string &) { return a + "*"; });
}

Join cocone(const SSetPtr &x) {
    return join_impl(point("*"), x, [](const std::string &, const std::string &b) { return "*" + b; });
}

int Diagram::add_piece(SSetPtr p, int prio, std::string tag, std::optional<std::set<int>> marking) {
    pieces.push_back(std::move(p));
    priority.push_back(prio);
    tags.push_back(tag.empty() ? std::to_string(pieces.size() - 1) : std::move(tag));
    markings.push_back(std::move(marking));
    return static_cast<int>(pieces.size()) - 1;
}

void Diagram::relate(int a, int b, SimplicialMap f, SimplicialMap g) {
    relations.push_back({a, b, std::move(f), std::move(g)});
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    int add() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a), b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

Colimit colimit(const Diagram &d, std::optional<int> bound) {
    int top = -1;
    std::optional<int> cap;
    for (const auto &p : d.pieces) {
        top = std::max(top, p->top());
        if (p->truncated()) cap = cap ? std::min(*cap, p->top()) : p->top();
    }
    for (const auto &r : d.relations)
        if (r.f.dom->truncated()) cap = cap ? std::min(*cap, r.f.dom->top()) : r.f.dom->top();
    bool truncated = false;
    if (cap && *cap <= top) top = *cap, truncated = true;
    if (bound && *bound < top) {
        top = *bound;
        truncated = true;
    }

    int np = static_cast<int>(d.pieces.size());
    Builder b;
    // per level: element ids of (piece, simplex), union-find, normal forms of roots
    std::vector<std::map<std::pair<int, Simplex>, int>> ids(top + 1);
    std::vector<std::vector<Simplex>> nf(top + 1);
    std::vector<std::vector<std::vector<std::pair<int, CellId>>>> members(top + 1);
    for (int m = 0; m <= top; ++m) {
        UnionFind uf;
        std::vector<std::pair<int, Simplex>> elems;
        for (int a = 0; a < np; ++a)
            for (auto &z : d.pieces[a]->all_simplices(m)) {
                ids[m][{a, z}] = uf.add();
                elems.push_back({a, z});
            }
        for (const auto &r : d.relations)
            for (const auto &z : r.f.dom->all_simplices(m)) uf.unite(ids[m].at({r.a, r.f(z)}), ids[m].at({r.b, r.g(z)}));
        int n = static_cast<int>(elems.size());
        std::vector<std::vector<int>> cls(n);
        std::vector<bool> deg(n, false);
        for (int e = 0; e < n; ++e) {
            int r = uf.find(e);
            cls[r].push_back(e);
            if (elems[e].second.degenerate()) deg[r] = true;
        }
        nf[m].resize(n);
        // non-degenerate classes: choose names
        struct Named {
            std::string name;
            int prio;
            int piece;
            int root;
        };
        std::vector<Named> named;
        for (int r = 0; r < n; ++r) {
            if (cls[r].empty() || deg[r]) continue;
            std::optional<Named> best;
            for (int e : cls[r]) {
                auto &[a, z] = elems[e];
                Named cand{d.pieces[a]->name(z.cell), d.priority[a], a, r};
                if (!best || std::tie(cand.prio, cand.name, cand.piece) < std::tie(best->prio, best->name, best->piece))
                    best = cand;
            }
            named.push_back(*best);
        }
        std::sort(named.begin(), named.end(), [](const Named &l, const Named &r) {
            return std::tie(l.name, l.prio, l.piece, l.root) < std::tie(r.name, r.prio, r.piece, r.root);
        });
        std::map<std::string, int> multiplicity;
        for (const auto &x : named) ++multiplicity[x.name];
        for (const auto &x : named) {
            std::string nm = x.name;
            if (multiplicity[x.name] > 1) nm = d.tags[x.piece] + ":" + nm;
            while (b.find(m, nm)) nm += "'";
            auto &[a, z] = elems[cls[x.root].front()];
            std::vector<Simplex> faces;
            if (m > 0)
                for (const auto &f : d.pieces[a]->faces(z.cell)) faces.push_back(nf[m - 1][ids[m - 1].at({a, f})]);
            CellId c = b.add(m, nm, faces);
            nf[m][x.root] = cell_simplex(c);
            members[m].emplace_back();
            for (int e : cls[x.root]) members[m].back().push_back({elems[e].first, elems[e].second.cell});
        }
        for (int r = 0; r < n; ++r) {
            if (cls[r].empty() || !deg[r]) continue;
            for (int e : cls[r]) {
                auto &[a, z] = elems[e];
                if (!z.degenerate()) continue;
                Simplex lower{Word(z.word.begin(), z.word.end() - 1), z.cell};
                nf[m][r] = degenerate(nf[m - 1][ids[m - 1].at({a, lower})], Word{z.word.back()});
                break;
            }
        }
        for (int e = 0; e < n; ++e) nf[m][e] = nf[m][uf.find(e)];
    }
    if (truncated) b.truncate(top);
    Colimit out;
    out.space = b.build_ptr();
    out.members.resize(out.space->top() + 1);
    for (int m = 0; m <= out.space->top() && m <= top; ++m) out.members[m] = std::move(members[m]);
    for (int a = 0; a < np; ++a) {
        SimplicialMap leg{d.pieces[a], out.space, {}};
        leg.images.resize(d.pieces[a]->top() + 1);
        for (int m = 0; m <= d.pieces[a]->top() && m <= top; ++m)
            for (int i = 0; i < d.pieces[a]->count(m); ++i)
                leg.images[m].push_back(nf[m][ids[m].at({a, cell_simplex({m, i})})]);
        out.legs.push_back(std::move(leg));
    }
    for (int e = 0; e < out.space->count(1); ++e)
        for (auto [a, c] : out.members[1][e])
            if (d.markings[a] && d.markings[a]->count(c.index)) out.marked.insert(e);
    return out;
}

SimplicialMap descend(const Colimit &c, const Diagram &d, const std::vector<SimplicialMap> &cocone, SSetPtr target) {
    for (const auto &r : d.relations)
        for (int m = 0; m <= r.f.dom->top(); ++m)
            for (int i = 0; i < r.f.dom->count(m); ++i) {
                Simplex z = cell_simplex({m, i});
                if (cocone[r.a](r.f(z)) != cocone[r.b](r.g(z))) throw InvalidInput("cocone is not compatible");
            }
    SimplicialMap f{c.space, std::move(target), {}};
    f.images.resize(c.space->top() + 1);
    for (int m = 0; m <= c.space->top(); ++m)
        for (int i = 0; i < c.space->count(m); ++i) {
            std::optional<Simplex> img;
            for (auto [a, cell] : c.members[m][i]) {
                Simplex z = cocone[a].image(cell);
                if (img && *img != z) throw InvalidInput("cocone is not compatible");
                img = z;
            }
            f.images[m].push_back(*img);
        }
    return f;
}

Pushout pushout(const SimplicialMap &f, const SimplicialMap &g) {
    Pushout p;
    p.diagram.add_piece(f.cod, 0, "l");
    p.diagram.add_piece(g.cod, 1, "r");
    p.diagram.relate(0, 1, f, g);
    p.colim = colimit(p.diagram);
    p.space = p.colim.space;
    p.first = p.colim.legs[0];
    p.second = p.colim.legs[1];
    return p;
}

Coproduct coproduct(const SSetPtr &x, const SSetPtr &y) {
    Diagram d;
    d.add_piece(x, 0, "a");
    d.add_piece(y, 0, "b");
    auto c = colimit(d);
    return {c.space, c.legs[0], c.legs[1]};
}

Quotient quotient(const SSetPtr &x, const std::vector<std::vector<CellId>> &subcomplexes) {
    Diagram d;
    d.add_piece(x, 0, "x");
    auto pt = point("*");
    for (const auto &gens : subcomplexes) {
        auto sub = subcomplex(x, gens);
        int k = d.add_piece(pt, 1, "pt");
        d.relate(0, k, sub.inclusion, constant_map(sub.space, pt, {0, 0}));
    }
    auto c = colimit(d);
    Quotient q{c.space, c.legs[0], {}};
    for (size_t k = 0; k < subcomplexes.size(); ++k) q.points.push_back(c.legs[k + 1].image({0, 0}).cell);
    return q;
}

Pointed suspension(const SSetPtr &x, Side side) {
    if (x->empty()) throw InvalidInput("suspension of the empty simplicial set");
    auto all_cells = [](const SimplicialSet &s, const SimplicialMap &inc) {
        std::vector<CellId> out;
        for (int d = 0; d <= s.top(); ++d)
            for (int i = 0; i < s.count(d); ++i) out.push_back(inc.image({d, i}).cell);
        return out;
    };
    if (side == Side::right) {
        auto j = cone(x);
        auto q = quotient(j.space, {all_cells(*x, j.left)});
        return {q.space, q.points[0], q.projection(j.right.image({0, 0})).cell};
    }
    if (side == Side::left) {
        auto j = cocone(x);
        auto q = quotient(j.space, {all_cells(*x, j.right)});
        return {q.space, q.projection(j.left.image({0, 0})).cell, q.points[0]};
    }
    auto interval = simplex(1);
    auto p = product(x, interval);
    std::vector<CellId> bottom, top;
    for (int d = 0; d <= x->top(); ++d)
        for (int i = 0; i < x->count(d); ++i) {
            bottom.push_back(p.pair(cell_simplex({d, i}), constant_simplex({0, 0}, d)).cell);
            top.push_back(p.pair(cell_simplex({d, i}), constant_simplex({0, 1}, d)).cell);
        }
    auto q = quotient(p.space, {bottom, top});
    return {q.space, q.points[0], q.points[1]};
}

Pointed interval_I(int n) {
    auto d = simplex(n + 1);
    std::vector<CellId> front;
    std::string nm;
    for (int v = 0; v <= n; ++v) nm += std::to_string(v);
    if (n + 1 >= 10) throw InvalidInput("interval_I supports n < 9");
    front.push_back(d->at(n, nm));
    auto q = quotient(d, {front});
    return {q.space, q.points[0], q.space->at(0, std::to_string(n + 1))};
}

SSetPtr hom_right(const SimplicialSet &s, const std::string &from, const std::string &to, int bound) {
    CellId a = s.at(0, from), b = s.at(0, to);
    int top = bound;
    bool truncated = bound + 1 < s.top();
    if (s.truncated() && s.top() < bound + 1) {
        top = s.top() - 1;
        truncated = true;
    }
    OperatorData<Simplex> data;
    data.simplices = [&](int n) {
        std::vector<Simplex> out;
        Simplex front = constant_simplex(a, n);
        Mono inc = delta::identity(n);
        for (auto &z : s.all_simplices(n + 1)) {
            if (s.vertices(z).back() != b.index) continue;
            if (s.apply(z, inc) != front) continue;
            out.push_back(z);
        }
        return out;
    };
    data.face = [&](const Simplex &z, int i) { return s.face(z, i); };
    data.degeneracy = [&](const Simplex &z, int j) { return s.degeneracy(z, j); };
    data.name = [&](const Simplex &z) { return s.render(z); };
    return build_from_operators(data, top, truncated).space;
}

}  // namespace sset
