#include "sset/iso.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sset {

namespace {

struct Flat {
    // global numbering of the cells of one simplicial set
    std::vector<int> offset;
    int total = 0;
    explicit Flat(const SimplicialSet &s) {
        for (int d = 0; d <= s.top(); ++d) {
            offset.push_back(total);
            total += s.count(d);
        }
    }
    int id(CellId c) const { return offset[c.dim] + c.index; }
};

struct Refined {
    std::vector<int> color_x, color_y;
};

Refined refine(const SimplicialSet &x, const SimplicialSet &y, const Flat &fx, const Flat &fy, const IsoOptions &opts) {
    auto init = [&](const SimplicialSet &s, const Flat &f, const std::vector<std::vector<int>> &extra) {
        std::vector<std::vector<long long>> sig(f.total);
        for (int d = 0; d <= s.top(); ++d)
            for (int i = 0; i < s.count(d); ++i) {
                auto &v = sig[f.id({d, i})];
                v.push_back(d);
                v.push_back(extra.empty() ? 0 : extra[d][i]);
                for (const auto &face : s.faces({d, i})) {
                    v.push_back(static_cast<long long>(face.word.size()));
                    for (int w : face.word) v.push_back(w);
                }
            }
        return sig;
    };
    auto sx = init(x, fx, opts.colors_x);
    auto sy = init(y, fy, opts.colors_y);
    // coface lists
    auto cofaces = [](const SimplicialSet &s, const Flat &f) {
        std::vector<std::vector<std::tuple<int, int, int>>> co(f.total);
        for (int d = 1; d <= s.top(); ++d)
            for (int i = 0; i < s.count(d); ++i) {
                const auto &fs = s.faces({d, i});
                for (int k = 0; k <= d; ++k) {
                    int wcode = 0;
                    for (int w : fs[k].word) wcode = wcode * 31 + w + 1;
                    co[f.id(fs[k].cell)].push_back({f.id({d, i}), k, wcode});
                }
            }
        return co;
    };
    auto cx = cofaces(x, fx), cy = cofaces(y, fy);
    Refined r;
    std::map<std::vector<long long>, int> palette;
    auto assign = [&](const std::vector<std::vector<long long>> &sig) {
        std::vector<int> col(sig.size());
        for (size_t i = 0; i < sig.size(); ++i) {
            auto it = palette.emplace(sig[i], static_cast<int>(palette.size())).first;
            col[i] = it->second;
        }
        return col;
    };
    r.color_x = assign(sx);
    r.color_y = assign(sy);
    size_t ncolors = palette.size();
    for (int round = 0; round < 64; ++round) {
        auto next = [&](const SimplicialSet &s, const Flat &f, const std::vector<int> &col,
                        const std::vector<std::vector<std::tuple<int, int, int>>> &co) {
            std::vector<std::vector<long long>> sig(f.total);
            for (int d = 0; d <= s.top(); ++d)
                for (int i = 0; i < s.count(d); ++i) {
                    int id = f.id({d, i});
                    auto &v = sig[id];
                    v.push_back(col[id]);
                    for (const auto &face : s.faces({d, i})) v.push_back(col[f.id(face.cell)]);
                    std::vector<long long> up;
                    for (auto [c, k, w] : co[id]) up.push_back((static_cast<long long>(col[c]) * 64 + k) * 1000003 + w);
                    std::sort(up.begin(), up.end());
                    v.push_back(-1);
                    v.insert(v.end(), up.begin(), up.end());
                }
            return sig;
        };
        auto nx = next(x, fx, r.color_x, cx);
        auto ny = next(y, fy, r.color_y, cy);
        palette.clear();
        r.color_x = assign(nx);
        r.color_y = assign(ny);
        if (palette.size() == ncolors) break;
        ncolors = palette.size();
    }
    return r;
}

}  // namespace

IsoResult iso_check(const SimplicialSet &x, const SimplicialSet &y, const IsoOptions &opts) {
    IsoResult res;
    if (x.truncated() != y.truncated() || (x.truncated() && x.dim() != y.dim())) {
        res.reason = "truncation bounds differ";
        return res;
    }
    int top = std::max(x.top(), y.top());
    for (int d = 0; d <= top; ++d)
        if (x.count(d) != y.count(d)) {
            res.reason = "cell counts differ in dimension " + std::to_string(d);
            return res;
        }
    Flat fx(x), fy(y);
    Refined col = refine(x, y, fx, fy, opts);
    {
        std::map<int, int> hist;
        for (int c : col.color_x) ++hist[c];
        for (int c : col.color_y) --hist[c];
        for (auto [c, n] : hist)
            if (n != 0) {
                res.reason = "local incidence invariants differ";
                return res;
            }
    }
    std::map<int, int> class_size;
    for (int c : col.color_x) ++class_size[c];

    // order of X cells: grow from vertices, placing each cell as soon as its faces are placed
    std::vector<CellId> order;
    {
        std::vector<CellId> cells;
        std::vector<int> pending(fx.total, 0);
        std::vector<std::vector<CellId>> dependents(fx.total);
        for (int d = 0; d <= x.top(); ++d)
            for (int i = 0; i < x.count(d); ++i) {
                CellId c{d, i};
                std::set<CellId> deps;
                for (const auto &f : x.faces(c)) deps.insert(f.cell);
                pending[fx.id(c)] = static_cast<int>(deps.size());
                for (auto dep : deps) dependents[fx.id(dep)].push_back(c);
            }
        std::vector<bool> placed(fx.total, false);
        std::vector<int> adjacency(x.count(0), 0);
        std::vector<std::vector<int>> nbrs(x.count(0));
        for (int e = 0; e < x.count(1); ++e) {
            const auto &v = x.cell_vertices({1, e});
            nbrs[v[0]].push_back(v[1]);
            nbrs[v[1]].push_back(v[0]);
        }
        auto place = [&](CellId c) {
            std::vector<CellId> queue{c};
            while (!queue.empty()) {
                CellId cur = queue.back();
                queue.pop_back();
                placed[fx.id(cur)] = true;
                order.push_back(cur);
                if (cur.dim == 0)
                    for (int n : nbrs[cur.index]) ++adjacency[n];
                for (auto dep : dependents[fx.id(cur)])
                    if (--pending[fx.id(dep)] == 0) queue.push_back(dep);
            }
        };
        for (int k = 0; k < x.count(0); ++k) {
            int best = -1;
            for (int v = 0; v < x.count(0); ++v) {
                if (placed[fx.id({0, v})]) continue;
                if (best < 0) {
                    best = v;
                    continue;
                }
                auto key = [&](int w) {
                    return std::make_tuple(-adjacency[w], class_size[col.color_x[fx.id({0, w})]], w);
                };
                if (key(v) < key(best)) best = v;
            }
            place({0, best});
        }
        if (static_cast<int>(order.size()) != fx.total) {
            res.reason = "internal ordering failure";
            return res;
        }
    }

    // Y lookup by face tuple
    std::vector<std::map<std::vector<Simplex>, std::vector<int>>> by_faces(y.top() + 1);
    for (int d = 1; d <= y.top(); ++d)
        for (int i = 0; i < y.count(d); ++i) by_faces[d][y.faces({d, i})].push_back(i);

    std::vector<int> image(fx.total, -1);
    std::vector<bool> used(fy.total, false);
    long long steps = 0;
    bool exhausted_limit = false;
    auto rec = [&](auto &&self, size_t pos) -> bool {
        if (pos == order.size()) return true;
        if (++steps > opts.step_limit) {
            exhausted_limit = true;
            return false;
        }
        CellId c = order[pos];
        int want = col.color_x[fx.id(c)];
        std::vector<int> cands;
        if (c.dim == 0) {
            for (int v = 0; v < y.count(0); ++v)
                if (!used[fy.id({0, v})] && col.color_y[fy.id({0, v})] == want) cands.push_back(v);
        } else {
            std::vector<Simplex> faces;
            for (auto f : x.faces(c)) {
                int t = image[fx.id(f.cell)];
                f.cell = CellId{f.cell.dim, t - fy.offset[f.cell.dim]};
                faces.push_back(f);
            }
            auto it = by_faces[c.dim].find(faces);
            if (it == by_faces[c.dim].end()) return false;
            for (int i : it->second)
                if (!used[fy.id({c.dim, i})] && col.color_y[fy.id({c.dim, i})] == want) cands.push_back(i);
        }
        for (int i : cands) {
            int t = fy.id({c.dim, i});
            used[t] = true;
            image[fx.id(c)] = t;
            if (self(self, pos + 1)) return true;
            used[t] = false;
            image[fx.id(c)] = -1;
            if (exhausted_limit) return false;
        }
        return false;
    };
    if (!rec(rec, 0)) {
        if (exhausted_limit) throw Inconclusive("isomorphism search exceeded its step limit");
        res.reason = "exhaustive search found no isomorphism";
        return res;
    }
    res.iso = true;
    res.images.resize(x.top() + 1);
    for (int d = 0; d <= x.top(); ++d)
        for (int i = 0; i < x.count(d); ++i)
            res.images[d].push_back(cell_simplex({d, image[fx.id({d, i})] - fy.offset[d]}));
    return res;
}

IsoResult iso_check(const MarkedSimplicialSet &x, const MarkedSimplicialSet &y) {
    IsoOptions o;
    auto colors = [](const MarkedSimplicialSet &m) {
        std::vector<std::vector<int>> c(m.space->top() + 1);
        for (int d = 0; d <= m.space->top(); ++d)
            for (int i = 0; i < m.space->count(d); ++i) c[d].push_back(d == 1 && m.marked.count(i) ? 1 : 0);
        return c;
    };
    o.colors_x = colors(x);
    o.colors_y = colors(y);
    return iso_check(*x.space, *y.space, o);
}

std::optional<SimplicialMap> find_iso(const SSetPtr &x, const SSetPtr &y) {
    auto r = iso_check(*x, *y);
    if (!r.iso) return std::nullopt;
    return SimplicialMap{x, y, r.images};
}

Report is_isomorphism(const SimplicialMap &f) {
    Report r = validate(f);
    if (!r.ok) return r;
    const auto &X = *f.dom;
    const auto &Y = *f.cod;
    int top = std::max(X.top(), Y.top());
    for (int d = 0; d <= top; ++d)
        if (X.count(d) != Y.count(d)) return Report::failure("cell counts differ in dimension " + std::to_string(d));
    std::set<Simplex> seen;
    for (int d = 0; d <= X.top(); ++d)
        for (int i = 0; i < X.count(d); ++i) {
            const Simplex &z = f.image({d, i});
            if (z.degenerate()) return Report::failure("a non-degenerate cell is sent to a degenerate simplex");
            if (!seen.insert(z).second) return Report::failure("two cells share an image");
        }
    return Report::success();
}

}  // namespace sset
