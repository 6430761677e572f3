#include "sset/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sset {

namespace delta {

Mono surjection(const Word &w, int target_dim) {
    int m = target_dim + static_cast<int>(w.size());
    Mono s(m + 1, 0);
    size_t k = 0;
    for (int j = 0; j < m; ++j) {
        bool rep = k < w.size() && w[k] == j;
        if (rep) ++k;
        s[j + 1] = s[j] + (rep ? 0 : 1);
    }
    return s;
}

Word word_of(const Mono &surj) {
    Word w;
    for (size_t j = 0; j + 1 < surj.size(); ++j)
        if (surj[j] == surj[j + 1]) w.push_back(static_cast<int>(j));
    return w;
}

bool is_valid_word(const Word &w, int dim) {
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0 || w[i] >= dim) return false;
        if (i > 0 && w[i] <= w[i - 1]) return false;
    }
    return true;
}

Mono compose(const Mono &f, const Mono &g) {
    Mono r(g.size());
    for (size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
    return r;
}

Mono face_map(int m, int i) {
    Mono r;
    for (int v = 0; v <= m; ++v)
        if (v != i) r.push_back(v);
    return r;
}

Mono degeneracy_map(int m, int j) {
    Mono r;
    for (int v = 0; v <= m + 1; ++v) r.push_back(v <= j ? v : v - 1);
    return r;
}

Mono identity(int m) {
    Mono r(m + 1);
    std::iota(r.begin(), r.end(), 0);
    return r;
}

std::vector<Word> words(int m, int k) {
    std::vector<Word> out;
    if (k > m || k < 0) return out;
    Word cur;
    auto rec = [&](auto &&self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int j = start; j < m; ++j) {
            cur.push_back(j);
            self(self, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace delta

Simplex degenerate(const Simplex &z, const Word &w) {
    if (w.empty()) return z;
    Mono s = delta::compose(delta::surjection(z.word, z.cell.dim), delta::surjection(w, z.dim()));
    return Simplex{delta::word_of(s), z.cell};
}

Word repeats(const Simplex &z) { return z.word; }

std::vector<int> SimplicialSet::counts() const {
    std::vector<int> c;
    for (int d = 0; d <= top(); ++d) c.push_back(count(d));
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

int SimplicialSet::total_cells() const {
    int t = 0;
    for (int d = 0; d <= top(); ++d) t += count(d);
    return t;
}

std::optional<CellId> SimplicialSet::find(int d, const std::string &name) const {
    if (d < 0 || d > top()) return std::nullopt;
    auto it = index_[d].find(name);
    if (it == index_[d].end()) return std::nullopt;
    return CellId{d, it->second};
}

CellId SimplicialSet::at(int d, const std::string &name) const {
    auto c = find(d, name);
    if (!c) throw InvalidInput("no " + std::to_string(d) + "-cell named '" + name + "'");
    return *c;
}

Simplex SimplicialSet::face_along(CellId x, const std::vector<int> &img) const {
    if (static_cast<int>(img.size()) == x.dim + 1) return cell_simplex(x);
    // largest missing vertex
    int miss = x.dim;
    for (int k = static_cast<int>(img.size()) - 1; k >= 0 && img[k] == miss; --k) --miss;
    const Simplex &z = faces_[x.dim][x.index][miss];
    Mono sub(img.size());
    for (size_t k = 0; k < img.size(); ++k) sub[k] = img[k] < miss ? img[k] : img[k] - 1;
    return apply(z, sub);
}

Simplex SimplicialSet::apply(const Simplex &z, const Mono &theta) const {
    if (z.word.empty() && static_cast<int>(theta.size()) == z.cell.dim + 1) {
        bool id = true;
        for (size_t i = 0; i < theta.size(); ++i)
            if (theta[i] != static_cast<int>(i)) id = false;
        if (id) return z;
    }
    Mono f = delta::compose(delta::surjection(z.word, z.cell.dim), theta);
    std::vector<int> img;
    Mono eta(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        if (img.empty() || img.back() != f[i]) img.push_back(f[i]);
        eta[i] = static_cast<int>(img.size()) - 1;
    }
    Simplex y = face_along(z.cell, img);
    return degenerate(y, delta::word_of(eta));
}

Simplex SimplicialSet::face(const Simplex &z, int i) const { return apply(z, delta::face_map(z.dim(), i)); }

Simplex SimplicialSet::degeneracy(const Simplex &z, int j) const { return degenerate(z, Word{j}); }

std::vector<int> SimplicialSet::vertices(const Simplex &z) const {
    const auto &v = verts_[z.cell.dim][z.cell.index];
    Mono s = delta::surjection(z.word, z.cell.dim);
    std::vector<int> out(s.size());
    for (size_t i = 0; i < s.size(); ++i) out[i] = v[s[i]];
    return out;
}

std::vector<Simplex> SimplicialSet::all_simplices(int m) const {
    std::vector<Simplex> out;
    for (int p = 0; p <= std::min(m, top()); ++p) {
        auto ws = delta::words(m, m - p);
        for (int i = 0; i < count(p); ++i)
            for (const auto &w : ws) out.push_back(Simplex{w, CellId{p, i}});
    }
    return out;
}

std::string SimplicialSet::render(const Simplex &z) const {
    if (z.word.empty()) return name(z.cell);
    std::string s = "s";
    for (size_t i = 0; i < z.word.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(z.word[i]);
    }
    return s + "(" + name(z.cell) + ")";
}

void Builder::ensure(int d) {
    while (static_cast<int>(s_.names_.size()) <= d) {
        s_.names_.emplace_back();
        s_.faces_.emplace_back();
        s_.verts_.emplace_back();
        s_.index_.emplace_back();
    }
}

std::optional<CellId> Builder::find(int d, const std::string &name) const { return s_.find(d, name); }

CellId Builder::at(int d, const std::string &name) const { return s_.at(d, name); }

int Builder::count(int d) const { return s_.count(d); }

CellId Builder::add(int d, const std::string &name, std::vector<Simplex> faces) {
    if (d < 0) throw InvalidInput("negative dimension");
    if (static_cast<int>(faces.size()) != (d == 0 ? 0 : d + 1))
        throw InvalidInput("cell '" + name + "' needs " + std::to_string(d == 0 ? 0 : d + 1) + " faces");
    for (const auto &f : faces) {
        if (f.dim() != d - 1 || f.cell.dim < 0 || f.cell.dim > s_.top() || f.cell.index < 0 ||
            f.cell.index >= s_.count(f.cell.dim) || !delta::is_valid_word(f.word, f.dim()))
            throw InvalidInput("cell '" + name + "' has a malformed face");
    }
    ensure(d);
    if (s_.index_[d].count(name)) throw InvalidInput("duplicate " + std::to_string(d) + "-cell name '" + name + "'");
    int idx = static_cast<int>(s_.names_[d].size());
    std::vector<int> verts;
    if (d == 0) {
        verts.push_back(idx);
    } else {
        verts = s_.vertices(faces[d]);
        verts.push_back(s_.vertices(faces[0]).back());
    }
    s_.names_[d].push_back(name);
    s_.faces_[d].push_back(std::move(faces));
    s_.verts_[d].push_back(std::move(verts));
    s_.index_[d].emplace(name, idx);
    return CellId{d, idx};
}

void Builder::truncate(int bound) { bound_ = bound; }

SimplicialSet Builder::build() {
    SimplicialSet out = std::move(s_);
    s_ = SimplicialSet{};
    if (bound_) {
        out.truncated_ = true;
        out.dim_ = *bound_;
        out.names_.resize(*bound_ + 1);
        out.faces_.resize(*bound_ + 1);
        out.verts_.resize(*bound_ + 1);
        out.index_.resize(*bound_ + 1);
    } else {
        int d = static_cast<int>(out.names_.size()) - 1;
        while (d >= 0 && out.names_[d].empty()) --d;
        out.dim_ = d;
        out.names_.resize(d + 1);
        out.faces_.resize(d + 1);
        out.verts_.resize(d + 1);
        out.index_.resize(d + 1);
    }
    bound_.reset();
    return out;
}

bool MarkedSimplicialSet::is_marked(const Simplex &edge) const {
    if (edge.degenerate()) return true;
    return edge.cell.dim == 1 && marked.count(edge.cell.index) > 0;
}

MarkedSimplicialSet MarkedSimplicialSet::flat(SSetPtr s) { return {std::move(s), {}}; }

MarkedSimplicialSet MarkedSimplicialSet::sharp(SSetPtr s) {
    MarkedSimplicialSet m{std::move(s), {}};
    for (int i = 0; i < m.space->count(1); ++i) m.marked.insert(i);
    return m;
}

Simplex SimplicialMap::operator()(const Simplex &z) const {
    return degenerate(images[z.cell.dim][z.cell.index], z.word);
}

SimplicialMap SimplicialMap::identity(SSetPtr s) {
    SimplicialMap f{s, s, {}};
    f.images.resize(s->top() + 1);
    for (int d = 0; d <= s->top(); ++d)
        for (int i = 0; i < s->count(d); ++i) f.images[d].push_back(cell_simplex({d, i}));
    return f;
}

SimplicialMap compose(const SimplicialMap &g, const SimplicialMap &f) {
    SimplicialMap h{f.dom, g.cod, f.images};
    for (auto &level : h.images)
        for (auto &z : level) z = g(z);
    return h;
}

bool is_mono(const SimplicialMap &f) {
    std::set<Simplex> seen;
    for (const auto &level : f.images)
        for (const auto &z : level) {
            if (z.degenerate() || !seen.insert(z).second) return false;
        }
    return true;
}

bool same_structure(const SimplicialSet &a, const SimplicialSet &b) {
    if (a.top() != b.top() || a.truncated() != b.truncated() || a.dim() != b.dim()) return false;
    for (int d = 0; d <= a.top(); ++d) {
        if (a.count(d) != b.count(d)) return false;
        for (int i = 0; i < a.count(d); ++i) {
            if (a.name({d, i}) != b.name({d, i}) || a.faces({d, i}) != b.faces({d, i})) return false;
        }
    }
    return true;
}

namespace {

std::string cell_label(const SimplicialSet &x, CellId c) { return std::to_string(c.dim) + "-cell '" + x.name(c) + "'"; }

}  // namespace

Report validate(const SimplicialSet &x) {
    for (int d = 0; d <= x.top(); ++d) {
        std::set<std::string> seen;
        for (int i = 0; i < x.count(d); ++i) {
            CellId c{d, i};
            if (!seen.insert(x.name(c)).second) return Report::failure("duplicate name at " + cell_label(x, c));
            const auto &fs = x.faces(c);
            if (static_cast<int>(fs.size()) != (d == 0 ? 0 : d + 1))
                return Report::failure("wrong face count at " + cell_label(x, c));
            for (size_t k = 0; k < fs.size(); ++k) {
                const Simplex &f = fs[k];
                if (f.dim() != d - 1 || !delta::is_valid_word(f.word, f.dim()) || f.cell.dim < 0 ||
                    f.cell.index >= x.count(f.cell.dim))
                    return Report::failure("face " + std::to_string(k) + " of " + cell_label(x, c) +
                                           " is not in normal form");
            }
        }
    }
    for (int d = 2; d <= x.top(); ++d) {
        for (int idx = 0; idx < x.count(d); ++idx) {
            Simplex z = cell_simplex({d, idx});
            for (int j = 1; j <= d; ++j)
                for (int i = 0; i < j; ++i) {
                    Simplex lhs = x.face(x.face(z, j), i);
                    Simplex rhs = x.face(x.face(z, i), j - 1);
                    if (lhs != rhs)
                        return Report::failure("simplicial identity violated at (d" + std::to_string(i) + ",d" +
                                               std::to_string(j) + ") on " + cell_label(x, z.cell));
                }
        }
    }
    return Report::success();
}

Report validate(const MarkedSimplicialSet &x) {
    if (!x.space) return Report::failure("missing space");
    Report r = validate(*x.space);
    if (!r.ok) return r;
    for (int e : x.marked)
        if (e < 0 || e >= x.space->count(1)) return Report::failure("marked edge index out of range");
    return r;
}

Report validate(const SimplicialMap &f) {
    if (!f.dom || !f.cod) return Report::failure("missing domain or codomain");
    const auto &X = *f.dom;
    const auto &Y = *f.cod;
    if (static_cast<int>(f.images.size()) != X.top() + 1) return Report::failure("image table has wrong shape");
    for (int d = 0; d <= X.top(); ++d) {
        if (static_cast<int>(f.images[d].size()) != X.count(d)) return Report::failure("image table has wrong shape");
        for (int i = 0; i < X.count(d); ++i) {
            const Simplex &z = f.images[d][i];
            if (z.dim() != d)
                return Report::failure("dimension mismatch: " + cell_label(X, {d, i}) + " sent to a " +
                                       std::to_string(z.dim()) + "-simplex");
            if (z.cell.dim < 0 || z.cell.dim > Y.top() || z.cell.index < 0 || z.cell.index >= Y.count(z.cell.dim) ||
                !delta::is_valid_word(z.word, d))
                return Report::failure("image of " + cell_label(X, {d, i}) + " is not a valid simplex");
        }
    }
    for (int d = 1; d <= X.top(); ++d)
        for (int i = 0; i < X.count(d); ++i)
            for (int k = 0; k <= d; ++k) {
                Simplex a = f(X.faces({d, i})[k]);
                Simplex b = Y.face(f.images[d][i], k);
                if (a != b)
                    return Report::failure("map does not commute with d" + std::to_string(k) + " on " +
                                           cell_label(X, {d, i}));
            }
    return Report::success();
}

Report validate(const MarkedMap &f) {
    Report r = validate(f.map);
    if (!r.ok) return r;
    for (int e : f.dom.marked) {
        Simplex img = f.map.image({1, e});
        if (!f.cod.is_marked(img))
            return Report::failure("marked edge '" + f.dom.space->name({1, e}) + "' sent to an unmarked edge");
    }
    return r;
}

}  // namespace sset
