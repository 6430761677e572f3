#include "sset/necklace.hpp"

#include <algorithm>
#include <bit>

#include "sset/category.hpp"
#include "sset/constructions.hpp"

namespace sset {

namespace {

constexpr int max_vertices = 64;

VertexMask bit(int v) { return VertexMask{1} << v; }

bool is_point(const FlaggedNecklace &n) { return n.beads.size() == 1 && n.beads[0].dim() == 0; }

VertexMask remap(VertexMask m, const std::vector<int> &to) {
    VertexMask out = 0;
    for (int v = 0; v < static_cast<int>(to.size()); ++v)
        if (m & bit(v)) out |= bit(to[v]);
    return out;
}

std::string mask_text(VertexMask m, int count) {
    std::string s;
    bool wide = count > 10;
    bool first = true;
    for (int v = 0; v < count; ++v)
        if (m & bit(v)) {
            if (wide && !first) s += ',';
            s += std::to_string(v);
            first = false;
        }
    return s;
}

// Restriction to the sub-necklace spanned by the last flag entry.
void restrict_to_top(const SimplicialSet &s, FlaggedNecklace &n) {
    if (is_point(n)) return;
    VertexMask top = n.flag.back();
    if (top == n.all_mask()) return;
    std::vector<int> to(n.vertex_count(), -1);
    std::vector<Simplex> beads;
    int next = 0;
    int a = 0;
    for (const auto &z : n.beads) {
        int b = z.dim();
        Mono keep;
        for (int j = 0; j <= b; ++j)
            if (top & bit(a + j)) keep.push_back(j);
        for (size_t k = 0; k < keep.size(); ++k) {
            int v = a + keep[k];
            if (to[v] < 0) to[v] = next++;
        }
        beads.push_back(static_cast<int>(keep.size()) == b + 1 ? z : s.apply(z, keep));
        a += b;
    }
    for (auto &m : n.flag) m = remap(m, to);
    n.beads = std::move(beads);
}

// Factors degenerate beads through their non-degenerate cores; beads collapsed to a point disappear.
bool collapse(const SimplicialSet &s, FlaggedNecklace &n) {
    if (is_point(n)) return false;
    bool any = false;
    for (const auto &z : n.beads)
        if (z.degenerate()) any = true;
    if (!any) return false;
    std::vector<int> to(n.vertex_count(), -1);
    std::vector<Simplex> beads;
    int a = 0;
    to[0] = 0;
    for (const auto &z : n.beads) {
        int b = z.dim();
        Mono sigma = delta::surjection(z.word, z.cell.dim);
        int base = to[a];
        for (int j = 0; j <= b; ++j) to[a + j] = base + sigma[j];
        if (z.cell.dim > 0) beads.push_back(cell_simplex(z.cell));
        a += b;
    }
    if (beads.empty()) {
        Simplex v = s.apply(n.beads[0], {0});
        beads.push_back(v);
    }
    for (auto &m : n.flag) m = remap(m, to);
    n.beads = std::move(beads);
    return true;
}

// Splits a bead at the least non-joint vertex of T_0.
bool split(const SimplicialSet &s, FlaggedNecklace &n) {
    if (is_point(n)) return false;
    VertexMask extra = n.flag.front() & ~n.joint_mask();
    if (!extra) return false;
    int v = std::countr_zero(extra);
    int a = 0;
    for (size_t i = 0; i < n.beads.size(); ++i) {
        int b = n.beads[i].dim();
        if (v > a && v < a + b) {
            Mono front, back;
            for (int j = 0; j <= v - a; ++j) front.push_back(j);
            for (int j = v - a; j <= b; ++j) back.push_back(j);
            Simplex z = n.beads[i];
            n.beads[i] = s.apply(z, back);
            n.beads.insert(n.beads.begin() + static_cast<long>(i), s.apply(z, front));
            return true;
        }
        a += b;
    }
    return false;
}

}  // namespace

int FlaggedNecklace::vertex_count() const {
    if (beads.size() == 1 && beads[0].dim() == 0) return 1;
    int n = 1;
    for (const auto &z : beads) n += z.dim();
    return n;
}

std::vector<int> FlaggedNecklace::profile() const {
    std::vector<int> p;
    for (const auto &z : beads) p.push_back(z.dim());
    return p;
}

std::vector<int> FlaggedNecklace::joints() const {
    std::vector<int> j{0};
    if (beads.size() == 1 && beads[0].dim() == 0) return j;
    int a = 0;
    for (const auto &z : beads) j.push_back(a += z.dim());
    return j;
}

VertexMask FlaggedNecklace::joint_mask() const {
    VertexMask m = 0;
    for (int v : joints()) m |= bit(v);
    return m;
}

VertexMask FlaggedNecklace::all_mask() const {
    int c = vertex_count();
    return c >= 64 ? ~VertexMask{0} : bit(c) - 1;
}

int start_vertex(const SimplicialSet &s, const FlaggedNecklace &n) { return s.vertices(n.beads.front()).front(); }
int end_vertex(const SimplicialSet &s, const FlaggedNecklace &n) { return s.vertices(n.beads.back()).back(); }

Report validate(const SimplicialSet &s, const FlaggedNecklace &n, std::optional<int> from, std::optional<int> to) {
    if (n.beads.empty()) return Report::failure("necklace has no beads");
    if (n.flag.empty()) return Report::failure("necklace has an empty flag");
    if (n.vertex_count() > max_vertices) return Report::failure("necklace has more than 64 vertices");
    for (const auto &z : n.beads) {
        if (z.cell.dim < 0 || z.cell.dim > s.top() || z.cell.index < 0 || z.cell.index >= s.count(z.cell.dim))
            return Report::failure("bead refers to a missing cell");
        if (!delta::is_valid_word(z.word, z.dim())) return Report::failure("bead is not in normal form");
        if (z.dim() == 0 && n.beads.size() > 1) return Report::failure("zero-dimensional bead in a longer necklace");
    }
    for (size_t i = 0; i + 1 < n.beads.size(); ++i)
        if (s.vertices(n.beads[i]).back() != s.vertices(n.beads[i + 1]).front())
            return Report::failure("beads " + std::to_string(i) + " and " + std::to_string(i + 1) + " do not meet");
    VertexMask all = n.all_mask(), joints = n.joint_mask();
    for (size_t j = 0; j < n.flag.size(); ++j) {
        if ((n.flag[j] & joints) != joints) return Report::failure("flag entry misses a joint");
        if ((n.flag[j] & ~all) != 0) return Report::failure("flag entry outside the necklace");
        if (j > 0 && (n.flag[j - 1] & ~n.flag[j]) != 0) return Report::failure("flag is not increasing");
    }
    if (from && start_vertex(s, n) != *from) return Report::failure("necklace starts at the wrong vertex");
    if (to && end_vertex(s, n) != *to) return Report::failure("necklace ends at the wrong vertex");
    return Report::success();
}

FlaggedNecklace normalize(const SimplicialSet &s, FlaggedNecklace n) {
    Report r = validate(s, n);
    if (!r.ok) throw InvalidInput("invalid flagged necklace: " + r.message);
    restrict_to_top(s, n);
    for (;;) {
        if (collapse(s, n)) continue;
        if (split(s, n)) continue;
        break;
    }
    return n;
}

bool is_canonical(const SimplicialSet &s, const FlaggedNecklace &n) {
    if (!validate(s, n).ok) return false;
    for (const auto &z : n.beads)
        if (z.degenerate()) return false;
    return n.flag.front() == n.joint_mask() && n.flag.back() == n.all_mask();
}

std::string necklace_name(const SimplicialSet &s, const FlaggedNecklace &n) {
    if (is_point(n)) return "id(" + s.name(n.beads[0].cell) + ")";
    std::string out;
    for (size_t i = 0; i < n.beads.size(); ++i) out += (i ? "+" : "") + s.render(n.beads[i]);
    if (n.flag.size() > 1) {
        out += "[";
        for (size_t j = 0; j < n.flag.size(); ++j) out += (j ? "|" : "") + mask_text(n.flag[j], n.vertex_count());
        out += "]";
    }
    return out;
}

FlaggedNecklace identity_necklace(const SimplicialSet &, int vertex, int length) {
    return FlaggedNecklace{{cell_simplex({0, vertex})}, std::vector<VertexMask>(length + 1, 1)};
}

FlaggedNecklace compose(const SimplicialSet &s, const FlaggedNecklace &x, const FlaggedNecklace &y) {
    if (x.flag.size() != y.flag.size()) throw InvalidInput("composed necklaces have different flag lengths");
    if (end_vertex(s, y) != start_vertex(s, x)) throw InvalidInput("composed necklaces do not share an endpoint");
    if (is_point(y)) return normalize(s, x);
    if (is_point(x)) return normalize(s, y);
    int offset = y.vertex_count() - 1;
    if (offset + x.vertex_count() > max_vertices) throw Inconclusive("composite necklace exceeds 64 vertices");
    FlaggedNecklace c;
    c.beads = y.beads;
    c.beads.insert(c.beads.end(), x.beads.begin(), x.beads.end());
    for (size_t j = 0; j < x.flag.size(); ++j) c.flag.push_back(y.flag[j] | (x.flag[j] << offset));
    return normalize(s, c);
}

FlaggedNecklace push_forward(const SimplicialMap &f, const FlaggedNecklace &n) {
    FlaggedNecklace out{{}, n.flag};
    for (const auto &z : n.beads) out.beads.push_back(f(z));
    return normalize(*f.cod, out);
}

// ---- mapping complexes -----------------------------------------------------

namespace {

std::pair<std::vector<CellId>, std::vector<VertexMask>> strict_key(const FlaggedNecklace &n, Word &word) {
    std::vector<CellId> cells;
    for (const auto &z : n.beads) cells.push_back(z.cell);
    std::vector<VertexMask> distinct;
    Mono eta;
    for (auto m : n.flag) {
        if (distinct.empty() || distinct.back() != m) distinct.push_back(m);
        eta.push_back(static_cast<int>(distinct.size()) - 1);
    }
    word = delta::word_of(eta);
    return {cells, distinct};
}

}  // namespace

FlaggedNecklace MappingComplex::necklace(const Simplex &z) const {
    FlaggedNecklace n = cells[z.cell.dim][z.cell.index];
    if (z.word.empty()) return n;
    Mono sigma = delta::surjection(z.word, z.cell.dim);
    std::vector<VertexMask> flag;
    for (int j : sigma) flag.push_back(n.flag[j]);
    n.flag = std::move(flag);
    return n;
}

std::optional<Simplex> MappingComplex::find(const FlaggedNecklace &n) const {
    FlaggedNecklace c = normalize(*base, n);
    Word w;
    auto it = index.find(strict_key(c, w));
    if (it == index.end()) return std::nullopt;
    return Simplex{w, it->second};
}

Simplex MappingComplex::simplex(const FlaggedNecklace &n) const {
    auto z = find(n);
    if (z) return *z;
    FlaggedNecklace c = normalize(*base, n);
    if (!complete || c.length() > space->top())
        throw Inconclusive("necklace " + necklace_name(*base, c) + " lies outside the bounded mapping complex");
    throw InvalidInput("necklace " + necklace_name(*base, c) + " is not a simplex of this mapping complex");
}

MappingComplex mapping_complex(SSetPtr sp, int from, int to, const MappingOptions &opts) {
    const auto &S = *sp;
    if (from < 0 || from >= S.count(0) || to < 0 || to >= S.count(0)) throw InvalidInput("endpoint is not a vertex");
    if (opts.dim_bound < 0) throw InvalidInput("negative dimension bound");
    const int D = opts.dim_bound;
    int N = opts.bead_bound >= 0 ? opts.bead_bound : std::max(S.dim(), 0) * (D + 2) + 2;
    N = std::min(N, max_vertices);
    MappingComplex mc;
    mc.base = sp;
    mc.from = from;
    mc.to = to;
    mc.vertex_bound = N;

    // totally non-degenerate necklaces from `from` to `to` with at most N vertices
    std::vector<std::vector<CellId>> out_of(S.count(0));
    for (int d = 1; d <= S.top(); ++d)
        for (int i = 0; i < S.count(d); ++i) out_of[S.cell_vertices({d, i}).front()].push_back({d, i});
    std::vector<FlaggedNecklace> necklaces;
    if (from == to) necklaces.push_back(FlaggedNecklace{{cell_simplex({0, from})}, {1}});
    bool cut = false;
    std::vector<Simplex> path;
    auto dfs = [&](auto &&self, int v, int used) -> void {
        for (CellId c : out_of[v]) {
            if (used + c.dim > N) {
                cut = true;
                continue;
            }
            path.push_back(cell_simplex(c));
            int w = S.cell_vertices(c).back();
            if (w == to) necklaces.push_back(FlaggedNecklace{path, {}});
            self(self, w, used + c.dim);
            path.pop_back();
        }
    };
    dfs(dfs, from, 1);
    if (cut && !opts.allow_partial)
        throw Inconclusive("necklace vertex bound " + std::to_string(N) + " reached; raise the bead bound");
    mc.complete = !cut;

    auto image_names = [&](const FlaggedNecklace &n) {
        std::vector<std::string> v;
        for (const auto &z : n.beads) v.push_back(S.name(z.cell));
        return v;
    };
    std::sort(necklaces.begin(), necklaces.end(), [&](const FlaggedNecklace &a, const FlaggedNecklace &b) {
        auto ka = std::make_tuple(a.vertex_count(), a.profile(), image_names(a));
        auto kb = std::make_tuple(b.vertex_count(), b.profile(), image_names(b));
        return ka < kb;
    });

    // flags: ordered partitions of the non-joint vertices into k non-empty blocks
    std::vector<std::vector<FlaggedNecklace>> by_dim(D + 1);
    bool higher = false;
    for (auto &n : necklaces) {
        VertexMask J = n.joint_mask();
        std::vector<int> inner;
        for (int v = 0; v < n.vertex_count(); ++v)
            if (!(J & bit(v))) inner.push_back(v);
        int m = static_cast<int>(inner.size());
        if (m > D) higher = true;
        if (m == 0) {
            n.flag = {J};
            by_dim[0].push_back(n);
            continue;
        }
        for (int k = 1; k <= std::min(m, D); ++k) {
            std::vector<std::vector<VertexMask>> flags;
            std::vector<int> block(m, 0);
            auto rec = [&](auto &&self, int pos) -> void {
                if (pos == m) {
                    std::vector<bool> hit(k + 1, false);
                    for (int b : block) hit[b] = true;
                    for (int b = 1; b <= k; ++b)
                        if (!hit[b]) return;
                    std::vector<VertexMask> f(k + 1, J);
                    for (int t = 0; t < m; ++t)
                        for (int j = block[t]; j <= k; ++j) f[j] |= bit(inner[t]);
                    flags.push_back(std::move(f));
                    return;
                }
                for (int b = 1; b <= k; ++b) {
                    block[pos] = b;
                    self(self, pos + 1);
                }
            };
            rec(rec, 0);
            std::sort(flags.begin(), flags.end());
            for (auto &f : flags) by_dim[k].push_back(FlaggedNecklace{n.beads, std::move(f)});
        }
    }

    Builder b;
    mc.cells.resize(D + 1);
    for (int k = 0; k <= D; ++k)
        for (const auto &n : by_dim[k]) {
            std::vector<Simplex> faces;
            for (int i = 0; i <= k && k > 0; ++i) {
                FlaggedNecklace f = n;
                f.flag.erase(f.flag.begin() + i);
                FlaggedNecklace c = normalize(S, f);
                Word w;
                auto it = mc.index.find(strict_key(c, w));
                if (it == mc.index.end()) throw Error("face of " + necklace_name(S, n) + " missing from the mapping complex");
                faces.push_back(Simplex{w, it->second});
            }
            CellId id = b.add(k, necklace_name(S, n), std::move(faces));
            Word w;
            mc.index[strict_key(n, w)] = id;
            mc.cells[k].push_back(n);
        }
    if (higher) b.truncate(D);
    mc.space = b.build_ptr();
    return mc;
}

MappingComplex mapping_complex(SSetPtr s, const std::string &from, const std::string &to, const MappingOptions &opts) {
    int a = s->at(0, from).index, c = s->at(0, to).index;
    return mapping_complex(std::move(s), a, c, opts);
}

SSetPtr cube_oracle(int n, int i, int j, int bound) {
    if (!(0 <= i && i <= j && j <= n)) throw InvalidInput("cube oracle needs 0 <= i <= j <= n");
    std::vector<int> masks;
    std::vector<std::string> names;
    int inner = std::max(j - i - 1, 0);
    for (int m = 0; m < (1 << inner); ++m) {
        int mask = (1 << i) | (1 << j);
        for (int t = 0; t < inner; ++t)
            if (m & (1 << t)) mask |= 1 << (i + 1 + t);
        masks.push_back(mask);
        std::string nm;
        for (int v = i; v <= j; ++v)
            if (mask & (1 << v)) nm += (nm.empty() || j < 10 ? "" : ",") + std::to_string(v);
        names.push_back(nm);
    }
    auto C = FiniteCategory::poset(names, [&](int a, int b) { return (masks[a] & masks[b]) == masks[a]; });
    return nerve(C, bound);
}

Simplex compose(const MappingComplex &bc, const MappingComplex &ab, const MappingComplex &ac, const Simplex &x,
                const Simplex &y) {
    if (x.dim() != y.dim()) throw InvalidInput("composed simplices have different dimensions");
    if (ab.to != bc.from || ac.from != ab.from || ac.to != bc.to) throw InvalidInput("endpoints do not match");
    return ac.simplex(compose(*ac.base, bc.necklace(x), ab.necklace(y)));
}

SimplicialMap induced_map(const MappingComplex &src, const MappingComplex &tgt, const SimplicialMap &f) {
    if (f.image({0, src.from}) != cell_simplex({0, tgt.from}) || f.image({0, src.to}) != cell_simplex({0, tgt.to}))
        throw InvalidInput("map does not send the endpoints to the target endpoints");
    SimplicialMap m{src.space, tgt.space, {}};
    m.images.resize(src.space->top() + 1);
    for (int d = 0; d <= src.space->top(); ++d)
        for (const auto &n : src.cells[d]) m.images[d].push_back(tgt.simplex(push_forward(f, n)));
    return m;
}

}  // namespace sset
