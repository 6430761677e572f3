#include "sset/lifting.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sset/constructions.hpp"

namespace sset {

void SimplexIndex::require(int m) const {
    if (x_->truncated() && m > x_->dim())
        throw Inconclusive("needs simplices of dimension " + std::to_string(m) + " beyond the truncation at " +
                           std::to_string(x_->dim()));
}

const std::vector<Simplex> &SimplexIndex::all(int m) {
    auto it = all_.find(m);
    if (it != all_.end()) return it->second;
    require(m);
    auto v = x_->all_simplices(m);
    std::stable_sort(v.begin(), v.end(), [&](const Simplex &a, const Simplex &b) {
        if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
        return x_->render(a) < x_->render(b);
    });
    return all_.emplace(m, std::move(v)).first->second;
}

const std::vector<Simplex> &SimplexIndex::with_faces(int m, const std::vector<Simplex> &faces, int skip) {
    auto key = std::make_pair(m, skip);
    auto it = by_faces_.find(key);
    if (it == by_faces_.end()) {
        std::map<std::vector<Simplex>, std::vector<Simplex>> table;
        for (const auto &z : all(m)) {
            std::vector<Simplex> fs;
            for (int i = 0; i <= m && m > 0; ++i)
                if (i != skip) fs.push_back(x_->face(z, i));
            table[fs].push_back(z);
        }
        it = by_faces_.emplace(key, std::move(table)).first;
    }
    std::vector<Simplex> probe;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        if (i != skip) probe.push_back(faces[i]);
    auto f = it->second.find(probe);
    return f == it->second.end() ? none_ : f->second;
}

Report LiftingProblem::validate() const {
    for (const auto *f : {&i, &p, &top, &bottom}) {
        Report r = sset::validate(*f);
        if (!r.ok) return r;
    }
    if (i.dom != top.dom || i.cod != bottom.dom || top.cod != p.dom || bottom.cod != p.cod)
        if (!same_structure(*i.dom, *top.dom) || !same_structure(*i.cod, *bottom.dom) ||
            !same_structure(*top.cod, *p.dom) || !same_structure(*bottom.cod, *p.cod))
            return Report::failure("lifting square objects do not match");
    if (!is_mono(i)) return Report::failure("left map is not a monomorphism");
    if (compose(p, top).images != compose(bottom, i).images) return Report::failure("square does not commute");
    return Report::success();
}

LiftingProblem extension_problem(const SimplicialMap &i, const SimplicialMap &top) {
    auto pt = point();
    auto to_point = [&](const SSetPtr &s) {
        SimplicialMap f{s, pt, {}};
        f.images.resize(s->top() + 1);
        for (int d = 0; d <= s->top(); ++d)
            for (int k = 0; k < s->count(d); ++k)
                f.images[d].push_back(degenerate(cell_simplex({0, 0}), [&] {
                    Word w(d);
                    std::iota(w.begin(), w.end(), 0);
                    return w;
                }()));
        return f;
    };
    return LiftingProblem{i, to_point(top.cod), top, to_point(i.cod), std::nullopt, std::nullopt};
}

namespace {

void enumerate(const LiftingProblem &pr, SimplexIndex &xi, const std::function<bool(const SimplicialMap &)> &visit) {
    const auto &B = *pr.i.cod;
    const auto &A = *pr.i.dom;
    if (!is_mono(pr.i)) throw InvalidInput("left map is not a monomorphism");
    std::vector<std::vector<std::optional<Simplex>>> image(B.top() + 1);
    for (int d = 0; d <= B.top(); ++d) image[d].resize(B.count(d));
    for (int d = 0; d <= A.top(); ++d)
        for (int a = 0; a < A.count(d); ++a) {
            CellId b = pr.i.image({d, a}).cell;
            image[b.dim][b.index] = pr.top.image({d, a});
        }
    std::vector<CellId> todo;
    for (int d = 0; d <= B.top(); ++d) {
        std::vector<CellId> level;
        for (int k = 0; k < B.count(d); ++k)
            if (!image[d][k]) level.push_back({d, k});
        std::sort(level.begin(), level.end(), [&](CellId a, CellId b) { return B.name(a) < B.name(b); });
        todo.insert(todo.end(), level.begin(), level.end());
    }
    // marked edges of B already fixed by the top map
    if (pr.marked_b && B.top() >= 1)
        for (int e : *pr.marked_b) {
            const auto &z = image[1][e];
            if (z && !z->degenerate() && !(pr.marked_x && pr.marked_x->count(z->cell.index))) return;
        }
    auto lifted = [&](const Simplex &z) { return degenerate(*image[z.cell.dim][z.cell.index], z.word); };
    auto finish = [&]() {
        SimplicialMap f{pr.i.cod, pr.p.dom, {}};
        f.images.resize(B.top() + 1);
        for (int d = 0; d <= B.top(); ++d)
            for (int k = 0; k < B.count(d); ++k) f.images[d].push_back(*image[d][k]);
        return visit(f);
    };
    auto rec = [&](auto &&self, size_t pos) -> bool {
        if (pos == todo.size()) return finish();
        CellId c = todo[pos];
        const std::vector<Simplex> *cands;
        std::vector<Simplex> faces;
        if (c.dim == 0) {
            cands = &xi.all(0);
        } else {
            for (const auto &f : B.faces(c)) faces.push_back(lifted(f));
            cands = &xi.with_faces(c.dim, faces);
        }
        Simplex want = pr.bottom.image(c);
        bool need_mark = c.dim == 1 && pr.marked_b && pr.marked_b->count(c.index);
        for (const auto &z : *cands) {
            if (pr.p(z) != want) continue;
            if (need_mark && !z.degenerate() && !(pr.marked_x && pr.marked_x->count(z.cell.index))) continue;
            image[c.dim][c.index] = z;
            if (!self(self, pos + 1)) return false;
        }
        image[c.dim][c.index].reset();
        return true;
    };
    rec(rec, 0);
}

std::string face_name(int n, int omit) {
    std::string s;
    for (int v = 0; v <= n; ++v)
        if (v != omit) s += std::to_string(v);
    return s;
}

// Faces d_i of Δ^n that lie in B (a horn or boundary), as cells of B.
std::vector<std::optional<CellId>> top_faces(const SimplicialSet &B, int n) {
    std::vector<std::optional<CellId>> out;
    for (int i = 0; i <= n; ++i) out.push_back(n >= 1 ? B.find(n - 1, face_name(n, i)) : std::nullopt);
    return out;
}

std::string witness_json(const SimplicialSet &X, const SimplicialSet &Y, int n, int k,
                         const std::vector<Simplex> &faces, const Simplex &target) {
    std::ostringstream o;
    o << "{\"n\":" << n << ",\"k\":" << k << ",\"faces\":[";
    bool first = true;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
        if (i == k) continue;
        o << (first ? "" : ",") << "\"" << X.render(faces[i]) << "\"";
        first = false;
    }
    o << "],\"target\":\"" << Y.render(target) << "\"}";
    return o.str();
}

SimplicialMap edge_map(const SSetPtr &x, const Simplex &e) {
    auto e1 = simplex(1);
    SimplicialMap f{e1, x, {{}, {}}};
    f.images[0] = {x->apply(e, {0}), x->apply(e, {1})};
    f.images[1] = {e};
    return f;
}

// Looks for a square from B (horn k, or the boundary when k < 0) into p without a diagonal filler.
// With a fixed edge (position j, e), only squares sending the edge j -> j+1 of B to e are considered.
std::optional<std::string> unfillable_square(const SimplicialMap &p, SimplexIndex &xi, SimplexIndex &yi, int n, int k,
                                             const std::optional<std::pair<int, Simplex>> &fixed_edge) {
    SSetPtr B = k >= 0 ? horn(n, k) : boundary(n);
    auto tf = top_faces(*B, n);
    LiftingProblem pr;
    if (fixed_edge) {
        auto inc = map_by_vertices(simplex(1), B, {fixed_edge->first, fixed_edge->first + 1});
        pr = extension_problem(inc, edge_map(p.dom, fixed_edge->second));
    } else {
        pr = extension_problem(SimplicialMap{empty_set(), B, {}}, SimplicialMap{empty_set(), p.dom, {}});
    }
    const auto &X = xi.space();
    const auto &Y = yi.space();
    std::optional<std::string> bad;
    enumerate(pr, xi, [&](const SimplicialMap &h) {
        std::vector<Simplex> faces(n + 1), pfaces(n + 1);
        for (int i = 0; i <= n; ++i)
            if (tf[i]) {
                faces[i] = h.image(*tf[i]);
                pfaces[i] = p(faces[i]);
            }
        const auto &ys = yi.with_faces(n, pfaces, k);
        if (ys.empty()) return true;
        const auto &xs = xi.with_faces(n, faces, k);
        std::set<Simplex> covered;
        for (const auto &x : xs) covered.insert(p(x));
        for (const auto &y : ys)
            if (!covered.count(y)) {
                bad = witness_json(X, Y, n, k, faces, y);
                return false;
            }
        return true;
    });
    return bad;
}

std::vector<int> horn_positions(FibrationKind kind, int n) {
    std::vector<int> ks;
    switch (kind) {
        case FibrationKind::inner:
            for (int k = 1; k < n; ++k) ks.push_back(k);
            break;
        case FibrationKind::left:
            for (int k = 0; k < n; ++k) ks.push_back(k);
            break;
        case FibrationKind::right:
            for (int k = 1; k <= n; ++k) ks.push_back(k);
            break;
        case FibrationKind::trivial:
            ks.push_back(-1);
            break;
    }
    return ks;
}

}  // namespace

void for_each_lift(const LiftingProblem &problem, const std::function<bool(const SimplicialMap &)> &visit) {
    SimplexIndex xi(problem.p.dom);
    enumerate(problem, xi, visit);
}

LiftResult find_lift(const LiftingProblem &problem) {
    LiftResult r;
    for_each_lift(problem, [&](const SimplicialMap &f) {
        r.found = true;
        r.lift = f;
        return false;
    });
    if (!r.found) r.reason = "exhaustive search found no lift";
    return r;
}

std::vector<SimplicialMap> all_maps(const SSetPtr &b, const SSetPtr &x) {
    std::vector<SimplicialMap> out;
    auto pr = extension_problem(SimplicialMap{empty_set(), b, {}}, SimplicialMap{empty_set(), x, {}});
    for_each_lift(pr, [&](const SimplicialMap &f) {
        out.push_back(f);
        return true;
    });
    return out;
}

}  // namespace sset

namespace sset {

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::holds:
            return "holds";
        case Outcome::fails:
            return "fails";
        default:
            return "inconclusive";
    }
}

std::string Verdict::json() const {
    std::ostringstream o;
    o << "{\"verdict\":\"" << to_string(outcome) << "\",\"bound\":" << bound;
    if (!witness.empty()) o << ",\"witness\":" << witness;
    if (!detail.empty()) o << ",\"detail\":\"" << detail << "\"";
    o << "}";
    return o.str();
}

FibrationKind fibration_kind(const std::string &name) {
    if (name == "inner") return FibrationKind::inner;
    if (name == "left") return FibrationKind::left;
    if (name == "right") return FibrationKind::right;
    if (name == "trivial") return FibrationKind::trivial;
    throw InvalidInput("unknown fibration kind '" + name + "'");
}

namespace {

Verdict inconclusive(int bound, const std::string &why) { return Verdict{Outcome::inconclusive, bound, "", why}; }

}  // namespace

Verdict classify_fibration(const SimplicialMap &p, FibrationKind kind, int bound) {
    if (bound < 1) throw InvalidInput("bound must be at least 1");
    SimplexIndex xi(p.dom), yi(p.cod);
    try {
        for (int n = kind == FibrationKind::trivial ? 0 : 1; n <= bound; ++n)
            for (int k : horn_positions(kind, n)) {
                auto bad = unfillable_square(p, xi, yi, n, k, std::nullopt);
                if (bad) return Verdict{Outcome::fails, bound, *bad, ""};
            }
    } catch (const Inconclusive &e) {
        return inconclusive(bound, e.what());
    }
    return Verdict{Outcome::holds, bound, "", ""};
}

Verdict is_p_cartesian(const SimplicialMap &p, const Simplex &edge, int bound) {
    if (bound < 2) throw InvalidInput("bound must be at least 2");
    if (edge.dim() != 1) throw InvalidInput("not an edge");
    SimplexIndex xi(p.dom), yi(p.cod);
    try {
        for (int n = 2; n <= bound; ++n) {
            auto bad = unfillable_square(p, xi, yi, n, n, std::make_pair(n - 1, edge));
            if (bad) return Verdict{Outcome::fails, bound, *bad, ""};
        }
    } catch (const Inconclusive &e) {
        return inconclusive(bound, e.what());
    }
    return Verdict{Outcome::holds, bound, "", ""};
}

Verdict is_marked_cartesian_fibration(const SimplicialMap &p, const std::set<int> &marked, int bound) {
    if (bound < 2) throw InvalidInput("bound must be at least 2");
    const auto &X = *p.dom;
    const auto &S = *p.cod;
    for (int e : marked)
        if (e < 0 || e >= X.count(1)) throw InvalidInput("marked edge out of range");
    Verdict inner = classify_fibration(p, FibrationKind::inner, bound);
    if (!inner.holds()) {
        inner.detail = "underlying map is not an inner fibration";
        return inner;
    }
    std::vector<bool> cart(X.count(1));
    for (int e = 0; e < X.count(1); ++e) {
        Verdict c = is_p_cartesian(p, cell_simplex({1, e}), bound);
        if (c.outcome == Outcome::inconclusive) return c;
        cart[e] = c.holds();
        if (cart[e] != (marked.count(e) > 0)) {
            std::string w = "{\"edge\":\"" + X.name({1, e}) + "\",\"marked\":" + (marked.count(e) ? "true" : "false") +
                            ",\"cartesian\":" + (cart[e] ? "true" : "false") + "}";
            return Verdict{Outcome::fails, bound, w, "marked edges differ from p-cartesian edges"};
        }
    }
    for (int f = 0; f < S.count(1); ++f) {
        const auto &sv = S.cell_vertices({1, f});
        for (int x = 0; x < X.count(0); ++x) {
            if (p.image({0, x}) != cell_simplex({0, sv[1]})) continue;
            bool found = false;
            for (int e = 0; e < X.count(1) && !found; ++e)
                found = cart[e] && X.cell_vertices({1, e})[1] == x && p.image({1, e}) == cell_simplex({1, f});
            if (!found) {
                std::string w = "{\"base_edge\":\"" + S.name({1, f}) + "\",\"target\":\"" + X.name({0, x}) + "\"}";
                return Verdict{Outcome::fails, bound, w, "no p-cartesian lift ending at the target"};
            }
        }
    }
    return Verdict{Outcome::holds, bound, "", ""};
}

HomotopyCategory homotopy_category(const SSetPtr &x, int bound) {
    if (bound < 2) throw InvalidInput("bound must be at least 2");
    auto to_point = extension_problem(SimplicialMap{empty_set(), x, {}}, SimplicialMap{empty_set(), x, {}}).p;
    Verdict v = classify_fibration(to_point, FibrationKind::inner, bound);
    if (v.outcome == Outcome::inconclusive) throw Inconclusive(v.detail);
    if (!v.holds()) throw InvalidInput("not an inf-category: unfillable inner horn " + v.witness);
    const auto &X = *x;
    SimplexIndex xi(x);
    const auto &edges = xi.all(1);
    std::map<Simplex, int> eid;
    for (size_t i = 0; i < edges.size(); ++i) eid[edges[i]] = static_cast<int>(i);
    std::vector<int> parent(edges.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto &s : xi.all(2)) {
        Simplex d0 = X.face(s, 0);
        if (!d0.degenerate()) continue;
        int a = find(eid[X.face(s, 2)]), b = find(eid[X.face(s, 1)]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    HomotopyCategory hc;
    auto &C = hc.category;
    for (int v0 = 0; v0 < X.count(0); ++v0) C.objects.push_back(X.name({0, v0}));
    std::map<int, int> class_of_root;
    std::vector<int> rep;
    for (size_t i = 0; i < edges.size(); ++i) {
        int r = find(static_cast<int>(i));
        if (class_of_root.count(r)) continue;
        int m = static_cast<int>(C.morphisms.size());
        class_of_root[r] = m;
        rep.push_back(static_cast<int>(i));
        auto vs = X.vertices(edges[i]);
        C.morphisms.push_back({"", vs[0], vs[1]});
    }
    C.identity.assign(X.count(0), -1);
    for (int v0 = 0; v0 < X.count(0); ++v0) {
        int m = class_of_root[find(eid[X.degeneracy(cell_simplex({0, v0}), 0)])];
        C.identity[v0] = m;
        C.morphisms[m].name = "id(" + X.name({0, v0}) + ")";
    }
    for (size_t m = 0; m < C.morphisms.size(); ++m)
        if (C.morphisms[m].name.empty()) {
            std::string best;
            for (size_t i = 0; i < edges.size(); ++i)
                if (!edges[i].degenerate() && class_of_root[find(static_cast<int>(i))] == static_cast<int>(m)) {
                    std::string nm = X.render(edges[i]);
                    if (best.empty() || nm < best) best = nm;
                }
            C.morphisms[m].name = best;
        }
    size_t nm = C.morphisms.size();
    C.comp.assign(nm, std::vector<int>(nm, -1));
    for (size_t g = 0; g < nm; ++g)
        for (size_t f = 0; f < nm; ++f) {
            if (C.morphisms[f].tgt != C.morphisms[g].src) continue;
            std::vector<Simplex> faces{edges[rep[g]], Simplex{}, edges[rep[f]]};
            const auto &fill = xi.with_faces(2, faces, 1);
            if (fill.empty()) throw Error("inner horn without filler inside an inf-category");
            C.comp[g][f] = class_of_root[find(eid[X.face(fill.front(), 1)])];
        }
    hc.edge_class.resize(X.count(1));
    for (int e = 0; e < X.count(1); ++e) hc.edge_class[e] = class_of_root[find(eid[cell_simplex({1, e})])];
    hc.identity_class = C.identity;
    Report r = C.validate();
    if (!r.ok) throw Error("homotopy category failed validation: " + r.message);
    return hc;
}

bool is_equivalence_edge(const SSetPtr &x, const Simplex &edge, int bound) {
    if (edge.dim() != 1) throw InvalidInput("not an edge");
    if (edge.degenerate()) return true;
    auto hc = homotopy_category(x, bound);
    return is_isomorphism(hc.category, hc.edge_class[edge.cell.index]);
}

}  // namespace sset
