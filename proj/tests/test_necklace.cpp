#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "sset/constructions.hpp"
#include "sset/iso.hpp"
#include "sset/necklace.hpp"

using namespace sset;

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int a) { return p[a] == a ? a : p[a] = find(p[a]); }
    void join(int a, int b) { p[find(a)] = find(b); }
};

// All necklaces over S from s to t (arbitrary bead simplices, positive dimensions) with at most maxv vertices.
std::vector<std::vector<Simplex>> all_necklaces(const SimplicialSet &S, int s, int t, int maxv) {
    std::vector<std::vector<Simplex>> out;
    if (s == t) out.push_back({cell_simplex({0, s})});
    std::vector<Simplex> path;
    auto rec = [&](auto &&self, int v, int used) -> void {
        for (int d = 1; used + d <= maxv; ++d)
            for (const auto &z : S.all_simplices(d)) {
                auto vs = S.vertices(z);
                if (vs.front() != v) continue;
                path.push_back(z);
                if (vs.back() == t) out.push_back(path);
                self(self, vs.back(), used + d);
                path.pop_back();
            }
    };
    rec(rec, s, 1);
    return out;
}

// Flags of the given length containing the joints.
std::vector<std::vector<VertexMask>> all_flags(const FlaggedNecklace &n, int length) {
    std::vector<std::vector<VertexMask>> out;
    VertexMask J = n.joint_mask(), all = n.all_mask();
    std::vector<VertexMask> subs;
    for (VertexMask m = 0; m <= all; ++m)
        if ((m & J) == J && (m & ~all) == 0) subs.push_back(m);
    std::vector<VertexMask> cur;
    auto rec = [&](auto &&self) -> void {
        if (static_cast<int>(cur.size()) == length + 1) {
            out.push_back(cur);
            return;
        }
        for (auto m : subs)
            if (cur.empty() || (cur.back() & ~m) == 0) {
                cur.push_back(m);
                self(self);
                cur.pop_back();
            }
    };
    rec(rec);
    return out;
}

// Bead ranges [a, b] of a necklace.
std::vector<std::pair<int, int>> ranges(const FlaggedNecklace &n) {
    std::vector<std::pair<int, int>> r;
    auto j = n.joints();
    if (j.size() == 1) return {{0, 0}};
    for (size_t i = 0; i + 1 < j.size(); ++i) r.push_back({j[i], j[i + 1]});
    return r;
}

// Necklace maps g: T' -> T as monotone vertex maps sending each bead into a single bead and fixing endpoints.
std::vector<std::vector<int>> necklace_maps(const FlaggedNecklace &src, const FlaggedNecklace &tgt) {
    std::vector<std::vector<int>> out;
    int ns = src.vertex_count(), nt = tgt.vertex_count();
    auto rs = ranges(src), rt = ranges(tgt);
    std::vector<int> phi(ns);
    auto rec = [&](auto &&self, int v) -> void {
        if (v == ns) {
            if (phi[0] != 0 || phi[ns - 1] != nt - 1) return;
            for (auto [a, b] : rs) {
                bool inside = false;
                for (auto [c, d] : rt)
                    if (phi[a] >= c && phi[b] <= d) inside = true;
                if (!inside) return;
            }
            out.push_back(phi);
            return;
        }
        for (int w = v == 0 ? 0 : phi[v - 1]; w < nt; ++w) {
            phi[v] = w;
            self(self, v + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// Chains of subsets of [i,j] containing i and j, as canonical necklaces in Δ^n.
FlaggedNecklace chain_to_necklace(const SimplicialSet &S, const std::vector<int> &chain) {
    int top = chain.back();
    std::vector<int> verts, joints;
    for (int v = 0; v < 32; ++v)
        if (top & (1 << v)) verts.push_back(v);
    for (int v = 0; v < 32; ++v)
        if (chain.front() & (1 << v)) joints.push_back(v);
    FlaggedNecklace n;
    if (joints.size() == 1) {
        n.beads = {cell_simplex({0, joints[0]})};
    } else {
        for (size_t k = 0; k + 1 < joints.size(); ++k) {
            std::string nm;
            for (int v : verts)
                if (v >= joints[k] && v <= joints[k + 1]) nm += std::to_string(v);
            n.beads.push_back(cell_simplex(S.at(static_cast<int>(nm.size()) - 1, nm)));
        }
    }
    for (int c : chain) {
        VertexMask m = 0;
        for (size_t k = 0; k < verts.size(); ++k)
            if (c & (1 << verts[k])) m |= VertexMask{1} << k;
        n.flag.push_back(m);
    }
    return n;
}

std::vector<int> necklace_to_chain(const SimplicialSet &S, const FlaggedNecklace &n) {
    std::vector<int> global;
    for (size_t b = 0; b < n.beads.size(); ++b) {
        auto vs = S.vertices(n.beads[b]);
        for (size_t k = (b == 0 ? 0 : 1); k < vs.size(); ++k) global.push_back(std::stoi(S.name({0, vs[k]})));
    }
    std::vector<int> chain;
    for (auto m : n.flag) {
        int c = 0;
        for (size_t k = 0; k < global.size(); ++k)
            if (m & (VertexMask{1} << k)) c |= 1 << global[k];
        chain.push_back(c);
    }
    return chain;
}

}  // namespace

TEST_CASE("normalize examples") {
    auto d2 = simplex(2);
    const auto &S = *d2;
    Simplex v = S.vertex("1");
    FlaggedNecklace loop{{S.degeneracy(v, 0)}, {0b11}};
    auto c = normalize(S, loop);
    CHECK(c.beads == std::vector<Simplex>{v});
    CHECK(c.flag == std::vector<VertexMask>{1});
    FlaggedNecklace two{{cell_simplex(S.at(1, "01")), cell_simplex(S.at(1, "12"))}, {0b111}};
    CHECK(is_canonical(S, two));
    CHECK(normalize(S, two) == two);
    // the 2-cell with its middle vertex in T_0 splits into two edge beads
    FlaggedNecklace split{{cell_simplex(S.at(2, "012"))}, {0b111, 0b111}};
    auto sp = normalize(S, split);
    CHECK(sp.beads.size() == 2);
    CHECK(sp.flag == std::vector<VertexMask>{0b111, 0b111});
    // restriction to T_k drops the middle vertex
    FlaggedNecklace face{{cell_simplex(S.at(2, "012"))}, {0b101}};
    auto fc = normalize(S, face);
    CHECK(fc.beads == std::vector<Simplex>{cell_simplex(S.at(1, "02"))});
    CHECK(necklace_name(S, fc) == "02");
    CHECK_THROWS_AS(normalize(S, FlaggedNecklace{{cell_simplex(S.at(1, "01"))}, {0b01}}), InvalidInput);
}

TEST_CASE("normalize is constant on equivalence classes") {
    // class enumeration over small bases: flag-preserving necklace maps generate the relation
    std::vector<std::tuple<SSetPtr, int, int>> bases{
        {boundary(2), 0, 2}, {simplex(1), 0, 1}, {interval_I(1).space, 0, 1}, {simplex(1), 1, 1}};
    for (auto &[sp, s, t] : bases) {
        const auto &S = *sp;
        std::vector<FlaggedNecklace> elems;
        for (int len = 0; len <= 1; ++len)
            for (const auto &beads : all_necklaces(S, s, t, 4)) {
                FlaggedNecklace n{beads, {}};
                for (auto &f : all_flags(n, len)) elems.push_back(FlaggedNecklace{beads, f});
            }
        std::map<FlaggedNecklace, int> id;
        for (size_t i = 0; i < elems.size(); ++i) id[elems[i]] = static_cast<int>(i);
        UnionFind uf(elems.size());
        for (const auto &tgt : elems) {
            for (const auto &beads : all_necklaces(S, s, t, 4)) {
                FlaggedNecklace src{beads, {}};
                for (const auto &phi : necklace_maps(src, tgt)) {
                    // pull the bead images of tgt back along phi, keep the flag of src such that phi(flag) = tgt flag
                    FlaggedNecklace pulled{{}, {}};
                    auto rs = ranges(src), rt = ranges(tgt);
                    for (auto [a, b] : rs) {
                        int j = 0;
                        while (!(phi[a] >= rt[j].first && phi[b] <= rt[j].second)) ++j;
                        Mono theta;
                        for (int v = a; v <= b; ++v) theta.push_back(phi[v] - rt[j].first);
                        pulled.beads.push_back(S.apply(tgt.beads[j], theta));
                    }
                    if (src.vertex_count() == 1) pulled.beads = {S.apply(tgt.beads[0], {phi[0] - rt[0].first})};
                    for (const auto &f : all_flags(src, tgt.length())) {
                        std::vector<VertexMask> img;
                        for (auto m : f) {
                            VertexMask o = 0;
                            for (int v = 0; v < src.vertex_count(); ++v)
                                if (m & (VertexMask{1} << v)) o |= VertexMask{1} << phi[v];
                            img.push_back(o);
                        }
                        if (img != tgt.flag) continue;
                        pulled.flag = f;
                        auto it = id.find(pulled);
                        if (it == id.end()) continue;
                        uf.join(it->second, id[tgt]);
                    }
                }
            }
        }
        std::map<int, FlaggedNecklace> normal_of_class;
        for (size_t i = 0; i < elems.size(); ++i) {
            auto nf = normalize(S, elems[i]);
            CHECK(is_canonical(S, nf));
            CHECK(normalize(S, nf) == nf);
            auto it = id.find(nf);
            REQUIRE(it != id.end());
            CHECK(uf.find(it->second) == uf.find(static_cast<int>(i)));
            int cls = uf.find(static_cast<int>(i));
            auto [pos, fresh] = normal_of_class.emplace(cls, nf);
            if (!fresh) CHECK(pos->second == nf);
        }
    }
}

TEST_CASE("cube oracle") {
    CHECK(iso_check(*cube_oracle(3, 1, 1), *simplex(0)).iso);
    CHECK(iso_check(*cube_oracle(2, 0, 2), *simplex(1)).iso);
    CHECK(cube_oracle(4, 0, 4)->counts() == std::vector<int>{8, 19, 18, 6});
    CHECK_THROWS_AS(cube_oracle(2, 2, 1), InvalidInput);
}

TEST_CASE("mapping complexes of simplices match the cube oracle") {
    auto m = mapping_complex(simplex(2), 0, 2, {2});
    CHECK(iso_check(*m.space, *simplex(1)).iso);
    auto m3 = mapping_complex(simplex(3), 0, 3, {3});
    CHECK(m3.space->counts() == std::vector<int>{4, 5, 2});
    CHECK(validate(*m3.space).ok);
    for (int n = 0; n <= 5; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                auto mc = mapping_complex(simplex(n), i, j, {3});
                CHECK(validate(*mc.space).ok);
                CHECK(iso_check(*mc.space, *cube_oracle(n, i, j, 3)).iso);
            }
}

TEST_CASE("mapping complexes on other bases") {
    auto iso = coproduct(simplex(1), point("v"));
    auto v = iso.space->at(0, "v").index;
    auto mv = mapping_complex(iso.space, v, v, {2});
    CHECK(iso_check(*mv.space, *simplex(0)).iso);
    auto none = mapping_complex(simplex(2), 2, 0, {2});
    CHECK(none.space->empty());
    for (auto sp : {boundary(3), horn(3, 1), horn(3, 0), nerve(FiniteCategory::codiscrete({"a", "b", "c"}), 3)}) {
        MappingOptions o{3, 8, true};
        auto mc = mapping_complex(sp, 0, sp->count(0) - 1, o);
        CHECK(validate(*mc.space).ok);
    }
    CHECK_THROWS_AS(mapping_complex(interval_J(3), 0, 1, {2}), Inconclusive);
    auto partial = mapping_complex(interval_J(3), 0, 1, {2, 6, true});
    CHECK_FALSE(partial.complete);
    CHECK(validate(*partial.space).ok);
}

TEST_CASE("composition agrees with union of subsets") {
    auto d3 = simplex(3);
    const auto &S = *d3;
    std::mt19937 rng(7);
    auto random_chain = [&](int i, int j, int k) {
        std::vector<int> chain;
        int cur = (1 << i) | (1 << j);
        for (int r = 0; r <= k; ++r) {
            for (int v = i + 1; v < j; ++v)
                if (rng() % 3 == 0) cur |= 1 << v;
            chain.push_back(cur);
        }
        return chain;
    };
    for (int trial = 0; trial < 20; ++trial) {
        int i = 0, j = 1 + static_cast<int>(rng() % 2), l = 3;
        int k = static_cast<int>(rng() % 3);
        auto cy = random_chain(i, j, k), cx = random_chain(j, l, k);
        auto y = chain_to_necklace(S, cy), x = chain_to_necklace(S, cx);
        REQUIRE(is_canonical(S, y));
        REQUIRE(is_canonical(S, x));
        auto xy = compose(S, x, y);
        std::vector<int> expect;
        for (int r = 0; r <= k; ++r) expect.push_back(cy[r] | cx[r]);
        CHECK(necklace_to_chain(S, xy) == expect);
        CHECK(compose(S, identity_necklace(S, l, k), x) == x);
        CHECK(compose(S, x, identity_necklace(S, j, k)) == x);
    }
    // associativity on three edge necklaces
    FlaggedNecklace a{{cell_simplex(S.at(1, "01"))}, {0b11}}, b{{cell_simplex(S.at(1, "12"))}, {0b11}},
        c{{cell_simplex(S.at(1, "23"))}, {0b11}};
    CHECK(compose(S, c, compose(S, b, a)) == compose(S, compose(S, c, b), a));
    CHECK_THROWS_AS(compose(S, a, c), InvalidInput);
}

TEST_CASE("composition and induced maps on mapping complexes") {
    auto d3 = simplex(3);
    auto m01 = mapping_complex(d3, 0, 1, {2}), m13 = mapping_complex(d3, 1, 3, {2}), m03 = mapping_complex(d3, 0, 3, {2});
    for (int k = 0; k <= 1; ++k)
        for (const auto &x : m13.space->all_simplices(k))
            for (const auto &y : m01.space->all_simplices(k)) {
                Simplex z = compose(m13, m01, m03, x, y);
                CHECK(z.dim() == k);
                for (int i = 0; i <= k && k > 0; ++i)
                    CHECK(m03.space->face(z, i) ==
                          compose(m13, m01, m03, m13.space->face(x, i), m01.space->face(y, i)));
            }
    // functoriality along Δ³ -> Δ² collapsing 1 and 2
    auto d2 = simplex(2);
    auto f = map_by_vertices(d3, d2, {0, 1, 1, 2});
    auto target = mapping_complex(d2, 0, 2, {3});
    auto g = induced_map(mapping_complex(d3, 0, 3, {3}), target, f);
    CHECK(validate(g).ok);
    auto inc = map_by_vertices(d2, d3, {0, 1, 3});
    auto h = induced_map(target, mapping_complex(d3, 0, 3, {3}), inc);
    CHECK(validate(h).ok);
    CHECK(is_mono(h));
}
