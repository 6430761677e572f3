#include <doctest.h>

#include <random>

#include "sset/homspace.hpp"
#include "sset/iso.hpp"
#include "sset/straighten.hpp"

using namespace sset;

namespace {

PathPtr paths(SSetPtr s, int bound = 3) { return std::make_shared<const PathCategory>(s, MappingOptions{bound, -1, false}); }

SimplicialMap to_point(const SSetPtr &x) {
    std::vector<int> vm(x->count(0), 0);
    return map_by_vertices(x, simplex(0), vm);
}

bool all_marked(const MarkedSimplicialSet &x) { return static_cast<int>(x.marked.size()) == x.space->count(1); }

}  // namespace

TEST_CASE("cone base") {
    auto s = simplex(2);
    auto e = cone_base(SimplicialMap{empty_set(), s, {}});
    CHECK(iso_check(*e.space, *coproduct(s, point()).space).iso);

    auto d1 = simplex(1);
    CHECK(iso_check(*cone_base(SimplicialMap::identity(d1)).space, *simplex(2)).iso);

    auto b = boundary(2);
    auto v = cone_base(map_by_vertices(simplex(0), b, {1}));
    CHECK(iso_check(*v.space, *attach_edge(b, 1).space).iso);
}

TEST_CASE("straightening of identities") {
    auto c1 = paths(simplex(1));
    auto st = straighten(SimplicialMap::identity(simplex(1)), c1);
    CHECK(iso_check(*st.functor.values[0].space, *simplex(1)).iso);
    CHECK(iso_check(*st.functor.values[1].space, *simplex(0)).iso);
    CHECK(st.functor.validate().ok);

    auto c0 = paths(simplex(0));
    auto s0 = straighten(SimplicialMap::identity(simplex(0)), c0);
    CHECK(s0.functor.values[0].space->total_cells() == 1);

    auto c2 = paths(simplex(2));
    auto s2 = straighten(SimplicialMap::identity(simplex(2)), c2);
    CHECK(s2.functor.validate(2).ok);
    CHECK(iso_check(*s2.functor.values[0].space, *q_complex(2, 3).space).iso == false);
    // the value at the initial vertex is the cube 𝔠(Δ^3)(0,3)
    CHECK(iso_check(*s2.functor.values[0].space, *mapping_complex(simplex(3), 0, 3).space).iso);
}

TEST_CASE("straightening over a point is the Q-realization") {
    auto c0 = paths(simplex(0));
    for (auto x : {simplex(1), simplex(2), boundary(2), horn(2, 1)}) {
        auto st = straighten(to_point(x), c0);
        CHECK(iso_check(*st.functor.values[0].space, *realize_q(x, 3).space).iso);
    }
}

TEST_CASE("marked straightening") {
    auto c0 = paths(simplex(0));
    auto d1 = simplex(1);
    auto sharp = straighten_marked(to_point(d1), {0}, c0);
    CHECK(sharp.functor.values[0].marked.size() == 1);
    CHECK(all_marked(sharp.functor.values[0]));
    auto flat = straighten_marked(to_point(d1), {}, c0);
    CHECK(flat.functor.values[0].marked.empty());
    CHECK_THROWS_AS(straighten_marked(to_point(d1), {3}, c0), InvalidInput);

    // Str⁺ of a vertex is the representable with every edge marked
    auto s = simplex(2);
    auto c2 = paths(s);
    for (int v = 0; v < 3; ++v) {
        auto st = straighten_marked(map_by_vertices(simplex(0), s, {v}), {}, c2);
        CHECK(st.functor.validate(1).ok);
        for (int a = 0; a < 3; ++a) {
            CHECK(all_marked(st.functor.values[a]));
            CHECK(iso_check(*st.functor.values[a].space, *c2->hom(a, v).space).iso);
        }
    }
}

TEST_CASE("marked straightening is closed under the action") {
    std::mt19937 rng(3);
    auto s = simplex(2);
    auto c = paths(s, 2);
    std::vector<SSetPtr> totals{simplex(1), horn(2, 1), simplex(2), boundary(2)};
    for (int trial = 0; trial < 8; ++trial) {
        CAPTURE(trial);
        auto x = totals[rng() % totals.size()];
        std::vector<int> vm;
        for (int v = 0; v < x->count(0); ++v) vm.push_back(v == 0 ? 0 : std::max(vm.back(), static_cast<int>(rng() % 3)));
        std::set<int> marked;
        for (int e = 0; e < x->count(1); ++e)
            if (rng() % 2) marked.insert(e);
        auto st = straighten_marked(map_by_vertices(x, s, vm), marked, c);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (const auto &sigma : c->hom(a, b).space->all_simplices(1))
                    for (const auto &e : st.functor.values[b].space->all_simplices(1))
                        if (st.functor.values[b].is_marked(e))
                            CHECK(st.functor.values[a].is_marked(st.functor.act(a, b, sigma, e)));
    }
}

TEST_CASE("attaching an edge post-composes isomorphically") {
    for (auto s : {simplex(1), simplex(2), boundary(2), horn(2, 0), horn(3, 1)}) {
        for (int v = 0; v < s->count(0); ++v) {
            auto e = attach_edge(s, v);
            for (int t = 0; t < s->count(0); ++t) {
                CAPTURE(v);
                CAPTURE(t);
                auto src = mapping_complex(s, t, v, {3, -1, false});
                auto tgt = mapping_complex(e.space, e.inclusion.image({0, t}).cell.index, e.end, {3, -1, false});
                auto m = postcompose_edge(src, tgt, e);
                CHECK(validate(m).ok);
                CHECK(is_isomorphism(m).ok);
            }
        }
    }
}

TEST_CASE("simplicial functors") {
    auto c = paths(simplex(2));
    auto r = representable(c, 2);
    CHECK(r.validate(2).ok);
    auto k = constant_functor(c, MarkedSimplicialSet::flat(boundary(2)));
    CHECK(k.validate(2).ok);

    // a table-backed copy acts the same
    auto st = straighten(map_by_vertices(simplex(1), simplex(2), {0, 2}), c);
    auto table = std::make_shared<const ActionTable>(action_table(st.functor));
    std::vector<SSetPtr> vals;
    for (const auto &v : st.functor.values) vals.push_back(v.space);
    SimplicialFunctor copy = st.functor;
    copy.act = action_from_table(table, vals);
    CHECK(copy.validate(2).ok);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (const auto &s : c->hom(a, b).space->all_simplices(2))
                for (const auto &g : st.functor.values[b].space->all_simplices(2))
                    CHECK(copy.act(a, b, s, g) == st.functor.act(a, b, s, g));
}

TEST_CASE("left Kan extension") {
    auto s = simplex(2);
    auto c = paths(s);
    auto st = straighten_marked(map_by_vertices(simplex(1), s, {0, 1}), {0}, c);
    auto id = kan_extend(PathFunctor{c, c, SimplicialMap::identity(s)}, st.functor);
    CHECK(id.functor.validate(1).ok);
    for (int a = 0; a < 3; ++a) CHECK(iso_check(id.functor.values[a], st.functor.values[a]).iso);

    // f_! of a representable is representable
    auto d1 = simplex(1);
    auto c1 = paths(d1);
    auto f = map_by_vertices(d1, s, {0, 2});
    for (int v = 0; v < 2; ++v) {
        auto ext = kan_extend(PathFunctor{c1, c, f}, representable(c1, v));
        int fv = f.image({0, v}).cell.index;
        for (int a = 0; a < 3; ++a) CHECK(iso_check(*ext.functor.values[a].space, *c->hom(a, fv).space).iso);
    }
}

TEST_CASE("straightening commutes with base change") {
    MappingOptions opts{3, -1, false};
    auto s = simplex(2);
    auto d1 = simplex(1);
    // p: X -> S, p': Y -> X
    CHECK(check_base_change(map_by_vertices(d1, s, {0, 2}), SimplicialMap::identity(d1), {0}, opts).ok);
    CHECK(check_base_change(map_by_vertices(d1, s, {1, 2}), map_by_vertices(simplex(0), d1, {0}), {}, opts).ok);
    auto h = horn(2, 1);
    auto hs = map_by_vertices(h, s, {0, 1, 2});
    CHECK(check_base_change(hs, SimplicialMap::identity(h), {0}, opts).ok);
    CHECK(check_base_change(hs, map_by_vertices(d1, h, {0, 1}), {0}, opts).ok);
    CHECK(check_base_change(map_by_vertices(s, d1, {0, 0, 1}), map_by_vertices(d1, s, {1, 2}), {0}, opts).ok);
    CHECK(check_base_change(map_by_vertices(simplex(0), d1, {1}), SimplicialMap::identity(simplex(0)), {}, {2, -1, false}).ok);
}

TEST_CASE("straightening preserves pushouts") {
    auto s = simplex(2);
    auto c = paths(s);
    auto d0 = simplex(0), d1 = simplex(1);
    // two edges glued at a vertex
    CHECK(check_pushout(map_by_vertices(d0, d1, {1}), map_by_vertices(d0, d1, {0}), map_by_vertices(d1, s, {0, 1}),
                        map_by_vertices(d1, s, {1, 2}), {0}, {}, c)
              .ok);
    // a coproduct
    auto e = empty_set();
    CHECK(check_pushout(SimplicialMap{e, d1, {}}, SimplicialMap{e, d0, {}}, map_by_vertices(d1, s, {0, 2}),
                        map_by_vertices(d0, s, {1}), {0}, {}, c)
              .ok);
    // a horn filled along its boundary edge
    auto h = horn(2, 1);
    CHECK(check_pushout(map_by_vertices(d1, h, {0, 1}), map_by_vertices(d1, d1, {0, 1}), map_by_vertices(h, s, {0, 1, 2}),
                        map_by_vertices(d1, s, {0, 1}), {}, {0}, c)
              .ok);
}

TEST_CASE("unstraightening") {
    for (auto s : {simplex(1), simplex(2), boundary(2)}) {
        auto c = paths(s, 2);
        auto un = unstraighten(constant_functor(c, MarkedSimplicialSet::sharp(simplex(0))), 2);
        CHECK(is_isomorphism(un.projection).ok);
        CHECK(all_marked(un.space));
    }
    auto c0 = paths(simplex(0), 2);
    for (auto x : {simplex(1), boundary(2)}) {
        auto un = unstraighten(constant_functor(c0, MarkedSimplicialSet::flat(x)), 2);
        CHECK(iso_check(*un.space.space, *sing_q(x, 2).space).iso);
    }
}

TEST_CASE("fibres of the unstraightening") {
    auto s = simplex(2);
    auto c = paths(s, 2);
    auto st = straighten_marked(map_by_vertices(simplex(1), s, {0, 2}), {0}, c);
    auto un = unstraighten(st.functor, 2);
    CHECK(validate(un.space).ok);
    auto c0 = paths(simplex(0), 2);
    for (int v = 0; v < 3; ++v) {
        CAPTURE(v);
        auto at = map_by_vertices(simplex(0), s, {v});
        auto fibre = pullback(un.projection, at);
        auto g = restrict(st.functor, PathFunctor{c0, c, at});
        auto direct = unstraighten(g, 2);
        MarkedSimplicialSet marked_fibre{fibre.space, {}};
        for (int e = 0; e < fibre.space->count(1); ++e)
            if (un.space.is_marked(fibre.first.image({1, e}))) marked_fibre.marked.insert(e);
        CHECK(iso_check(marked_fibre, direct.space).iso);
    }
}
