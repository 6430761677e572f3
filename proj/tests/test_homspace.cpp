#include <doctest.h>

#include <random>

#include "sset/homology.hpp"
#include "sset/homspace.hpp"
#include "sset/iso.hpp"
#include "sset/lifting.hpp"

using namespace sset;

namespace {

std::vector<int> nondeg_counts(const SimplicialSet &x) {
    std::vector<int> c;
    for (int d = 0; d <= x.top(); ++d) c.push_back(x.count(d));
    return c;
}

// Monotone maps [m] -> [n].
std::vector<Mono> monotone_maps(int m, int n) {
    std::vector<Mono> out;
    Mono cur;
    std::function<void(int)> go = [&](int lo) {
        if (static_cast<int>(cur.size()) == m + 1) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= n; ++v) {
            cur.push_back(v);
            go(v);
            cur.pop_back();
        }
    };
    go(0);
    return out;
}

// Strictly increasing chains of subsets of [n] with a common minimum a and T_0 = {a}: an oracle for
// the non-degenerate cells of Q^n.
std::vector<int> canonical_chain_counts(int n, int bound) {
    std::vector<int> out(bound + 1, 0);
    std::function<void(int, int, int)> go = [&](int a, int last, int len) {
        if (len - 1 <= bound) ++out[len - 1];
        for (int t = last + 1; t < (1 << (n + 1)); ++t)
            if ((t & last) == last && (t & ((1 << a) - 1)) == 0 && t != last) go(a, t, len + 1);
    };
    for (int a = 0; a <= n; ++a) go(a, 1 << a, 1);
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

SSetDiagram constant_diagram(const FiniteCategory &c, SSetPtr v) {
    SSetDiagram f{c, {}, {}};
    for (size_t o = 0; o < c.objects.size(); ++o) f.values.push_back(v);
    for (size_t m = 0; m < c.morphisms.size(); ++m) f.maps.push_back(SimplicialMap::identity(v));
    return f;
}

FiniteCategory span_category() {
    // b <- a -> c
    return FiniteCategory::poset({"a", "b", "c"}, [](int x, int y) { return x == y || x == 0; });
}

}  // namespace

TEST_CASE("Q^n small cases") {
    auto q0 = q_complex(0, 3);
    CHECK(nondeg_counts(*q0.space) == std::vector<int>{1});
    auto q1 = q_complex(1, 3);
    CHECK(iso_check(*q1.space, *simplex(1)).iso);
    auto q2 = q_complex(2, 3);
    CHECK(nondeg_counts(*q2.space) == canonical_chain_counts(2, 3));
    CHECK(q2.space->name(q2.simplex({1, 3, 7}).cell) == "0123[03|013|0123]");
    auto c2 = q_complex(2, 3, QMethod::chain_quotient);
    CHECK(c2.space->name(c2.simplex({1, 3, 7}).cell) == "0<01<012");
    // truncation at the largest element of the first set
    CHECK(q2.simplex({3, 7}) == q2.simplex({2, 6}));
    CHECK(c2.simplex({3, 7}) == c2.simplex({2, 6}));
    CHECK(q2.simplex({3, 7}) != q2.simplex({1, 7}));
    CHECK_THROWS_AS(q2.simplex({3, 1}), InvalidInput);
}

TEST_CASE("the two models of Q^n agree") {
    for (int n = 0; n <= 4; ++n) {
        CAPTURE(n);
        auto a = q_complex(n, 3, QMethod::necklace);
        auto b = q_complex(n, 3, QMethod::chain_quotient);
        CHECK(nondeg_counts(*a.space) == canonical_chain_counts(n, 3));
        CHECK(a.space->truncated() == b.space->truncated());
        CHECK(iso_check(*a.space, *b.space).iso);
        // the same chain picks out corresponding cells in both
        SimplicialMap ab{a.space, b.space, {}};
        ab.images.resize(a.space->top() + 1);
        for (int k = 0; k <= a.space->top(); ++k)
            for (const auto &c : a.reps[k]) ab.images[k].push_back(b.simplex(c));
        CHECK(is_isomorphism(ab).ok);
        CHECK_NOTHROW(q_complex(n, 3, QMethod::both));
    }
}

TEST_CASE("Q^n is contractible and maps to Δ^n by a homology isomorphism") {
    for (int n = 0; n <= 4; ++n) {
        CAPTURE(n);
        auto q = q_complex(n, n);
        int range = std::max(n - 1, 0);
        CHECK(homology(*q.space, range, true).acyclic());
        auto f = q_to_delta(q);
        CHECK(validate(f).ok);
        CHECK(is_homology_iso(f, range).iso);
    }
}

TEST_CASE("Q is a cosimplicial object") {
    std::vector<QComplex> q;
    for (int n = 0; n <= 3; ++n) q.push_back(q_complex(n, 3));
    // functoriality on all composable pairs of monotone maps
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c)
                for (const auto &f : monotone_maps(a, b))
                    for (const auto &g : monotone_maps(b, c)) {
                        auto qf = q_operator(q[a], q[b], f);
                        auto qg = q_operator(q[b], q[c], g);
                        CHECK(validate(qf).ok);
                        CHECK(compose(qg, qf) == q_operator(q[a], q[c], delta::compose(g, f)));
                    }
    for (int n = 0; n <= 3; ++n) CHECK(q_operator(q[n], q[n], delta::identity(n)) == SimplicialMap::identity(q[n].space));
}

TEST_CASE("realization and singular complex") {
    auto r0 = realize_q(simplex(0), 3);
    CHECK(nondeg_counts(*r0.space) == std::vector<int>{1});
    for (int n = 1; n <= 3; ++n) {
        auto r = realize_q(simplex(n), 3);
        CHECK(iso_check(*r.space, *q_complex(n, 3).space).iso);
    }
    auto r = realize_q(boundary(1), 3);
    CHECK(nondeg_counts(*r.space) == std::vector<int>{2});
    CHECK_FALSE(r.space->truncated());

    // |∂Δ²|_Q is a circle
    auto h = homology(*realize_q(boundary(2), 3).space, 2);
    CHECK(h.groups[0].betti == 1);
    CHECK(h.groups[1].betti == 1);
    CHECK(h.groups[2].betti == 0);

    auto s0 = sing_q(simplex(0), 2);
    CHECK(s0.space->total_cells() == 1);
    auto x = boundary(2);
    auto s = sing_q(x, 2);
    CHECK(s.space->count(0) == x->count(0));
    CHECK(validate(*s.space).ok);
}

TEST_CASE("realization is left adjoint to Sing on small pairs") {
    std::mt19937 rng(11);
    std::vector<SSetPtr> sources{simplex(0), simplex(1), boundary(1), horn(2, 1), boundary(2), simplex(2)};
    std::vector<SSetPtr> targets{simplex(1), boundary(2), horn(2, 0), simplex(2), interval_J(3)};
    for (int trial = 0; trial < 10; ++trial) {
        auto x = sources[rng() % sources.size()];
        auto y = targets[rng() % targets.size()];
        CAPTURE(trial);
        int bound = std::max(x->top(), 0);
        auto rx = realize_q(x, bound);
        // maps |X| -> Y only see the realization up to dim X, and Sing Y up to dim X
        auto left = all_maps(rx.space, y).size();
        auto right = all_maps(x, sing_q(y, bound).space).size();
        CHECK(left == right);
    }
}

TEST_CASE("comparison map") {
    ComparisonOptions opts;
    opts.bound = 2;
    auto c = comparison_map(simplex(2), 0, 2, opts);
    CHECK(validate(c.map).ok);
    CHECK(is_homology_iso(c.map, 1).iso);

    auto square = nerve(FiniteCategory::poset({"00", "01", "10", "11"}, [](int x, int y) { return (x & ~y) == 0; }), 5);
    auto cs = comparison_map(square, 0, 3, opts);
    CHECK(is_homology_iso(cs.map, 1).iso);

    auto empty = comparison_map(simplex(2), 2, 0, opts);
    CHECK(empty.source.space->empty());
    CHECK(empty.target.space->empty());

    CHECK_THROWS_AS(comparison_map(boundary(2), 0, 2, opts), InvalidInput);
}

TEST_CASE("Bousfield-Kan homotopy colimit") {
    auto c = span_category();
    auto pt = point();
    auto hc = bousfield_kan_hocolim(constant_diagram(c, pt), 3);
    CHECK(iso_check(*hc.space, *nerve(c, 3)).iso);

    auto one = FiniteCategory::discrete({"a"});
    auto d2 = boundary(2);
    auto h1 = bousfield_kan_hocolim(constant_diagram(one, d2), 3);
    CHECK(iso_check(*h1.space, *d2).iso);

    // random spans of vertex inclusions: the augmentation is a homology isomorphism
    std::mt19937 rng(5);
    for (int trial = 0; trial < 6; ++trial) {
        CAPTURE(trial);
        auto a = simplex(0);
        int nb = 1 + rng() % 3, nc = 1 + rng() % 3;
        auto b = simplex(nb), cc = simplex(nc);
        SSetDiagram f{c, {a, b, cc}, {}};
        for (const auto &m : c.morphisms) {
            if (c.is_identity(static_cast<int>(&m - &c.morphisms[0]))) {
                f.maps.push_back(SimplicialMap::identity(f.values[m.src]));
                continue;
            }
            auto tgt = f.values[m.tgt];
            int v = rng() % tgt->count(0);
            f.maps.push_back(map_by_vertices(a, tgt, {v}));
        }
        REQUIRE(f.validate().ok);
        auto h = bousfield_kan_hocolim(f, 3);
        CHECK(validate(h.augmentation).ok);
        CHECK(is_homology_iso(h.augmentation, 2).iso);
    }
}
