#include <doctest.h>

#include <algorithm>
#include <random>

#include "sset/constructions.hpp"
#include "sset/iso.hpp"

using namespace sset;

namespace {

std::vector<int> counts(const SSetPtr &x) { return x->counts(); }

// Independent oracle: number of strict chains of length k in the poset of subsets of [i,j]
// containing both endpoints, computed by dynamic programming over bitmasks.
std::vector<int> strict_chain_counts(int i, int j) {
    std::vector<int> elems;
    int inner = j - i - 1;
    for (int mask = 0; mask < (1 << std::max(inner, 0)); ++mask) elems.push_back(mask);
    if (i == j) return {1};
    std::vector<int> out;
    std::vector<long long> ends(elems.size(), 1);
    for (int len = 0;; ++len) {
        long long total = 0;
        for (auto e : ends) total += e;
        if (total == 0) break;
        out.push_back(static_cast<int>(total));
        std::vector<long long> next(elems.size(), 0);
        for (size_t a = 0; a < elems.size(); ++a)
            for (size_t b = 0; b < elems.size(); ++b)
                if (a != b && (elems[a] & elems[b]) == elems[a]) next[b] += ends[a];
        ends = next;
    }
    return out;
}

// Shuffle oracle: non-degenerate n-simplices of Δ^p × Δ^q are lattice paths using n steps,
// i.e. sequences of pairs strictly increasing in the product order.
int shuffle_count(int p, int q, int n) {
    int total = 0;
    std::vector<std::pair<int, int>> path;
    auto rec = [&](auto &&self, int len) -> void {
        if (len == n + 1) {
            ++total;
            return;
        }
        for (int a = 0; a <= p; ++a)
            for (int b = 0; b <= q; ++b) {
                if (!path.empty()) {
                    auto [a0, b0] = path.back();
                    if (a < a0 || b < b0 || (a == a0 && b == b0)) continue;
                }
                path.push_back({a, b});
                self(self, len + 1);
                path.pop_back();
            }
    };
    rec(rec, 0);
    return total;
}

}  // namespace

TEST_CASE("degeneracy words follow the Eilenberg-Zilber normal form") {
    CHECK(delta::word_of(delta::surjection({0, 2}, 1)) == Word{0, 2});
    CHECK(delta::surjection({1}, 2) == Mono{0, 1, 1, 2});
    auto d2 = simplex(2);
    Simplex x = cell_simplex(d2->at(2, "012"));
    Simplex sx = d2->degeneracy(x, 1);
    CHECK(sx.word == Word{1});
    // s_0 s_0 = s_1 s_0
    Simplex v = d2->vertex("0");
    CHECK(d2->degeneracy(d2->degeneracy(v, 0), 0) == d2->degeneracy(d2->degeneracy(v, 0), 1));
    // d_j s_j = id and d_{j+1} s_j = id
    for (int j = 0; j <= 2; ++j) {
        CHECK(d2->face(d2->degeneracy(x, j), j) == x);
        CHECK(d2->face(d2->degeneracy(x, j), j + 1) == x);
    }
    CHECK(d2->vertices(sx) == std::vector<int>{0, 1, 1, 2});
}

TEST_CASE("standard complexes have the expected cells") {
    CHECK(counts(boundary(2)) == std::vector<int>{3, 3});
    auto h = horn(2, 1);
    CHECK(counts(h) == std::vector<int>{3, 2});
    CHECK(h->find(1, "01"));
    CHECK(h->find(1, "12"));
    CHECK_FALSE(h->find(1, "02"));
    CHECK_THROWS_AS(horn(0, 0), InvalidInput);
    CHECK_THROWS_AS(horn(2, 3), InvalidInput);
    auto J = interval_J(3);
    CHECK(J->truncated());
    CHECK(counts(J) == std::vector<int>{2, 2, 2, 2});
    for (auto x : {simplex(3), boundary(3), horn(3, 1), J, complex_K()}) CHECK(validate(*x).ok);
}

TEST_CASE("K is the quotient of Δ³ by two disjoint edges") {
    auto K = complex_K();
    // oracle: subsets of {0,1,2,3} not contained in {0,2} or {1,3}, plus two collapsed points
    std::vector<int> expect(4, 0);
    expect[0] = 2;
    for (int mask = 1; mask < 16; ++mask) {
        if ((mask & ~0b0101) == 0 || (mask & ~0b1010) == 0) continue;
        expect[__builtin_popcount(mask) - 1]++;
    }
    CHECK(counts(K) == expect);
    CHECK(K->find(0, "0"));
    CHECK(K->find(0, "1"));
}

TEST_CASE("nerves") {
    CHECK(iso_check(*nerve(FiniteCategory::linear(3), 5), *simplex(3)).iso);
    for (int n = 0; n <= 4; ++n) CHECK(iso_check(*nerve(FiniteCategory::linear(n), 6), *simplex(n)).iso);
    auto p03 = nerve(FiniteCategory::poset(std::vector<std::string>{"03", "013", "023", "0123"},
                                           [](int a, int b) {
                                               std::vector<int> m{0b1001, 0b1011, 0b1101, 0b1111};
                                               return (m[a] & m[b]) == m[a];
                                           }),
                     4);
    CHECK(counts(p03) == strict_chain_counts(0, 3));
    CHECK(counts(p03) == std::vector<int>{4, 5, 2});
    auto g = nerve(FiniteCategory::codiscrete({"0", "1"}), 3);
    CHECK(g->truncated());
    CHECK(counts(g) == std::vector<int>{2, 2, 2, 2});
    CHECK(iso_check(*g, *interval_J(3)).iso);
    CHECK_FALSE(nerve(FiniteCategory::linear(2), 2)->truncated());
    CHECK(nerve(FiniteCategory::linear(3), 2)->truncated());
}

TEST_CASE("products follow the shuffle count") {
    auto p = product(simplex(1), simplex(1));
    CHECK(counts(p.space) == std::vector<int>{4, 5, 2});
    CHECK(validate(*p.space).ok);
    CHECK(validate(p.first).ok);
    CHECK(validate(p.second).ok);
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3 - a; ++b) {
            auto q = product(simplex(a), simplex(b));
            for (int n = 0; n <= a + b; ++n) CHECK(q.space->count(n) == shuffle_count(a, b, n));
        }
    CHECK(iso_check(*product(simplex(1), simplex(2)).space, *product(simplex(2), simplex(1)).space).iso);
}

TEST_CASE("joins, quotients and suspensions") {
    auto j = join(simplex(1), simplex(0));
    CHECK(iso_check(*j.space, *simplex(2)).iso);
    CHECK(validate(*j.space).ok);
    auto d2 = simplex(2);
    auto q = quotient(d2, {{d2->at(1, "01")}});
    CHECK(counts(q.space) == std::vector<int>{2, 2, 1});
    CHECK(validate(*q.space).ok);
    CHECK(validate(q.projection).ok);
    CHECK(iso_check(*suspension(simplex(0), Side::right).space, *simplex(1)).iso);
    CHECK(iso_check(*suspension(simplex(1), Side::right).space, *q.space).iso);
    CHECK(iso_check(*suspension(simplex(0), Side::symmetric).space, *simplex(1)).iso);
    CHECK(iso_check(*suspension(simplex(0), Side::left).space, *simplex(1)).iso);
    CHECK(iso_check(*interval_I(1).space, *q.space).iso);
}
