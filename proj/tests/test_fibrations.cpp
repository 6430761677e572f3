#include <doctest.h>

#include <random>

#include "groth_fixtures.hpp"
#include "sset/constructions.hpp"
#include "sset/lifting.hpp"

using namespace sset;
using namespace sset::fixtures;

TEST_CASE("random category-valued functors are strict") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto F = random_category_functor(rng);
        CAPTURE(trial);
        CHECK(validate(F).ok);
        CHECK(F.base.objects.size() <= 3);
        auto G = grothendieck(F);
        CHECK(validate_functor(G.total, F.base, G.projection).ok);
        // the iso-component rule and the universal property pick the same morphisms
        CHECK(cartesian_by_universal_property(G.total, F.base, G.projection) == G.cartesian);
    }
}

TEST_CASE("marked cartesian fibrations agree with the Grothendieck construction") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 6; ++trial) {
        CAPTURE(trial);
        auto fc = fibration_case(random_category_functor(rng), 4);
        for (size_t m = 0; m < fc.edge_of.size(); ++m) {
            if (fc.edge_of[m] < 0) continue;
            CAPTURE(fc.G.total.morphisms[m].name);
            CHECK(is_p_cartesian(fc.p, cell_simplex({1, fc.edge_of[m]}), 3).holds() == fc.G.cartesian[m]);
        }
        CHECK(is_marked_cartesian_fibration(fc.p, fc.marked, 3).holds());
        if (fc.total->count(1) > 0) {
            auto flipped = fc.marked;
            int e = static_cast<int>(rng() % fc.total->count(1));
            if (!flipped.erase(e)) flipped.insert(e);
            CHECK(is_marked_cartesian_fibration(fc.p, flipped, 3).outcome == Outcome::fails);
        }
    }
}

TEST_CASE("a non-fibration is rejected") {
    // nothing lies over 1 in {0} -> Δ^1; {1} -> Δ^1 has no lift of 0 -> 1 ending at 1
    auto d1 = simplex(1);
    CHECK(is_marked_cartesian_fibration(map_by_vertices(simplex(0), d1, {0}), {}, 3).holds());
    auto v = is_marked_cartesian_fibration(map_by_vertices(simplex(0), d1, {1}), {}, 3);
    CHECK(v.outcome == Outcome::fails);
    CHECK(v.detail.find("lift") != std::string::npos);
}
