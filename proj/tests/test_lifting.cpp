#include <doctest.h>

#include "sset/constructions.hpp"
#include "sset/lifting.hpp"

using namespace sset;

namespace {

SimplicialMap to_point(const SSetPtr &x) {
    return extension_problem(SimplicialMap{empty_set(), x, {}}, SimplicialMap{empty_set(), x, {}}).p;
}

}  // namespace

TEST_CASE("find_lift on trivial and inner-horn problems") {
    auto d2 = simplex(2);
    auto id = SimplicialMap::identity(d2);
    auto pr = extension_problem(id, id);
    auto r = find_lift(pr);
    REQUIRE(r.found);
    CHECK(r.lift == id);

    // Λ²₁ -> Δ² against the nerve of [2] -> [1]
    auto L = FiniteCategory::linear(2), M = FiniteCategory::linear(1);
    Functor F{{0, 0, 1}, {}};
    for (const auto &m : L.morphisms) {
        int s = F.on_objects[m.src], t = F.on_objects[m.tgt];
        F.on_morphisms.push_back(M.hom(s, t).front());
    }
    REQUIRE(validate_functor(L, M, F).ok);
    auto NL = nerve(L, 4), NM = nerve(M, 4);
    auto p = nerve_map(F, L, M, NL, NM);
    CHECK(validate(p).ok);
    auto h = horn(2, 1);
    LiftingProblem sq{map_by_vertices(h, d2, {0, 1, 2}), p, map_by_vertices(h, NL, {0, 1, 2}),
                      map_by_vertices(d2, NM, {0, 0, 1}), std::nullopt, std::nullopt};
    REQUIRE(sq.validate().ok);
    auto lift = find_lift(sq);
    REQUIRE(lift.found);
    CHECK(lift.lift.image({2, 0}) == cell_simplex(NL->at(2, "012")));

    // tautological square against Λ²₁ -> Δ⁰ has no lift
    auto taut = extension_problem(map_by_vertices(h, d2, {0, 1, 2}), SimplicialMap::identity(h));
    auto none = find_lift(taut);
    CHECK_FALSE(none.found);
}

TEST_CASE("marked lifting respects markings") {
    auto d1 = simplex(1);
    auto e = simplex(1);
    auto pr = extension_problem(SimplicialMap{empty_set(), d1, {}}, SimplicialMap{empty_set(), e, {}});
    pr.marked_b = std::set<int>{0};
    pr.marked_x = std::set<int>{};
    std::vector<SimplicialMap> lifts;
    for_each_lift(pr, [&](const SimplicialMap &f) {
        lifts.push_back(f);
        return true;
    });
    // only the two constant maps survive
    CHECK(lifts.size() == 2);
    CHECK(all_maps(d1, e).size() == 3);
}

TEST_CASE("classify_fibration") {
    for (int n = 0; n <= 3; ++n) CHECK(classify_fibration(to_point(simplex(n)), FibrationKind::inner, 4).holds());
    auto v = classify_fibration(to_point(horn(2, 1)), FibrationKind::inner, 3);
    CHECK(v.outcome == Outcome::fails);
    CHECK(v.witness.find("\"k\":1") != std::string::npos);
    for (auto kind : {FibrationKind::inner, FibrationKind::left, FibrationKind::right, FibrationKind::trivial})
        CHECK(classify_fibration(SimplicialMap::identity(boundary(2)), kind, 3).holds());
    CHECK(classify_fibration(to_point(interval_J(4)), FibrationKind::left, 4).holds());
    CHECK(classify_fibration(to_point(simplex(1)), FibrationKind::left, 2).outcome == Outcome::fails);
    CHECK(classify_fibration(to_point(interval_J(2)), FibrationKind::inner, 3).outcome == Outcome::inconclusive);
    CHECK(classify_fibration(to_point(interval_J(4)), FibrationKind::trivial, 3).holds());
    CHECK(classify_fibration(to_point(simplex(2)), FibrationKind::trivial, 3).outcome == Outcome::fails);
    CHECK(classify_fibration(to_point(boundary(2)), FibrationKind::trivial, 3).outcome == Outcome::fails);
}

TEST_CASE("p-cartesian edges over a point") {
    auto P = nerve(FiniteCategory::linear(2), 4);
    auto p = to_point(P);
    CHECK(is_p_cartesian(p, cell_simplex(P->at(1, "01")), 3).outcome == Outcome::fails);
    CHECK(is_p_cartesian(p, P->degeneracy(P->vertex("1"), 0), 3).holds());
    auto J = interval_J(4);
    CHECK(is_p_cartesian(to_point(J), cell_simplex({1, 0}), 4).holds());
}

TEST_CASE("homotopy category and equivalences") {
    auto hc = homotopy_category(simplex(2), 3);
    CHECK(hc.category.objects.size() == 3);
    CHECK(hc.category.morphisms.size() == 6);
    CHECK(hc.category.thin());
    CHECK_FALSE(is_equivalence_edge(simplex(1), cell_simplex({1, 0}), 3));
    auto J = interval_J(4);
    CHECK(is_equivalence_edge(J, cell_simplex({1, 0}), 4));
    CHECK(is_equivalence_edge(J, cell_simplex({1, 1}), 4));
    CHECK_THROWS_AS(homotopy_category(horn(2, 1), 3), InvalidInput);
    CHECK_THROWS_AS(homotopy_category(interval_J(2), 3), Inconclusive);
}

TEST_CASE("marked cartesian fibrations over a point") {
    auto J = interval_J(4);
    CHECK(is_marked_cartesian_fibration(to_point(J), {0, 1}, 4).holds());
    auto v = is_marked_cartesian_fibration(to_point(J), {0}, 4);
    CHECK(v.outcome == Outcome::fails);
    auto d2 = simplex(2);
    CHECK(is_marked_cartesian_fibration(to_point(d2), {}, 3).holds());
    auto w = is_marked_cartesian_fibration(to_point(d2), {0}, 3);
    CHECK(w.outcome == Outcome::fails);
    CHECK(w.detail.find("cartesian") != std::string::npos);
}
