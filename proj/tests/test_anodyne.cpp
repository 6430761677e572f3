#include <doctest.h>

#include <random>

#include "cert_fixtures.hpp"
#include "sset/anodyne.hpp"
#include "sset/iso.hpp"

using namespace sset;
using namespace sset::fixtures;

TEST_CASE("generator catalogs instantiate valid monomorphisms") {
    for (const auto &cat : catalogs())
        for (const auto &g : instances(cat, 3)) {
            CAPTURE(cat.name);
            CAPTURE(g.family);
            auto m = instantiate(g);
            CHECK(validate(m).ok);
            CHECK(is_mono(m.map));
            AnodyneCertificate c{cat.cls, leaf(g.catalog, g.family, g.params)};
            CHECK(check_certificate(c, m).valid);
        }
    CHECK_THROWS_AS(instantiate({"inner", "horn", {2, 0}, std::nullopt}), InvalidInput);
    CHECK_THROWS_AS(instantiate({"right", "horn", {2, 0}, std::nullopt}), InvalidInput);
    CHECK_THROWS_AS(instantiate({"marked-right-products", "horn-product", {1, 1}, std::nullopt}), InvalidInput);
    CHECK_THROWS_AS(catalog("outer"), InvalidInput);
}

TEST_CASE("single generator certificate") {
    auto g = leaf("inner", "horn", {2, 1});
    auto claimed = instantiate(g.generator);
    auto v = check_certificate({AnodyneClass::inner, g}, claimed);
    CHECK(v.valid);
    // the same generator is also left and right anodyne
    CHECK(check_certificate({AnodyneClass::right, g}, claimed).valid);
    CHECK(check_certificate({AnodyneClass::cartesian, g}, claimed).valid);
    auto outer = leaf("right", "horn", {2, 2});
    auto bad = check_certificate({AnodyneClass::inner, outer});
    CHECK_FALSE(bad.valid);
    CHECK(bad.node == "root");
}

TEST_CASE("pushout-product") {
    auto a = leaf("marked-right", "cylinder", {0});
    auto am = instantiate(a.generator);
    // unit
    auto unit = pushout_product(am, boundary_map(0));
    CHECK(arrow_iso(unit.map, am).ok);
    // ∂Δ^0 -> Δ^0 gives the first small generator with n = 0
    auto u = pp_certificate({AnodyneClass::marked_right, a}, flat(SimplicialMap{empty_set(), simplex(0), {}}));
    CHECK(check_certificate(u, instantiate({"marked-right", "cylinder", {0}, std::nullopt})).valid);
    // (Δ^1)^♭ -> (Δ^1)^♯ gives the marking generator
    auto d1 = simplex(1);
    MarkedMap mk{MarkedSimplicialSet::flat(d1), MarkedSimplicialSet::sharp(d1), SimplicialMap::identity(d1)};
    auto m = pp_certificate({AnodyneClass::marked_right, a}, mk);
    CHECK(check_certificate(m, instantiate({"marked-right", "cylinder-marking", {}, std::nullopt})).valid);
    for (int n = 1; n <= 3; ++n) {
        auto c = pp_certificate({AnodyneClass::marked_right, a}, boundary_map(n));
        CHECK(check_certificate(c, instantiate({"marked-right", "cylinder", {n}, std::nullopt})).valid);
    }
    CHECK_THROWS_AS(pp_certificate({AnodyneClass::inner, leaf("inner", "horn", {2, 1})}, boundary_map(1)), InvalidInput);
    CHECK_THROWS_AS(pushout_product(am, flat(map_by_vertices(d1, simplex(0), {0, 0}))), InvalidInput);

    // the product of Δ^1 and Δ^1 has two triangles and the domain of {1} ⊠ ∂Δ^1 is three edges
    auto c1 = instantiate({"right-cylinder", "cylinder", {1}, std::nullopt});
    CHECK(c1.cod.space->counts() == std::vector<int>{4, 5, 2});
    CHECK(c1.dom.space->counts() == std::vector<int>{4, 3});
}

TEST_CASE("small generators against the product generators") {
    auto d1 = simplex(1);
    MarkedMap mk{MarkedSimplicialSet::flat(d1), MarkedSimplicialSet::sharp(d1), SimplicialMap::identity(d1)};
    // each small generator is a single product generator with the horn {1} -> Δ^1
    for (int n = 0; n <= 3; ++n) {
        Certificate c = leaf("marked-right-products", "horn-product", {1, 1});
        c.generator.arg = boundary_map(n);
        CHECK(check_certificate({AnodyneClass::marked_right, c}, instantiate({"marked-right", "cylinder", {n}, std::nullopt})).valid);
    }
    Certificate c = leaf("marked-right-products", "horn-product", {1, 1});
    c.generator.arg = mk;
    CHECK(check_certificate({AnodyneClass::marked_right, c}, instantiate({"marked-right", "cylinder-marking", {}, std::nullopt})).valid);

    // a cylinder generator j^♯ ⊠ k rewritten as ({1} -> (Δ^1)^♯) ⊠ (i^♯ ⊠ k)
    std::vector<MarkedMap> ks{boundary_map(0), boundary_map(1), boundary_map(2), mk};
    for (int m = 0; m <= 2; ++m)
        for (const auto &k : ks) {
            CAPTURE(m);
            GeneratorRef g{"marked-right-products", "cylinder-product", {m}, k};
            auto claimed = instantiate(g);
            auto inner = pushout_product(sharp(boundary_map(m).map), k).map;
            auto cert = pp_certificate({AnodyneClass::marked_right, leaf("marked-right", "cylinder", {0})}, inner);
            CHECK(check_certificate(cert, claimed).valid);
        }
}

TEST_CASE("deformation retracts") {
    auto d = endpoint_contraction();
    CHECK(validate(d).ok);
    auto cert = retract_from_deformation(d);
    auto v = check_certificate(cert, d.i);
    CHECK(v.valid);
    CHECK(v.reason == "");

    // A = B with the constant homotopy
    auto b = MarkedSimplicialSet::sharp(simplex(1));
    DeformationRetract id{{b, b, SimplicialMap::identity(b.space)}, {b, b, SimplicialMap::identity(b.space)}, {}};
    auto cyl = cylinder(b);
    auto p = product(simplex(1), b.space);
    id.h = {cyl, b, p.second};
    CHECK(validate(id).ok);
    CHECK(check_certificate(retract_from_deformation(id), id.i).valid);

    // h_1 = i r fails for the projection
    auto bad = d;
    bad.h = {cylinder(d.i.cod), d.i.cod, product(simplex(1), d.i.cod.space).second};
    CHECK_FALSE(validate(bad).ok);
    CHECK_THROWS_AS(retract_from_deformation(bad), InvalidInput);
}

TEST_CASE("K -> J presents J^♭ -> J^♯") {
    auto kj = k_to_j(4);
    CHECK(validate(kj).ok);
    auto k = kj.dom;
    CHECK(k->counts() == std::vector<int>{2, 4, 4, 1});
    auto cert = j_sharp_certificate(4);
    auto v = check_certificate(cert, j_flat_to_sharp(4));
    CHECK(v.valid);
    CHECK(v.map->cod.space->truncated());
    // the same pushout is not available among the cartesian generators
    auto c2 = cert;
    c2.cls = AnodyneClass::cartesian;
    CHECK_FALSE(check_certificate(c2).valid);
}

TEST_CASE("corrupted certificates are rejected") {
    std::mt19937 rng(2024);
    auto valid = valid_claims();
    for (const auto &c : valid) {
        CAPTURE(c.name);
        CHECK(check_certificate(c.cert, c.claimed).valid);
    }
    auto bad = corrupted_claims(rng);
    CHECK(bad.size() == 10);
    for (const auto &c : bad) {
        CAPTURE(c.name);
        auto v = check_certificate(c.cert, c.claimed);
        CHECK_FALSE(v.valid);
        CHECK_FALSE(v.reason.empty());
    }
}

TEST_CASE("refutation by lifting") {
    auto d1 = simplex(1);
    auto ends = flat(map_by_vertices(boundary(1), d1, {0, 1}));
    auto r = rlp_refute(ends, AnodyneClass::right, 3);
    CHECK(r.refuted);
    CHECK(r.test == "fold");
    REQUIRE(r.square);
    CHECK(r.square->validate().ok);

    auto horn22 = instantiate({"right", "horn", {2, 2}, std::nullopt});
    CHECK_FALSE(rlp_refute(horn22, AnodyneClass::right, 3).refuted);

    MarkedMap mk{MarkedSimplicialSet::flat(d1), MarkedSimplicialSet::sharp(d1), SimplicialMap::identity(d1)};
    auto rc = rlp_refute(mk, AnodyneClass::cartesian, 3);
    CHECK(rc.refuted);
    CHECK(rc.test == "arrow");

    // certified maps are never refuted
    for (const auto &c : valid_claims()) {
        CAPTURE(c.name);
        CHECK_FALSE(rlp_refute(c.claimed, c.cert.cls, 4).refuted);
    }
    for (const auto &cat : catalogs())
        for (const auto &g : instances(cat, 2)) CHECK_FALSE(rlp_refute(instantiate(g), cat.cls, 3).refuted);
}
