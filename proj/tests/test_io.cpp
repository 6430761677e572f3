#include <doctest.h>

#include <random>

#include "cert_fixtures.hpp"
#include "groth_fixtures.hpp"
#include "sset/io.hpp"
#include "sset/iso.hpp"

using namespace sset;
using json = io::json;

namespace {

bool same_set(const SimplicialSet &a, const SimplicialSet &b) {
    return same_structure(a, b) && io::to_json(a) == io::to_json(b);
}

}  // namespace

TEST_CASE("simplicial sets round-trip") {
    for (auto x : {empty_set(), point(), simplex(3), boundary(2), horn(3, 0), interval_J(3), complex_K(),
                   product(simplex(1), simplex(2)).space, nerve(FiniteCategory::codiscrete({"a", "b"}), 3)}) {
        auto j = io::to_json(*x);
        auto y = io::read_sset(io::parse(j.dump()));
        CHECK(same_set(*x, *y));
        CHECK(y->truncated() == x->truncated());
        CHECK(j.dump() == io::to_json(*y).dump());
    }
    auto m = MarkedSimplicialSet{simplex(2), {0, 2}};
    auto back = io::read_marked(io::to_json(m));
    CHECK(back.marked == m.marked);
}

TEST_CASE("names repeated across dimensions") {
    Builder b;
    auto v = b.add(0, "x");
    auto w = b.add(0, "y");
    b.add(1, "x", {cell_simplex(w), cell_simplex(v)});
    auto s = b.build_ptr();
    auto j = io::to_json(*s);
    CHECK(j["faces"].contains("1:x"));
    CHECK(same_set(*s, *io::read_sset(j)));
}

TEST_CASE("corrupted files are rejected") {
    auto j = io::to_json(*simplex(2));
    auto bad = j;
    bad["faces"]["012"][0]["cell"] = "01";
    CHECK_THROWS_AS(io::read_sset(bad), InvalidInput);
    bad = j;
    bad["faces"]["012"].erase(0);
    CHECK_THROWS_AS(io::read_sset(bad), InvalidInput);
    bad = j;
    bad["cells"]["1"].push_back("01");
    CHECK_THROWS_AS(io::read_sset(bad), InvalidInput);
    bad = j;
    bad["faces"]["01"][0]["word"] = {0};
    CHECK_THROWS_AS(io::read_sset(bad), InvalidInput);
    CHECK_THROWS_AS(io::parse("{\"cells\": "), InvalidInput);
    CHECK_THROWS_AS(io::read_sset(json::array()), InvalidInput);
    auto f = io::to_json(map_by_vertices(simplex(1), simplex(2), {0, 2}));
    f["images"]["01"]["cell"] = "01";
    CHECK_THROWS_AS(io::read_map(f), InvalidInput);
}

TEST_CASE("maps round-trip") {
    auto f = map_by_vertices(simplex(2), simplex(1), {0, 0, 1});
    auto g = io::read_map(io::to_json(f));
    CHECK(g == f);
    MarkedMap m{MarkedSimplicialSet::flat(simplex(1)), MarkedSimplicialSet::sharp(simplex(1)), SimplicialMap::identity(simplex(1))};
    auto n = io::read_marked_map(io::to_json(m));
    CHECK(n.cod.marked == m.cod.marked);
    CHECK(n.map == m.map);
}

TEST_CASE("necklaces round-trip") {
    auto s = simplex(3);
    auto mc = mapping_complex(s, 0, 3);
    for (const auto &level : mc.cells)
        for (const auto &n : level) {
            auto back = io::read_necklace(*s, io::to_json(*s, n));
            CHECK(back == n);
        }
    auto j = io::to_json(*s, mc.cells[0][0]);
    j["flag"] = json::array({json::array({0, 5})});
    CHECK_THROWS_AS(io::read_necklace(*s, j), InvalidInput);
}

TEST_CASE("certificates round-trip") {
    for (const auto &c : fixtures::valid_claims()) {
        CAPTURE(c.name);
        auto j = io::to_json(c.cert);
        auto back = io::read_certificate(io::parse(j.dump()));
        CHECK(io::to_json(back) == j);
        CHECK(check_certificate(back, c.claimed).valid);
    }
    CHECK_THROWS_AS(io::read_certificate(json{{"class", "outer"}, {"node", {{"kind", "generator"}}}}), InvalidInput);
    CHECK(io::catalog_json().size() == catalogs().size());
}

TEST_CASE("categories and category-valued functors round-trip") {
    std::mt19937 rng(17);
    for (int t = 0; t < 10; ++t) {
        auto F = fixtures::random_category_functor(rng);
        auto back = io::read_category_functor(io::parse(io::to_json(F).dump()));
        CHECK(io::to_json(back) == io::to_json(F));
    }
    json shorthand = {{"base", {{"linear", 2}}},
                      {"fibres", {{{"linear", 1}}, {{"linear", 0}}, {{"codiscrete", {"x", "y"}}}}},
                      {"pullbacks", {{"0->1", {{"objects", {{"0", "0"}}}}}, {"1->2", {{"objects", {{"x", "0"}, {"y", "0"}}}}}}}};
    auto F = io::read_category_functor(shorthand);
    CHECK(F.pullbacks[F.base.hom(0, 2)[0]].on_objects == std::vector<int>{0, 0});
    shorthand["pullbacks"].erase("1->2");
    CHECK_THROWS_AS(io::read_category_functor(shorthand), InvalidInput);
}

TEST_CASE("simplicial functors round-trip") {
    auto s = simplex(2);
    auto c = std::make_shared<const PathCategory>(s, MappingOptions{2, -1, false});
    auto st = straighten_marked(map_by_vertices(simplex(1), s, {0, 2}), {0}, c);
    auto j = io::to_json(st.functor);
    auto g = io::read_functor(io::parse(j.dump()));
    for (int a = 0; a < 3; ++a) {
        CHECK(same_set(*g.values[a].space, *st.functor.values[a].space));
        CHECK(g.values[a].marked == st.functor.values[a].marked);
        for (int b = 0; b < 3; ++b)
            for (int k = 0; k <= 2; ++k)
                for (const auto &sigma : c->hom(a, b).space->all_simplices(k))
                    for (const auto &x : st.functor.values[b].space->all_simplices(k))
                        CHECK(g.act(a, b, sigma, x) == st.functor.act(a, b, sigma, x));
    }
    CHECK(io::to_json(g) == j);
}

TEST_CASE("lifting problems and DOT") {
    auto h = horn(2, 1);
    auto i = map_by_vertices(h, simplex(2), {0, 1, 2});
    auto pr = extension_problem(i, SimplicialMap::identity(h));
    auto back = io::read_lifting_problem(io::to_json(pr));
    CHECK(back.top == pr.top);
    CHECK(find_lift(back).found == find_lift(pr).found);
    auto dot = io::to_dot(*simplex(1), {0});
    CHECK(dot == "digraph sset {\n  \"0\";\n  \"1\";\n  \"0\" -> \"1\" [label=\"01\", style=bold];\n}\n");
}
