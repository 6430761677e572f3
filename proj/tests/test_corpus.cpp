#include <doctest.h>

#include "sset/constructions.hpp"
#include "sset/corpus.hpp"
#include "sset/iso.hpp"

using namespace sset;

TEST_CASE("the shipped corpus loads") {
    auto c = load_corpus_file(default_corpus_path());
    CHECK(c.entries.size() >= 8);
    int categories = 0;
    for (const auto &e : c.entries) {
        CAPTURE(e.name);
        CHECK(validate(*e.space).ok);
        if (e.infinity_category) ++categories;
        for (auto [a, b] : e.pairs) {
            CHECK(a < e.space->count(0));
            CHECK(b < e.space->count(0));
        }
    }
    CHECK(categories >= 6);
    CHECK(std::is_sorted(c.entries.begin(), c.entries.end(), [](const auto &a, const auto &b) { return a.name < b.name; }));
    auto sq = c.find("square-poset");
    REQUIRE(sq);
    CHECK(sq->space->counts() == std::vector<int>{4, 5, 2});
    CHECK(c.find("grothendieck-arrow")->functor.has_value());
    CHECK(c.find("J5")->space->truncated());
}

TEST_CASE("base names resolve") {
    auto c = load_corpus_file(default_corpus_path());
    CHECK(iso_check(*resolve_base("delta3"), *simplex(3)).iso);
    CHECK(iso_check(*resolve_base("horn3-1"), *horn(3, 1)).iso);
    CHECK(iso_check(*resolve_base("J4"), *interval_J(4)).iso);
    CHECK(iso_check(*resolve_base("K"), *complex_K()).iso);
    CHECK(resolve_base("square-poset", &c)->count(0) == 4);
    CHECK_THROWS_AS(resolve_base("square-poset"), InvalidInput);
    CHECK_THROWS_AS(resolve_base("nonsense"), InvalidInput);
    CHECK_THROWS_AS(load_corpus(io::parse(R"({"entries": [{"name": "x", "kind": "simplex", "n": 1, "pairs": [["0", "7"]]}]})")),
                    InvalidInput);
}
