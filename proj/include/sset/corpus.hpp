#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sset/category.hpp"
#include "sset/core.hpp"
#include "sset/io.hpp"

namespace sset {

struct CorpusEntry {
    std::string name;
    std::string kind;
    SSetPtr space;
    std::vector<std::pair<int, int>> pairs;  // designated (from, to) vertices
    bool infinity_category = true;
    int bead_bound = -1;
    bool allow_partial = false;
    std::set<int> marked;                       // designated marking of the entry
    std::optional<FiniteCategory> category;     // for nerves
    std::optional<CategoryValuedFunctor> functor;  // for Grothendieck constructions
};

struct Corpus {
    std::vector<CorpusEntry> entries;  // sorted by name
    const CorpusEntry *find(const std::string &name) const;
};

Corpus load_corpus(const io::json &j);
Corpus load_corpus_file(const std::string &path);
// The shipped corpus: $SSET_CORPUS if set, else the in-repo data file.
std::string default_corpus_path();

// delta<n>, boundary<n>, horn<n>-<k>, J<t>, K, point, empty, a corpus name, or a path to a SimplicialSet JSON file.
SSetPtr resolve_base(const std::string &spec, const Corpus *corpus = nullptr);

}  // namespace sset
