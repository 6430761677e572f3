#include "sset/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <regex>

#include "sset/constructions.hpp"

#ifndef SSET_DATA_DIR
#define SSET_DATA_DIR "data"
#endif

namespace sset {

namespace {

int vertex(const SimplicialSet &s, const io::json &v) {
    auto c = s.find(0, v.get<std::string>());
    if (!c) throw InvalidInput("no vertex named '" + v.get<std::string>() + "'");
    return c->index;
}

CorpusEntry build_entry(const io::json &j) {
    CorpusEntry e;
    e.name = j.at("name").get<std::string>();
    e.kind = j.at("kind").get<std::string>();
    if (e.kind == "simplex") {
        e.space = simplex(j.at("n").get<int>());
    } else if (e.kind == "boundary") {
        e.space = boundary(j.at("n").get<int>());
    } else if (e.kind == "horn") {
        e.space = horn(j.at("n").get<int>(), j.at("k").get<int>());
    } else if (e.kind == "J") {
        e.space = interval_J(j.at("truncation").get<int>());
    } else if (e.kind == "K") {
        e.space = complex_K();
    } else if (e.kind == "category") {
        e.category = io::read_category(j.at("category"));
        int bound = j.value("bound", static_cast<int>(e.category->objects.size()));
        e.space = nerve(*e.category, bound);
    } else if (e.kind == "grothendieck") {
        e.functor = io::read_category_functor(j.at("functor"));
        auto g = grothendieck(*e.functor);
        e.category = g.total;
        e.space = nerve(g.total, j.value("bound", static_cast<int>(g.total.objects.size())));
    } else if (e.kind == "sset") {
        e.space = io::read_sset(j.at("space"));
    } else {
        throw InvalidInput("unknown corpus kind '" + e.kind + "'");
    }
    for (const auto &p : j.value("pairs", io::json::array())) e.pairs.push_back({vertex(*e.space, p.at(0)), vertex(*e.space, p.at(1))});
    e.infinity_category = j.value("infinity_category", true);
    e.bead_bound = j.value("bead_bound", -1);
    e.allow_partial = j.value("allow_partial", false);
    for (const auto &m : j.value("marked", io::json::array())) {
        auto c = e.space->find(1, m.get<std::string>());
        if (!c) throw InvalidInput("no edge named '" + m.get<std::string>() + "' in " + e.name);
        e.marked.insert(c->index);
    }
    if (auto r = validate(*e.space); !r.ok) throw InvalidInput(e.name + ": " + r.message);
    return e;
}

}  // namespace

const CorpusEntry *Corpus::find(const std::string &name) const {
    for (const auto &e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

Corpus load_corpus(const io::json &j) {
    Corpus c;
    try {
        for (const auto &e : j.at("entries")) c.entries.push_back(build_entry(e));
    } catch (const io::json::exception &e) {
        throw InvalidInput(std::string("corpus: ") + e.what());
    }
    std::sort(c.entries.begin(), c.entries.end(), [](const auto &a, const auto &b) { return a.name < b.name; });
    for (size_t i = 1; i < c.entries.size(); ++i)
        if (c.entries[i].name == c.entries[i - 1].name) throw InvalidInput("duplicate corpus entry '" + c.entries[i].name + "'");
    return c;
}

Corpus load_corpus_file(const std::string &path) { return load_corpus(io::load(path)); }

std::string default_corpus_path() {
    if (const char *p = std::getenv("SSET_CORPUS")) return p;
    return std::string(SSET_DATA_DIR) + "/corpus.json";
}

SSetPtr resolve_base(const std::string &spec, const Corpus *corpus) {
    std::smatch m;
    if (std::regex_match(spec, m, std::regex(R"(delta(\d+))"))) return simplex(std::stoi(m[1]));
    if (std::regex_match(spec, m, std::regex(R"(boundary(\d+))"))) return boundary(std::stoi(m[1]));
    if (std::regex_match(spec, m, std::regex(R"(horn(\d+)-(\d+))"))) return horn(std::stoi(m[1]), std::stoi(m[2]));
    if (std::regex_match(spec, m, std::regex(R"(J(\d+))"))) return interval_J(std::stoi(m[1]));
    if (spec == "K") return complex_K();
    if (spec == "point") return point();
    if (spec == "empty") return empty_set();
    if (corpus)
        if (const auto *e = corpus->find(spec)) return e->space;
    if (std::filesystem::exists(spec)) return io::read_sset(io::load(spec));
    throw InvalidInput("unknown base '" + spec + "'");
}

}  // namespace sset
