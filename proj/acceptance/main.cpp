#include <CLI11.hpp>
#include <iostream>

#include "suite.hpp"

int main(int argc, char **argv) {
    CLI::App app{"acceptance criteria"};
    sset::acceptance::SuiteOptions opts;
    std::string corpus_path = sset::default_corpus_path();
    app.add_option("--seed", opts.seed, "seed for the randomized criteria");
    app.add_option("--only", opts.only, "criterion ids to run");
    app.add_option("--corpus", corpus_path, "corpus file");
    CLI11_PARSE(app, argc, argv);
    try {
        auto corpus = sset::load_corpus_file(corpus_path);
        auto results = sset::acceptance::run(corpus, opts);
        bool all = true;
        for (const auto &r : results) {
            std::cout << sset::acceptance::line(r) << std::endl;
            all = all && r.pass;
        }
        return all ? 0 : 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
