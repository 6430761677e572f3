#pragma once

#include <string>
#include <vector>

#include "sset/corpus.hpp"

namespace sset::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    double limit = 0;
    std::string detail;
};

struct SuiteOptions {
    unsigned seed = 2024;
    std::vector<int> only;  // empty runs all
    bool verbose = false;
};

std::vector<CriterionResult> run(const Corpus &corpus, const SuiteOptions &opts);
io::json summary(const std::vector<CriterionResult> &results, unsigned seed);
std::string line(const CriterionResult &r);

}  // namespace sset::acceptance
