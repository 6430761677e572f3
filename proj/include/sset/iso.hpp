#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sset/core.hpp"

namespace sset {

struct IsoOptions {
    // Optional per-cell colours that an isomorphism must preserve (indexed [dim][index]).
    std::vector<std::vector<int>> colors_x;
    std::vector<std::vector<int>> colors_y;
    long long step_limit = 200'000'000;
};

struct IsoResult {
    bool iso = false;
    std::vector<std::vector<Simplex>> images;  // X cell -> Y cell
    std::string reason;
};

IsoResult iso_check(const SimplicialSet &x, const SimplicialSet &y, const IsoOptions &opts = {});
IsoResult iso_check(const MarkedSimplicialSet &x, const MarkedSimplicialSet &y);
std::optional<SimplicialMap> find_iso(const SSetPtr &x, const SSetPtr &y);

// Whether f is an isomorphism (a valid map that is a bijection on non-degenerate cells).
Report is_isomorphism(const SimplicialMap &f);

}  // namespace sset
