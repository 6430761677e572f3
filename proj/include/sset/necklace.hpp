#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sset/core.hpp"

namespace sset {

using VertexMask = std::uint64_t;

// A necklace mapped into a base, with a flag T_0 ⊆ ... ⊆ T_k of vertex subsets.
// Bead sizes are the dimensions of the bead images; a single 0-dimensional bead is the point necklace.
struct FlaggedNecklace {
    std::vector<Simplex> beads;
    std::vector<VertexMask> flag;

    int vertex_count() const;
    std::vector<int> profile() const;
    std::vector<int> joints() const;
    VertexMask joint_mask() const;
    VertexMask all_mask() const;
    int length() const { return static_cast<int>(flag.size()) - 1; }
    auto operator<=>(const FlaggedNecklace &) const = default;
};

// Checks bead compatibility, joint containment and flag monotonicity; endpoints if given.
Report validate(const SimplicialSet &s, const FlaggedNecklace &n, std::optional<int> from = std::nullopt,
                std::optional<int> to = std::nullopt);
int start_vertex(const SimplicialSet &s, const FlaggedNecklace &n);
int end_vertex(const SimplicialSet &s, const FlaggedNecklace &n);

// Unique totally non-degenerate representative with T_0 = joints and T_k = all vertices.
FlaggedNecklace normalize(const SimplicialSet &s, FlaggedNecklace n);
bool is_canonical(const SimplicialSet &s, const FlaggedNecklace &n);
std::string necklace_name(const SimplicialSet &s, const FlaggedNecklace &n);

// Concatenation x ∘ y for y: a -> b and x: b -> c with equal flag lengths, normalized.
FlaggedNecklace compose(const SimplicialSet &s, const FlaggedNecklace &x, const FlaggedNecklace &y);
FlaggedNecklace identity_necklace(const SimplicialSet &s, int vertex, int length);
// Image along a simplicial map, normalized.
FlaggedNecklace push_forward(const SimplicialMap &f, const FlaggedNecklace &n);

struct MappingOptions {
    int dim_bound = 3;
    int bead_bound = -1;         // maximum total necklace vertices; -1 selects dim(S)·(D+2)+2
    bool allow_partial = false;  // keep the bounded subcomplex instead of failing when the bound cuts necklaces
};

// Mapping complex 𝔠(S)(s,t) up to the dimension bound, cells named by canonical flagged necklaces.
struct MappingComplex {
    SSetPtr base;
    int from = 0;
    int to = 0;
    SSetPtr space;
    bool complete = true;  // no necklace was cut by the vertex bound
    int vertex_bound = 0;
    std::vector<std::vector<FlaggedNecklace>> cells;  // canonical representative per non-degenerate cell

    // Canonical necklace (flag with repeats) of a simplex, and the simplex of a necklace.
    FlaggedNecklace necklace(const Simplex &z) const;
    Simplex simplex(const FlaggedNecklace &n) const;  // normalizes first
    std::optional<Simplex> find(const FlaggedNecklace &n) const;

    std::map<std::pair<std::vector<CellId>, std::vector<VertexMask>>, CellId> index;
};

MappingComplex mapping_complex(SSetPtr s, int from, int to, const MappingOptions &opts = {});
MappingComplex mapping_complex(SSetPtr s, const std::string &from, const std::string &to,
                               const MappingOptions &opts = {});

// Nerve of {A ⊆ [i,j] | i, j ∈ A} ordered by inclusion, truncated at the bound.
SSetPtr cube_oracle(int n, int i, int j, int bound = 8);

// Composition 𝔠(S)(b,c) × 𝔠(S)(a,b) -> 𝔠(S)(a,c) on simplices of equal dimension.
Simplex compose(const MappingComplex &bc, const MappingComplex &ab, const MappingComplex &ac, const Simplex &x,
                const Simplex &y);
// Map of mapping complexes induced by f: S -> S'.
SimplicialMap induced_map(const MappingComplex &src, const MappingComplex &tgt, const SimplicialMap &f);

}  // namespace sset
