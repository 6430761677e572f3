#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sset/category.hpp"
#include "sset/constructions.hpp"
#include "sset/necklace.hpp"

namespace sset {

// Subsets of [n] as bitmasks; chains are weakly increasing lists of non-empty subsets.
using SubsetChain = std::vector<int>;

enum class QMethod { necklace, chain_quotient, both };
QMethod q_method(const std::string &name);

struct QComplex {
    int n = 0;
    int bound = 0;
    QMethod method = QMethod::necklace;
    SSetPtr space;
    std::vector<std::vector<SubsetChain>> reps;  // representative chain per non-degenerate cell
    std::function<Simplex(const SubsetChain &)> locate;

    Simplex simplex(const SubsetChain &c) const { return locate(c); }
};

// Q^n up to dimension D; `both` builds the two models and fails hard unless they are isomorphic.
QComplex q_complex(int n, int bound, QMethod method = QMethod::necklace);
// Q(θ): Q^m -> Q^n for a monotone θ: [m] -> [n].
SimplicialMap q_operator(const QComplex &src, const QComplex &tgt, const Mono &theta);
// Q^n -> Δ^n taking a vertex S to max(S).
SimplicialMap q_to_delta(const QComplex &q);
std::string subset_name(int mask);
std::string chain_name(const SubsetChain &c);

struct Realization {
    SSetPtr space;
    Colimit colim;
    Diagram diagram;
    std::vector<CellId> piece_cell;  // the cell of X behind each piece
    std::vector<QComplex> pieces;
    bool partial = false;  // X was truncated, so only its known skeleton was realized
};
// |X|_Q: the colimit of Q^{dim x} over the non-degenerate cells x, glued along Q of the face operators.
Realization realize_q(const SSetPtr &x, int bound);

struct Singular {
    SSetPtr space;
    std::vector<std::vector<SimplicialMap>> maps;  // Q^n -> X per non-degenerate n-cell
};
Singular sing_q(const SSetPtr &x, int bound);

struct ComparisonOptions {
    int bound = 2;
    int bead_bound = -1;
    bool allow_partial = false;
    bool check_precondition = true;
};
struct Comparison {
    SSetPtr hom;  // Hom^R(S,s,t)
    Realization source;
    MappingComplex target;
    SimplicialMap map;
};
// |Hom^R(S,s,t)|_Q -> 𝔠(S)(s,t) induced by the classifying maps I^n -> S.
Comparison comparison_map(const SSetPtr &s, int from, int to, const ComparisonOptions &opts);

// A functor from a finite category to simplicial sets.
struct SSetDiagram {
    FiniteCategory category;
    std::vector<SSetPtr> values;
    std::vector<SimplicialMap> maps;  // per morphism
    Report validate() const;
};
struct HocolimResult {
    SSetPtr space;
    Colimit colim;
    SimplicialMap augmentation;  // hocolim -> colim
};
HocolimResult bousfield_kan_hocolim(const SSetDiagram &f, int bound);
Colimit diagram_colimit(const SSetDiagram &f);

}  // namespace sset
