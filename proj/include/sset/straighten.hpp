#pragma once

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "sset/constructions.hpp"
#include "sset/necklace.hpp"

namespace sset {

// 𝔠(S) with hom complexes computed on demand up to a dimension bound.
class PathCategory {
  public:
    PathCategory(SSetPtr base, MappingOptions opts);
    const SSetPtr &base() const { return base_; }
    const MappingOptions &options() const { return opts_; }
    int bound() const { return opts_.dim_bound; }
    int objects() const { return base_->count(0); }
    const MappingComplex &hom(int a, int b) const;
    // y: a -> b, x: b -> c, both k-simplices
    Simplex compose(int a, int b, int c, const Simplex &x, const Simplex &y) const;
    Simplex identity(int a, int k) const;

  private:
    SSetPtr base_;
    MappingOptions opts_;
    mutable std::map<std::pair<int, int>, std::shared_ptr<MappingComplex>> homs_;
};
using PathPtr = std::shared_ptr<const PathCategory>;

// 𝔠(f) for a map of simplicial sets.
struct PathFunctor {
    PathPtr src;
    PathPtr tgt;
    SimplicialMap map;
    int on_object(int a) const { return map.images[0][a].cell.index; }
    Simplex on_hom(int a, int b, const Simplex &sigma) const;
};

// A simplicial functor 𝔠(S)^op -> mSet, stored up to the bound of its domain.
struct SimplicialFunctor {
    PathPtr domain;
    std::vector<MarkedSimplicialSet> values;  // per vertex of S
    // σ ∈ 𝔠(S)(a,b)_k and g ∈ G(b)_k give σ^*g ∈ G(a)_k.
    std::function<Simplex(int a, int b, const Simplex &sigma, const Simplex &g)> act;

    int bound() const { return domain->bound(); }
    Report validate(int max_dim = 2) const;
};

// Marks every image of a marked edge under the action of hom edges, degenerate ones included.
void close_markings(SimplicialFunctor &g);

// Table-backed action: entries for pairs that are not a common degeneracy.
using ActionTable = std::map<std::tuple<int, int, Simplex, Simplex>, Simplex>;
ActionTable action_table(const SimplicialFunctor &g);
std::function<Simplex(int, int, const Simplex &, const Simplex &)> action_from_table(
    std::shared_ptr<const ActionTable> table, std::vector<SSetPtr> values);

struct ConeBase {
    SimplicialMap p;     // X -> S
    Join cone;           // X ⋆ Δ^0
    Pushout pushout;     // S ⊔_X (X ⋆ Δ^0)
    SSetPtr space;       // S_p
    SimplicialMap i;     // S -> S_p
    SimplicialMap q;     // X ⋆ Δ^0 -> S_p
    int star = 0;        // cone vertex in S_p
};
ConeBase cone_base(const SimplicialMap &p);
// f ⋆ Δ^0 for f: X -> X'.
SimplicialMap cone_map(const Join &cx, const Join &cy, const SimplicialMap &f);

struct Straightening {
    ConeBase cone;
    SimplicialFunctor functor;
    std::vector<std::shared_ptr<MappingComplex>> complexes;  // 𝔠(S_p)(s,*)
};
Straightening straighten(const SimplicialMap &p, const PathPtr &base);
// `marked` are marked non-degenerate edges of X.
Straightening straighten_marked(const SimplicialMap &p, const std::set<int> &marked, const PathPtr &base);
// Str(f) at every object, for f: X -> X' over S.
std::vector<SimplicialMap> straighten_map(const Straightening &a, const Straightening &b, const SimplicialMap &f);

struct KanExtension {
    SimplicialFunctor functor;
    // representative (source object, hom simplex, value simplex) per non-degenerate cell
    std::vector<std::vector<std::vector<std::tuple<int, Simplex, Simplex>>>> reps;
};
// (f^op)_! G, the coequalizer of ⨿ 𝔠(T)(d,fc') × 𝔠(S)(c',c) × G(c) ⇉ ⨿ 𝔠(T)(d,fc) × G(c).
KanExtension kan_extend(const PathFunctor &f, const SimplicialFunctor &g);
// G ∘ 𝔠(f)^op for f: T -> S.
SimplicialFunctor restrict(const SimplicialFunctor &g, const PathFunctor &f);

struct Unstraightening {
    MarkedSimplicialSet space;
    SimplicialMap projection;  // to S
};
Unstraightening unstraighten(const SimplicialFunctor &g, int bound);

// Constant functors and representables.
SimplicialFunctor constant_functor(const PathPtr &base, const MarkedSimplicialSet &value);
SimplicialFunctor representable(const PathPtr &base, int s);

// 𝔠(S)(t,s) -> 𝔠(S ∪_{s} Δ^1)(t,1) by post-composition with the new edge.
struct EdgeExtension {
    SSetPtr space;
    SimplicialMap inclusion;
    int end = 0;
};
EdgeExtension attach_edge(const SSetPtr &s, int vertex);
SimplicialMap postcompose_edge(const MappingComplex &src, const MappingComplex &tgt, const EdgeExtension &e);

// Str⁺(p∘p') against 𝔠(p)^op_! Str⁺(p') through the canonical comparison map.
Report check_base_change(const SimplicialMap &p, const SimplicialMap &pp, const std::set<int> &marked,
                         const MappingOptions &opts);
// Str⁺ of X0 ⊔_A X1 against the pushout of the Str⁺ values, through the canonical comparison map.
// A is unmarked; `marked0` and `marked1` mark edges of X0 and X1.
Report check_pushout(const SimplicialMap &f, const SimplicialMap &g, const SimplicialMap &p0, const SimplicialMap &p1,
                     const std::set<int> &marked0, const std::set<int> &marked1, const PathPtr &base);

}  // namespace sset
