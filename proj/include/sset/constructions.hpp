#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sset/category.hpp"
#include "sset/core.hpp"

namespace sset {

// ---- standard complexes -------------------------------------------------

// Simplicial sets whose simplices are determined by their vertex sequences (ordered simplicial
// complexes, nerves of thin categories, J). `cells[d]` lists the non-degenerate d-simplices.
SSetPtr from_vertex_sequences(const std::vector<std::string> &vertex_names,
                              const std::vector<std::vector<std::vector<int>>> &cells,
                              std::optional<int> truncation = std::nullopt);

SSetPtr simplex(int n);
SSetPtr boundary(int n);
SSetPtr horn(int n, int k);
SSetPtr interval_J(int bound);
SSetPtr complex_K();
SSetPtr empty_set();
SSetPtr point(const std::string &name = "0");
// Subsimplex Δ^{vertices} ⊆ Δ^n as an inclusion map.
SimplicialMap simplex_face_inclusion(const SSetPtr &delta_n, const std::vector<int> &vertices);
// Maps between vertex-sequence complexes induced by a vertex assignment.
SimplicialMap map_by_vertices(SSetPtr dom, SSetPtr cod, const std::vector<int> &vertex_map);

SSetPtr nerve(const FiniteCategory &c, int bound);
// Morphism chain (identities included) of a simplex of nerve(c), and the inverse lookup.
std::vector<int> nerve_chain(const FiniteCategory &c, const SimplicialSet &n, const Simplex &z);
Simplex nerve_simplex(const FiniteCategory &c, const SimplicialSet &n, const std::vector<int> &chain, int start);
SimplicialMap nerve_map(const Functor &f, const FiniteCategory &src, const FiniteCategory &tgt, SSetPtr nsrc,
                        SSetPtr ntgt);

// ---- maps into a simplicial set from a list of cells ---------------------

struct Sub {
    SSetPtr space;
    SimplicialMap inclusion;
};
Sub subcomplex(const SSetPtr &x, const std::vector<CellId> &generators);
Sub image(const SimplicialMap &f);

// ---- limits ---------------------------------------------------------------

struct Pullback {
    SSetPtr space;
    SimplicialMap first;
    SimplicialMap second;
    // Normal form of the pair (a, b) of equal-dimension simplices.
    std::function<Simplex(const Simplex &, const Simplex &)> pair;
};
Pullback pullback(const SimplicialMap &f, const SimplicialMap &g);
Pullback product(const SSetPtr &x, const SSetPtr &y);
MarkedSimplicialSet marked_product(const MarkedSimplicialSet &x, const MarkedSimplicialSet &y, const Pullback &p);

// ---- joins ----------------------------------------------------------------

struct Join {
    SSetPtr space;
    SimplicialMap left;
    SimplicialMap right;
    std::function<Simplex(const std::optional<Simplex> &, const std::optional<Simplex> &)> join;
};
Join join(const SSetPtr &x, const SSetPtr &y);
// X ⋆ Δ^0 with cone point named "*" and cone cells named "x*".
Join cone(const SSetPtr &x);
// Δ^0 ⋆ X with cone point named "*" and cone cells named "*x".
Join cocone(const SSetPtr &x);

// ---- colimits -------------------------------------------------------------

struct Diagram {
    struct Relation {
        int a = 0;
        int b = 0;
        SimplicialMap f;  // R -> pieces[a]
        SimplicialMap g;  // R -> pieces[b]
    };
    std::vector<SSetPtr> pieces;
    std::vector<int> priority;  // smaller names win
    std::vector<std::string> tags;
    std::vector<std::optional<std::set<int>>> markings;
    std::vector<Relation> relations;

    int add_piece(SSetPtr p, int prio = 0, std::string tag = "", std::optional<std::set<int>> marking = std::nullopt);
    void relate(int a, int b, SimplicialMap f, SimplicialMap g);
};

struct Colimit {
    SSetPtr space;
    std::set<int> marked;
    std::vector<SimplicialMap> legs;
    // For each result cell, the piece cells representing it.
    std::vector<std::vector<std::vector<std::pair<int, CellId>>>> members;
};

Colimit colimit(const Diagram &d, std::optional<int> bound = std::nullopt);
// Mediating map out of a colimit; checks that the cocone is compatible.
SimplicialMap descend(const Colimit &c, const Diagram &d, const std::vector<SimplicialMap> &cocone, SSetPtr target);

struct Pushout {
    SSetPtr space;
    SimplicialMap first;   // X -> P
    SimplicialMap second;  // Y -> P
    Colimit colim;
    Diagram diagram;
};
Pushout pushout(const SimplicialMap &f, const SimplicialMap &g);

struct Coproduct {
    SSetPtr space;
    SimplicialMap first;
    SimplicialMap second;
};
Coproduct coproduct(const SSetPtr &x, const SSetPtr &y);

struct Quotient {
    SSetPtr space;
    SimplicialMap projection;
    std::vector<CellId> points;  // the collapsed vertex of each subcomplex
};
// Collapse each subcomplex (generated by the listed cells) to a point; intersecting ones share a point.
Quotient quotient(const SSetPtr &x, const std::vector<std::vector<CellId>> &subcomplexes);

struct Pointed {
    SSetPtr space;
    CellId v0;
    CellId v1;
};
enum class Side { left, symmetric, right };
Pointed suspension(const SSetPtr &x, Side side);
// I^n = Δ^{n+1} / Δ^{0..n}; vertices "0" and "n+1".
Pointed interval_I(int n);

// ---- right mapping spaces -------------------------------------------------

SSetPtr hom_right(const SimplicialSet &s, const std::string &from, const std::string &to, int bound);

// ---- homotopy category ----------------------------------------------------

struct HomotopyCategory {
    FiniteCategory category;
    std::vector<int> edge_class;  // per non-degenerate edge
    std::vector<int> identity_class;
};
HomotopyCategory homotopy_category(const SSetPtr &x, int bound);
bool is_equivalence_edge(const SSetPtr &x, const Simplex &edge, int bound);

// ---- generic construction from operator data ------------------------------

// Builds a simplicial set from the full sets of m-simplices (degenerate ones included) for m ≤ bound,
// given face and degeneracy operators on keys. A simplex z is degenerate iff z = s_j d_j z for some j.
template <class Key>
struct OperatorData {
    std::function<std::vector<Key>(int)> simplices;
    std::function<Key(const Key &, int)> face;
    std::function<Key(const Key &, int)> degeneracy;
    std::function<std::string(const Key &)> name;
};

template <class Key>
struct Built {
    SSetPtr space;
    std::vector<std::map<Key, Simplex>> normal_form;
    std::vector<std::vector<Key>> keys;  // per non-degenerate cell
};

template <class Key>
Built<Key> build_from_operators(const OperatorData<Key> &data, int bound, bool truncated) {
    Builder b;
    Built<Key> out;
    out.normal_form.resize(bound + 1);
    out.keys.resize(bound + 1);
    for (int m = 0; m <= bound; ++m) {
        auto all = data.simplices(m);
        std::vector<Key> nondeg;
        std::vector<std::pair<Key, std::pair<Key, int>>> deg;
        for (const auto &z : all) {
            std::optional<std::pair<Key, int>> witness;
            for (int j = 0; j < m && !witness; ++j) {
                Key y = data.face(z, j);
                if (data.degeneracy(y, j) == z) witness = std::make_pair(y, j);
            }
            if (witness)
                deg.push_back({z, *witness});
            else
                nondeg.push_back(z);
        }
        std::vector<std::pair<std::string, Key>> named;
        for (const auto &z : nondeg) named.push_back({data.name(z), z});
        std::sort(named.begin(), named.end(), [](const auto &l, const auto &r) { return l.first < r.first; });
        for (const auto &[nm, z] : named) {
            std::vector<Simplex> faces;
            if (m > 0)
                for (int i = 0; i <= m; ++i) {
                    auto it = out.normal_form[m - 1].find(data.face(z, i));
                    if (it == out.normal_form[m - 1].end()) throw Error("face outside the enumerated simplices");
                    faces.push_back(it->second);
                }
            CellId c = b.add(m, nm, std::move(faces));
            out.normal_form[m][z] = cell_simplex(c);
            out.keys[m].push_back(z);
        }
        for (const auto &[z, w] : deg) {
            auto it = out.normal_form[m - 1].find(w.first);
            if (it == out.normal_form[m - 1].end()) throw Error("face outside the enumerated simplices");
            out.normal_form[m][z] = degenerate(it->second, Word{w.second});
        }
    }
    if (truncated) b.truncate(bound);
    out.space = b.build_ptr();
    return out;
}

}  // namespace sset
