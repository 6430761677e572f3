#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace sset {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Malformed or out-of-contract input.
struct InvalidInput : Error {
    using Error::Error;
};
// A computation needed data beyond a declared dimension or size bound.
struct Inconclusive : Error {
    using Error::Error;
};

// Strictly increasing repeat positions j_1 < ... < j_k of the degeneracy s_{j_k}...s_{j_1}.
using Word = std::vector<int>;
// A monotone map [q] -> [m], listed by values.
using Mono = std::vector<int>;

struct CellId {
    int dim = -1;
    int index = -1;
    auto operator<=>(const CellId &) const = default;
};

// Eilenberg-Zilber normal form: a degeneracy word applied to a non-degenerate cell.
struct Simplex {
    Word word;
    CellId cell;
    int dim() const { return cell.dim + static_cast<int>(word.size()); }
    bool degenerate() const { return !word.empty(); }
    auto operator<=>(const Simplex &) const = default;
};

inline Simplex cell_simplex(CellId c) { return Simplex{{}, c}; }

// Combinatorics of Δ, independent of any simplicial set.
namespace delta {
Mono surjection(const Word &w, int target_dim);
Word word_of(const Mono &surj);
bool is_valid_word(const Word &w, int dim);
Mono compose(const Mono &f, const Mono &g);  // f ∘ g
Mono face_map(int m, int i);                  // δ^i : [m-1] -> [m]
Mono degeneracy_map(int m, int j);            // σ^j : [m+1] -> [m]
Mono identity(int m);
std::vector<Word> words(int m, int k);  // all words of length k on an m-simplex
}  // namespace delta

class Builder;

class SimplicialSet {
  public:
    SimplicialSet() = default;

    int dim() const { return dim_; }
    bool truncated() const { return truncated_; }
    int top() const { return static_cast<int>(names_.size()) - 1; }
    int count(int d) const { return d >= 0 && d <= top() ? static_cast<int>(names_[d].size()) : 0; }
    std::vector<int> counts() const;
    int total_cells() const;

    const std::string &name(CellId c) const { return names_[c.dim][c.index]; }
    const std::vector<Simplex> &faces(CellId c) const { return faces_[c.dim][c.index]; }
    const std::vector<int> &cell_vertices(CellId c) const { return verts_[c.dim][c.index]; }
    std::optional<CellId> find(int d, const std::string &name) const;
    CellId at(int d, const std::string &name) const;
    Simplex vertex(const std::string &name) const { return cell_simplex(at(0, name)); }

    Simplex face(const Simplex &z, int i) const;
    Simplex degeneracy(const Simplex &z, int j) const;
    Simplex apply(const Simplex &z, const Mono &theta) const;
    std::vector<int> vertices(const Simplex &z) const;
    std::vector<Simplex> all_simplices(int m) const;
    std::string render(const Simplex &z) const;

    bool empty() const { return count(0) == 0; }

  private:
    friend class Builder;
    Simplex face_along(CellId x, const std::vector<int> &img) const;

    int dim_ = -1;
    bool truncated_ = false;
    std::vector<std::vector<std::string>> names_;
    std::vector<std::vector<std::vector<Simplex>>> faces_;
    std::vector<std::vector<std::vector<int>>> verts_;
    std::vector<std::unordered_map<std::string, int>> index_;
};

using SSetPtr = std::shared_ptr<const SimplicialSet>;

// Apply a degeneracy word to a simplex: s_w z.
Simplex degenerate(const Simplex &z, const Word &w);
Word repeats(const Simplex &z);

class Builder {
  public:
    CellId add(int d, const std::string &name, std::vector<Simplex> faces = {});
    std::optional<CellId> find(int d, const std::string &name) const;
    CellId at(int d, const std::string &name) const;
    int count(int d) const;
    // Marks the result as a truncation at the given bound.
    void truncate(int bound);
    SimplicialSet build();
    SSetPtr build_ptr() { return std::make_shared<const SimplicialSet>(build()); }

  private:
    SimplicialSet s_;
    std::optional<int> bound_;
    void ensure(int d);
};

struct MarkedSimplicialSet {
    SSetPtr space;
    std::set<int> marked;  // indices of non-degenerate edges

    bool is_marked(const Simplex &edge) const;
    static MarkedSimplicialSet flat(SSetPtr s);
    static MarkedSimplicialSet sharp(SSetPtr s);
};

struct SimplicialMap {
    SSetPtr dom;
    SSetPtr cod;
    std::vector<std::vector<Simplex>> images;

    Simplex operator()(const Simplex &z) const;
    Simplex image(CellId c) const { return images[c.dim][c.index]; }
    static SimplicialMap identity(SSetPtr s);
    bool operator==(const SimplicialMap &o) const { return images == o.images; }
};

SimplicialMap compose(const SimplicialMap &g, const SimplicialMap &f);  // g ∘ f
bool is_mono(const SimplicialMap &f);
bool same_structure(const SimplicialSet &a, const SimplicialSet &b);

struct MarkedMap {
    MarkedSimplicialSet dom;
    MarkedSimplicialSet cod;
    SimplicialMap map;
};

// Result of the validator: empty message means success.
struct Report {
    bool ok = true;
    std::string message;
    static Report success() { return {}; }
    static Report failure(std::string m) { return {false, std::move(m)}; }
};

Report validate(const SimplicialSet &x);
Report validate(const MarkedSimplicialSet &x);
Report validate(const SimplicialMap &f);
Report validate(const MarkedMap &f);

}  // namespace sset
