#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sset/core.hpp"

namespace sset {

// All m-simplices of a simplicial set (degenerate ones included), indexed by their faces.
class SimplexIndex {
  public:
    explicit SimplexIndex(SSetPtr x) : x_(std::move(x)) {}
    const SimplicialSet &space() const { return *x_; }
    // Simplices of dimension m, ascending by (word length, name).
    const std::vector<Simplex> &all(int m);
    // Simplices with the given faces; `skip` leaves out one face position (-1 for none).
    const std::vector<Simplex> &with_faces(int m, const std::vector<Simplex> &faces, int skip = -1);

  private:
    SSetPtr x_;
    std::map<int, std::vector<Simplex>> all_;
    std::map<std::pair<int, int>, std::map<std::vector<Simplex>, std::vector<Simplex>>> by_faces_;
    std::vector<Simplex> none_;
    void require(int m) const;
};

// A square A -> X, B -> Y with i: A -> B a monomorphism and p: X -> Y.
struct LiftingProblem {
    SimplicialMap i;
    SimplicialMap p;
    SimplicialMap top;     // A -> X
    SimplicialMap bottom;  // B -> Y
    // Marked variant: marked edges of B must go to marked edges of X.
    std::optional<std::set<int>> marked_b;
    std::optional<std::set<int>> marked_x;

    Report validate() const;
};

// Square with a terminal bottom right corner: only the top map and i are needed.
LiftingProblem extension_problem(const SimplicialMap &i, const SimplicialMap &top);

struct LiftResult {
    bool found = false;
    SimplicialMap lift;
    std::string reason;
};

LiftResult find_lift(const LiftingProblem &problem);
// Enumerates all lifts; the callback returns false to stop.
void for_each_lift(const LiftingProblem &problem, const std::function<bool(const SimplicialMap &)> &visit);
std::vector<SimplicialMap> all_maps(const SSetPtr &b, const SSetPtr &x);

enum class Outcome { holds, fails, inconclusive };
std::string to_string(Outcome o);

struct Verdict {
    Outcome outcome = Outcome::holds;
    int bound = 0;
    std::string witness;  // JSON
    std::string detail;
    bool holds() const { return outcome == Outcome::holds; }
    std::string json() const;
};

enum class FibrationKind { inner, left, right, trivial };
FibrationKind fibration_kind(const std::string &name);

Verdict classify_fibration(const SimplicialMap &p, FibrationKind kind, int bound);
Verdict is_p_cartesian(const SimplicialMap &p, const Simplex &edge, int bound);
// p: X -> S with S fully marked; `marked` are the marked edges of X.
Verdict is_marked_cartesian_fibration(const SimplicialMap &p, const std::set<int> &marked, int bound);

}  // namespace sset
