#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "sset/core.hpp"

namespace sset {

// Sparse integer matrix stored by rows.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::map<int, mpz_class>> entries;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), entries(r) {}
    void add(int r, int c, const mpz_class &v);
    mpz_class get(int r, int c) const;
    bool is_zero() const;
    std::string dense_text() const;
};

IntMatrix multiply(const IntMatrix &a, const IntMatrix &b);

struct ChainComplex {
    std::vector<int> ranks;               // degrees 0..top
    std::vector<IntMatrix> differential;  // differential[n] : C_n -> C_{n-1}, n >= 1
    int top() const { return static_cast<int>(ranks.size()) - 1; }
    bool squares_to_zero() const;
};

// Normalized chains in degrees 0..bound+1 (the extra degree carries the boundaries into degree bound).
ChainComplex normalized_chains(const SimplicialSet &x, int bound);

struct SmithForm {
    int rank = 0;
    std::vector<mpz_class> invariant_factors;  // non-zero diagonal entries, each dividing the next
};
SmithForm smith_form(const IntMatrix &m);

struct HomologyGroup {
    int degree = 0;
    int betti = 0;
    std::vector<mpz_class> torsion;
    bool operator==(const HomologyGroup &o) const {
        return degree == o.degree && betti == o.betti && torsion == o.torsion;
    }
};

struct HomologyReport {
    std::vector<HomologyGroup> groups;
    bool reduced = false;
    bool acyclic() const;  // all groups vanish
    std::string json() const;
};

HomologyReport homology(const ChainComplex &c, int bound, bool reduced = false);
HomologyReport homology(const SimplicialSet &x, int bound, bool reduced = false);

// Chain map on normalized chains in degree n.
IntMatrix chain_map(const SimplicialMap &f, int n);

struct InducedHomology {
    std::vector<IntMatrix> chain_maps;  // per degree 0..bound
    HomologyReport source;
    HomologyReport target;
};
InducedHomology induced_homology(const SimplicialMap &f, int bound);

struct HomologyIsoVerdict {
    bool iso = false;
    int range = 0;
    int failing_degree = -1;
    std::string detail;
};
// Quasi-isomorphism in degrees 0..range via the mapping cone.
HomologyIsoVerdict is_homology_iso(const SimplicialMap &f, int range);

}  // namespace sset
