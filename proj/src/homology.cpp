#include "sset/homology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sset {

void IntMatrix::add(int r, int c, const mpz_class &v) {
    if (v == 0) return;
    auto &row = entries[r];
    auto it = row.find(c);
    if (it == row.end()) {
        row.emplace(c, v);
    } else {
        it->second += v;
        if (it->second == 0) row.erase(it);
    }
}

mpz_class IntMatrix::get(int r, int c) const {
    auto it = entries[r].find(c);
    return it == entries[r].end() ? mpz_class(0) : it->second;
}

bool IntMatrix::is_zero() const {
    for (const auto &row : entries)
        if (!row.empty()) return false;
    return true;
}

std::string IntMatrix::dense_text() const {
    std::ostringstream out;
    out << rows << " " << cols << "\n";
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) out << (c ? " " : "") << get(r, c).get_str();
        out << "\n";
    }
    return out.str();
}

IntMatrix multiply(const IntMatrix &a, const IntMatrix &b) {
    if (a.cols != b.rows) throw InvalidInput("matrix shapes do not match");
    IntMatrix c(a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r)
        for (const auto &[k, v] : a.entries[r])
            for (const auto &[j, w] : b.entries[k]) c.add(r, j, v * w);
    return c;
}

bool ChainComplex::squares_to_zero() const {
    for (size_t n = 2; n < differential.size(); ++n)
        if (!multiply(differential[n - 1], differential[n]).is_zero()) return false;
    return true;
}

ChainComplex normalized_chains(const SimplicialSet &x, int bound) {
    if (bound < 0) throw InvalidInput("negative bound");
    if (x.truncated() && x.top() < bound + 1)
        throw InvalidInput("truncation at " + std::to_string(x.top()) + " is below the required " +
                           std::to_string(bound + 1));
    ChainComplex c;
    for (int n = 0; n <= bound + 1; ++n) c.ranks.push_back(x.count(n));
    c.differential.resize(bound + 2);
    for (int n = 1; n <= bound + 1; ++n) {
        IntMatrix m(x.count(n - 1), x.count(n));
        for (int i = 0; i < x.count(n); ++i) {
            const auto &fs = x.faces({n, i});
            for (int k = 0; k <= n; ++k)
                if (!fs[k].degenerate()) m.add(fs[k].cell.index, i, (k % 2 == 0) ? 1 : -1);
        }
        c.differential[n] = std::move(m);
    }
    return c;
}

namespace {

using Dense = std::vector<std::vector<mpz_class>>;

std::vector<mpz_class> dense_smith(Dense a) {
    std::vector<mpz_class> diag;
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int t = 0;
    while (t < rows && t < cols) {
        // pivot: smallest non-zero absolute value in the remaining block
        int pr = -1, pc = -1;
        for (int r = t; r < rows; ++r)
            for (int c = t; c < cols; ++c)
                if (a[r][c] != 0 && (pr < 0 || abs(a[r][c]) < abs(a[pr][pc]))) pr = r, pc = c;
        if (pr < 0) break;
        std::swap(a[t], a[pr]);
        for (int r = 0; r < rows; ++r) std::swap(a[r][t], a[r][pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int r = t + 1; r < rows; ++r) {
                if (a[r][t] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[r][t].get_mpz_t(), a[t][t].get_mpz_t());
                for (int c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
                if (a[r][t] != 0) {
                    std::swap(a[t], a[r]);
                    clean = false;
                }
            }
            for (int c = t + 1; c < cols; ++c) {
                if (a[t][c] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][c].get_mpz_t(), a[t][t].get_mpz_t());
                for (int r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
                if (a[t][c] != 0) {
                    for (int r = 0; r < rows; ++r) std::swap(a[r][t], a[r][c]);
                    clean = false;
                }
            }
            if (clean) {
                // divisibility: the pivot must divide the rest of the block
                for (int r = t + 1; r < rows && clean; ++r)
                    for (int c = t + 1; c < cols; ++c) {
                        mpz_class rem;
                        mpz_fdiv_r(rem.get_mpz_t(), a[r][c].get_mpz_t(), a[t][t].get_mpz_t());
                        if (rem != 0) {
                            for (int k = t; k < cols; ++k) a[t][k] += a[r][k];
                            clean = false;
                            break;
                        }
                    }
            }
        }
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

}  // namespace

SmithForm smith_form(const IntMatrix &m) {
    // unit-pivot elimination on the sparse matrix, then a dense Smith form of what remains
    std::vector<std::map<int, mpz_class>> rows = m.entries;
    std::vector<std::set<int>> cols(m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (const auto &[c, v] : rows[r]) cols[c].insert(r);
    SmithForm out;
    bool progress = true;
    while (progress) {
        progress = false;
        std::vector<int> order(m.cols);
        for (int c = 0; c < m.cols; ++c) order[c] = c;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return cols[a].size() < cols[b].size(); });
        for (int c : order) {
            if (cols[c].empty()) continue;
            int pr = -1;
            for (int r : cols[c]) {
                const mpz_class &v = rows[r].at(c);
                if ((v == 1 || v == -1) && (pr < 0 || rows[r].size() < rows[pr].size())) pr = r;
            }
            if (pr < 0) continue;
            mpz_class pv = rows[pr].at(c);
            std::vector<int> others(cols[c].begin(), cols[c].end());
            for (int r : others) {
                if (r == pr) continue;
                mpz_class factor = rows[r].at(c) * pv;
                for (const auto &[j, w] : rows[pr]) {
                    auto it = rows[r].find(j);
                    if (it == rows[r].end()) {
                        rows[r].emplace(j, -factor * w);
                        cols[j].insert(r);
                    } else {
                        it->second -= factor * w;
                        if (it->second == 0) {
                            rows[r].erase(it);
                            cols[j].erase(r);
                        }
                    }
                }
            }
            for (const auto &[j, w] : rows[pr]) cols[j].erase(pr);
            rows[pr].clear();
            ++out.rank;
            out.invariant_factors.push_back(1);
            progress = true;
        }
    }
    std::vector<int> live_rows, live_cols;
    for (int r = 0; r < m.rows; ++r)
        if (!rows[r].empty()) live_rows.push_back(r);
    for (int c = 0; c < m.cols; ++c)
        if (!cols[c].empty()) live_cols.push_back(c);
    if (!live_rows.empty()) {
        std::map<int, int> cix;
        for (size_t k = 0; k < live_cols.size(); ++k) cix[live_cols[k]] = static_cast<int>(k);
        Dense d(live_rows.size(), std::vector<mpz_class>(live_cols.size(), 0));
        for (size_t k = 0; k < live_rows.size(); ++k)
            for (const auto &[c, v] : rows[live_rows[k]]) d[k][cix[c]] = v;
        for (auto &v : dense_smith(std::move(d))) {
            ++out.rank;
            out.invariant_factors.push_back(v);
        }
    }
    std::sort(out.invariant_factors.begin(), out.invariant_factors.end());
    return out;
}

bool HomologyReport::acyclic() const {
    for (const auto &g : groups)
        if (g.betti != 0 || !g.torsion.empty()) return false;
    return true;
}

std::string HomologyReport::json() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < groups.size(); ++i) {
        const auto &g = groups[i];
        out << (i ? "," : "") << "{\"degree\":" << g.degree << ",\"betti\":" << g.betti << ",\"torsion\":[";
        for (size_t k = 0; k < g.torsion.size(); ++k) out << (k ? "," : "") << g.torsion[k].get_str();
        out << "]}";
    }
    out << "]";
    return out.str();
}

HomologyReport homology(const ChainComplex &c, int bound, bool reduced) {
    if (c.top() < bound + 1) throw InvalidInput("chain complex too short for the requested degrees");
    std::vector<SmithForm> snf(bound + 2);
    for (int n = 1; n <= bound + 1; ++n) snf[n] = smith_form(c.differential[n]);
    HomologyReport rep;
    rep.reduced = reduced;
    for (int n = 0; n <= bound; ++n) {
        HomologyGroup g;
        g.degree = n;
        int rank_out = n >= 1 ? snf[n].rank : 0;
        g.betti = c.ranks[n] - rank_out - snf[n + 1].rank;
        for (const auto &v : snf[n + 1].invariant_factors)
            if (v > 1) g.torsion.push_back(v);
        if (reduced && n == 0 && c.ranks[0] > 0) g.betti -= 1;
        rep.groups.push_back(g);
    }
    return rep;
}

HomologyReport homology(const SimplicialSet &x, int bound, bool reduced) {
    return homology(normalized_chains(x, bound), bound, reduced);
}

IntMatrix chain_map(const SimplicialMap &f, int n) {
    IntMatrix m(f.cod->count(n), f.dom->count(n));
    for (int i = 0; i < f.dom->count(n); ++i) {
        Simplex z = f.image({n, i});
        if (!z.degenerate()) m.add(z.cell.index, i, 1);
    }
    return m;
}

InducedHomology induced_homology(const SimplicialMap &f, int bound) {
    InducedHomology out;
    for (int n = 0; n <= bound; ++n) out.chain_maps.push_back(chain_map(f, n));
    out.source = homology(*f.dom, bound);
    out.target = homology(*f.cod, bound);
    return out;
}

HomologyIsoVerdict is_homology_iso(const SimplicialMap &f, int range) {
    HomologyIsoVerdict v;
    v.range = range;
    auto C = normalized_chains(*f.dom, range);
    auto D = normalized_chains(*f.cod, range);
    auto hc = homology(C, range);
    auto hd = homology(D, range);
    for (int n = 0; n <= range; ++n)
        if (!(hc.groups[n] == hd.groups[n])) {
            v.failing_degree = n;
            v.detail = "homology groups differ in degree " + std::to_string(n);
            return v;
        }
    // mapping cone: Cone_n = C_{n-1} ⊕ D_n, d(c, e) = (-dc, f(c) + de)
    auto rank = [&](const ChainComplex &X, int n) { return n >= 0 && n <= X.top() ? X.ranks[n] : 0; };
    std::vector<IntMatrix> fm;
    for (int n = 0; n <= range + 1; ++n) fm.push_back(chain_map(f, n));
    ChainComplex cone;
    for (int n = 0; n <= range + 1; ++n) cone.ranks.push_back(rank(C, n - 1) + rank(D, n));
    cone.differential.resize(range + 2);
    for (int n = 1; n <= range + 1; ++n) {
        int cprev = rank(C, n - 2);
        IntMatrix m(cone.ranks[n - 1], cone.ranks[n]);
        int csrc = rank(C, n - 1);
        if (n >= 2)
            for (int r = 0; r < C.differential[n - 1].rows; ++r)
                for (const auto &[c, val] : C.differential[n - 1].entries[r]) m.add(r, c, -val);
        for (int r = 0; r < fm[n - 1].rows; ++r)
            for (const auto &[c, val] : fm[n - 1].entries[r]) m.add(cprev + r, c, val);
        for (int r = 0; r < D.differential[n].rows; ++r)
            for (const auto &[c, val] : D.differential[n].entries[r]) m.add(cprev + r, csrc + c, val);
        cone.differential[n] = std::move(m);
    }
    auto hcone = homology(cone, range);
    for (int n = 0; n <= range; ++n)
        if (hcone.groups[n].betti != 0 || !hcone.groups[n].torsion.empty()) {
            v.failing_degree = n > 0 ? n - 1 : 0;
            v.detail = "mapping cone has homology in degree " + std::to_string(n);
            return v;
        }
    v.iso = true;
    return v;
}

}  // namespace sset
