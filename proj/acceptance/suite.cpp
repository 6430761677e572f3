#include "suite.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>

#include "cert_fixtures.hpp"
#include "groth_fixtures.hpp"
#include "sset/anodyne.hpp"
#include "sset/homology.hpp"
#include "sset/homspace.hpp"
#include "sset/iso.hpp"
#include "sset/lifting.hpp"
#include "sset/straighten.hpp"

namespace sset::acceptance {

namespace {

// Collects the first few failures of a criterion.
struct Tally {
    int checks = 0;
    std::vector<std::string> failures;
    void operator()(bool ok, const std::string &what) {
        ++checks;
        if (!ok && failures.size() < 8) failures.push_back(what);
        else if (!ok) failures.back() = "... and more";
    }
    bool ok() const { return failures.empty(); }
};

PathPtr paths(SSetPtr s, int bound, int bead_bound = -1, bool partial = false) {
    return std::make_shared<const PathCategory>(s, MappingOptions{bound, bead_bound, partial});
}

SimplicialMap to_point(const SSetPtr &x) { return map_by_vertices(x, simplex(0), std::vector<int>(x->count(0), 0)); }

// Δ^d -> X picking out a non-degenerate d-cell.
SimplicialMap characteristic_map(const SSetPtr &x, CellId c) {
    auto d = simplex(c.dim);
    SimplicialMap f{d, x, {}};
    f.images.resize(d->top() + 1);
    for (int k = 0; k <= d->top(); ++k)
        for (int i = 0; i < d->count(k); ++i) f.images[k].push_back(x->apply(cell_simplex(c), d->cell_vertices({k, i})));
    return f;
}

bool same_matrix(const IntMatrix &a, const IntMatrix &b) {
    return a.rows == b.rows && a.cols == b.cols && a.dense_text() == b.dense_text();
}

bool is_identity_matrix(const IntMatrix &m) {
    if (m.rows != m.cols) return false;
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (m.get(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

// Connected components by union-find over edges.
std::vector<int> components(const SimplicialSet &x) {
    std::vector<int> parent(x.count(0));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int v) { return parent[v] == v ? v : parent[v] = root(parent[v]); };
    for (int e = 0; e < x.count(1); ++e) {
        const auto &vs = x.cell_vertices({1, e});
        parent[root(vs[0])] = root(vs[1]);
    }
    std::vector<int> out(x.count(0));
    for (int v = 0; v < x.count(0); ++v) out[v] = root(v);
    return out;
}

bool pi0_bijection(const SimplicialMap &f) {
    auto cs = components(*f.dom), ct = components(*f.cod);
    std::map<int, int> image;
    for (int v = 0; v < f.dom->count(0); ++v) {
        int c = ct[f.image({0, v}).cell.index];
        if (image.count(cs[v]) && image[cs[v]] != c) return false;
        image[cs[v]] = c;
    }
    std::set<int> hit, all;
    for (auto [s, t] : image) hit.insert(t);
    for (int c : ct) all.insert(c);
    std::set<int> sources(cs.begin(), cs.end());
    return hit == all && hit.size() == sources.size();
}

std::string pair_name(const CorpusEntry &e, int a, int b) {
    return e.name + "(" + e.space->name({0, a}) + "," + e.space->name({0, b}) + ")";
}

// Δ^1 onto a non-degenerate edge a -> b when one exists, else the vertex a.
std::pair<SimplicialMap, std::set<int>> probe(const CorpusEntry &e) {
    const auto &s = e.space;
    auto [a, b] = e.pairs.empty() ? std::make_pair(0, 0) : e.pairs.front();
    for (int k = 0; k < s->count(1); ++k)
        if (s->cell_vertices({1, k}) == std::vector<int>{a, b}) return {characteristic_map(s, {1, k}), {0}};
    return {characteristic_map(s, {0, a}), {}};
}

// ---- criteria ---------------------------------------------------------------

Tally cube_law(const Corpus &, unsigned) {
    Tally t;
    for (int n = 2; n <= 5; ++n) {
        auto mc = mapping_complex(simplex(n), 0, n, MappingOptions{3, -1, false});
        auto oracle = cube_oracle(n, 0, n, 3);
        auto r = iso_check(*mc.space, *oracle);
        t(r.iso, "Δ^" + std::to_string(n) + ": " + r.reason);
        if (r.iso) t(is_isomorphism(SimplicialMap{mc.space, oracle, r.images}).ok, "witness of Δ^" + std::to_string(n));
    }
    return t;
}

Tally q_sanity(const Corpus &, unsigned) {
    Tally t;
    for (int n = 0; n <= 4; ++n) {
        auto tag = "Q^" + std::to_string(n);
        auto q = q_complex(n, 4, QMethod::both);
        t(homology(*q.space, 3, true).acyclic(), tag + " has reduced homology");
        auto v = is_homology_iso(q_to_delta(q), 3);
        t(v.iso, tag + " -> Δ^" + std::to_string(n) + ": " + v.detail);
    }
    return t;
}

Tally comparison(const Corpus &corpus, unsigned) {
    Tally t;
    int bases = 0;
    for (const auto &e : corpus.entries) {
        if (!e.infinity_category) continue;
        ++bases;
        for (auto [a, b] : e.pairs) {
            ComparisonOptions opts{3, e.bead_bound, e.allow_partial, true};
            auto c = comparison_map(e.space, a, b, opts);
            auto v = is_homology_iso(c.map, 2);
            t(v.iso, pair_name(e, a, b) + ": " + v.detail);
            t(homology(*c.source.space, 2).groups == homology(*c.target.space, 2).groups, pair_name(e, a, b) + " homology groups differ");
            t(pi0_bijection(c.map), pair_name(e, a, b) + " π0");
        }
    }
    t(bases >= 6, "fewer than 6 bases in the corpus");
    return t;
}

SimplicialMap random_map(std::mt19937 &rng, const SSetPtr &x, const SSetPtr &s) {
    auto maps = all_maps(x, s);
    return maps[rng() % maps.size()];
}

std::set<int> random_marking(std::mt19937 &rng, const SimplicialSet &x) {
    std::set<int> m;
    for (int e = 0; e < x.count(1); ++e)
        if (rng() % 2) m.insert(e);
    return m;
}

Tally straightening(const Corpus &corpus, unsigned seed) {
    Tally t;
    std::mt19937 rng(seed);
    std::vector<SSetPtr> bases{simplex(1), simplex(2), horn(2, 1), horn(2, 0), boundary(2)};
    std::vector<PathPtr> cats;
    for (const auto &b : bases) cats.push_back(paths(b, 2));
    std::vector<SSetPtr> pieces{simplex(0), simplex(1), simplex(2), horn(2, 1)};
    std::vector<SSetPtr> glue{empty_set(), simplex(0), simplex(1)};
    int spans = 0;
    while (spans < 100) {
        int bi = static_cast<int>(rng() % bases.size());
        const auto &s = bases[bi];
        auto x0 = pieces[rng() % pieces.size()], x1 = pieces[rng() % pieces.size()];
        auto a = spans % 4 == 0 ? glue[0] : glue[1 + rng() % 2];
        auto p0 = random_map(rng, x0, s), p1 = random_map(rng, x1, s);
        auto f = random_map(rng, a, x0);
        std::vector<SimplicialMap> gs;
        for (auto &g : all_maps(a, x1))
            if (compose(p1, g) == compose(p0, f)) gs.push_back(g);
        if (gs.empty()) continue;
        auto g = gs[rng() % gs.size()];
        auto m0 = random_marking(rng, *x0), m1 = random_marking(rng, *x1);
        auto r = check_pushout(f, g, p0, p1, m0, m1, cats[bi]);
        t(r.ok, "span " + std::to_string(spans) + ": " + r.message);
        ++spans;
    }
    for (const auto &e : corpus.entries) {
        auto s = e.space;
        if (e.bead_bound < 0) {
            auto [y, marked] = probe(e);
            MappingOptions opts{2, -1, false};
            auto r = check_base_change(SimplicialMap::identity(s), y, marked, opts);
            t(r.ok, e.name + " base change along the identity: " + r.message);
            r = check_base_change(to_point(s), y, marked, opts);
            t(r.ok, e.name + " base change to a point: " + r.message);

            auto c = paths(s, 2);
            auto st = straighten_marked(y, marked, c);
            auto un = unstraighten(st.functor, 2);
            auto c0 = paths(simplex(0), 2);
            for (int v = 0; v < s->count(0); ++v) {
                auto at = map_by_vertices(simplex(0), s, {v});
                auto fibre = pullback(un.projection, at);
                MarkedSimplicialSet mf{fibre.space, {}};
                for (int k = 0; k < fibre.space->count(1); ++k)
                    if (un.space.is_marked(fibre.first.image({1, k}))) mf.marked.insert(k);
                auto direct = unstraighten(restrict(st.functor, PathFunctor{c0, c, at}), 2);
                t(iso_check(mf, direct.space).iso, e.name + " fibre over " + s->name({0, v}));
            }
        }
        int bead = e.bead_bound;
        for (int v = 0; v < s->count(0); ++v) {
            auto ext = attach_edge(s, v);
            for (int w = 0; w < s->count(0); ++w) {
                auto src = mapping_complex(s, w, v, {3, bead, e.allow_partial});
                auto tgt = mapping_complex(ext.space, ext.inclusion.image({0, w}).cell.index, ext.end,
                                           {3, bead < 0 ? -1 : bead + 1, e.allow_partial});
                auto m = postcompose_edge(src, tgt, ext);
                t(is_isomorphism(m).ok, e.name + " edge attached at " + s->name({0, v}) + " from " + s->name({0, w}));
            }
        }
    }
    return t;
}

std::set<int> equivalences(const CorpusEntry &e) {
    std::set<int> out;
    const auto &x = *e.space;
    for (int k = 0; k < x.count(1); ++k) {
        if (e.category) {
            auto ch = nerve_chain(*e.category, x, cell_simplex({1, k}));
            if (is_isomorphism(*e.category, ch[0])) out.insert(k);
        } else if (e.kind == "J") {
            out.insert(k);
        }
    }
    return out;
}

Tally fibrations(const Corpus &corpus, unsigned seed) {
    Tally t;
    std::mt19937 rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
        auto tag = "functor " + std::to_string(trial);
        auto fc = fixtures::fibration_case(fixtures::random_category_functor(rng), 4);
        t(fixtures::cartesian_by_universal_property(fc.G.total, fc.F.base, fc.G.projection) == fc.G.cartesian,
          tag + ": universal property");
        for (size_t m = 0; m < fc.edge_of.size(); ++m) {
            if (fc.edge_of[m] < 0) continue;
            auto v = is_p_cartesian(fc.p, cell_simplex({1, fc.edge_of[m]}), 3);
            t(v.holds() == fc.G.cartesian[m], tag + ": edge " + fc.G.total.morphisms[m].name);
        }
        t(is_marked_cartesian_fibration(fc.p, fc.marked, 3).holds(), tag + ": cartesian marking");
        for (int e = 0; e < fc.total->count(1); ++e) {
            auto flipped = fc.marked;
            if (!flipped.erase(e)) flipped.insert(e);
            t(is_marked_cartesian_fibration(fc.p, flipped, 3).outcome == Outcome::fails, tag + ": flipped " + fc.total->name({1, e}));
        }
    }
    for (const auto &e : corpus.entries) {
        auto p = to_point(e.space);
        if (!e.infinity_category) {
            std::set<int> all;
            for (int k = 0; k < e.space->count(1); ++k) all.insert(k);
            t(is_marked_cartesian_fibration(p, {}, 3).outcome == Outcome::fails, e.name + " is fibrant unmarked");
            t(is_marked_cartesian_fibration(p, all, 3).outcome == Outcome::fails, e.name + " is fibrant sharp");
            continue;
        }
        auto eq = equivalences(e);
        if (!e.marked.empty()) t(e.marked == eq, e.name + " designated marking is not the equivalences");
        auto v = is_marked_cartesian_fibration(p, eq, 3);
        t(v.holds(), e.name + " with equivalences marked: " + v.detail);
        for (int k = 0; k < e.space->count(1); ++k) {
            auto flipped = eq;
            if (!flipped.erase(k)) flipped.insert(k);
            t(is_marked_cartesian_fibration(p, flipped, 3).outcome == Outcome::fails, e.name + " flipped " + e.space->name({1, k}));
        }
    }
    return t;
}

Tally certificates(const Corpus &, unsigned seed) {
    Tally t;
    auto d1 = simplex(1);
    MarkedMap mk{MarkedSimplicialSet::flat(d1), MarkedSimplicialSet::sharp(d1), SimplicialMap::identity(d1)};
    for (int n = 0; n <= 3; ++n) {
        Certificate c = fixtures::leaf("marked-right-products", "horn-product", {1, 1});
        c.generator.arg = fixtures::boundary_map(n);
        auto v = check_certificate({AnodyneClass::marked_right, c}, instantiate({"marked-right", "cylinder", {n}, std::nullopt}));
        t(v.valid, "cylinder " + std::to_string(n) + " over the product generators: " + v.reason);
    }
    {
        Certificate c = fixtures::leaf("marked-right-products", "horn-product", {1, 1});
        c.generator.arg = mk;
        auto v = check_certificate({AnodyneClass::marked_right, c}, instantiate({"marked-right", "cylinder-marking", {}, std::nullopt}));
        t(v.valid, "cylinder-marking over the product generators: " + v.reason);
    }
    std::vector<MarkedMap> ks{fixtures::boundary_map(0), fixtures::boundary_map(1), fixtures::boundary_map(2), mk};
    for (int m = 0; m <= 2; ++m)
        for (size_t k = 0; k < ks.size(); ++k) {
            GeneratorRef g{"marked-right-products", "cylinder-product", {m}, ks[k]};
            auto inner = pushout_product(fixtures::sharp(fixtures::boundary_map(m).map), ks[k]).map;
            auto cert = pp_certificate({AnodyneClass::marked_right, fixtures::leaf("marked-right", "cylinder", {0})}, inner);
            auto v = check_certificate(cert, instantiate(g));
            t(v.valid, "cylinder-product " + std::to_string(m) + "/" + std::to_string(k) + " over the small generators: " + v.reason);
        }
    auto d = fixtures::endpoint_contraction();
    t(validate(d).ok, "deformation retract data");
    auto rv = check_certificate(retract_from_deformation(d), d.i);
    t(rv.valid, "retract certificate: " + rv.reason);
    auto jv = check_certificate(j_sharp_certificate(4), j_flat_to_sharp(4));
    t(jv.valid, "J sharp: " + jv.reason);

    auto valid = fixtures::valid_claims();
    for (const auto &c : valid) {
        auto v = check_certificate(c.cert, c.claimed);
        t(v.valid, "fixture " + c.name + ": " + v.reason);
    }
    std::mt19937 rng(seed);
    auto bad = fixtures::corrupted_claims(rng);
    t(bad.size() == 10, "expected 10 corrupted certificates");
    for (const auto &c : bad) t(!check_certificate(c.cert, c.claimed).valid, "accepted corruption: " + c.name);

    auto ends = fixtures::flat(map_by_vertices(boundary(1), d1, {0, 1}));
    t(rlp_refute(ends, AnodyneClass::right, 3).refuted, "∂Δ^1 -> Δ^1 not refuted");
    for (const auto &c : valid) t(!rlp_refute(c.claimed, c.cert.cls, 4).refuted, "refuted certified " + c.name);
    for (const auto &cat : catalogs())
        for (const auto &g : instances(cat, 2))
            t(!rlp_refute(instantiate(g), cat.cls, 3).refuted, "refuted generator " + cat.name + "/" + g.family);
    return t;
}

Tally homology_engine(const Corpus &corpus, unsigned) {
    Tally t;
    for (int n = 1; n <= 4; ++n) {
        auto r = homology(*boundary(n), n, true);
        bool ok = true;
        for (const auto &g : r.groups) ok = ok && g.torsion.empty() && g.betti == (g.degree == n - 1 ? 1 : 0);
        t(ok, "∂Δ^" + std::to_string(n) + " is not a sphere: " + r.json());
    }
    for (const auto &e : corpus.entries) {
        const auto &x = e.space;
        int b = x->truncated() ? std::min(3, x->top() - 1) : std::max(1, x->top());
        auto cx = normalized_chains(*x, b);
        t(cx.squares_to_zero(), e.name + ": d∘d ≠ 0");
        auto id = SimplicialMap::identity(x);
        auto pt = to_point(x);
        for (int n = 0; n <= b; ++n) t(is_identity_matrix(chain_map(id, n)), e.name + ": identity in degree " + std::to_string(n));
        for (int d = 0; d <= std::min(2, x->top()); ++d)
            for (int i = 0; i < x->count(d); ++i) {
                auto f = characteristic_map(x, {d, i});
                auto g = compose(pt, f);
                auto cd = normalized_chains(*f.dom, d);
                for (int n = 0; n <= d; ++n) {
                    auto tag = e.name + ": cell " + x->name({d, i}) + " degree " + std::to_string(n);
                    t(same_matrix(chain_map(g, n), multiply(chain_map(pt, n), chain_map(f, n))), tag + " composition");
                    if (n >= 1)
                        t(same_matrix(multiply(cx.differential[n], chain_map(f, n)), multiply(chain_map(f, n - 1), cd.differential[n])),
                          tag + " chain map");
                }
            }
    }
    return t;
}

struct Spec {
    int id;
    const char *name;
    double limit;
    Tally (*run)(const Corpus &, unsigned);
};

const Spec specs[] = {
    {1, "cube law", 30, cube_law},
    {2, "Q sanity", 60, q_sanity},
    {3, "comparison map on the corpus", 300, comparison},
    {4, "straightening algebra", 300, straightening},
    {5, "fibration predicates vs oracle", 300, fibrations},
    {6, "certificate suite", 120, certificates},
    {7, "homology engine", 60, homology_engine},
};

}  // namespace

std::vector<CriterionResult> run(const Corpus &corpus, const SuiteOptions &opts) {
    std::vector<CriterionResult> out;
    for (const auto &s : specs) {
        if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), s.id) == opts.only.end()) continue;
        CriterionResult r{s.id, s.name, false, 0, s.limit, ""};
        auto start = std::chrono::steady_clock::now();
        try {
            Tally t = s.run(corpus, opts.seed);
            r.pass = t.ok();
            std::ostringstream d;
            d << t.checks << " checks";
            for (const auto &f : t.failures) d << "; " << f;
            r.detail = d.str();
        } catch (const std::exception &e) {
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.seconds > r.limit) {
            r.pass = false;
            r.detail += "; time limit exceeded";
        }
        out.push_back(r);
    }
    return out;
}

std::string line(const CriterionResult &r) {
    std::ostringstream o;
    o << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << std::fixed << std::setprecision(2) << r.seconds
      << " s, limit " << std::setprecision(0) << r.limit << " s): " << r.detail;
    return o.str();
}

io::json summary(const std::vector<CriterionResult> &results, unsigned seed) {
    io::json j;
    j["seed"] = seed;
    j["criteria"] = io::json::array();
    bool all = true;
    for (const auto &r : results) {
        all = all && r.pass;
        j["criteria"].push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}, {"limit", r.limit}, {"detail", r.detail}});
    }
    j["pass"] = all;
    return j;
}

}  // namespace sset::acceptance
