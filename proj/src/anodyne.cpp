#include "sset/anodyne.hpp"

#include <algorithm>
#include <numeric>

#include "sset/iso.hpp"

namespace sset {

// ---- classes ---------------------------------------------------------------

std::string to_string(AnodyneClass c) {
    switch (c) {
        case AnodyneClass::inner: return "inner";
        case AnodyneClass::left: return "left";
        case AnodyneClass::right: return "right";
        case AnodyneClass::marked_right: return "marked-right";
        case AnodyneClass::cartesian: return "cartesian";
        case AnodyneClass::cartesian_k: return "cartesian-k";
    }
    return "?";
}

AnodyneClass anodyne_class(const std::string &name) {
    for (auto c : {AnodyneClass::inner, AnodyneClass::left, AnodyneClass::right, AnodyneClass::marked_right,
                   AnodyneClass::cartesian, AnodyneClass::cartesian_k})
        if (to_string(c) == name) return c;
    throw InvalidInput("unknown anodyne class: " + name);
}

bool contained_in(AnodyneClass a, AnodyneClass b) {
    using C = AnodyneClass;
    if (a == b) return true;
    switch (a) {
        case C::inner: return true;
        case C::marked_right: return b == C::cartesian || b == C::cartesian_k;
        case C::cartesian: return b == C::cartesian_k;
        default: return false;
    }
}

bool closed_under_products(AnodyneClass c) {
    return c == AnodyneClass::marked_right;
}

bool is_marked_class(AnodyneClass c) {
    return c == AnodyneClass::marked_right || c == AnodyneClass::cartesian || c == AnodyneClass::cartesian_k;
}

// ---- small maps ------------------------------------------------------------

namespace {

// A subcomplex of Δ^n whose vertices are named by their positions.
SimplicialMap standard_inclusion(const SSetPtr &sub, int n) {
    std::vector<int> vm;
    for (int v = 0; v < sub->count(0); ++v) vm.push_back(std::stoi(sub->name({0, v})));
    return map_by_vertices(sub, simplex(n), vm);
}

SimplicialMap boundary_inclusion(int n) {
    if (n == 0) return SimplicialMap{empty_set(), simplex(0), {}};
    return standard_inclusion(boundary(n), n);
}

MarkedMap flat_map(const SimplicialMap &f) {
    return {MarkedSimplicialSet::flat(f.dom), MarkedSimplicialSet::flat(f.cod), f};
}

MarkedMap sharp_map(const SimplicialMap &f) {
    return {MarkedSimplicialSet::sharp(f.dom), MarkedSimplicialSet::sharp(f.cod), f};
}

MarkedMap sharpen(const MarkedMap &f) { return sharp_map(f.map); }

// {1} -> Δ^1
SimplicialMap endpoint() { return map_by_vertices(simplex(0), simplex(1), {1}); }

MarkedMap marking_map(const SSetPtr &x, std::set<int> marked) {
    return {MarkedSimplicialSet::flat(x), MarkedSimplicialSet{x, std::move(marked)}, SimplicialMap::identity(x)};
}

bool same_marked(const MarkedSimplicialSet &a, const MarkedSimplicialSet &b) {
    return (a.space == b.space || same_structure(*a.space, *b.space)) && a.marked == b.marked;
}

bool same_map(const MarkedMap &a, const MarkedMap &b) {
    return same_marked(a.dom, b.dom) && same_marked(a.cod, b.cod) && a.map.images == b.map.images;
}

SimplicialMap identity_on(const SSetPtr &x) { return SimplicialMap::identity(x); }

void require_horn(int n, int k, int lo, int hi) {
    if (n < 1 || k < lo || k > hi) throw InvalidInput("horn parameters out of range");
}

}  // namespace

// ---- catalogs --------------------------------------------------------------

const std::vector<Catalog> &catalogs() {
    static const std::vector<Catalog> all{
        {"inner", AnodyneClass::inner, {{"horn", "Λ^n_k -> Δ^n, 0 < k < n", 2, false}}},
        {"left", AnodyneClass::left, {{"horn", "Λ^n_k -> Δ^n, 0 <= k < n", 2, false}}},
        {"right", AnodyneClass::right, {{"horn", "Λ^n_k -> Δ^n, 0 < k <= n", 2, false}}},
        {"right-cylinder", AnodyneClass::right, {{"cylinder", "({1} -> Δ^1) ⊠ (∂Δ^n -> Δ^n)", 1, false}}},
        {"marked-right",
         AnodyneClass::marked_right,
         {{"cylinder", "({1} -> (Δ^1)^♯) ⊠ ((∂Δ^n)^♭ -> (Δ^n)^♭)", 1, false},
          {"cylinder-marking", "({1} -> (Δ^1)^♯) ⊠ ((Δ^1)^♭ -> (Δ^1)^♯)", 0, false}}},
        {"marked-right-products",
         AnodyneClass::marked_right,
         {{"horn-product", "((Λ^n_k)^♯ -> (Δ^n)^♯) ⊠ (C -> D), 0 < k <= n", 2, true},
          {"cylinder-product", "(({1} -> Δ^1) ⊠ (∂Δ^n -> Δ^n))^♯ ⊠ (C -> D)", 1, true}}},
        {"cartesian",
         AnodyneClass::cartesian,
         {{"inner-horn", "(Λ^n_k)^♭ -> (Δ^n)^♭, 0 < k < n", 2, false},
          {"J-marking", "J^♭ -> (J, 0 -> 1) at truncation t", 1, false}}},
        {"cartesian-k",
         AnodyneClass::cartesian_k,
         {{"inner-horn", "(Λ^n_k)^♭ -> (Δ^n)^♭, 0 < k < n", 2, false},
          {"K-sharp", "K^♭ -> K^♯ for K = Δ^3/(Δ^{02}, Δ^{13})", 0, false}}},
    };
    return all;
}

const Catalog &catalog(const std::string &name) {
    for (const auto &c : catalogs())
        if (c.name == name) return c;
    throw InvalidInput("unknown catalog: " + name);
}

MarkedMap instantiate(const GeneratorRef &g) {
    const auto &cat = catalog(g.catalog);
    auto fam = std::find_if(cat.families.begin(), cat.families.end(), [&](const auto &f) { return f.name == g.family; });
    if (fam == cat.families.end()) throw InvalidInput("unknown generator family " + g.family + " in " + g.catalog);
    if (static_cast<int>(g.params.size()) != fam->arity) throw InvalidInput("wrong number of generator parameters");
    if (fam->takes_map != g.arg.has_value()) throw InvalidInput("generator argument mismatch for " + g.family);
    if (g.arg) {
        if (auto r = validate(*g.arg); !r.ok) throw InvalidInput("generator argument: " + r.message);
        if (!is_mono(g.arg->map)) throw InvalidInput("generator argument is not a marked injection");
    }
    const auto &p = g.params;
    const std::string &f = g.family;
    if (f == "horn") {
        int n = p[0], k = p[1];
        if (g.catalog == "inner") require_horn(n, k, 1, n - 1);
        if (g.catalog == "left") require_horn(n, k, 0, n - 1);
        if (g.catalog == "right") require_horn(n, k, 1, n);
        return flat_map(standard_inclusion(horn(n, k), n));
    }
    if (f == "inner-horn") {
        require_horn(p[0], p[1], 1, p[0] - 1);
        return flat_map(standard_inclusion(horn(p[0], p[1]), p[0]));
    }
    if (f == "cylinder") {
        if (p[0] < 0) throw InvalidInput("negative dimension");
        if (g.catalog == "right-cylinder")
            return pushout_product(flat_map(endpoint()), flat_map(boundary_inclusion(p[0]))).map;
        return pushout_product(sharp_map(endpoint()), flat_map(boundary_inclusion(p[0]))).map;
    }
    if (f == "cylinder-marking") {
        auto d1 = simplex(1);
        return pushout_product(sharp_map(endpoint()), marking_map(d1, {0})).map;
    }
    if (f == "horn-product") {
        require_horn(p[0], p[1], 1, p[0]);
        auto h = sharp_map(standard_inclusion(horn(p[0], p[1]), p[0]));
        return pushout_product(h, *g.arg).map;
    }
    if (f == "cylinder-product") {
        if (p[0] < 0) throw InvalidInput("negative dimension");
        auto j = pushout_product(flat_map(endpoint()), flat_map(boundary_inclusion(p[0]))).map;
        return pushout_product(sharpen(j), *g.arg).map;
    }
    if (f == "J-marking") {
        auto j = interval_J(p[0]);
        int e = -1;
        for (int i = 0; i < j->count(1); ++i)
            if (j->cell_vertices({1, i}) == std::vector<int>{j->at(0, "0").index, j->at(0, "1").index}) e = i;
        return marking_map(j, {e});
    }
    if (f == "K-sharp") {
        auto k = complex_K();
        return {MarkedSimplicialSet::flat(k), MarkedSimplicialSet::sharp(k), identity_on(k)};
    }
    throw InvalidInput("unhandled generator family " + f);
}

std::vector<GeneratorRef> instances(const Catalog &c, int max_n) {
    std::vector<GeneratorRef> out;
    for (const auto &f : c.families) {
        if (f.takes_map) continue;
        if (f.name == "horn" || f.name == "inner-horn") {
            for (int n = 1; n <= max_n; ++n)
                for (int k = 0; k <= n; ++k) {
                    bool ok = c.name == "left" ? k < n : c.name == "right" ? k > 0 : (k > 0 && k < n);
                    if (ok) out.push_back({c.name, f.name, {n, k}, std::nullopt});
                }
        } else if (f.name == "cylinder") {
            for (int n = 0; n <= max_n; ++n) out.push_back({c.name, f.name, {n}, std::nullopt});
        } else if (f.name == "J-marking") {
            out.push_back({c.name, f.name, {std::max(max_n, 1)}, std::nullopt});
        } else {
            out.push_back({c.name, f.name, {}, std::nullopt});
        }
    }
    return out;
}

// ---- pushout-products and pushouts -------------------------------------------

PushoutProduct pushout_product(const MarkedMap &f, const MarkedMap &g) {
    if (!is_mono(f.map) || !is_mono(g.map)) throw InvalidInput("pushout-product needs monomorphisms");
    PushoutProduct out;
    out.product = product(f.cod.space, g.cod.space);
    const auto &P = out.product;
    auto ad = product(f.dom.space, g.cod.space);
    auto bc = product(f.cod.space, g.dom.space);
    auto from_ad = [&](const Simplex &z) { return P.pair(f.map(ad.first(z)), ad.second(z)); };
    auto from_bc = [&](const Simplex &z) { return P.pair(bc.first(z), g.map(bc.second(z))); };
    std::vector<CellId> gens;
    for (int d = 0; d <= ad.space->top(); ++d)
        for (int c = 0; c < ad.space->count(d); ++c) gens.push_back(from_ad(cell_simplex({d, c})).cell);
    for (int d = 0; d <= bc.space->top(); ++d)
        for (int c = 0; c < bc.space->count(d); ++c) gens.push_back(from_bc(cell_simplex({d, c})).cell);
    auto sub = subcomplex(P.space, gens);
    std::map<CellId, CellId> back;
    for (int d = 0; d <= sub.space->top(); ++d)
        for (int c = 0; c < sub.space->count(d); ++c) back[sub.inclusion.image({d, c}).cell] = {d, c};
    MarkedSimplicialSet dom{sub.space, {}};
    auto mark = [&](const Simplex &z) {
        if (!z.degenerate()) dom.marked.insert(back.at(z.cell).index);
    };
    auto ad_marked = marked_product(f.dom, g.cod, ad);
    for (int e : ad_marked.marked) mark(from_ad(cell_simplex({1, e})));
    auto bc_marked = marked_product(f.cod, g.dom, bc);
    for (int e : bc_marked.marked) mark(from_bc(cell_simplex({1, e})));
    out.inclusion = sub.inclusion;
    out.map = MarkedMap{dom, marked_product(f.cod, g.cod, P), sub.inclusion};
    return out;
}

MarkedPushout marked_pushout(const MarkedMap &i, const MarkedMap &g) {
    if (!same_marked(i.dom, g.dom)) throw InvalidInput("attaching map does not start at the domain");
    Diagram d;
    d.add_piece(g.cod.space, 0, "y", g.cod.marked);
    d.add_piece(i.cod.space, 1, "b", i.cod.marked);
    d.relate(0, 1, g.map, i.map);
    auto c = colimit(d);
    return {MarkedMap{g.cod, MarkedSimplicialSet{c.space, c.marked}, c.legs[0]}, c.legs[1]};
}

namespace {

MarkedMap marked_coproduct(const std::vector<MarkedMap> &maps) {
    Diagram doms, cods;
    for (size_t k = 0; k < maps.size(); ++k) {
        doms.add_piece(maps[k].dom.space, 0, "c" + std::to_string(k), maps[k].dom.marked);
        cods.add_piece(maps[k].cod.space, 0, "c" + std::to_string(k), maps[k].cod.marked);
    }
    auto a = colimit(doms);
    auto b = colimit(cods);
    std::vector<SimplicialMap> legs;
    for (size_t k = 0; k < maps.size(); ++k) legs.push_back(compose(b.legs[k], maps[k].map));
    auto m = descend(a, doms, legs, b.space);
    return {MarkedSimplicialSet{a.space, a.marked}, MarkedSimplicialSet{b.space, b.marked}, m};
}

}  // namespace

// ---- certificates ----------------------------------------------------------

std::string to_string(Certificate::Kind k) {
    switch (k) {
        case Certificate::Kind::generator: return "generator";
        case Certificate::Kind::pushout: return "pushout";
        case Certificate::Kind::composite: return "composite";
        case Certificate::Kind::retract: return "retract";
        case Certificate::Kind::pushout_product: return "pushout-product";
        case Certificate::Kind::coproduct: return "coproduct";
    }
    return "?";
}

Certificate::Kind certificate_kind(const std::string &name) {
    using K = Certificate::Kind;
    for (auto k : {K::generator, K::pushout, K::composite, K::retract, K::pushout_product, K::coproduct})
        if (to_string(k) == name) return k;
    throw InvalidInput("unknown certificate node kind: " + name);
}

Report arrow_iso(const MarkedMap &a, const MarkedMap &b) {
    for (const auto *m : {&a, &b}) {
        if (auto r = validate(*m); !r.ok) return r;
        if (!is_mono(m->map)) return Report::failure("not a monomorphism");
    }
    if (same_map(a, b)) return Report::success();
    auto colours = [](const MarkedMap &m) {
        const auto &B = *m.cod.space;
        std::vector<std::vector<int>> c(B.top() + 1);
        for (int d = 0; d <= B.top(); ++d) c[d].assign(B.count(d), 0);
        for (int d = 0; d <= m.dom.space->top(); ++d)
            for (int i = 0; i < m.dom.space->count(d); ++i) c[d][m.map.image({d, i}).cell.index] |= 1;
        for (int e : m.cod.marked) c[1][e] |= 2;
        for (int e : m.dom.marked) c[1][m.map.image({1, e}).cell.index] |= 4;
        return c;
    };
    IsoOptions opts;
    opts.colors_x = colours(a);
    opts.colors_y = colours(b);
    auto r = iso_check(*a.cod.space, *b.cod.space, opts);
    if (!r.iso) return Report::failure("arrows are not isomorphic: " + r.reason);
    return Report::success();
}

namespace {

struct NodeFailure {
    std::string node;
    std::string reason;
};

class Checker {
  public:
    explicit Checker(AnodyneClass cls) : cls_(cls) {}

    MarkedMap run(const Certificate &c, const std::string &path) {
        MarkedMap m;
        try {
            m = build(c, path);
        } catch (const InvalidInput &e) {
            throw NodeFailure{path, e.what()};
        } catch (const Inconclusive &e) {
            throw NodeFailure{path, std::string("inconclusive: ") + e.what()};
        }
        if (!is_marked_class(cls_) && (!m.dom.marked.empty() || !m.cod.marked.empty()))
            fail(path, "markings appear in an unmarked class");
        if (!is_mono(m.map)) fail(path, "the node map is not a monomorphism");
        if (c.stated && c.kind != Certificate::Kind::retract) {
            if (auto r = arrow_iso(m, *c.stated); !r.ok) fail(path, "stated map differs: " + r.message);
        }
        return m;
    }

  private:
    AnodyneClass cls_;

    [[noreturn]] static void fail(const std::string &path, const std::string &why) { throw NodeFailure{path, why}; }

    static void arity(const Certificate &c, const std::string &path, size_t lo, size_t hi) {
        if (c.children.size() < lo || c.children.size() > hi) fail(path, "wrong number of children");
    }

    static void check_valid(const MarkedMap &m, const std::string &path, const std::string &what) {
        if (auto r = validate(m); !r.ok) fail(path, what + ": " + r.message);
    }

    MarkedMap build(const Certificate &c, const std::string &path) {
        using K = Certificate::Kind;
        auto child = [&](size_t k) { return run(c.children[k], path + "/" + std::to_string(k)); };
        switch (c.kind) {
            case K::generator: {
                arity(c, path, 0, 0);
                const auto &cat = catalog(c.generator.catalog);
                if (!contained_in(cat.cls, cls_))
                    fail(path, "catalog " + cat.name + " is not contained in the " + to_string(cls_) + " class");
                return instantiate(c.generator);
            }
            case K::pushout: {
                arity(c, path, 1, 1);
                if (!c.along) fail(path, "pushout without attaching map");
                check_valid(*c.along, path, "attaching map");
                auto i = child(0);
                if (!same_marked(i.dom, c.along->dom)) fail(path, "attaching map does not start at the child's domain");
                return marked_pushout(i, *c.along).map;
            }
            case K::composite: {
                arity(c, path, 1, SIZE_MAX);
                MarkedMap acc = child(0);
                for (size_t k = 1; k < c.children.size(); ++k) {
                    auto next = child(k);
                    if (!same_marked(acc.cod, next.dom)) fail(path, "composite factors do not compose at " + std::to_string(k));
                    acc = MarkedMap{acc.dom, next.cod, compose(next.map, acc.map)};
                }
                return acc;
            }
            case K::retract: {
                arity(c, path, 1, 1);
                if (!c.stated) fail(path, "retract without its map");
                if (c.retraction.size() != 4) fail(path, "retract needs s_A, r_A, s_B, r_B");
                const auto &i = *c.stated;
                check_valid(i, path, "retract map");
                auto j = child(0);
                const auto &[sa, ra, sb, rb] = std::tie(c.retraction[0], c.retraction[1], c.retraction[2], c.retraction[3]);
                const char *names[] = {"s_A", "r_A", "s_B", "r_B"};
                for (int k = 0; k < 4; ++k) check_valid(c.retraction[k], path, names[k]);
                if (!same_marked(sa.dom, i.dom) || !same_marked(sa.cod, j.dom)) fail(path, "s_A has the wrong ends");
                if (!same_marked(ra.dom, j.dom) || !same_marked(ra.cod, i.dom)) fail(path, "r_A has the wrong ends");
                if (!same_marked(sb.dom, i.cod) || !same_marked(sb.cod, j.cod)) fail(path, "s_B has the wrong ends");
                if (!same_marked(rb.dom, j.cod) || !same_marked(rb.cod, i.cod)) fail(path, "r_B has the wrong ends");
                if (compose(ra.map, sa.map).images != identity_on(i.dom.space).images) fail(path, "r_A s_A is not the identity");
                if (compose(rb.map, sb.map).images != identity_on(i.cod.space).images) fail(path, "r_B s_B is not the identity");
                if (compose(j.map, sa.map).images != compose(sb.map, i.map).images) fail(path, "the section square does not commute");
                if (compose(i.map, ra.map).images != compose(rb.map, j.map).images) fail(path, "the retraction square does not commute");
                return i;
            }
            case K::pushout_product: {
                arity(c, path, 1, 1);
                if (!closed_under_products(cls_)) fail(path, "pushout-products are not a closure rule of the " + to_string(cls_) + " class");
                if (!c.along) fail(path, "pushout-product without cofibration");
                check_valid(*c.along, path, "cofibration");
                if (!is_mono(c.along->map)) fail(path, "the cofibration is not a monomorphism");
                return pushout_product(child(0), *c.along).map;
            }
            case K::coproduct: {
                arity(c, path, 1, SIZE_MAX);
                std::vector<MarkedMap> maps;
                for (size_t k = 0; k < c.children.size(); ++k) maps.push_back(child(k));
                return marked_coproduct(maps);
            }
        }
        fail(path, "unknown node kind");
    }
};

}  // namespace

CertificateVerdict check_certificate(const AnodyneCertificate &cert) {
    CertificateVerdict v;
    try {
        v.map = Checker(cert.cls).run(cert.root, "root");
        v.valid = true;
    } catch (const NodeFailure &f) {
        v.node = f.node;
        v.reason = f.reason;
    }
    return v;
}

CertificateVerdict check_certificate(const AnodyneCertificate &cert, const MarkedMap &claimed) {
    auto v = check_certificate(cert);
    if (!v.valid) return v;
    if (auto r = arrow_iso(*v.map, claimed); !r.ok) {
        v.valid = false;
        v.node = "root";
        v.reason = "certified map differs from the claimed map: " + r.message;
    }
    return v;
}

// ---- deformation retracts --------------------------------------------------

namespace {

// The constant k-simplex at vertex v.
Simplex constant(const SimplicialSet &x, int v, int k) { return x.apply(cell_simplex({0, v}), Mono(k + 1, 0)); }

SimplicialMap from_cells(const SSetPtr &dom, const SSetPtr &cod, const std::function<Simplex(const Simplex &)> &f) {
    SimplicialMap m{dom, cod, {}};
    m.images.resize(dom->top() + 1);
    for (int d = 0; d <= dom->top(); ++d)
        for (int c = 0; c < dom->count(d); ++c) m.images[d].push_back(f(cell_simplex({d, c})));
    return m;
}

}  // namespace

MarkedSimplicialSet cylinder(const MarkedSimplicialSet &b) {
    auto p = product(simplex(1), b.space);
    return marked_product(MarkedSimplicialSet::sharp(simplex(1)), b, p);
}

Report validate(const DeformationRetract &d) {
    for (const auto *m : {&d.i, &d.r, &d.h})
        if (auto r = validate(*m); !r.ok) return r;
    if (!same_marked(d.i.cod, d.r.dom) || !same_marked(d.r.cod, d.i.dom)) return Report::failure("i and r do not match");
    if (!same_marked(d.h.cod, d.i.cod) || !same_marked(d.h.dom, cylinder(d.i.cod)))
        return Report::failure("the homotopy is not defined on (Δ^1)^♯ ⨯ B");
    if (compose(d.r.map, d.i.map).images != identity_on(d.i.dom.space).images) return Report::failure("r i is not the identity");
    const auto &B = *d.i.cod.space;
    auto d1 = simplex(1);
    auto cyl = product(d1, d.i.cod.space);
    for (int k = 0; k <= B.top(); ++k)
        for (int c = 0; c < B.count(k); ++c) {
            Simplex z = cell_simplex({k, c});
            if (d.h.map(cyl.pair(constant(*d1, 0, k), z)) != z) return Report::failure("h_0 is not the identity");
            if (d.h.map(cyl.pair(constant(*d1, 1, k), z)) != d.i.map(d.r.map(z))) return Report::failure("h_1 is not i r");
        }
    auto ca = product(d1, d.i.dom.space);
    for (int k = 0; k <= ca.space->top(); ++k)
        for (int c = 0; c < ca.space->count(k); ++c) {
            Simplex z = cell_simplex({k, c});
            Simplex a = ca.second(z);
            if (d.h.map(cyl.pair(ca.first(z), d.i.map(a))) != d.i.map(a))
                return Report::failure("h restricted to (Δ^1)^♯ ⨯ A is not i π_A");
        }
    return Report::success();
}

AnodyneCertificate retract_from_deformation(const DeformationRetract &d) {
    if (auto r = validate(d); !r.ok) throw InvalidInput("not a right deformation retract: " + r.message);
    GeneratorRef gen{"marked-right", "cylinder", {0}, std::nullopt};
    auto c = instantiate(gen);
    auto pp = pushout_product(c, d.i);
    const auto &P = pp.product;
    const auto &C = *c.cod.space;
    int v0 = -1;
    std::set<int> hit;
    for (int v = 0; v < c.dom.space->count(0); ++v) hit.insert(c.map.image({0, v}).cell.index);
    for (int v = 0; v < C.count(0); ++v)
        if (!hit.count(v)) v0 = v;
    std::vector<int> vm(C.count(0), 1);
    vm[v0] = 0;
    auto d1 = simplex(1);
    auto phi = map_by_vertices(c.cod.space, d1, vm);
    auto cyl = product(d1, d.i.cod.space);

    std::map<CellId, CellId> back;
    const auto &D = pp.map.dom;
    for (int k = 0; k <= D.space->top(); ++k)
        for (int x = 0; x < D.space->count(k); ++x) back[pp.inclusion.image({k, x}).cell] = {k, x};
    auto into_dom = [&](const Simplex &z) { return Simplex{z.word, back.at(z.cell)}; };

    const auto &A = d.i.dom;
    const auto &B = d.i.cod;
    auto sa = from_cells(A.space, D.space, [&](const Simplex &a) {
        return into_dom(P.pair(constant(C, v0, a.dim()), d.i.map(a)));
    });
    auto ra = from_cells(D.space, A.space, [&](const Simplex &z) { return d.r.map(P.second(pp.inclusion(z))); });
    auto sb = from_cells(B.space, P.space, [&](const Simplex &b) { return P.pair(constant(C, v0, b.dim()), b); });
    auto rb = from_cells(P.space, B.space, [&](const Simplex &z) { return d.h.map(cyl.pair(phi(P.first(z)), P.second(z))); });

    Certificate leaf;
    leaf.kind = Certificate::Kind::generator;
    leaf.generator = gen;
    Certificate prod;
    prod.kind = Certificate::Kind::pushout_product;
    prod.children = {leaf};
    prod.along = d.i;
    Certificate root;
    root.kind = Certificate::Kind::retract;
    root.children = {prod};
    root.stated = d.i;
    root.retraction = {MarkedMap{A, D, sa}, MarkedMap{D, A, ra}, MarkedMap{B, pp.map.cod, sb}, MarkedMap{pp.map.cod, B, rb}};
    return {AnodyneClass::marked_right, root};
}

AnodyneCertificate pp_certificate(const AnodyneCertificate &a, const MarkedMap &c) {
    if (!closed_under_products(a.cls)) throw InvalidInput("the " + to_string(a.cls) + " class is not closed under pushout-products");
    if (auto r = validate(c); !r.ok) throw InvalidInput("cofibration: " + r.message);
    if (!is_mono(c.map)) throw InvalidInput("the cofibration is not a monomorphism");
    auto v = check_certificate(a);
    if (!v.valid) throw InvalidInput("invalid certificate at " + v.node + ": " + v.reason);
    Certificate root;
    root.kind = Certificate::Kind::pushout_product;
    root.children = {a.root};
    root.along = c;
    return {a.cls, root};
}

// ---- refutation ------------------------------------------------------------

std::vector<TestFibration> test_fibrations(AnodyneClass c, int bound) {
    using C = AnodyneClass;
    auto pt = simplex(0);
    auto two = coproduct(point("a"), point("b")).space;
    auto fold = SimplicialMap{two, pt, {{cell_simplex({0, 0}), cell_simplex({0, 0})}}};
    auto d1 = simplex(1);
    auto arrow = map_by_vertices(d1, pt, {0, 0});
    auto j = interval_J(std::max(bound, 1));
    auto jmap = map_by_vertices(j, pt, {0, 0});
    std::vector<TestFibration> out;
    if (is_marked_class(c)) {
        // ∞-categories over a point with exactly the equivalences marked
        out.push_back({"fold", sharp_map(fold)});
        out.push_back({"arrow", {MarkedSimplicialSet::flat(d1), MarkedSimplicialSet::sharp(pt), arrow}});
        out.push_back({"codiscrete", sharp_map(jmap)});
        return out;
    }
    out.push_back({"fold", flat_map(fold)});
    out.push_back({"codiscrete", flat_map(jmap)});
    if (c == C::inner || c == C::right) out.push_back({"sieve", flat_map(map_by_vertices(pt, d1, {0}))});
    if (c == C::inner || c == C::left) out.push_back({"cosieve", flat_map(map_by_vertices(pt, d1, {1}))});
    if (c == C::inner) out.push_back({"arrow", flat_map(arrow)});
    return out;
}

Refutation rlp_refute(const MarkedMap &f, AnodyneClass c, int bound) {
    Refutation out;
    if (auto r = validate(f); !r.ok) throw InvalidInput(r.message);
    if (!is_mono(f.map)) {
        out.refuted = true;
        out.detail = "not a monomorphism";
        return out;
    }
    bool marked = is_marked_class(c);
    for (const auto &t : test_fibrations(c, bound)) {
        const auto &E = t.p.dom;
        if (E.space->truncated() && f.cod.space->top() > E.space->top()) continue;
        auto bottoms = all_maps(f.cod.space, t.p.cod.space);
        auto tops = all_maps(f.dom.space, E.space);
        for (const auto &bottom : bottoms)
            for (const auto &top : tops) {
                if (compose(t.p.map, top).images != compose(bottom, f.map).images) continue;
                if (marked && !validate(MarkedMap{f.dom, E, top}).ok) continue;
                LiftingProblem lp{f.map, t.p.map, top, bottom, std::nullopt, std::nullopt};
                if (marked) {
                    lp.marked_b = f.cod.marked;
                    lp.marked_x = E.marked;
                }
                if (!find_lift(lp).found) {
                    out.refuted = true;
                    out.test = t.name;
                    out.square = lp;
                    out.detail = "no lift against " + t.name;
                    return out;
                }
            }
    }
    out.detail = "unknown";
    return out;
}

// ---- K and J ---------------------------------------------------------------

SimplicialMap k_to_j(int truncation) {
    auto d3 = simplex(3);
    auto q = quotient(d3, {{d3->at(1, "02")}, {d3->at(1, "13")}});
    std::vector<int> vm(q.space->count(0), -1);
    for (int v = 0; v < 4; ++v) vm[q.projection.image({0, v}).cell.index] = v % 2 == 0 ? 1 : 0;
    auto j = interval_J(truncation);
    std::vector<int> jv{j->at(0, "0").index, j->at(0, "1").index};
    for (int &v : vm) v = jv[v];
    return map_by_vertices(complex_K(), j, vm);
}

MarkedMap j_flat_to_sharp(int truncation) {
    auto j = interval_J(truncation);
    return {MarkedSimplicialSet::flat(j), MarkedSimplicialSet::sharp(j), identity_on(j)};
}

AnodyneCertificate j_sharp_certificate(int truncation) {
    auto kj = k_to_j(truncation);
    Certificate leaf;
    leaf.kind = Certificate::Kind::generator;
    leaf.generator = {"cartesian-k", "K-sharp", {}, std::nullopt};
    Certificate root;
    root.kind = Certificate::Kind::pushout;
    root.children = {leaf};
    root.along = MarkedMap{MarkedSimplicialSet::flat(kj.dom), MarkedSimplicialSet::flat(kj.cod), kj};
    return {AnodyneClass::cartesian_k, root};
}

}  // namespace sset
