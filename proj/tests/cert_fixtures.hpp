#pragma once

#include <random>
#include <utility>
#include <vector>

#include "sset/anodyne.hpp"

namespace sset::fixtures {

struct Claim {
    std::string name;
    AnodyneCertificate cert;
    MarkedMap claimed;
};

inline Certificate leaf(const std::string &cat, const std::string &fam, std::vector<int> params) {
    Certificate c;
    c.kind = Certificate::Kind::generator;
    c.generator = {cat, fam, std::move(params), std::nullopt};
    return c;
}

inline MarkedMap flat(const SimplicialMap &f) {
    return {MarkedSimplicialSet::flat(f.dom), MarkedSimplicialSet::flat(f.cod), f};
}

inline MarkedMap sharp(const SimplicialMap &f) {
    return {MarkedSimplicialSet::sharp(f.dom), MarkedSimplicialSet::sharp(f.cod), f};
}

inline MarkedMap boundary_map(int n) {
    if (n == 0) return flat(SimplicialMap{empty_set(), simplex(0), {}});
    std::vector<int> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = i;
    return flat(map_by_vertices(boundary(n), simplex(n), v));
}

// {1} -> (Δ^1)^♯ contracted onto its end point.
inline DeformationRetract endpoint_contraction() {
    auto d1 = simplex(1);
    auto pt = simplex(0);
    DeformationRetract d;
    d.i = {MarkedSimplicialSet::sharp(pt), MarkedSimplicialSet::sharp(d1), map_by_vertices(pt, d1, {1})};
    d.r = {d.i.cod, d.i.dom, map_by_vertices(d1, pt, {0, 0})};
    auto cyl = cylinder(d.i.cod);
    auto p = product(d1, d1);
    std::vector<int> vm;
    for (int v = 0; v < p.space->count(0); ++v)
        vm.push_back(std::max(p.first.image({0, v}).cell.index, p.second.image({0, v}).cell.index));
    d.h = {cyl, d.i.cod, map_by_vertices(cyl.space, d1, vm)};
    return d;
}

// Vertex v of dom goes to the vertex of cod named names[v].
inline SimplicialMap by_names(const SSetPtr &dom, const SSetPtr &cod, const std::vector<std::string> &names) {
    std::vector<int> vm;
    for (const auto &n : names) vm.push_back(cod->at(0, n).index);
    return map_by_vertices(dom, cod, vm);
}

inline std::vector<Claim> valid_claims() {
    std::vector<Claim> out;
    auto inner = leaf("inner", "horn", {2, 1});
    out.push_back({"inner horn", {AnodyneClass::inner, inner}, instantiate(inner.generator)});

    auto d = endpoint_contraction();
    out.push_back({"deformation retract", retract_from_deformation(d), d.i});

    auto cyl0 = leaf("marked-right", "cylinder", {0});
    auto pp = pp_certificate({AnodyneClass::marked_right, cyl0}, boundary_map(1));
    out.push_back({"pushout-product", pp, instantiate({"marked-right", "cylinder", {1}, std::nullopt})});

    out.push_back({"J sharp", j_sharp_certificate(4), j_flat_to_sharp(4)});

    Certificate co;
    co.kind = Certificate::Kind::coproduct;
    co.children = {inner, leaf("inner", "horn", {3, 1})};
    auto cmap = check_certificate({AnodyneClass::inner, co}).map;
    out.push_back({"coproduct", {AnodyneClass::inner, co}, *cmap});

    // the path 0-1-2-3 inside Δ^3, filled first at 012 and then at 123
    auto d3 = simplex(3);
    auto zig = subcomplex(d3, {d3->at(1, "01"), d3->at(1, "12"), d3->at(1, "23")}).space;
    auto once = subcomplex(d3, {d3->at(2, "012"), d3->at(1, "23")}).space;
    auto twice = subcomplex(d3, {d3->at(2, "012"), d3->at(2, "123")}).space;
    auto h21 = instantiate(inner.generator).dom.space;

    Certificate po;
    po.kind = Certificate::Kind::pushout;
    po.children = {inner};
    po.along = flat(by_names(h21, zig, {"0", "1", "2"}));
    out.push_back({"pushout", {AnodyneClass::inner, po}, flat(by_names(zig, once, {"0", "1", "2", "3"}))});

    Certificate fill = po;
    fill.along = flat(by_names(h21, once, {"1", "2", "3"}));
    Certificate comp;
    comp.kind = Certificate::Kind::composite;
    comp.children = {po, fill};
    out.push_back({"composite", {AnodyneClass::inner, comp}, flat(by_names(zig, twice, {"0", "1", "2", "3"}))});
    return out;
}

// Ten corruptions, each of which a checker must reject.
inline std::vector<Claim> corrupted_claims(std::mt19937 &rng) {
    auto valid = valid_claims();
    auto pick = [&](const std::string &name) {
        for (const auto &c : valid)
            if (c.name == name) return c;
        throw std::logic_error("no fixture " + name);
    };
    std::vector<Claim> out;
    {
        auto c = pick("inner horn");
        c.cert.root.generator.params = {2, static_cast<int>(rng() % 2) * 2};
        c.name = "outer horn in the inner catalog";
        out.push_back(c);
    }
    {
        auto c = pick("inner horn");
        c.cert.root.generator = {"right", "horn", {2, 2}, std::nullopt};
        c.claimed = instantiate(c.cert.root.generator);
        c.name = "catalog outside the class";
        out.push_back(c);
    }
    {
        auto c = pick("deformation retract");
        auto &ra = c.cert.root.retraction[1].map;
        auto &lvl = ra.images[0];
        lvl[rng() % lvl.size()] = cell_simplex({0, 0});
        auto &sa = c.cert.root.retraction[0].map.images[0];
        sa[0] = cell_simplex({0, static_cast<int>((sa[0].cell.index + 1) % c.cert.root.retraction[0].cod.space->count(0))});
        c.name = "retraction not a left inverse";
        out.push_back(c);
    }
    {
        auto c = pick("deformation retract");
        auto &sb = c.cert.root.retraction[2].map.images[0];
        std::swap(sb[0], sb[1]);
        c.name = "section square fails";
        out.push_back(c);
    }
    {
        auto c = pick("pushout");
        c.cert.root.along = flat(map_by_vertices(simplex(2), simplex(3), {0, 1, 3}));
        c.name = "attaching map from the wrong domain";
        out.push_back(c);
    }
    {
        auto c = pick("pushout-product");
        c.cert.cls = AnodyneClass::inner;
        c.name = "pushout-product in the inner class";
        out.push_back(c);
    }
    {
        auto c = pick("composite");
        std::swap(c.cert.root.children[0], c.cert.root.children[1]);
        c.name = "composite factors out of order";
        out.push_back(c);
    }
    {
        auto c = pick("J sharp");
        auto stated = j_flat_to_sharp(4);
        stated.cod.marked.erase(stated.cod.marked.begin());
        c.cert.root.stated = stated;
        c.name = "stated map with a missing marking";
        out.push_back(c);
    }
    {
        auto c = pick("J sharp");
        c.claimed.cod.marked.erase(c.claimed.cod.marked.begin());
        c.name = "claimed map differs";
        out.push_back(c);
    }
    {
        auto c = pick("pushout-product");
        auto d1 = simplex(1);
        c.cert.root.along = flat(map_by_vertices(d1, simplex(0), {0, 0}));
        c.name = "cofibration not injective";
        out.push_back(c);
    }
    return out;
}

}  // namespace sset::fixtures
