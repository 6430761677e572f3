#include "sset/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace sset::io {

namespace {

template <class F>
auto guarded(const char *what, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception &e) {
        throw InvalidInput(std::string(what) + ": " + e.what());
    }
}

// Names that repeat across dimensions get the "d:name" key.
struct Keys {
    std::set<std::string> clash;
    explicit Keys(const SimplicialSet &x) {
        std::map<std::string, int> seen;
        for (int d = 0; d <= x.top(); ++d)
            for (int i = 0; i < x.count(d); ++i) ++seen[x.name({d, i})];
        for (const auto &[n, k] : seen)
            if (k > 1) clash.insert(n);
    }
    std::string operator()(const SimplicialSet &x, CellId c) const {
        const auto &n = x.name(c);
        return clash.count(n) ? std::to_string(c.dim) + ":" + n : n;
    }
};

const json &keyed(const json &obj, int d, const std::string &name, const char *what) {
    auto k = std::to_string(d) + ":" + name;
    if (obj.contains(k)) return obj.at(k);
    if (obj.contains(name)) return obj.at(name);
    throw InvalidInput(std::string(what) + " missing for cell '" + name + "'");
}

CellId find_cell(const SimplicialSet &x, int d, const std::string &name) {
    auto c = x.find(d, name);
    if (!c) throw InvalidInput("no " + std::to_string(d) + "-cell named '" + name + "'");
    return *c;
}

json edge_names(const SimplicialSet &x, const std::set<int> &edges) {
    json out = json::array();
    for (int e : edges) out.push_back(x.name({1, e}));
    return out;
}

std::set<int> read_edges(const SimplicialSet &x, const json &j) {
    std::set<int> out;
    for (const auto &n : j) out.insert(find_cell(x, 1, n.get<std::string>()).index);
    return out;
}

json images_json(const SimplicialMap &f) {
    Keys keys(*f.dom);
    json out = json::object();
    for (int d = 0; d <= f.dom->top(); ++d)
        for (int i = 0; i < f.dom->count(d); ++i) out[keys(*f.dom, {d, i})] = simplex_ref(*f.cod, f.image({d, i}));
    return out;
}

json node_json(const Certificate &c) {
    json n;
    n["kind"] = to_string(c.kind);
    if (c.kind == Certificate::Kind::generator) n["generator"] = to_json(c.generator);
    if (!c.children.empty()) {
        n["children"] = json::array();
        for (const auto &ch : c.children) n["children"].push_back(node_json(ch));
    }
    if (c.along) n["along"] = to_json(*c.along);
    if (!c.retraction.empty()) {
        n["retraction"] = json::array();
        for (const auto &m : c.retraction) n["retraction"].push_back(to_json(m));
    }
    if (c.stated) n["stated"] = to_json(*c.stated);
    return n;
}

Certificate read_node(const json &n) {
    Certificate c;
    c.kind = certificate_kind(n.at("kind").get<std::string>());
    if (n.contains("generator")) {
        const auto &g = n.at("generator");
        c.generator.catalog = g.at("catalog").get<std::string>();
        c.generator.family = g.at("family").get<std::string>();
        c.generator.params = g.value("params", std::vector<int>{});
        if (g.contains("arg")) c.generator.arg = read_marked_map(g.at("arg"));
    }
    for (const auto &ch : n.value("children", json::array())) c.children.push_back(read_node(ch));
    if (n.contains("along")) c.along = read_marked_map(n.at("along"));
    for (const auto &m : n.value("retraction", json::array())) c.retraction.push_back(read_marked_map(m));
    if (n.contains("stated")) c.stated = read_marked_map(n.at("stated"));
    return c;
}

int object_index(const FiniteCategory &c, const json &j) {
    if (j.is_number_integer()) {
        int i = j.get<int>();
        if (i < 0 || i >= static_cast<int>(c.objects.size())) throw InvalidInput("object index out of range");
        return i;
    }
    return c.object(j.get<std::string>());
}

int morphism_index(const FiniteCategory &c, const json &j) {
    if (j.is_number_integer()) {
        int i = j.get<int>();
        if (i < 0 || i >= static_cast<int>(c.morphisms.size())) throw InvalidInput("morphism index out of range");
        return i;
    }
    auto n = j.get<std::string>();
    for (size_t m = 0; m < c.morphisms.size(); ++m)
        if (c.morphisms[m].name == n) return static_cast<int>(m);
    throw InvalidInput("unknown morphism '" + n + "'");
}

std::string pair_key(const SimplicialSet &s, int a, int b) { return s.name({0, a}) + "," + s.name({0, b}); }

}  // namespace

json simplex_ref(const SimplicialSet &x, const Simplex &z) {
    return json{{"word", z.word}, {"cell", x.name(z.cell)}};
}

Simplex read_ref(const SimplicialSet &x, const json &j, int dim) {
    Word w = j.value("word", Word{});
    int d = dim - static_cast<int>(w.size());
    if (d < 0 || !delta::is_valid_word(w, dim)) throw InvalidInput("malformed degeneracy word");
    return Simplex{w, find_cell(x, d, j.at("cell").get<std::string>())};
}

json to_json(const SimplicialSet &x) {
    Keys keys(x);
    json j;
    j["dim"] = x.dim();
    j["truncated"] = x.truncated();
    json cells = json::object(), faces = json::object();
    for (int d = 0; d <= x.top(); ++d) {
        json names = json::array();
        for (int i = 0; i < x.count(d); ++i) {
            names.push_back(x.name({d, i}));
            if (d == 0) continue;
            json fs = json::array();
            for (const auto &f : x.faces({d, i})) fs.push_back(simplex_ref(x, f));
            faces[keys(x, {d, i})] = fs;
        }
        cells[std::to_string(d)] = names;
    }
    j["cells"] = cells;
    j["faces"] = faces;
    return j;
}

json to_json(const MarkedSimplicialSet &x) {
    json j = to_json(*x.space);
    j["marked"] = edge_names(*x.space, x.marked);
    return j;
}

SSetPtr read_sset(const json &j) {
    return guarded("simplicial set", [&] {
        Builder b;
        const auto &cells = j.at("cells");
        const json no_faces = json::object();
        const auto &faces = j.contains("faces") ? j.at("faces") : no_faces;
        int top = -1;
        for (auto it = cells.begin(); it != cells.end(); ++it) top = std::max(top, std::stoi(it.key()));
        for (int d = 0; d <= top; ++d) {
            auto key = std::to_string(d);
            if (!cells.contains(key)) continue;
            for (const auto &nm : cells.at(key)) {
                auto name = nm.get<std::string>();
                std::vector<Simplex> fs;
                if (d > 0)
                    for (const auto &r : keyed(faces, d, name, "faces")) {
                        Word w = r.value("word", Word{});
                        int fd = d - 1 - static_cast<int>(w.size());
                        if (fd < 0) throw InvalidInput("face word too long on '" + name + "'");
                        auto c = b.find(fd, r.at("cell").get<std::string>());
                        if (!c) throw InvalidInput("face of '" + name + "' names an unknown cell");
                        fs.push_back(Simplex{w, *c});
                    }
                b.add(d, name, fs);
            }
        }
        int dim = j.value("dim", top);
        if (j.value("truncated", false)) b.truncate(dim);
        auto x = b.build_ptr();
        if (!x->truncated() && x->dim() != dim)
            throw InvalidInput("declared dim " + std::to_string(dim) + " but top cell has dim " + std::to_string(x->dim()));
        if (auto r = validate(*x); !r.ok) throw InvalidInput(r.message);
        return x;
    });
}

MarkedSimplicialSet read_marked(const json &j) {
    auto x = read_sset(j);
    return guarded("marking", [&] { return MarkedSimplicialSet{x, read_edges(*x, j.value("marked", json::array()))}; });
}

json to_json(const SimplicialMap &f) { return json{{"dom", to_json(*f.dom)}, {"cod", to_json(*f.cod)}, {"images", images_json(f)}}; }

json to_json(const MarkedMap &f) { return json{{"dom", to_json(f.dom)}, {"cod", to_json(f.cod)}, {"images", images_json(f.map)}}; }

SimplicialMap read_map(const json &images, SSetPtr dom, SSetPtr cod) {
    return guarded("map", [&] {
        SimplicialMap f{dom, cod, {}};
        f.images.resize(dom->top() + 1);
        for (int d = 0; d <= dom->top(); ++d)
            for (int i = 0; i < dom->count(d); ++i)
                f.images[d].push_back(read_ref(*cod, keyed(images, d, dom->name({d, i}), "image"), d));
        if (auto r = validate(f); !r.ok) throw InvalidInput(r.message);
        return f;
    });
}

SimplicialMap read_map(const json &j) {
    return guarded("map", [&] { return read_map(j.at("images"), read_sset(j.at("dom")), read_sset(j.at("cod"))); });
}

MarkedMap read_marked_map(const json &j) {
    return guarded("marked map", [&] {
        auto dom = read_marked(j.at("dom"));
        auto cod = read_marked(j.at("cod"));
        MarkedMap m{dom, cod, read_map(j.at("images"), dom.space, cod.space)};
        if (auto r = validate(m); !r.ok) throw InvalidInput(r.message);
        return m;
    });
}

json to_json(const SimplicialSet &s, const FlaggedNecklace &n) {
    json j;
    j["beads"] = json::array();
    j["images"] = json::array();
    for (const auto &b : n.beads) {
        j["beads"].push_back(b.dim());
        j["images"].push_back(simplex_ref(s, b));
    }
    j["flag"] = json::array();
    for (auto mask : n.flag) {
        json t = json::array();
        for (int v = 0; v < 64; ++v)
            if (mask >> v & 1) t.push_back(v);
        j["flag"].push_back(t);
    }
    return j;
}

FlaggedNecklace read_necklace(const SimplicialSet &s, const json &j) {
    return guarded("necklace", [&] {
        FlaggedNecklace n;
        const auto &beads = j.at("beads");
        const auto &imgs = j.at("images");
        if (beads.size() != imgs.size()) throw InvalidInput("beads and images differ in length");
        for (size_t i = 0; i < beads.size(); ++i) n.beads.push_back(read_ref(s, imgs[i], beads[i].get<int>()));
        for (const auto &t : j.at("flag")) {
            VertexMask m = 0;
            for (const auto &v : t) {
                int k = v.get<int>();
                if (k < 0 || k >= 64) throw InvalidInput("flag vertex out of range");
                m |= VertexMask{1} << k;
            }
            n.flag.push_back(m);
        }
        if (auto r = validate(s, n); !r.ok) throw InvalidInput(r.message);
        return n;
    });
}

json to_json(const GeneratorRef &g) {
    json j{{"catalog", g.catalog}, {"family", g.family}, {"params", g.params}};
    if (g.arg) j["arg"] = to_json(*g.arg);
    return j;
}

json to_json(const AnodyneCertificate &c) { return json{{"class", to_string(c.cls)}, {"node", node_json(c.root)}}; }

AnodyneCertificate read_certificate(const json &j) {
    return guarded("certificate", [&] {
        return AnodyneCertificate{anodyne_class(j.at("class").get<std::string>()), read_node(j.at("node"))};
    });
}

json catalog_json() {
    json out = json::array();
    for (const auto &c : catalogs()) {
        json fams = json::array();
        for (const auto &f : c.families)
            fams.push_back({{"name", f.name}, {"description", f.description}, {"arity", f.arity}, {"takes_map", f.takes_map}});
        out.push_back({{"catalog", c.name}, {"class", to_string(c.cls)}, {"families", fams}});
    }
    return out;
}

json to_json(const FiniteCategory &c) {
    json j;
    j["objects"] = c.objects;
    j["morphisms"] = json::array();
    for (const auto &m : c.morphisms) j["morphisms"].push_back({{"name", m.name}, {"src", c.objects[m.src]}, {"tgt", c.objects[m.tgt]}});
    j["identities"] = json::array();
    for (int id : c.identity) j["identities"].push_back(c.morphisms[id].name);
    j["composites"] = json::array();
    for (size_t g = 0; g < c.morphisms.size(); ++g)
        for (size_t f = 0; f < c.morphisms.size(); ++f) {
            int gf = c.comp[g][f];
            if (gf < 0 || c.is_identity(static_cast<int>(g)) || c.is_identity(static_cast<int>(f))) continue;
            j["composites"].push_back({c.morphisms[g].name, c.morphisms[f].name, c.morphisms[gf].name});
        }
    return j;
}

FiniteCategory read_category(const json &j) {
    return guarded("category", [&] {
        FiniteCategory c;
        if (j.contains("linear")) {
            c = FiniteCategory::linear(j.at("linear").get<int>());
        } else if (j.contains("codiscrete")) {
            c = FiniteCategory::codiscrete(j.at("codiscrete").get<std::vector<std::string>>());
        } else if (j.contains("discrete")) {
            c = FiniteCategory::discrete(j.at("discrete").get<std::vector<std::string>>());
        } else if (j.contains("poset")) {
            const auto &p = j.at("poset");
            auto objs = p.at("objects").get<std::vector<std::string>>();
            int n = static_cast<int>(objs.size());
            std::map<std::string, int> idx;
            for (int i = 0; i < n; ++i) idx[objs[i]] = i;
            std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
            for (int i = 0; i < n; ++i) leq[i][i] = true;
            for (const auto &r : p.value("leq", json::array())) {
                auto a = r.at(0).get<std::string>(), b = r.at(1).get<std::string>();
                if (!idx.count(a) || !idx.count(b)) throw InvalidInput("order relation names an unknown object");
                leq[idx[a]][idx[b]] = true;
            }
            for (int k = 0; k < n; ++k)
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if (leq[a][k] && leq[k][b]) leq[a][b] = true;
            c = make_poset(objs, leq);
        } else {
            c.objects = j.at("objects").get<std::vector<std::string>>();
            for (const auto &m : j.at("morphisms"))
                c.morphisms.push_back({m.at("name").get<std::string>(), object_index(c, m.at("src")), object_index(c, m.at("tgt"))});
            c.identity.assign(c.objects.size(), -1);
            for (const auto &id : j.at("identities")) {
                int m = morphism_index(c, id);
                c.identity[c.morphisms[m].src] = m;
            }
            int k = static_cast<int>(c.morphisms.size());
            c.comp.assign(k, std::vector<int>(k, -1));
            for (int m = 0; m < k; ++m) {
                int s = c.morphisms[m].src, t = c.morphisms[m].tgt;
                if (c.identity[t] >= 0) c.comp[c.identity[t]][m] = m;
                if (c.identity[s] >= 0) c.comp[m][c.identity[s]] = m;
            }
            for (const auto &t : j.value("composites", json::array()))
                c.comp[morphism_index(c, t.at(0))][morphism_index(c, t.at(1))] = morphism_index(c, t.at(2));
        }
        if (auto r = c.validate(); !r.ok) throw InvalidInput(r.message);
        return c;
    });
}

json to_json(const CategoryValuedFunctor &f) {
    json j;
    j["base"] = to_json(f.base);
    j["fibres"] = json::array();
    for (const auto &c : f.fibres) j["fibres"].push_back(to_json(c));
    j["pullbacks"] = json::object();
    for (size_t u = 0; u < f.base.morphisms.size(); ++u) {
        const auto &m = f.base.morphisms[u];
        const auto &src = f.fibres[m.src];
        const auto &tgt = f.fibres[m.tgt];
        json objs = json::object(), mors = json::object();
        for (size_t a = 0; a < tgt.objects.size(); ++a) objs[tgt.objects[a]] = src.objects[f.pullbacks[u].on_objects[a]];
        for (size_t a = 0; a < tgt.morphisms.size(); ++a) mors[tgt.morphisms[a].name] = src.morphisms[f.pullbacks[u].on_morphisms[a]].name;
        j["pullbacks"][m.name] = {{"objects", objs}, {"morphisms", mors}};
    }
    return j;
}

CategoryValuedFunctor read_category_functor(const json &j) {
    return guarded("category-valued functor", [&] {
        CategoryValuedFunctor F;
        F.base = read_category(j.at("base"));
        for (const auto &c : j.at("fibres")) F.fibres.push_back(read_category(c));
        if (F.fibres.size() != F.base.objects.size()) throw InvalidInput("one fibre per base object is required");
        int k = static_cast<int>(F.base.morphisms.size());
        std::vector<bool> known(k, false);
        F.pullbacks.assign(k, Functor{});
        const auto &pb = j.value("pullbacks", json::object());
        for (int u = 0; u < k; ++u) {
            const auto &m = F.base.morphisms[u];
            const auto &src = F.fibres[m.src];
            const auto &tgt = F.fibres[m.tgt];
            if (F.base.is_identity(u)) {
                Functor id;
                for (size_t a = 0; a < src.objects.size(); ++a) id.on_objects.push_back(static_cast<int>(a));
                for (size_t a = 0; a < src.morphisms.size(); ++a) id.on_morphisms.push_back(static_cast<int>(a));
                F.pullbacks[u] = id;
                known[u] = true;
                continue;
            }
            if (!pb.contains(m.name)) continue;
            const auto &e = pb.at(m.name);
            Functor f;
            for (const auto &o : tgt.objects) f.on_objects.push_back(object_index(src, e.at("objects").at(o)));
            for (const auto &mm : tgt.morphisms) {
                if (e.contains("morphisms") && e.at("morphisms").contains(mm.name)) {
                    f.on_morphisms.push_back(morphism_index(src, e.at("morphisms").at(mm.name)));
                } else {
                    auto h = src.hom(f.on_objects[mm.src], f.on_objects[mm.tgt]);
                    if (h.size() != 1) throw InvalidInput("pullback along '" + m.name + "' needs an explicit image of '" + mm.name + "'");
                    f.on_morphisms.push_back(h[0]);
                }
            }
            F.pullbacks[u] = f;
            known[u] = true;
        }
        // remaining morphisms as composites of known ones
        for (bool changed = true; changed;) {
            changed = false;
            for (int v = 0; v < k; ++v)
                for (int u = 0; u < k; ++u) {
                    int vu = F.base.comp[v][u];
                    if (vu < 0 || known[vu] || !known[u] || !known[v]) continue;
                    F.pullbacks[vu] = compose(F.pullbacks[u], F.pullbacks[v]);
                    known[vu] = changed = true;
                }
        }
        for (int u = 0; u < k; ++u)
            if (!known[u]) throw InvalidInput("no pullback functor for '" + F.base.morphisms[u].name + "'");
        if (auto r = validate(F); !r.ok) throw InvalidInput(r.message);
        return F;
    });
}

SSetDiagram read_diagram(const json &j) {
    return guarded("diagram", [&] {
        SSetDiagram D;
        D.category = read_category(j.at("category"));
        for (const auto &v : j.at("values")) D.values.push_back(read_sset(v));
        if (D.values.size() != D.category.objects.size()) throw InvalidInput("one value per object is required");
        const auto &maps = j.value("maps", json::object());
        for (size_t u = 0; u < D.category.morphisms.size(); ++u) {
            const auto &m = D.category.morphisms[u];
            if (maps.contains(m.name))
                D.maps.push_back(read_map(maps.at(m.name), D.values[m.src], D.values[m.tgt]));
            else if (D.category.is_identity(static_cast<int>(u)))
                D.maps.push_back(SimplicialMap::identity(D.values[m.src]));
            else
                throw InvalidInput("no map for morphism '" + m.name + "'");
        }
        if (auto r = D.validate(); !r.ok) throw InvalidInput(r.message);
        return D;
    });
}

json to_json(const SimplicialFunctor &g) {
    const auto &base = *g.domain->base();
    json j;
    j["base"] = to_json(base);
    j["bound"] = g.bound();
    j["bead_bound"] = g.domain->options().bead_bound;
    j["allow_partial"] = g.domain->options().allow_partial;
    j["objects"] = json::array();
    for (int a = 0; a < base.count(0); ++a) j["objects"].push_back(base.name({0, a}));
    j["homs"] = json::object();
    for (int a = 0; a < base.count(0); ++a)
        for (int b = 0; b < base.count(0); ++b) j["homs"][pair_key(base, a, b)] = to_json(*g.domain->hom(a, b).space);
    j["values"] = json::object();
    for (int a = 0; a < base.count(0); ++a) j["values"][base.name({0, a})] = to_json(g.values[a]);
    j["action"] = json::array();
    for (const auto &[key, res] : action_table(g)) {
        const auto &[a, b, s, x] = key;
        j["action"].push_back({{"from", base.name({0, a})},
                               {"to", base.name({0, b})},
                               {"dim", s.dim()},
                               {"hom", simplex_ref(*g.domain->hom(a, b).space, s)},
                               {"value", simplex_ref(*g.values[b].space, x)},
                               {"result", simplex_ref(*g.values[a].space, res)}});
    }
    return j;
}

SimplicialFunctor read_functor(const json &j) {
    return guarded("simplicial functor", [&] {
        auto base = read_sset(j.at("base"));
        MappingOptions opts{j.at("bound").get<int>(), j.value("bead_bound", -1), j.value("allow_partial", false)};
        auto pc = std::make_shared<const PathCategory>(base, opts);
        SimplicialFunctor g;
        g.domain = pc;
        std::vector<SSetPtr> vals;
        for (int a = 0; a < base->count(0); ++a) {
            g.values.push_back(read_marked(j.at("values").at(base->name({0, a}))));
            vals.push_back(g.values.back().space);
        }
        if (j.contains("homs"))
            for (int a = 0; a < base->count(0); ++a)
                for (int b = 0; b < base->count(0); ++b) {
                    auto stored = read_sset(j.at("homs").at(pair_key(*base, a, b)));
                    if (stored->counts() != pc->hom(a, b).space->counts())
                        throw InvalidInput("stored hom complex " + pair_key(*base, a, b) + " differs from the recomputed one");
                }
        auto table = std::make_shared<ActionTable>();
        for (const auto &e : j.at("action")) {
            int a = find_cell(*base, 0, e.at("from").get<std::string>()).index;
            int b = find_cell(*base, 0, e.at("to").get<std::string>()).index;
            int d = e.at("dim").get<int>();
            auto s = read_ref(*pc->hom(a, b).space, e.at("hom"), d);
            auto x = read_ref(*vals[b], e.at("value"), d);
            (*table)[{a, b, s, x}] = read_ref(*vals[a], e.at("result"), d);
        }
        g.act = action_from_table(table, vals);
        if (auto r = g.validate(std::min(2, g.bound())); !r.ok) throw InvalidInput(r.message);
        return g;
    });
}

LiftingProblem read_lifting_problem(const json &j) {
    return guarded("lifting problem", [&] {
        const auto &sp = j.at("spaces");
        auto A = read_sset(sp.at("A")), B = read_sset(sp.at("B")), X = read_sset(sp.at("X")), Y = read_sset(sp.at("Y"));
        LiftingProblem pr;
        pr.i = read_map(j.at("i"), A, B);
        pr.p = read_map(j.at("p"), X, Y);
        pr.top = read_map(j.at("top"), A, X);
        pr.bottom = read_map(j.at("bottom"), B, Y);
        if (j.contains("marked_b")) pr.marked_b = read_edges(*B, j.at("marked_b"));
        if (j.contains("marked_x")) pr.marked_x = read_edges(*X, j.at("marked_x"));
        if (auto r = pr.validate(); !r.ok) throw InvalidInput(r.message);
        return pr;
    });
}

json to_json(const LiftingProblem &pr) {
    json j;
    j["spaces"] = {{"A", to_json(*pr.i.dom)}, {"B", to_json(*pr.i.cod)}, {"X", to_json(*pr.p.dom)}, {"Y", to_json(*pr.p.cod)}};
    j["i"] = images_json(pr.i);
    j["p"] = images_json(pr.p);
    j["top"] = images_json(pr.top);
    j["bottom"] = images_json(pr.bottom);
    if (pr.marked_b) j["marked_b"] = edge_names(*pr.i.cod, *pr.marked_b);
    if (pr.marked_x) j["marked_x"] = edge_names(*pr.p.dom, *pr.marked_x);
    return j;
}

json to_json(const QComplex &q) {
    json j = to_json(*q.space);
    j["n"] = q.n;
    j["coface"] = json::array();
    j["codegeneracy"] = json::array();
    if (q.n > 0) {
        auto lower = q_complex(q.n - 1, q.bound, q.method);
        for (int i = 0; i <= q.n; ++i) j["coface"].push_back(images_json(q_operator(lower, q, delta::face_map(q.n, i))));
    }
    auto upper = q_complex(q.n + 1, q.bound, q.method);
    for (int i = 0; i <= q.n; ++i) j["codegeneracy"].push_back(images_json(q_operator(upper, q, delta::degeneracy_map(q.n, i))));
    return j;
}

json to_json(const Verdict &v) { return json::parse(v.json()); }

json to_json(const HomologyReport &r) {
    json j;
    j["reduced"] = r.reduced;
    j["groups"] = json::parse(r.json());
    return j;
}

json to_json(const IntMatrix &m) {
    json rows = json::array();
    for (int r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(json::parse(m.get(r, c).get_str()));
        rows.push_back(row);
    }
    return json{{"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

std::string to_dot(const SimplicialSet &x, const std::set<int> &marked) {
    auto quote = [](const std::string &s) {
        std::string o = "\"";
        for (char ch : s) {
            if (ch == '"' || ch == '\\') o += '\\';
            o += ch;
        }
        return o + "\"";
    };
    std::ostringstream o;
    o << "digraph sset {\n";
    for (int v = 0; v < x.count(0); ++v) o << "  " << quote(x.name({0, v})) << ";\n";
    for (int e = 0; e < x.count(1); ++e) {
        const auto &vs = x.cell_vertices({1, e});
        o << "  " << quote(x.name({0, vs[0]})) << " -> " << quote(x.name({0, vs[1]})) << " [label=" << quote(x.name({1, e}));
        if (marked.count(e)) o << ", style=bold";
        o << "];\n";
    }
    o << "}\n";
    return o.str();
}

json parse(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

json load(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

}  // namespace sset::io
