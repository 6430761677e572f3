#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "sset/anodyne.hpp"
#include "sset/corpus.hpp"
#include "sset/homology.hpp"
#include "sset/homspace.hpp"
#include "sset/io.hpp"
#include "sset/iso.hpp"
#include "sset/lifting.hpp"
#include "sset/straighten.hpp"
#include "suite.hpp"

using namespace sset;
using io::json;

namespace {

enum Exit { ok = 0, refuted = 1, inconclusive = 2, invalid = 3 };

struct Globals {
    int dim_bound = 4;
    unsigned seed = 2024;
    std::string format = "json";
    int bead_bound = -1;
    bool allow_partial = false;
    bool quiet = false;
    std::string corpus_path = default_corpus_path();
    std::optional<Corpus> corpus;

    const Corpus *load() {
        if (!corpus) {
            try {
                corpus = load_corpus_file(corpus_path);
            } catch (const InvalidInput &) {
                corpus = Corpus{};
            }
        }
        return &*corpus;
    }
    MappingOptions mapping() const { return {dim_bound, bead_bound, allow_partial}; }
};

Globals g;

void emit(const json &j) {
    if (!g.quiet) std::cout << j.dump(2) << "\n";
}

void emit_ordered(const nlohmann::ordered_json &j) {
    if (!g.quiet) std::cout << j.dump(2) << "\n";
}

void emit_marked(const MarkedSimplicialSet &x) {
    if (g.quiet) return;
    if (g.format == "dot") std::cout << io::to_dot(*x.space, x.marked);
    else std::cout << io::to_json(x).dump(2) << "\n";
}

void json_only() {
    if (g.format != "json") throw InvalidInput("--format dot is only available for simplicial set output");
}

SSetPtr base(const std::string &spec) { return resolve_base(spec, g.load()); }

int vertex(const SimplicialSet &s, const std::string &name) {
    auto c = s.find(0, name);
    if (!c) throw InvalidInput("no vertex named '" + name + "'");
    return c->index;
}

std::set<int> edges(const SimplicialSet &s, const std::vector<std::string> &names) {
    std::set<int> out;
    for (const auto &n : names) {
        auto c = s.find(1, n);
        if (!c) throw InvalidInput("no edge named '" + n + "'");
        out.insert(c->index);
    }
    return out;
}

// A map file holds either a plain map or a marked map.
MarkedMap read_any_map(const std::string &path) {
    auto j = io::load(path);
    if (j.at("dom").contains("marked") || j.at("cod").contains("marked")) return io::read_marked_map(j);
    auto f = io::read_map(j);
    return {MarkedSimplicialSet::flat(f.dom), MarkedSimplicialSet::flat(f.cod), f};
}

int verdict_exit(const Verdict &v) {
    emit(io::to_json(v));
    if (v.outcome == Outcome::holds) return ok;
    return v.outcome == Outcome::fails ? refuted : inconclusive;
}

std::string detect_type(const json &j) {
    if (j.contains("entries")) return "corpus";
    if (j.contains("class") && j.contains("node")) return "certificate";
    if (j.contains("spaces")) return "lifting-problem";
    if (j.contains("action") && j.contains("values")) return "functor";
    if (j.contains("category") && j.contains("values")) return "diagram";
    if (j.contains("fibres")) return "category-functor";
    if (j.contains("images") && j.contains("dom")) return "map";
    if (j.contains("beads")) return "necklace";
    if (j.contains("cells")) return "sset";
    if (j.contains("morphisms") || j.contains("poset") || j.contains("linear") || j.contains("codiscrete")) return "category";
    throw InvalidInput("cannot tell what kind of file this is");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"simplicial sets, necklaces and straightening"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--dim-bound", g.dim_bound, "dimension bound D")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized suites")->capture_default_str();
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
    app.add_option("--bead-bound", g.bead_bound, "maximum necklace vertices (-1 = automatic)");
    app.add_flag("--allow-partial", g.allow_partial, "keep bounded subcomplexes instead of failing");
    app.add_flag("--quiet", g.quiet, "no output, exit code only");
    app.add_option("--corpus", g.corpus_path, "corpus file for named bases");

    std::string base_s, from_s, to_s, file, file2, kind, edge_s, method = "necklace", type = "auto", left_s, right_s;
    std::vector<std::string> marked_s;
    std::vector<int> only;
    int n = 0, from_i = 0, to_i = 0, vertex_i = -1;
    bool reduced = false, matrices = false, refute = false;
    std::string cls_s;

    auto *build = app.add_subcommand("build", "emit a named base");
    build->add_option("--base", base_s)->required();

    auto *mapc = app.add_subcommand("map-complex", "mapping complex 𝔠(S)(from,to)");
    mapc->add_option("--base", base_s)->required();
    mapc->add_option("--from", from_s)->required();
    mapc->add_option("--to", to_s)->required();

    auto *cube = app.add_subcommand("cube-oracle", "nerve of the subsets of [i,j] containing i and j");
    cube->add_option("--n", n)->required();
    cube->add_option("--from", from_i)->required();
    cube->add_option("--to", to_i)->required();

    auto *str = app.add_subcommand("straighten", "Str⁺ of a map X -> S");
    str->add_option("--map", file, "map JSON; dom markings are used");
    str->add_option("--base", base_s, "with --vertex: the map Δ^0 -> S");
    str->add_option("--vertex", from_s);

    auto *unstr = app.add_subcommand("unstraighten", "Un⁺ of a simplicial functor");
    unstr->add_option("--functor", file, "functor JSON");
    unstr->add_option("--map", file2, "straighten this map first");

    auto *kan = app.add_subcommand("kan-extend", "left Kan extension along 𝔠(f)");
    kan->add_option("--functor", file)->required();
    kan->add_option("--map", file2, "f: T -> S with the functor over T")->required();

    auto *qc = app.add_subcommand("qcomplex", "Q^n with its cosimplicial operators");
    qc->add_option("--n", n)->required();
    qc->add_option("--method", method)->check(CLI::IsMember({"necklace", "chain", "chain-quotient", "both"}));

    auto *rq = app.add_subcommand("realize-q", "|X|_Q");
    rq->add_option("--base", base_s)->required();
    auto *sq = app.add_subcommand("sing-q", "Sing_Q X");
    sq->add_option("--base", base_s)->required();

    auto *cmp = app.add_subcommand("compare", "comparison map |Hom^R(S,s,t)|_Q -> 𝔠(S)(s,t) on homology");
    cmp->add_option("--base", base_s)->required();
    cmp->add_option("--from", from_s)->required();
    cmp->add_option("--to", to_s)->required();

    auto *hoc = app.add_subcommand("hocolim", "Bousfield-Kan homotopy colimit of a diagram");
    hoc->add_option("--diagram", file)->required();

    auto *lift = app.add_subcommand("lift", "solve a lifting problem");
    lift->add_option("--problem", file)->required();

    auto *fib = app.add_subcommand("check-fibration", "bounded fibration check");
    fib->add_option("--map", file)->required();
    fib->add_option("--kind", kind)->required()->check(CLI::IsMember({"inner", "left", "right", "trivial", "marked-cartesian"}));
    fib->add_option("--marked", marked_s, "marked edges of the domain (default: from the file)");

    auto *cart = app.add_subcommand("check-cartesian-edge", "bounded p-cartesian check");
    cart->add_option("--map", file)->required();
    cart->add_option("--edge", edge_s)->required();

    auto *cc = app.add_subcommand("cert-check", "verify an anodyne certificate");
    cc->add_option("--cert", file)->required();
    cc->add_option("--claimed", file2, "marked map the certificate should produce");
    cc->add_flag("--refute", refute, "also search for a lifting refutation of the claimed map");

    auto *cat = app.add_subcommand("cert-catalog", "generator catalogs");
    cat->add_option("--class", cls_s, "list instances for this class");

    auto *hom = app.add_subcommand("homology", "integral homology up to the dimension bound");
    hom->add_option("--base", base_s)->required();
    hom->add_flag("--reduced", reduced);
    hom->add_flag("--matrices", matrices, "also print boundary matrices");

    auto *ind = app.add_subcommand("induced", "chain maps and homology of a map");
    ind->add_option("--map", file)->required();

    auto *iso = app.add_subcommand("iso", "isomorphism check");
    iso->add_option("--left", left_s)->required();
    iso->add_option("--right", right_s)->required();

    auto *val = app.add_subcommand("validate", "validate a file");
    val->add_option("--file", file)->required();
    val->add_option("--type", type);
    val->add_option("--base", base_s, "base for necklace files");

    auto *run = app.add_subcommand("corpus-run", "run the acceptance suite on the corpus");
    run->add_option("--only", only);

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) {
            auto x = base(base_s);
            const auto *e = g.load()->find(base_s);
            emit_marked({x, e ? e->marked : std::set<int>{}});
            return ok;
        }
        if (mapc->parsed()) {
            auto s = base(base_s);
            auto mc = mapping_complex(s, vertex(*s, from_s), vertex(*s, to_s), g.mapping());
            emit_marked(MarkedSimplicialSet::flat(mc.space));
            return ok;
        }
        if (cube->parsed()) {
            emit_marked(MarkedSimplicialSet::flat(cube_oracle(n, from_i, to_i, g.dim_bound)));
            return ok;
        }
        if (str->parsed()) {
            json_only();
            MarkedMap p;
            if (!file.empty()) {
                p = read_any_map(file);
            } else {
                if (base_s.empty() || from_s.empty()) throw InvalidInput("straighten needs --map or --base with --vertex");
                auto s = base(base_s);
                auto f = map_by_vertices(simplex(0), s, {vertex(*s, from_s)});
                p = {MarkedSimplicialSet::flat(f.dom), MarkedSimplicialSet::flat(s), f};
            }
            auto c = std::make_shared<const PathCategory>(p.map.cod, g.mapping());
            emit(io::to_json(straighten_marked(p.map, p.dom.marked, c).functor));
            return ok;
        }
        if (unstr->parsed()) {
            json_only();
            SimplicialFunctor G;
            if (!file.empty()) {
                G = io::read_functor(io::load(file));
            } else if (!file2.empty()) {
                auto p = read_any_map(file2);
                auto c = std::make_shared<const PathCategory>(p.map.cod, g.mapping());
                G = straighten_marked(p.map, p.dom.marked, c).functor;
            } else {
                throw InvalidInput("unstraighten needs --functor or --map");
            }
            auto un = unstraighten(G, g.dim_bound);
            MarkedMap proj{un.space, MarkedSimplicialSet::sharp(un.projection.cod), un.projection};
            emit(io::to_json(proj));
            return ok;
        }
        if (kan->parsed()) {
            json_only();
            auto G = io::read_functor(io::load(file));
            auto f = read_any_map(file2).map;
            if (!same_structure(*f.dom, *G.domain->base())) throw InvalidInput("the map's domain is not the functor's base");
            auto tgt = std::make_shared<const PathCategory>(f.cod, G.domain->options());
            SimplicialMap fm{G.domain->base(), f.cod, f.images};
            emit(io::to_json(kan_extend(PathFunctor{G.domain, tgt, fm}, G).functor));
            return ok;
        }
        if (qc->parsed()) {
            auto m = method == "chain" ? QMethod::chain_quotient : q_method(method);
            auto q = q_complex(n, g.dim_bound, m);
            if (g.format == "dot") emit_marked(MarkedSimplicialSet::flat(q.space));
            else emit(io::to_json(q));
            return ok;
        }
        if (rq->parsed()) {
            emit_marked(MarkedSimplicialSet::flat(realize_q(base(base_s), g.dim_bound).space));
            return ok;
        }
        if (sq->parsed()) {
            emit_marked(MarkedSimplicialSet::flat(sing_q(base(base_s), g.dim_bound).space));
            return ok;
        }
        if (cmp->parsed()) {
            json_only();
            auto s = base(base_s);
            const auto *e = g.load()->find(base_s);
            ComparisonOptions opts{g.dim_bound, g.bead_bound, g.allow_partial, true};
            if (e && g.bead_bound < 0) {
                opts.bead_bound = e->bead_bound;
                opts.allow_partial = opts.allow_partial || e->allow_partial;
            }
            auto c = comparison_map(s, vertex(*s, from_s), vertex(*s, to_s), opts);
            int range = g.dim_bound - 1;
            auto v = is_homology_iso(c.map, range);
            nlohmann::ordered_json j{{"verdict", v.iso ? "homology-iso" : "not-homology-iso"}, {"range", range}};
            if (!v.iso) j["failing_degree"] = v.failing_degree;
            emit_ordered(j);
            return v.iso ? ok : refuted;
        }
        if (hoc->parsed()) {
            json_only();
            auto d = io::read_diagram(io::load(file));
            auto h = bousfield_kan_hocolim(d, g.dim_bound);
            int range = std::max(0, g.dim_bound - 1);
            emit({{"hocolim", io::to_json(*h.space)},
                  {"colim", io::to_json(*h.colim.space)},
                  {"augmentation_homology_iso", is_homology_iso(h.augmentation, range).iso},
                  {"range", range}});
            return ok;
        }
        if (lift->parsed()) {
            json_only();
            auto pr = io::read_lifting_problem(io::load(file));
            auto r = find_lift(pr);
            json j{{"verdict", r.found ? "holds" : "fails"}};
            if (r.found) j["witness"] = io::to_json(r.lift)["images"];
            else j["detail"] = r.reason;
            emit(j);
            return r.found ? ok : refuted;
        }
        if (fib->parsed()) {
            json_only();
            auto p = read_any_map(file);
            if (kind == "marked-cartesian") {
                auto m = marked_s.empty() ? p.dom.marked : edges(*p.map.dom, marked_s);
                return verdict_exit(is_marked_cartesian_fibration(p.map, m, g.dim_bound));
            }
            return verdict_exit(classify_fibration(p.map, fibration_kind(kind), g.dim_bound));
        }
        if (cart->parsed()) {
            json_only();
            auto p = read_any_map(file);
            auto e = p.map.dom->find(1, edge_s);
            if (!e) throw InvalidInput("no edge named '" + edge_s + "'");
            return verdict_exit(is_p_cartesian(p.map, cell_simplex(*e), g.dim_bound));
        }
        if (cc->parsed()) {
            json_only();
            auto cert = io::read_certificate(io::load(file));
            std::optional<MarkedMap> claimed;
            if (!file2.empty()) claimed = io::read_marked_map(io::load(file2));
            auto v = claimed ? check_certificate(cert, *claimed) : check_certificate(cert);
            json j{{"valid", v.valid}, {"class", to_string(cert.cls)}};
            if (!v.valid) j["node"] = v.node, j["reason"] = v.reason;
            if (refute && claimed) {
                auto r = rlp_refute(*claimed, cert.cls, g.dim_bound);
                j["refutation"] = {{"refuted", r.refuted}, {"test", r.test}, {"detail", r.detail}};
                if (r.refuted && r.square) j["refutation"]["square"] = io::to_json(*r.square);
            }
            emit(j);
            return v.valid ? ok : refuted;
        }
        if (cat->parsed()) {
            json_only();
            if (cls_s.empty()) {
                emit(io::catalog_json());
                return ok;
            }
            auto cls = anodyne_class(cls_s);
            json out = json::array();
            for (const auto &c : catalogs())
                if (c.cls == cls)
                    for (const auto &gr : instances(c, g.dim_bound)) out.push_back(io::to_json(gr));
            emit(out);
            return ok;
        }
        if (hom->parsed()) {
            json_only();
            auto x = base(base_s);
            int b = x->truncated() ? std::min(g.dim_bound, x->top() - 1) : g.dim_bound;
            auto r = homology(*x, b, reduced);
            json j = io::to_json(r);
            if (matrices) {
                auto c = normalized_chains(*x, b);
                j["boundaries"] = json::array();
                for (int k = 1; k <= c.top(); ++k) j["boundaries"].push_back(c.differential[k].dense_text());
            }
            emit(j);
            return ok;
        }
        if (ind->parsed()) {
            json_only();
            auto f = read_any_map(file).map;
            int b = g.dim_bound;
            if (f.dom->truncated()) b = std::min(b, f.dom->top() - 1);
            if (f.cod->truncated()) b = std::min(b, f.cod->top() - 1);
            auto h = induced_homology(f, b);
            json j{{"source", io::to_json(h.source)}, {"target", io::to_json(h.target)}, {"chain_maps", json::array()}};
            for (const auto &m : h.chain_maps) j["chain_maps"].push_back(io::to_json(m));
            auto v = is_homology_iso(f, b);
            j["homology_iso"] = v.iso;
            emit(j);
            return ok;
        }
        if (iso->parsed()) {
            json_only();
            auto x = base(left_s), y = base(right_s);
            auto r = iso_check(*x, *y);
            json j{{"iso", r.iso}};
            if (r.iso) j["witness"] = io::to_json(SimplicialMap{x, y, r.images})["images"];
            else j["reason"] = r.reason;
            emit(j);
            return r.iso ? ok : refuted;
        }
        if (val->parsed()) {
            json_only();
            json j;
            try {
                j = io::load(file);
            } catch (const InvalidInput &e) {
                emit({{"valid", false}, {"violation", e.what()}});
                return invalid;
            }
            std::string t = type == "auto" ? detect_type(j) : type;
            try {
                if (t == "sset") io::read_marked(j);
                else if (t == "map") j.at("dom").contains("marked") ? (void)io::read_marked_map(j) : (void)io::read_map(j);
                else if (t == "certificate") io::read_certificate(j);
                else if (t == "functor") io::read_functor(j);
                else if (t == "diagram") io::read_diagram(j);
                else if (t == "category") io::read_category(j);
                else if (t == "category-functor") io::read_category_functor(j);
                else if (t == "lifting-problem") io::read_lifting_problem(j);
                else if (t == "corpus") load_corpus(j);
                else if (t == "necklace") {
                    if (base_s.empty()) throw InvalidInput("necklace files need --base");
                    io::read_necklace(*base(base_s), j);
                } else throw InvalidInput("unknown type '" + t + "'");
            } catch (const InvalidInput &e) {
                emit({{"valid", false}, {"type", t}, {"violation", e.what()}});
                return invalid;
            } catch (const json::exception &e) {
                emit({{"valid", false}, {"type", t}, {"violation", e.what()}});
                return invalid;
            }
            emit({{"valid", true}, {"type", t}});
            return ok;
        }
        if (run->parsed()) {
            json_only();
            acceptance::SuiteOptions opts;
            opts.seed = g.seed;
            opts.only = only;
            auto results = acceptance::run(load_corpus_file(g.corpus_path), opts);
            auto s = acceptance::summary(results, g.seed);
            emit(s);
            return s["pass"].get<bool>() ? ok : refuted;
        }
    } catch (const Inconclusive &e) {
        emit({{"verdict", "inconclusive"}, {"detail", e.what()}});
        return inconclusive;
    } catch (const InvalidInput &e) {
        if (!g.quiet) std::cerr << "invalid input: " << e.what() << "\n";
        return invalid;
    } catch (const std::exception &e) {
        if (!g.quiet) std::cerr << "error: " << e.what() << "\n";
        return invalid;
    }
    return invalid;
}
