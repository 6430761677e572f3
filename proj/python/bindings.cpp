#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sset/anodyne.hpp"
#include "sset/corpus.hpp"
#include "sset/homology.hpp"
#include "sset/homspace.hpp"
#include "sset/io.hpp"
#include "sset/iso.hpp"
#include "sset/lifting.hpp"
#include "sset/necklace.hpp"
#include "suite.hpp"

namespace py = pybind11;
using namespace sset;
using io::json;

// Everything crosses the boundary as JSON text; the Python side decodes it.
namespace {

const Corpus &corpus() {
    static const Corpus c = load_corpus_file(default_corpus_path());
    return c;
}

int vertex(const SimplicialSet &s, const std::string &name) {
    auto c = s.find(0, name);
    if (!c) throw InvalidInput("no vertex named '" + name + "'");
    return c->index;
}

SSetPtr base(const std::string &spec) { return resolve_base(spec, &corpus()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "simplicial sets, necklaces and straightening";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<Inconclusive>(m, "Inconclusive", PyExc_RuntimeError);

    m.def("build", [](const std::string &spec) {
        const auto *e = corpus().find(spec);
        return io::to_json(MarkedSimplicialSet{base(spec), e ? e->marked : std::set<int>{}}).dump();
    });
    m.def("corpus_names", [] {
        std::vector<std::string> out;
        for (const auto &e : corpus().entries) out.push_back(e.name);
        return out;
    });
    m.def(
        "mapping_complex",
        [](const std::string &spec, const std::string &from, const std::string &to, int dim_bound, int bead_bound,
           bool allow_partial) {
            auto s = base(spec);
            auto mc = mapping_complex(s, vertex(*s, from), vertex(*s, to), {dim_bound, bead_bound, allow_partial});
            return io::to_json(*mc.space).dump();
        },
        py::arg("base"), py::arg("source"), py::arg("target"), py::arg("dim_bound") = 4, py::arg("bead_bound") = -1,
        py::arg("allow_partial") = false);
    m.def(
        "cube_oracle", [](int n, int i, int j, int bound) { return io::to_json(*cube_oracle(n, i, j, bound)).dump(); },
        py::arg("n"), py::arg("i"), py::arg("j"), py::arg("bound") = 8);
    m.def(
        "is_isomorphic", [](const std::string &x, const std::string &y) { return iso_check(*base(x), *base(y)).iso; },
        py::arg("left"), py::arg("right"));
    m.def(
        "homology",
        [](const std::string &spec, int bound, bool reduced) { return io::to_json(homology(*base(spec), bound, reduced)).dump(); },
        py::arg("base"), py::arg("bound") = 4, py::arg("reduced") = false);
    m.def(
        "q_complex",
        [](int n, int bound, const std::string &method) { return io::to_json(q_complex(n, bound, q_method(method))).dump(); },
        py::arg("n"), py::arg("bound") = 4, py::arg("method") = "necklace");
    m.def(
        "compare",
        [](const std::string &spec, const std::string &from, const std::string &to, int dim_bound) {
            auto s = base(spec);
            const auto *e = corpus().find(spec);
            ComparisonOptions opts{dim_bound, e ? e->bead_bound : -1, e && e->allow_partial, true};
            auto c = comparison_map(s, vertex(*s, from), vertex(*s, to), opts);
            auto v = is_homology_iso(c.map, dim_bound - 1);
            json j{{"verdict", v.iso ? "homology-iso" : "not-homology-iso"}, {"range", dim_bound - 1}};
            if (!v.iso) j["failing_degree"] = v.failing_degree;
            return j.dump();
        },
        py::arg("base"), py::arg("source"), py::arg("target"), py::arg("dim_bound") = 4);
    m.def(
        "check_fibration",
        [](const std::string &map_json, const std::string &kind, int bound) {
            auto f = io::read_map(io::parse(map_json));
            return io::to_json(classify_fibration(f, fibration_kind(kind), bound)).dump();
        },
        py::arg("map"), py::arg("kind"), py::arg("bound") = 4);
    m.def("check_certificate", [](const std::string &cert_json) {
        auto cert = io::read_certificate(io::parse(cert_json));
        auto v = check_certificate(cert);
        json j{{"valid", v.valid}};
        if (!v.valid) j["node"] = v.node, j["reason"] = v.reason;
        return j.dump();
    });
    m.def("validate_sset", [](const std::string &text) {
        try {
            io::read_marked(io::parse(text));
        } catch (const InvalidInput &e) {
            return json{{"valid", false}, {"violation", e.what()}}.dump();
        }
        return json{{"valid", true}}.dump();
    });
    m.def(
        "run_acceptance",
        [](std::vector<int> only, unsigned seed) {
            acceptance::SuiteOptions opts;
            opts.seed = seed;
            opts.only = std::move(only);
            py::gil_scoped_release release;
            return acceptance::summary(acceptance::run(corpus(), opts), seed).dump();
        },
        py::arg("only") = std::vector<int>{}, py::arg("seed") = 2024u);
}
