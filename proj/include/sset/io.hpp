#pragma once

#include <json.hpp>
#include <string>

#include "sset/anodyne.hpp"
#include "sset/category.hpp"
#include "sset/homology.hpp"
#include "sset/homspace.hpp"
#include "sset/lifting.hpp"
#include "sset/necklace.hpp"
#include "sset/straighten.hpp"

namespace sset::io {

using json = nlohmann::json;

// Simplicial sets: {"dim", "truncated", "cells": {"0": [names], ...}, "faces": {name: [ref, ...]}, "marked": [edge names]}.
// Face and image keys are plain names unless a name repeats across dimensions, then "d:name".
json to_json(const SimplicialSet &x);
json to_json(const MarkedSimplicialSet &x);
SSetPtr read_sset(const json &j);
MarkedSimplicialSet read_marked(const json &j);

// A simplex as {"word": [ints], "cell": name}; the cell dimension is dim - |word|.
json simplex_ref(const SimplicialSet &x, const Simplex &z);
Simplex read_ref(const SimplicialSet &x, const json &j, int dim);

// Maps: {"dom", "cod", "images": {cell: ref}} with dom and cod inline.
json to_json(const SimplicialMap &f);
json to_json(const MarkedMap &f);
SimplicialMap read_map(const json &j);
// Images against given ends, for maps stored next to their dom and cod.
SimplicialMap read_map(const json &images, SSetPtr dom, SSetPtr cod);
MarkedMap read_marked_map(const json &j);

// {"beads": [bead dims], "images": [refs], "flag": [[vertex indices], ...]}
json to_json(const SimplicialSet &s, const FlaggedNecklace &n);
FlaggedNecklace read_necklace(const SimplicialSet &s, const json &j);

// {"class": name, "node": {"kind", "generator", "children", "along", "retraction", "stated"}}
json to_json(const AnodyneCertificate &c);
AnodyneCertificate read_certificate(const json &j);
json to_json(const GeneratorRef &g);
json catalog_json();

// {"objects", "morphisms": [{"name", "src", "tgt"}], "composites": [[g, f, g∘f], ...]}; objects as indices.
json to_json(const FiniteCategory &c);
FiniteCategory read_category(const json &j);
// {"base": category, "fibres": [category], "pullbacks": [{"objects": [...], "morphisms": [...]}]}
CategoryValuedFunctor read_category_functor(const json &j);
json to_json(const CategoryValuedFunctor &f);

// {"category", "values": [sset], "maps": [images per morphism]}
SSetDiagram read_diagram(const json &j);

// {"base", "objects", "homs": {"a,b": sset}, "values": {name: marked sset}, "action": [...], "bound", "bead_bound"}
json to_json(const SimplicialFunctor &g);
SimplicialFunctor read_functor(const json &j);

// {"i", "p", "top", "bottom", "marked_b", "marked_x"}; ends shared by name with i and p.
LiftingProblem read_lifting_problem(const json &j);
json to_json(const LiftingProblem &pr);

json to_json(const QComplex &q);
json to_json(const Verdict &v);
json to_json(const HomologyReport &r);
json to_json(const IntMatrix &m);

// 1-skeleton with marked edges drawn bold.
std::string to_dot(const SimplicialSet &x, const std::set<int> &marked = {});

json parse(const std::string &text);
json load(const std::string &path);

}  // namespace sset::io
