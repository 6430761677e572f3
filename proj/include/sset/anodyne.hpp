#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sset/constructions.hpp"
#include "sset/lifting.hpp"

namespace sset {

// Weakly saturated classes. cartesian_k replaces J^♭ -> (J, 0->1) by K^♭ -> K^♯ among the generators.
enum class AnodyneClass { inner, left, right, marked_right, cartesian, cartesian_k };
std::string to_string(AnodyneClass c);
AnodyneClass anodyne_class(const std::string &name);
// Whether every generator of a lies in b.
bool contained_in(AnodyneClass a, AnodyneClass b);
bool closed_under_products(AnodyneClass c);
bool is_marked_class(AnodyneClass c);

struct GeneratorFamily {
    std::string name;
    std::string description;
    int arity = 0;          // integer parameters
    bool takes_map = false;  // a marked injection C -> D as extra argument
};

struct Catalog {
    std::string name;
    AnodyneClass cls;
    std::vector<GeneratorFamily> families;
};

const std::vector<Catalog> &catalogs();
const Catalog &catalog(const std::string &name);

struct GeneratorRef {
    std::string catalog;
    std::string family;
    std::vector<int> params;
    std::optional<MarkedMap> arg;
};
MarkedMap instantiate(const GeneratorRef &g);
// Instances of all parameter-only families with n ≤ max_n.
std::vector<GeneratorRef> instances(const Catalog &c, int max_n);

// (A ⨯ D) ∪_{A ⨯ C} (B ⨯ C) -> B ⨯ D as a subcomplex of the product.
struct PushoutProduct {
    MarkedMap map;
    Pullback product;         // B ⨯ D
    SimplicialMap inclusion;  // domain -> B ⨯ D, equal to map.map
};
PushoutProduct pushout_product(const MarkedMap &f, const MarkedMap &g);

// Y -> Y ⊔_A B for i: A -> B and g: A -> Y, markings pushed forward.
struct MarkedPushout {
    MarkedMap map;
    SimplicialMap leg;  // B -> Y ⊔_A B
};
MarkedPushout marked_pushout(const MarkedMap &i, const MarkedMap &g);

struct Certificate {
    enum class Kind { generator, pushout, composite, retract, pushout_product, coproduct };
    Kind kind = Kind::generator;
    GeneratorRef generator;
    std::vector<Certificate> children;
    // pushout: attaching map dom(child) -> Y; pushout_product: the cofibration
    std::optional<MarkedMap> along;
    // retract: s_A, r_A, s_B, r_B
    std::vector<MarkedMap> retraction;
    // required for retract nodes; optional elsewhere
    std::optional<MarkedMap> stated;
};
std::string to_string(Certificate::Kind k);
Certificate::Kind certificate_kind(const std::string &name);

struct AnodyneCertificate {
    AnodyneClass cls = AnodyneClass::inner;
    Certificate root;
};

struct CertificateVerdict {
    bool valid = false;
    std::string node;  // path of the first failing node, e.g. "root/1/0"
    std::string reason;
    std::optional<MarkedMap> map;  // reconstructed root map when valid
};
CertificateVerdict check_certificate(const AnodyneCertificate &cert, const MarkedMap &claimed);
CertificateVerdict check_certificate(const AnodyneCertificate &cert);

// Isomorphism of arrows between monomorphisms, preserving markings on both ends.
Report arrow_iso(const MarkedMap &a, const MarkedMap &b);

struct DeformationRetract {
    MarkedMap i;  // A -> B
    MarkedMap r;  // B -> A
    MarkedMap h;  // (Δ^1)^♯ ⨯ B -> B
};
// (Δ^1)^♯ ⨯ B as used for homotopies.
MarkedSimplicialSet cylinder(const MarkedSimplicialSet &b);
Report validate(const DeformationRetract &d);
AnodyneCertificate retract_from_deformation(const DeformationRetract &d);
AnodyneCertificate pp_certificate(const AnodyneCertificate &a, const MarkedMap &c);

struct TestFibration {
    std::string name;
    MarkedMap p;  // E -> S with S fully marked
};
// Fibrations with the right lifting property against the class, used as refutation witnesses.
std::vector<TestFibration> test_fibrations(AnodyneClass c, int bound);

struct Refutation {
    bool refuted = false;
    std::string test;
    std::optional<LiftingProblem> square;
    std::string detail;
};
Refutation rlp_refute(const MarkedMap &f, AnodyneClass c, int bound);

// K = Δ^3 / (Δ^{02}, Δ^{13}) -> J with [02] ↦ 1 and [13] ↦ 0.
SimplicialMap k_to_j(int truncation);
// J^♭ -> J^♯ as the pushout of K^♭ -> K^♯ along K -> J.
AnodyneCertificate j_sharp_certificate(int truncation);
MarkedMap j_flat_to_sharp(int truncation);

}  // namespace sset
