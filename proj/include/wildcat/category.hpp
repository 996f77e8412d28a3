#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "wildcat/decider.hpp"

namespace wildcat {

struct Generator {
  std::string name;
  std::string src;
  std::string dst;
};

// A finite graph-with-relations presentation of a category. Hom-sets are
// enumerated as generator paths up to `hom_cap`, quotiented by the
// relations.
struct CategoryPresentation {
  std::vector<std::string> objects;
  std::vector<Generator> generators;
  // Each relation equates two parallel composable generator-name sequences.
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> relations;
  int hom_cap = 8;

  bool has_object(const std::string& o) const;
  const Generator& generator(const std::string& name) const;
};

// Objects are class names; each parameter of a generic class contributes a
// generator to the erasure of its bound. F-bounded parameters yield
// self-loops.
CategoryPresentation build_class_category(const ValidatedClassTable& vt);

// A path is a composable generator-name sequence; empty = identity.
using Path = std::vector<std::string>;
std::string path_token(const Path& p);

struct HomSet {
  std::vector<Path> paths;   // canonical representatives, deterministic order
  bool cap_exceeded = false;  // a path of length hom_cap could still extend
};

HomSet hom_set(const CategoryPresentation& cat, const std::string& x, const std::string& y);

// A set-valued assignment respecting composition.
struct FunctorInstance {
  std::map<std::string, std::vector<std::string>> object_map;
  std::map<std::string, std::map<std::string, std::string>> arrow_map;  // per generator
  bool cap_exceeded = false;

  std::string apply_path(const CategoryPresentation& cat, const Path& p,
                         const std::string& elem) const;
};

// Pointwise functoriality over all declared relations, plus totality of the
// arrow maps.
bool functorial(const CategoryPresentation& cat, const FunctorInstance& f,
                std::string* why = nullptr);

// hom(c, -) with post-composition as arrow action.
FunctorInstance representable(const CategoryPresentation& cat, const std::string& c);

// Maps each class to its set of canonical instantiations at the given depth
// (all non-Null types for Object); a bound-erasure generator sends an
// instantiation to the upper endpoint of the matching argument. Restricted
// to Object-bounded tables; throws UnsupportedBound otherwise.
FunctorInstance instantiation_functor(const SubtypeDecider& decider, int depth);

struct NaturalTransformation {
  std::map<std::string, std::map<std::string, std::string>> components;
};

bool natural(const CategoryPresentation& cat, const FunctorInstance& f,
             const FunctorInstance& g, const NaturalTransformation& nt);

// Exhaustive enumeration of all natural families f => g.
// Throws ResourceLimit when the candidate space exceeds `cap`.
std::vector<NaturalTransformation> natural_transformations(
    const CategoryPresentation& cat, const FunctorInstance& f, const FunctorInstance& g,
    std::size_t cap = 2000000);

struct YonedaReport {
  std::size_t nat_count = 0;
  std::size_t fc_count = 0;
  bool bijective = false;
  bool cap_exceeded = false;  // invalidates the verdict
  std::vector<std::pair<std::string, std::string>> witnesses;  // (transformation at id, element)
};

// Verifies that alpha |-> alpha_c(id_c) is a bijection
// Nat(hom(c,-), f) -> f(c).
YonedaReport yoneda_check(const CategoryPresentation& cat, const FunctorInstance& f,
                          const std::string& c);

// The fully generified form c<X_1, ..., X_n> with fresh placeholder
// variables carrying their bounds.
struct SkolemTemplate {
  std::string cls;
  std::vector<std::pair<std::string, TypeTerm>> vars;  // (name, bound)
  std::string render() const;
};

SkolemTemplate skolem_template(const SubtypeDecider& decider, const std::string& cls);

std::string category_json(const CategoryPresentation& cat);
std::string functor_json(const FunctorInstance& f);

}  // namespace wildcat
