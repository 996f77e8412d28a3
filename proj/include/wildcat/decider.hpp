#pragma once

#include <map>
#include <string>
#include <vector>

#include "wildcat/core.hpp"

namespace wildcat {

// Declarative decision procedure for ground generic subtyping with
// interval containment. Purely structural; safe to share across threads.
class SubtypeDecider {
 public:
  struct Options {
    // Test fixture hook: decides containment with the lower-endpoint
    // direction reversed. Used by mutation-sensitivity checks only.
    bool reverse_lower_containment = false;
  };

  explicit SubtypeDecider(const ValidatedClassTable& table);
  SubtypeDecider(const ValidatedClassTable& table, Options opts);

  const ValidatedClassTable& table() const { return *table_; }

  // Derivable by: (R1) sub = sup; (R2) sub = Null; (R3) sup = Object;
  // (R4) same head, pointwise containment; (R5) via the substituted
  // declared superclass.
  bool is_subtype(const TypeTerm& sub, const TypeTerm& sup) const;

  // Interval containment a1 within a2: lower endpoint contravariant,
  // upper endpoint covariant.
  bool contains(const ArgInterval& a1, const ArgInterval& a2) const;

  // Fast paths for inputs already in canonical form (skip re-normalizing).
  bool is_subtype_canonical(const TypeTerm& sub, const TypeTerm& sup) const;
  bool contains_canonical(const ArgInterval& a1, const ArgInterval& a2) const;

  // Canonical endpoints plus normalized surface tags; idempotent.
  // Mutual subtypes with equal head become structurally identical.
  TypeTerm canonical_form(const TypeTerm& t) const;

  // Rendered canonical form; the identity key used throughout.
  std::string key(const TypeTerm& t) const { return render_type(canonical_form(t)); }

  // lower <: upper and upper <: declared bound at every position,
  // recursively; Null is never an argument's upper endpoint.
  bool well_formed(const TypeTerm& t, std::string* why = nullptr) const;
  void require_well_formed(const TypeTerm& t) const;  // throws IllFormedArgument

  // Canonical effective bound of a parameter position.
  const TypeTerm& canonical_bound(const std::string& cls, std::size_t j) const;

  // All well-formed canonical types of depth <= depth, sorted by rendered
  // text. Throws ResourceLimit past `cap` types.
  std::vector<TypeTerm> enumerate_universe(int depth, std::size_t cap = 200000) const;

 private:
  bool is_subtype_impl(const TypeTerm& sub, const TypeTerm& sup, int fuel) const;
  bool contains_impl(const ArgInterval& a1, const ArgInterval& a2, int fuel) const;

  const ValidatedClassTable* table_;
  Options opts_;
  std::map<std::string, std::vector<TypeTerm>> canonical_bounds_;
};

}  // namespace wildcat
