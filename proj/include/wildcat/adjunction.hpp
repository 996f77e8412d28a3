#pragma once

#include <string>
#include <vector>

#include "wildcat/decider.hpp"

namespace wildcat {

// Erasure F: head class of a type, arguments discarded.
// Throws NullHasNoErasure for NullType.
std::string erase_type(const TypeTerm& t);

// Canonical instantiation G: the `?` instantiation of a class, one argument
// per parameter bounded by its effective declared bound; a non-generic class
// embeds as itself.
TypeTerm canonical_instantiation(const SubtypeDecider& decider, const std::string& cls);

struct AdjunctionViolation {
  std::string a;     // rendered type
  std::string b;     // class name
  std::string side;  // ForwardFailed, BackwardFailed, UnitFailed, CounitFailed,
                     // CounitEqualityFailed, ClosureIdempotenceFailed
};

struct AdjunctionReport {
  long checked_pairs = 0;
  std::vector<AdjunctionViolation> violations;
  int depth = 0;
  bool passed() const { return violations.empty(); }
};

// Checks F(a) <= b  <=>  a <: G(b) for every non-Null a in the depth-bounded
// universe and every class b.
AdjunctionReport galois_check(const SubtypeDecider& decider, int depth);

// Checks the closure laws the adjunction induces: a <: G(F(a)),
// F(G(b)) <= b with the strong equality F(G(b)) = b, and idempotence of
// a |-> G(F(a)) up to canonical form.
AdjunctionReport monad_laws_check(const SubtypeDecider& decider, int depth);

std::string adjunction_report_json(const AdjunctionReport& r);

}  // namespace wildcat
