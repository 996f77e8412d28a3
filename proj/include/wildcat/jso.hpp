#pragma once

#include <map>
#include <string>
#include <vector>

#include "wildcat/core.hpp"
#include "wildcat/decider.hpp"

namespace wildcat {

enum class NodeTag { Cov, Con, Inv, Plain };

// A poset whose nodes carry a uniform variance tag over a payload label.
// Node labels are "<prefix>:<payload>".
struct LabeledPoset {
  Poset order;
  NodeTag tag = NodeTag::Plain;

  static std::string labeled(NodeTag tag, const std::string& payload);
  std::string payload(const std::string& label) const;
};

enum class Provenance { Copy, Flip, Merge, Flatten, Superclass, Closure };
const char* provenance_name(Provenance p);

using ProvenanceMap = std::map<std::pair<std::string, std::string>, Provenance>;

// A poset of ground types; labels are canonical rendered text.
struct TermPoset {
  Poset order;
  std::map<std::string, TypeTerm> terms;
};

// Order-isomorphic copy; node x relabeled (Cov, x), i.e. `? extends x`.
LabeledPoset copy_transform(const Poset& p);

// Order-dual copy; node x relabeled (Con, x), i.e. `? super x`.
LabeledPoset flip_transform(const Poset& p);

// Discrete antichain of Inv-labeled non-Null nodes.
LabeledPoset inv_antichain(const Poset& p);

// Strips labels back to payloads, keeping the stored orientation.
Poset unlabel(const LabeledPoset& p);

// Combines the three labeled views of one base poset of argument endpoints
// into the poset of instantiations of a one-parameter class. Identifications
// go through canonical_form; the added edges are C<x> <= C<? extends x> and
// C<x> <= C<? super x>. Throws BaseMismatch if the inputs disagree on the
// base, ArityMismatch for classes of arity != 1.
TermPoset merge_transform(const SubtypeDecider& decider, const std::string& class_name,
                          const LabeledPoset& cov, const LabeledPoset& con,
                          const LabeledPoset& inv,
                          const std::map<std::string, TypeTerm>& base_terms,
                          ProvenanceMap* prov = nullptr);

// Quotient by canonical_form, union edge sets, transitive closure.
// Idempotent. Throws QuotientNotAntisymmetric when the quotient has a
// mutual-subtype pair with distinct canonical forms.
TermPoset flatten_transform(const SubtypeDecider& decider, const TermPoset& g,
                            ProvenanceMap* prov = nullptr);

inline constexpr std::size_t kDefaultNodeCap = 20000;

// One construction step: frame of non-generic types, per-class merges over
// the current level's endpoints, superclass edges, then flatten.
TermPoset jsm_step(const SubtypeDecider& decider, const TermPoset& sigma,
                   ProvenanceMap* prov = nullptr, std::size_t node_cap = kDefaultNodeCap);

// Level 0: Null, the non-generic class types, and the subclassing edges.
TermPoset frame_level(const SubtypeDecider& decider, ProvenanceMap* prov = nullptr);

struct SubtypingGraph {
  std::vector<TermPoset> levels;  // Sigma_0 .. Sigma_depth
  ProvenanceMap provenance;
};

// Iterates jsm_step; records per-edge provenance and per-node levels.
// Throws ResourceLimit past node_cap nodes.
SubtypingGraph construct(const SubtypeDecider& decider, int depth,
                         std::size_t node_cap = kDefaultNodeCap);

}  // namespace wildcat
