#pragma once

#include <random>
#include <string>
#include <vector>

#include "wildcat/decider.hpp"
#include "wildcat/jso.hpp"

namespace wildcat {

struct LawResult {
  std::string law;
  long checked = 0;
  long violations = 0;
  std::vector<std::string> samples;  // first few violation descriptions
  bool passed() const { return violations == 0; }

  void tally(bool ok, const std::string& what);
};

// Random poset on at most max_nodes nodes (closure of a random DAG).
Poset random_poset(std::mt19937& rng, int max_nodes);

// Random poset of well-formed types over the decider's table, possibly with
// non-canonical duplicate nodes; its order is a subset of the subtype
// relation, so the flatten quotient stays antisymmetric.
TermPoset random_term_poset(const SubtypeDecider& decider, std::mt19937& rng,
                            int max_nodes, int max_depth = 2);

// Random well-formed type of depth <= max_depth.
TypeTerm random_type(const SubtypeDecider& decider, std::mt19937& rng, int max_depth);

// copy = id and unlabel(flip(flip(p))) = p on n_random posets; when a
// decider is given, also on every level of its depth-2 construction.
LawResult check_copy_law(const SubtypeDecider* decider, int n_random, unsigned seed,
                         int depth = 2);
LawResult check_flip_law(const SubtypeDecider* decider, int n_random, unsigned seed,
                         int depth = 2);

// flatten(flatten(g)) = flatten(g) on n_random term posets and on all
// construction levels.
LawResult check_flatten_law(const SubtypeDecider& decider, int n_random, unsigned seed,
                            int depth = 2);

struct OracleEquivalence {
  int depth = 0;
  long node_count = 0;
  long missing_nodes = 0;  // in the enumerated universe but not constructed
  long extra_nodes = 0;    // constructed but not in the universe
  long missing_edges = 0;  // decider says subtype, graph lacks the edge
  long extra_edges = 0;    // graph has the edge, decider disagrees
  std::vector<std::string> samples;
  bool passed() const {
    return missing_nodes + extra_nodes + missing_edges + extra_edges == 0;
  }
};

// Compares the operadically constructed level against the declarative
// decider: node set vs. the enumerated universe, edge set vs. is_subtype,
// both directions. `oracle` may differ from `construction` (mutation tests).
OracleEquivalence check_oracle_equivalence(const SubtypeDecider& construction,
                                           const SubtypeDecider& oracle, int depth,
                                           std::size_t node_cap = kDefaultNodeCap);

}  // namespace wildcat
