#include "wildcat/laws.hpp"

#include <algorithm>

namespace wildcat {

void LawResult::tally(bool ok, const std::string& what) {
  ++checked;
  if (!ok) {
    ++violations;
    if (samples.size() < 8) samples.push_back(what);
  }
}

Poset random_poset(std::mt19937& rng, int max_nodes) {
  std::uniform_int_distribution<int> sz(1, max_nodes);
  const int n = sz(rng);
  Poset p;
  for (int i = 0; i < n; ++i) p.add_node("n" + std::to_string(i));
  std::bernoulli_distribution edge(0.35);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) p.add_leq("n" + std::to_string(i), "n" + std::to_string(j));
  p.close();
  return p;
}

TypeTerm random_type(const SubtypeDecider& decider, std::mt19937& rng, int max_depth) {
  const ValidatedClassTable& vt = decider.table();
  std::vector<std::string> heads;
  for (const auto& d : vt.decls())
    if (max_depth > 0 || d.params.empty()) heads.push_back(d.name);
  std::uniform_int_distribution<std::size_t> pick(0, heads.size() - 1);
  const std::string& head = heads[pick(rng)];

  std::vector<ArgInterval> args;
  for (std::size_t j = 0; j < vt.arity(head); ++j) {
    const TypeTerm& bound = decider.canonical_bound(head, j);
    std::uniform_int_distribution<int> shape(0, 3);
    // Rejection-sample an endpoint below the bound.
    TypeTerm x;
    for (int tries = 0;; ++tries) {
      x = random_type(decider, rng, max_depth - 1);
      if (decider.is_subtype(x, bound)) break;
      if (tries > 64) {
        x = TypeTerm::null_type();
        break;
      }
    }
    switch (x.is_null() ? (shape(rng) < 2 ? 2 : 3) : shape(rng)) {
      case 0: args.push_back({x, x, Surface::Invariant}); break;
      case 1: args.push_back({TypeTerm::null_type(), x, Surface::Extends}); break;
      case 2: args.push_back({x, bound, Surface::Super}); break;
      default: args.push_back({TypeTerm::null_type(), bound, Surface::Unbounded}); break;
    }
  }
  return TypeTerm::cls(head, std::move(args));
}

TermPoset random_term_poset(const SubtypeDecider& decider, std::mt19937& rng,
                            int max_nodes, int max_depth) {
  TermPoset g;
  std::uniform_int_distribution<int> sz(1, max_nodes);
  const int n = sz(rng);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    TypeTerm t = random_type(decider, rng, max_depth);
    // Distinct labels for semantically equal nodes are the point: flatten
    // must quotient them away.
    std::string label = render_type(t) + "@" + std::to_string(i);
    g.terms[label] = t;
    g.order.add_node(label);
    labels.push_back(label);
  }
  std::bernoulli_distribution edge(0.4);
  for (const auto& a : labels)
    for (const auto& b : labels)
      if (a != b && edge(rng) && decider.is_subtype(g.terms[a], g.terms[b]))
        g.order.add_leq(a, b);
  g.order.close();
  return g;
}

LawResult check_copy_law(const SubtypeDecider* decider, int n_random, unsigned seed,
                         int depth) {
  LawResult r;
  r.law = "copy = id";
  std::mt19937 rng(seed);
  for (int i = 0; i < n_random; ++i) {
    Poset p = random_poset(rng, 8);
    r.tally(unlabel(copy_transform(p)).same_order_as(p), "random poset " + std::to_string(i));
  }
  if (decider) {
    SubtypingGraph g = construct(*decider, depth);
    for (std::size_t l = 0; l < g.levels.size(); ++l)
      r.tally(unlabel(copy_transform(g.levels[l].order)).same_order_as(g.levels[l].order),
              "construction level " + std::to_string(l));
  }
  return r;
}

LawResult check_flip_law(const SubtypeDecider* decider, int n_random, unsigned seed,
                         int depth) {
  LawResult r;
  r.law = "flip o flip = copy";
  std::mt19937 rng(seed);
  auto flip2 = [](const Poset& p) { return unlabel(flip_transform(unlabel(flip_transform(p)))); };
  for (int i = 0; i < n_random; ++i) {
    Poset p = random_poset(rng, 8);
    r.tally(flip2(p).same_order_as(unlabel(copy_transform(p))),
            "random poset " + std::to_string(i));
  }
  if (decider) {
    SubtypingGraph g = construct(*decider, depth);
    for (std::size_t l = 0; l < g.levels.size(); ++l)
      r.tally(flip2(g.levels[l].order).same_order_as(g.levels[l].order),
              "construction level " + std::to_string(l));
  }
  return r;
}

namespace {
bool term_posets_equal(const TermPoset& a, const TermPoset& b) {
  if (!a.order.same_order_as(b.order)) return false;
  for (const auto& [k, t] : a.terms) {
    auto it = b.terms.find(k);
    if (it == b.terms.end() || !(it->second == t)) return false;
  }
  return true;
}
}  // namespace

LawResult check_flatten_law(const SubtypeDecider& decider, int n_random, unsigned seed,
                            int depth) {
  LawResult r;
  r.law = "flatten o flatten = flatten";
  std::mt19937 rng(seed);
  for (int i = 0; i < n_random; ++i) {
    TermPoset g = random_term_poset(decider, rng, 8);
    TermPoset once = flatten_transform(decider, g);
    TermPoset twice = flatten_transform(decider, once);
    r.tally(term_posets_equal(once, twice), "random term poset " + std::to_string(i));
  }
  SubtypingGraph g = construct(decider, depth);
  for (std::size_t l = 0; l < g.levels.size(); ++l) {
    TermPoset once = flatten_transform(decider, g.levels[l]);
    r.tally(term_posets_equal(once, g.levels[l]) &&
                term_posets_equal(flatten_transform(decider, once), once),
            "construction level " + std::to_string(l));
  }
  return r;
}

OracleEquivalence check_oracle_equivalence(const SubtypeDecider& construction,
                                           const SubtypeDecider& oracle, int depth,
                                           std::size_t node_cap) {
  OracleEquivalence r;
  r.depth = depth;
  SubtypingGraph g = construct(construction, depth, node_cap);
  const TermPoset& level = g.levels.back();

  std::map<std::string, TypeTerm> expected;
  for (const auto& t : oracle.enumerate_universe(depth, node_cap))
    expected[oracle.key(t)] = oracle.canonical_form(t);

  r.node_count = static_cast<long>(level.terms.size());
  for (const auto& [k, _] : expected)
    if (!level.terms.count(k)) {
      ++r.missing_nodes;
      if (r.samples.size() < 8) r.samples.push_back("missing node " + k);
    }
  for (const auto& [k, _] : level.terms)
    if (!expected.count(k)) {
      ++r.extra_nodes;
      if (r.samples.size() < 8) r.samples.push_back("extra node " + k);
    }

  std::vector<std::pair<int, const TypeTerm*>> idx;
  std::vector<const std::string*> keys;
  idx.reserve(level.terms.size());
  for (const auto& [k, t] : level.terms) {
    idx.emplace_back(level.order.index_of(k), &t);
    keys.push_back(&k);
  }
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (a == b) continue;
      const std::string& ka = *keys[a];
      const std::string& kb = *keys[b];
      const bool in_graph = level.order.leq(idx[a].first, idx[b].first);
      const bool by_oracle = oracle.is_subtype_canonical(*idx[a].second, *idx[b].second);
      if (in_graph && !by_oracle) {
        ++r.extra_edges;
        if (r.samples.size() < 8) r.samples.push_back("extra edge " + ka + " <= " + kb);
      } else if (!in_graph && by_oracle) {
        ++r.missing_edges;
        if (r.samples.size() < 8) r.samples.push_back("missing edge " + ka + " <= " + kb);
      }
    }
  return r;
}

}  // namespace wildcat
