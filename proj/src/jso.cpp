#include "wildcat/jso.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace wildcat {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Copy: return "Copy";
    case Provenance::Flip: return "Flip";
    case Provenance::Merge: return "Merge";
    case Provenance::Flatten: return "Flatten";
    case Provenance::Superclass: return "Superclass";
    case Provenance::Closure: return "Closure";
  }
  return "?";
}

std::string LabeledPoset::labeled(NodeTag tag, const std::string& payload) {
  switch (tag) {
    case NodeTag::Cov: return "cov:" + payload;
    case NodeTag::Con: return "con:" + payload;
    case NodeTag::Inv: return "inv:" + payload;
    case NodeTag::Plain: return payload;
  }
  return payload;
}

std::string LabeledPoset::payload(const std::string& label) const {
  if (tag == NodeTag::Plain) return label;
  return label.substr(4);
}

LabeledPoset copy_transform(const Poset& p) {
  LabeledPoset out;
  out.tag = NodeTag::Cov;
  out.order = p.relabeled([](const std::string& l) { return "cov:" + l; });
  return out;
}

LabeledPoset flip_transform(const Poset& p) {
  LabeledPoset out;
  out.tag = NodeTag::Con;
  out.order = p.dual().relabeled([](const std::string& l) { return "con:" + l; });
  return out;
}

LabeledPoset inv_antichain(const Poset& p) {
  LabeledPoset out;
  out.tag = NodeTag::Inv;
  for (const auto& l : p.nodes())
    if (l != "Null") out.order.add_node("inv:" + l);
  out.order.close();
  return out;
}

Poset unlabel(const LabeledPoset& p) {
  return p.order.relabeled([&](const std::string& l) { return p.payload(l); });
}

namespace {

// Canonicalizes one argument interval of class `cls` at position `pos` by
// embedding it into an otherwise-unbounded instantiation.
ArgInterval canon_arg(const SubtypeDecider& dec, const std::string& cls, std::size_t pos,
                      const ArgInterval& a) {
  const std::size_t n = dec.table().arity(cls);
  std::vector<ArgInterval> args;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == pos)
      args.push_back(a);
    else
      args.push_back({TypeTerm::null_type(), dec.canonical_bound(cls, k), Surface::Unbounded});
  }
  return dec.canonical_form(TypeTerm::cls(cls, std::move(args))).args[pos];
}

// The merged order on argument intervals of one parameter position:
// covariant chain, contravariant chain, invariant antichain, the added
// invariant-into-wildcard edges, with `?` on top. Identifications happen
// through canonical keys.
struct IntervalPoset {
  Poset order;
  std::map<std::string, ArgInterval> ivals;
  ProvenanceMap prov;

  std::string add(const SubtypeDecider& dec, const std::string& cls, std::size_t pos,
                  const ArgInterval& a) {
    ArgInterval c = canon_arg(dec, cls, pos, a);
    std::string k = render_arg(c);
    if (!order.has_node(k)) {
      order.add_node(k);
      ivals[k] = c;
    }
    return k;
  }

  void edge(const std::string& a, const std::string& b, Provenance p) {
    if (a == b) return;
    order.add_leq(a, b);
    prov.emplace(std::make_pair(a, b), p);
  }
};

void check_same_base(const LabeledPoset& cov, const LabeledPoset& con,
                     const LabeledPoset& inv) {
  if (cov.tag != NodeTag::Cov || con.tag != NodeTag::Con || inv.tag != NodeTag::Inv)
    throw Error(Errc::BaseMismatch, "inputs carry wrong variance tags");
  std::set<std::string> cov_pl, con_pl, inv_pl;
  for (const auto& l : cov.order.nodes()) cov_pl.insert(cov.payload(l));
  for (const auto& l : con.order.nodes()) con_pl.insert(con.payload(l));
  for (const auto& l : inv.order.nodes()) inv_pl.insert(inv.payload(l));
  if (cov_pl != con_pl)
    throw Error(Errc::BaseMismatch, "cov and con derive from different base posets");
  std::set<std::string> nonnull = cov_pl;
  nonnull.erase("Null");
  if (inv_pl != nonnull)
    throw Error(Errc::BaseMismatch, "inv is not the non-Null antichain of the base");
}

IntervalPoset interval_poset(const SubtypeDecider& dec, const std::string& cls,
                             std::size_t pos, const LabeledPoset& cov,
                             const LabeledPoset& con, const LabeledPoset& inv,
                             const std::map<std::string, TypeTerm>& base_terms) {
  check_same_base(cov, con, inv);
  IntervalPoset ip;
  const TypeTerm& bound = dec.canonical_bound(cls, pos);
  const TypeTerm null_t = TypeTerm::null_type();

  auto term_of = [&](const std::string& payload) -> const TypeTerm& {
    auto it = base_terms.find(payload);
    if (it == base_terms.end())
      throw Error(Errc::BaseMismatch, "no term for base node " + payload);
    return it->second;
  };

  std::map<std::string, std::string> cov_key, con_key, inv_key;  // payload -> node
  for (const auto& l : cov.order.nodes()) {
    std::string x = cov.payload(l);
    if (x == "Null") continue;  // Null has no `? extends` form
    cov_key[x] = ip.add(dec, cls, pos, {null_t, term_of(x), Surface::Extends});
  }
  for (const auto& l : con.order.nodes()) {
    std::string x = con.payload(l);
    con_key[x] = ip.add(dec, cls, pos, {term_of(x), bound, Surface::Super});
  }
  for (const auto& l : inv.order.nodes()) {
    std::string x = inv.payload(l);
    const TypeTerm& t = term_of(x);
    inv_key[x] = ip.add(dec, cls, pos, {t, t, Surface::Invariant});
  }
  std::string top = ip.add(dec, cls, pos, {null_t, bound, Surface::Unbounded});

  for (auto [a, b] : cov.order.strict_pairs()) {
    std::string x = cov.payload(cov.order.label(a)), y = cov.payload(cov.order.label(b));
    if (x == "Null" || y == "Null") continue;
    ip.edge(cov_key[x], cov_key[y], Provenance::Copy);
  }
  for (auto [a, b] : con.order.strict_pairs())
    ip.edge(con_key[con.payload(con.order.label(a))],
            con_key[con.payload(con.order.label(b))], Provenance::Flip);
  for (const auto& [x, k] : inv_key) {
    ip.edge(k, cov_key[x], Provenance::Merge);
    ip.edge(k, con_key[x], Provenance::Merge);
  }
  // `?` is the top of the argument order. With a denotable bound this is
  // already the cov node of the bound; with an F-bounded bound that node
  // does not exist, so the edges are added explicitly.
  for (const auto& l : ip.order.nodes()) ip.edge(l, top, Provenance::Merge);

  ip.order.close();
  return ip;
}

struct Builder {
  const SubtypeDecider& dec;
  std::map<std::string, TypeTerm> terms;
  std::set<std::string> aux;
  std::vector<std::tuple<std::string, std::string, Provenance>> edges;
  std::size_t node_cap;

  std::string add(const TypeTerm& t, bool is_aux = false) {
    TypeTerm c = dec.canonical_form(t);
    std::string k = render_type(c);
    auto [it, inserted] = terms.emplace(k, std::move(c));
    if (inserted) {
      if (is_aux) aux.insert(k);
      if (terms.size() > node_cap)
        throw Error(Errc::ResourceLimit,
                    "construction exceeds node cap " + std::to_string(node_cap));
    } else if (!is_aux) {
      aux.erase(k);
    }
    return k;
  }

  void edge(const std::string& a, const std::string& b, Provenance p) {
    if (a != b) edges.emplace_back(a, b, p);
  }
};

// Inserts a superclass-chain target that the current endpoint universe does
// not generate, wiring it into its head's family by pointwise containment.
void embed_aux(Builder& b, const std::string& key) {
  const TypeTerm& t = b.terms.at(key);
  for (const auto& [uk, u] : b.terms) {
    if (uk == key || u.is_null() || u.head != t.head || u.args.size() != t.args.size())
      continue;
    bool t_le_u = true, u_le_t = true;
    for (std::size_t j = 0; j < t.args.size(); ++j) {
      if (t_le_u && !b.dec.contains(t.args[j], u.args[j])) t_le_u = false;
      if (u_le_t && !b.dec.contains(u.args[j], t.args[j])) u_le_t = false;
    }
    if (t_le_u) b.edge(key, uk, Provenance::Merge);
    if (u_le_t) b.edge(uk, key, Provenance::Merge);
  }
}

// Walks the superclass chain of every class-typed node, inserting targets
// the families did not generate as auxiliary nodes.
void superclass_chains(Builder& b) {
  std::vector<std::string> work;
  for (const auto& [k, t] : b.terms)
    if (!t.is_null() && t.head != kObject) work.push_back(k);
  while (!work.empty()) {
    std::string k = work.back();
    work.pop_back();
    const TypeTerm t = b.terms.at(k);
    if (t.is_null() || t.head == kObject) continue;
    TypeTerm s = substituted_superclass(b.dec.table(), t);
    bool existed = b.terms.count(b.dec.key(s)) != 0;
    std::string sk = b.add(s, /*is_aux=*/!existed);
    b.edge(k, sk, Provenance::Superclass);
    if (!existed) {
      embed_aux(b, sk);
      work.push_back(sk);
    }
  }
}

TermPoset finish(Builder& b, ProvenanceMap* prov) {
  Poset order;
  for (const auto& [k, _] : b.terms) order.add_node(k);
  for (const auto& [a, bb, p] : b.edges) {
    order.add_leq(a, bb);
    if (prov) prov->emplace(std::make_pair(a, bb), p);
  }
  order.close();
  std::string violation;
  if (!order.is_partial_order(&violation))
    throw Error(Errc::QuotientNotAntisymmetric, violation);

  // Drop auxiliary nodes; closure through them is already in place.
  std::set<std::string> keep;
  for (const auto& [k, _] : b.terms)
    if (!b.aux.count(k)) keep.insert(k);

  TermPoset out;
  out.order = b.aux.empty() ? std::move(order) : order.restricted_to(keep);
  for (const auto& k : keep) out.terms[k] = b.terms.at(k);
  if (prov)
    for (auto [i, j] : out.order.strict_pairs())
      prov->emplace(std::make_pair(out.order.label(i), out.order.label(j)),
                    Provenance::Closure);
  return out;
}

void add_frame(Builder& b) {
  b.add(TypeTerm::null_type());
  Poset classes = subclass_order(b.dec.table());
  std::vector<std::string> nongeneric;
  for (const auto& d : b.dec.table().decls())
    if (d.params.empty()) {
      b.add(TypeTerm::cls(d.name));
      nongeneric.push_back(d.name);
    }
  for (const auto& c : nongeneric)
    for (const auto& e : nongeneric)
      if (c != e && classes.leq(c, e)) b.edge(c, e, Provenance::Superclass);
}

void null_bottom(Builder& b) {
  for (const auto& [k, t] : b.terms)
    if (!t.is_null()) b.edge("Null", k, Provenance::Closure);
}

}  // namespace

TermPoset merge_transform(const SubtypeDecider& decider, const std::string& class_name,
                          const LabeledPoset& cov, const LabeledPoset& con,
                          const LabeledPoset& inv,
                          const std::map<std::string, TypeTerm>& base_terms,
                          ProvenanceMap* prov) {
  if (decider.table().arity(class_name) != 1)
    throw Error(Errc::ArityMismatch, "merge_transform expects a one-parameter class");
  IntervalPoset ip = interval_poset(decider, class_name, 0, cov, con, inv, base_terms);

  TermPoset out;
  std::map<std::string, std::string> node_of;
  for (const auto& l : ip.order.nodes()) {
    TypeTerm t = decider.canonical_form(TypeTerm::cls(class_name, {ip.ivals.at(l)}));
    std::string k = render_type(t);
    node_of[l] = k;
    out.order.add_node(k);
    out.terms[k] = std::move(t);
  }
  for (auto [a, b] : ip.order.strict_pairs()) {
    const std::string &la = ip.order.label(a), &lb = ip.order.label(b);
    out.order.add_leq(node_of[la], node_of[lb]);
    if (prov) {
      auto it = ip.prov.find({la, lb});
      prov->emplace(std::make_pair(node_of[la], node_of[lb]),
                    it != ip.prov.end() ? it->second : Provenance::Closure);
    }
  }
  out.order.close();
  return out;
}

TermPoset flatten_transform(const SubtypeDecider& decider, const TermPoset& g,
                            ProvenanceMap* prov) {
  Poset in = g.order;
  if (!in.closed()) in.close();

  TermPoset out;
  std::map<std::string, std::string> quot;  // input label -> canonical key
  for (const auto& l : in.nodes()) {
    TypeTerm c = decider.canonical_form(g.terms.at(l));
    std::string k = render_type(c);
    quot[l] = k;
    if (!out.order.has_node(k)) {
      out.order.add_node(k);
      out.terms[k] = std::move(c);
    }
  }
  for (auto [a, b] : in.strict_pairs()) {
    const std::string &ka = quot[in.label(a)], &kb = quot[in.label(b)];
    if (ka == kb) continue;
    out.order.add_leq(ka, kb);
    if (prov) prov->emplace(std::make_pair(ka, kb), Provenance::Flatten);
  }
  out.order.close();
  std::string violation;
  if (!out.order.is_partial_order(&violation))
    throw Error(Errc::QuotientNotAntisymmetric, violation);
  if (prov)
    for (auto [i, j] : out.order.strict_pairs())
      prov->emplace(std::make_pair(out.order.label(i), out.order.label(j)),
                    Provenance::Closure);
  return out;
}

TermPoset frame_level(const SubtypeDecider& decider, ProvenanceMap* prov) {
  Builder b{decider, {}, {}, {}, kDefaultNodeCap};
  add_frame(b);
  null_bottom(b);
  return finish(b, prov);
}

TermPoset jsm_step(const SubtypeDecider& decider, const TermPoset& sigma,
                   ProvenanceMap* prov, std::size_t node_cap) {
  Builder b{decider, {}, {}, {}, node_cap};
  add_frame(b);

  for (const auto& d : decider.table().decls()) {
    const std::size_t n = d.params.size();
    if (n == 0) continue;

    // Per-position merged argument orders over this level's endpoints.
    std::vector<IntervalPoset> ips;
    for (std::size_t j = 0; j < n; ++j) {
      const TypeTerm& bound = decider.canonical_bound(d.name, j);
      std::set<std::string> keep;
      for (const auto& [k, t] : sigma.terms)
        if (t.is_null() || decider.is_subtype(t, bound)) keep.insert(k);
      Poset base = sigma.order.restricted_to(keep);
      ips.push_back(interval_poset(decider, d.name, j, copy_transform(base),
                                   flip_transform(base), inv_antichain(base),
                                   sigma.terms));
    }

    // Product of the argument orders; the order is pointwise.
    std::vector<std::vector<std::string>> tuples{{}};
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<std::string>> next;
      for (const auto& t : tuples)
        for (const auto& l : ips[j].order.nodes()) {
          next.push_back(t);
          next.back().push_back(l);
        }
      tuples = std::move(next);
    }
    std::vector<std::string> keys(tuples.size());
    std::vector<std::vector<int>> tidx(tuples.size(), std::vector<int>(n));
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      std::vector<ArgInterval> args;
      for (std::size_t j = 0; j < n; ++j) {
        args.push_back(ips[j].ivals.at(tuples[i][j]));
        tidx[i][j] = ips[j].order.index_of(tuples[i][j]);
      }
      keys[i] = b.add(TypeTerm::cls(d.name, std::move(args)));
    }
    for (std::size_t i = 0; i < tuples.size(); ++i)
      for (std::size_t k = 0; k < tuples.size(); ++k) {
        if (i == k) continue;
        bool le = true;
        int diff = -1, ndiff = 0;
        for (std::size_t j = 0; j < n && le; ++j) {
          if (tidx[i][j] != tidx[k][j]) {
            ++ndiff;
            diff = static_cast<int>(j);
          }
          le = ips[j].order.leq(tidx[i][j], tidx[k][j]);
        }
        if (!le || ndiff == 0) continue;
        Provenance p = Provenance::Merge;
        if (ndiff == 1) {
          auto it = ips[static_cast<std::size_t>(diff)].prov.find(
              {tuples[i][static_cast<std::size_t>(diff)],
               tuples[k][static_cast<std::size_t>(diff)]});
          if (it != ips[static_cast<std::size_t>(diff)].prov.end()) p = it->second;
        }
        b.edge(keys[i], keys[k], p);
      }
  }

  superclass_chains(b);
  null_bottom(b);
  return finish(b, prov);
}

SubtypingGraph construct(const SubtypeDecider& decider, int depth, std::size_t node_cap) {
  SubtypingGraph g;
  g.levels.push_back(frame_level(decider, &g.provenance));
  for (auto& l : g.levels[0].order.nodes()) g.levels[0].order.level[l] = 0;
  for (int i = 0; i < depth; ++i) {
    TermPoset next = jsm_step(decider, g.levels.back(), &g.provenance, node_cap);
    const TermPoset& prev = g.levels.back();
    for (const auto& l : next.order.nodes()) {
      auto it = prev.order.level.find(l);
      next.order.level[l] = it != prev.order.level.end() ? it->second : i + 1;
    }
    g.levels.push_back(std::move(next));
  }
  return g;
}

}  // namespace wildcat
