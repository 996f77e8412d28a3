#include "wildcat/decider.hpp"

#include <algorithm>

namespace wildcat {

namespace {
constexpr int kFuel = 512;
}

SubtypeDecider::SubtypeDecider(const ValidatedClassTable& table)
    : SubtypeDecider(table, Options()) {}

SubtypeDecider::SubtypeDecider(const ValidatedClassTable& table, Options opts)
    : table_(&table), opts_(opts) {
  // Canonical effective bounds. A bound that refers back to a position not
  // yet canonicalized is compared against its raw form; stable thereafter.
  for (const auto& d : table.decls()) {
    std::vector<TypeTerm> bs;
    for (std::size_t j = 0; j < d.params.size(); ++j)
      bs.push_back(canonical_form(table.param_bound(d.name, j)));
    canonical_bounds_[d.name] = std::move(bs);
  }
}

const TypeTerm& SubtypeDecider::canonical_bound(const std::string& cls,
                                                std::size_t j) const {
  auto it = canonical_bounds_.find(cls);
  if (it != canonical_bounds_.end() && j < it->second.size()) return it->second[j];
  return table_->param_bound(cls, j);
}

TypeTerm SubtypeDecider::canonical_form(const TypeTerm& t) const {
  if (t.null) return t;
  std::vector<ArgInterval> args;
  args.reserve(t.args.size());
  for (std::size_t j = 0; j < t.args.size(); ++j) {
    ArgInterval a;
    a.lower = canonical_form(t.args[j].lower);
    a.upper = canonical_form(t.args[j].upper);
    const TypeTerm& bound = canonical_bound(t.head, j);
    if (a.lower.is_null() && a.upper == bound)
      a.surface = Surface::Unbounded;
    else if (!a.lower.is_null() && a.lower == a.upper)
      a.surface = Surface::Invariant;
    else if (a.lower.is_null())
      a.surface = Surface::Extends;
    else if (a.upper == bound)
      a.surface = Surface::Super;
    else
      a.surface = t.args[j].surface;
    args.push_back(std::move(a));
  }
  return TypeTerm::cls(t.head, std::move(args));
}

bool SubtypeDecider::is_subtype(const TypeTerm& sub, const TypeTerm& sup) const {
  return is_subtype_impl(canonical_form(sub), canonical_form(sup), kFuel);
}

bool SubtypeDecider::contains(const ArgInterval& a1, const ArgInterval& a2) const {
  ArgInterval c1{canonical_form(a1.lower), canonical_form(a1.upper), a1.surface};
  ArgInterval c2{canonical_form(a2.lower), canonical_form(a2.upper), a2.surface};
  return contains_impl(c1, c2, kFuel);
}

bool SubtypeDecider::is_subtype_canonical(const TypeTerm& sub, const TypeTerm& sup) const {
  return is_subtype_impl(sub, sup, kFuel);
}

bool SubtypeDecider::contains_canonical(const ArgInterval& a1, const ArgInterval& a2) const {
  return contains_impl(a1, a2, kFuel);
}

bool SubtypeDecider::contains_impl(const ArgInterval& a1, const ArgInterval& a2,
                                   int fuel) const {
  bool lower_ok = opts_.reverse_lower_containment
                      ? is_subtype_impl(a1.lower, a2.lower, fuel - 1)
                      : is_subtype_impl(a2.lower, a1.lower, fuel - 1);
  return lower_ok && is_subtype_impl(a1.upper, a2.upper, fuel - 1);
}

bool SubtypeDecider::is_subtype_impl(const TypeTerm& sub, const TypeTerm& sup,
                                     int fuel) const {
  if (fuel <= 0)
    throw Error(Errc::ResourceLimit, "subtyping derivation exceeds depth limit");
  if (sub == sup) return true;        // R1
  if (sub.null) return true;          // R2
  if (sup.null) return false;
  if (sup.is_object()) return true;   // R3

  bool result = false;
  if (sub.head == sup.head && sub.args.size() == sup.args.size()) {
    result = true;  // R4
    for (std::size_t j = 0; j < sub.args.size() && result; ++j)
      result = contains_impl(sub.args[j], sup.args[j], fuel - 1);
  }
  if (!result && !sub.null && sub.head != kObject) {  // R5
    TypeTerm super = canonical_form(substituted_superclass(*table_, sub));
    result = is_subtype_impl(super, sup, fuel - 1);
  }

  return result;
}

bool SubtypeDecider::well_formed(const TypeTerm& t, std::string* why) const {
  if (t.null) return true;
  if (!table_->is_declared(t.head)) {
    if (why) *why = "unknown class " + t.head;
    return false;
  }
  if (t.args.size() != table_->arity(t.head)) {
    if (why) *why = "arity mismatch for " + t.head;
    return false;
  }
  for (std::size_t j = 0; j < t.args.size(); ++j) {
    TypeTerm lower = canonical_form(t.args[j].lower);
    TypeTerm upper = canonical_form(t.args[j].upper);
    const TypeTerm& bound = canonical_bound(t.head, j);
    if (upper.is_null()) {
      if (why) *why = "Null is not allowed as an argument upper endpoint in " + render_type(t);
      return false;
    }
    if (!well_formed(lower, why)) return false;
    if (upper != bound) {  // the declared bound itself needs no re-check
      if (!well_formed(upper, why)) return false;
      if (!is_subtype(upper, bound)) {
        if (why)
          *why = render_type(upper) + " is not a subtype of bound " + render_type(bound) +
                 " in " + render_type(t);
        return false;
      }
    }
    if (!is_subtype(lower, upper)) {
      if (why)
        *why = "empty interval [" + render_type(lower) + ", " + render_type(upper) + "] in " +
               render_type(t);
      return false;
    }
  }
  return true;
}

void SubtypeDecider::require_well_formed(const TypeTerm& t) const {
  std::string why;
  if (!well_formed(t, &why)) throw Error(Errc::IllFormedArgument, why);
}

std::vector<TypeTerm> SubtypeDecider::enumerate_universe(int depth,
                                                         std::size_t cap) const {
  std::map<std::string, TypeTerm> uni;
  TypeTerm null_t = TypeTerm::null_type();
  uni[render_type(null_t)] = null_t;
  for (const auto& d : table_->decls())
    if (d.params.empty()) {
      TypeTerm t = TypeTerm::cls(d.name);
      uni[render_type(t)] = t;
    }

  for (int k = 0; k < depth; ++k) {
    std::vector<TypeTerm> endpoints;
    endpoints.reserve(uni.size());
    for (const auto& [_, t] : uni) endpoints.push_back(t);

    for (const auto& d : table_->decls()) {
      if (d.params.empty()) continue;
      std::vector<std::vector<ArgInterval>> candidates(d.params.size());
      for (std::size_t j = 0; j < d.params.size(); ++j) {
        const TypeTerm& bound = canonical_bound(d.name, j);
        candidates[j].push_back({TypeTerm::null_type(), bound, Surface::Unbounded});
        for (const auto& x : endpoints) {
          if (x.is_null() || !is_subtype(x, bound)) continue;
          candidates[j].push_back({x, x, Surface::Invariant});
          candidates[j].push_back({TypeTerm::null_type(), x, Surface::Extends});
          candidates[j].push_back({x, bound, Surface::Super});
        }
      }
      // Product over argument positions.
      std::vector<std::size_t> idx(d.params.size(), 0);
      while (true) {
        std::vector<ArgInterval> args;
        args.reserve(idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j) args.push_back(candidates[j][idx[j]]);
        TypeTerm t = canonical_form(TypeTerm::cls(d.name, std::move(args)));
        uni.emplace(render_type(t), t);
        if (uni.size() > cap)
          throw Error(Errc::ResourceLimit,
                      "universe exceeds " + std::to_string(cap) + " types");
        std::size_t j = 0;
        for (; j < idx.size(); ++j) {
          if (++idx[j] < candidates[j].size()) break;
          idx[j] = 0;
        }
        if (j == idx.size()) break;
      }
    }
  }

  std::vector<TypeTerm> out;
  out.reserve(uni.size());
  for (const auto& [_, t] : uni) out.push_back(t);
  return out;
}

}  // namespace wildcat
