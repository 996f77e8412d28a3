#include "wildcat/adjunction.hpp"

#include "json.hpp"

namespace wildcat {

std::string erase_type(const TypeTerm& t) {
  if (t.null) throw Error(Errc::NullHasNoErasure, "NullType has no erasure");
  return t.head;
}

TypeTerm canonical_instantiation(const SubtypeDecider& decider, const std::string& cls) {
  const ValidatedClassTable& vt = decider.table();
  if (!vt.is_declared(cls)) throw Error(Errc::UnknownClass, cls);
  std::vector<ArgInterval> args;
  for (std::size_t j = 0; j < vt.arity(cls); ++j)
    args.push_back({TypeTerm::null_type(), decider.canonical_bound(cls, j), Surface::Unbounded});
  return decider.canonical_form(TypeTerm::cls(cls, std::move(args)));
}

AdjunctionReport galois_check(const SubtypeDecider& decider, int depth) {
  AdjunctionReport report;
  report.depth = depth;
  Poset classes = subclass_order(decider.table());
  std::vector<TypeTerm> universe = decider.enumerate_universe(depth);

  for (const auto& a : universe) {
    if (a.is_null()) continue;
    const std::string fa = erase_type(a);
    for (const auto& b : decider.table().class_names()) {
      ++report.checked_pairs;
      bool lhs = classes.leq(fa, b);
      bool rhs = decider.is_subtype(a, canonical_instantiation(decider, b));
      if (lhs && !rhs)
        report.violations.push_back({render_type(a), b, "ForwardFailed"});
      else if (!lhs && rhs)
        report.violations.push_back({render_type(a), b, "BackwardFailed"});
    }
  }
  return report;
}

AdjunctionReport monad_laws_check(const SubtypeDecider& decider, int depth) {
  AdjunctionReport report;
  report.depth = depth;
  Poset classes = subclass_order(decider.table());

  for (const auto& b : decider.table().class_names()) {
    ++report.checked_pairs;
    TypeTerm gb = canonical_instantiation(decider, b);
    const std::string fgb = erase_type(gb);
    if (!classes.leq(fgb, b)) report.violations.push_back({render_type(gb), b, "CounitFailed"});
    if (fgb != b) report.violations.push_back({render_type(gb), b, "CounitEqualityFailed"});
  }

  for (const auto& a : decider.enumerate_universe(depth)) {
    if (a.is_null()) continue;
    ++report.checked_pairs;
    TypeTerm gfa = canonical_instantiation(decider, erase_type(a));
    if (!decider.is_subtype(a, gfa))
      report.violations.push_back({render_type(a), erase_type(a), "UnitFailed"});
    TypeTerm gfgfa = canonical_instantiation(decider, erase_type(gfa));
    if (decider.canonical_form(gfgfa) != decider.canonical_form(gfa))
      report.violations.push_back(
          {render_type(a), erase_type(a), "ClosureIdempotenceFailed"});
  }
  return report;
}

std::string adjunction_report_json(const AdjunctionReport& r) {
  nlohmann::json j;
  j["checked_pairs"] = r.checked_pairs;
  j["depth"] = r.depth;
  j["violations"] = nlohmann::json::array();
  for (const auto& v : r.violations)
    j["violations"].push_back({{"a", v.a}, {"b", v.b}, {"side", v.side}});
  return j.dump(2);
}

}  // namespace wildcat
