#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "wildcat/adjunction.hpp"
#include "wildcat/jso.hpp"

using namespace wildcat;
using testutil::Fixture;

TEST_CASE("erasure keeps the head class only") {
  Fixture f(testutil::kSample);
  CHECK(erase_type(f.type("LinkedList<String>")) == "LinkedList");
  CHECK(erase_type(f.type("LinkedList<Integer>")) == "LinkedList");
  CHECK(erase_type(f.type("Object")) == "Object");
  CHECK(erase_type(f.type("List<? extends List<Integer>>")) == "List");
  try {
    erase_type(TypeTerm::null_type());
    FAIL("Null erased");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NullHasNoErasure);
  }
}

TEST_CASE("canonical instantiation is the wildcard form") {
  Fixture f(testutil::kSample);
  CHECK(render_type(canonical_instantiation(f.dec, "List")) == "List<?>");
  CHECK(render_type(canonical_instantiation(f.dec, "Object")) == "Object");
  CHECK(render_type(canonical_instantiation(f.dec, "Integer")) == "Integer");
  CHECK(canonical_instantiation(f.dec, "List") ==
        f.dec.canonical_form(f.type("List<? extends Object>")));

  Fixture fb(testutil::kFBounded);
  CHECK(render_type(canonical_instantiation(fb.dec, "Comparable")) == "Comparable<?>");
  CHECK(fb.dec.well_formed(canonical_instantiation(fb.dec, "Comparable")));

  try {
    canonical_instantiation(f.dec, "Missing");
    FAIL("unknown class accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownClass);
  }
}

TEST_CASE("the erasure/instantiation biconditional on concrete pairs") {
  Fixture f(testutil::kSample);
  Poset classes = subclass_order(f.table);
  auto both_sides = [&](const std::string& a, const std::string& b) {
    bool fwd = classes.leq(erase_type(f.type(a)), b);
    bool bwd = f.dec.is_subtype(f.type(a), canonical_instantiation(f.dec, b));
    CHECK(fwd == bwd);
    return fwd;
  };
  CHECK(both_sides("LinkedList<Integer>", "List"));       // both true
  CHECK(both_sides("List<?>", "List"));                   // reflexive case
  CHECK_FALSE(both_sides("List<Integer>", "String"));     // both false
  CHECK_FALSE(both_sides("Number", "Integer"));
}

TEST_CASE("the biconditional holds over whole depth-1 universes") {
  for (const char* src :
       {testutil::kSmall, testutil::kSample, testutil::kFBounded, testutil::kPair}) {
    Fixture f(src);
    AdjunctionReport r = galois_check(f.dec, 1);
    CHECK(r.passed());
    CHECK(r.checked_pairs > 0);
  }
}

TEST_CASE("unit, counit equality, and closure idempotence") {
  Fixture f(testutil::kSample);
  // unit on a concrete instance
  CHECK(f.dec.is_subtype(f.type("LinkedList<Integer>"), f.type("LinkedList<?>")));
  // counit as an equality of class names
  CHECK(erase_type(canonical_instantiation(f.dec, "List")) == "List");
  // trivial endpoint
  CHECK(render_type(canonical_instantiation(
            f.dec, erase_type(f.type("Object")))) == "Object");

  for (const char* src :
       {testutil::kSmall, testutil::kSample, testutil::kFBounded, testutil::kPair}) {
    Fixture fx(src);
    AdjunctionReport r = monad_laws_check(fx.dec, 1);
    CHECK(r.passed());
  }
}

TEST_CASE("erasure is monotone over constructed edges") {
  Fixture f(testutil::kSample);
  Poset classes = subclass_order(f.table);
  SubtypingGraph g = construct(f.dec, 1);
  const TermPoset& level = g.levels[1];
  for (const auto& [ka, ta] : level.terms)
    for (const auto& [kb, tb] : level.terms) {
      if (ta.is_null() || tb.is_null() || !level.order.leq(ka, kb)) continue;
      CHECK(classes.leq(erase_type(ta), erase_type(tb)));
    }
}

TEST_CASE("instantiation is monotone over subclass pairs") {
  Fixture f(testutil::kSample);
  Poset classes = subclass_order(f.table);
  for (const auto& b : classes.nodes())
    for (const auto& b2 : classes.nodes())
      if (classes.leq(b, b2))
        CHECK(f.dec.is_subtype(canonical_instantiation(f.dec, b),
                               canonical_instantiation(f.dec, b2)));
}

TEST_CASE("violations would be reported, and reports serialize") {
  auto table = testutil::make_table(testutil::kSmall);
  SubtypeDecider mutant(table, SubtypeDecider::Options{true});
  AdjunctionReport r = galois_check(mutant, 1);
  CHECK_FALSE(r.passed());  // the reversed rule breaks the biconditional

  SubtypeDecider straight(table);
  AdjunctionReport ok = galois_check(straight, 1);
  std::string json = adjunction_report_json(ok);
  CHECK(json.find("checked_pairs") != std::string::npos);
  std::string bad = adjunction_report_json(r);
  CHECK(bad.find("violations") != std::string::npos);
}
