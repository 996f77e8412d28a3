#include <map>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "wildcat/core.hpp"

using namespace wildcat;
using testutil::Fixture;
using testutil::make_table;

TEST_CASE("empty table validates to implicit Object only") {
  auto vt = make_table("");
  CHECK(vt.class_names() == std::vector<std::string>{"Object"});
  CHECK(vt.arity("Object") == 0);
}

TEST_CASE("sample table validates with expected arities") {
  auto vt = make_table(testutil::kSample);
  CHECK(vt.class_names().size() == 6);
  CHECK(vt.arity("List") == 1);
  CHECK(vt.arity("LinkedList") == 1);
  CHECK(vt.arity("Integer") == 0);
  CHECK_FALSE(vt.is_f_bounded("List", 0));
}

TEST_CASE("table validation errors") {
  try {
    make_table("class A\nclass A\n");
    FAIL("duplicate accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DuplicateClass);
  }
  try {
    make_table("class A extends B\nclass B extends A\n");
    FAIL("cycle accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CyclicSubclassing);
  }
  try {
    make_table("class A extends Missing\n");
    FAIL("unknown superclass accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownClass);
  }
  try {
    make_table("class List<T>\nclass A extends List\n");
    FAIL("raw superclass accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ArityMismatch);
  }
  try {
    make_table("class Null\n");
    FAIL("reserved name accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Syntax);  // Null is a reserved word
  }
}

TEST_CASE("subclass order of the trivial table") {
  auto vt = make_table("");
  Poset p = subclass_order(vt);
  CHECK(p.size() == 1);
  CHECK(p.leq("Object", "Object"));
}

TEST_CASE("subclass order of the sample table") {
  auto vt = make_table(testutil::kSample);
  Poset p = subclass_order(vt);
  CHECK(p.leq("LinkedList", "List"));
  CHECK(p.leq("List", "Object"));
  CHECK(p.leq("LinkedList", "Object"));
  CHECK(p.leq("Integer", "Number"));
  CHECK(p.leq("String", "Object"));
  CHECK_FALSE(p.leq("List", "LinkedList"));
  CHECK_FALSE(p.leq("Integer", "String"));
}

namespace {
// Independent Floyd-Warshall closure over an explicit edge list.
std::map<std::pair<std::string, std::string>, bool> fw_closure(
    const std::vector<std::string>& nodes,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::pair<std::string, std::string>, bool> r;
  for (const auto& a : nodes)
    for (const auto& b : nodes) r[{a, b}] = (a == b);
  for (const auto& e : edges) r[e] = true;
  for (const auto& k : nodes)
    for (const auto& i : nodes)
      for (const auto& j : nodes)
        if (r[{i, k}] && r[{k, j}]) r[{i, j}] = true;
  return r;
}
}  // namespace

TEST_CASE("3-chain closure matches an independent Floyd-Warshall oracle") {
  auto vt = make_table("class C\nclass B extends C\nclass A extends B\n");
  Poset p = subclass_order(vt);
  auto oracle = fw_closure({"A", "B", "C", "Object"},
                           {{"A", "B"}, {"B", "C"}, {"C", "Object"}});
  int pairs_abc = 0;
  for (const auto& a : p.nodes())
    for (const auto& b : p.nodes()) {
      CHECK(p.leq(a, b) == oracle[{a, b}]);
      if (a != "Object" && b != "Object" && p.leq(a, b)) ++pairs_abc;
    }
  CHECK(pairs_abc == 6);  // 3 reflexive + A<=B, B<=C, A<=C
}

TEST_CASE("every subclass order is a partial order with Object as unique top") {
  for (const char* src : {testutil::kSmall, testutil::kSample, testutil::kFBounded}) {
    auto vt = make_table(src);
    Poset p = subclass_order(vt);
    CHECK(p.is_partial_order());
    for (const auto& a : p.nodes()) {
      CHECK(p.leq(a, a));
      CHECK(p.leq(a, "Object"));
      if (a != "Object") CHECK_FALSE(p.leq("Object", a));
    }
    // transitivity by enumeration
    for (const auto& a : p.nodes())
      for (const auto& b : p.nodes())
        for (const auto& c : p.nodes())
          if (p.leq(a, b) && p.leq(b, c)) CHECK(p.leq(a, c));
  }
}

TEST_CASE("type_depth counts nesting") {
  Fixture f(testutil::kSample);
  CHECK(type_depth(f.type("Object")) == 0);
  CHECK(type_depth(TypeTerm::null_type()) == 0);
  CHECK(type_depth(f.type("List<? extends Number>")) == 1);
  CHECK(type_depth(f.type("List<? extends List<Integer>>")) == 2);
}

TEST_CASE("term equality ignores surface spelling") {
  Fixture f(testutil::kSample);
  TypeTerm a = f.dec.canonical_form(f.type("List<? extends Object>"));
  TypeTerm b = f.dec.canonical_form(f.type("List<?>"));
  CHECK(a == b);
  CHECK(f.type("List<Integer>") != f.type("List<Number>"));
}

TEST_CASE("substituted superclass applies the declared arguments") {
  Fixture f(testutil::kSample);
  CHECK(render_type(substituted_superclass(f.table, f.type("LinkedList<String>"))) ==
        "List<String>");
  CHECK(render_type(substituted_superclass(f.table, f.type("LinkedList<? extends Number>"))) ==
        "List<? extends Number>");
  CHECK(render_type(substituted_superclass(f.table, f.type("Integer"))) == "Number");
}

TEST_CASE("self-referential bounds cut to a denotable effective bound") {
  Fixture f(testutil::kFBounded);
  CHECK(f.table.is_f_bounded("Comparable", 0));
  // one unfolding of the self-referential bound, endpoints cut at Object
  CHECK(render_type(f.dec.canonical_form(f.table.param_bound("Comparable", 0))) ==
        "Comparable<? extends Object>");
  // the unbounded instantiation against that bound is plain `?`
  TypeTerm q = TypeTerm::cls(
      "Comparable",
      {{TypeTerm::null_type(), f.table.param_bound("Comparable", 0), Surface::Unbounded}});
  CHECK(render_type(f.dec.canonical_form(q)) == "Comparable<?>");
}

TEST_CASE("poset dual reverses the strict pairs") {
  Poset p;
  p.add_node("a");
  p.add_node("b");
  p.add_node("c");
  p.add_leq("a", "b");
  p.add_leq("b", "c");
  p.close();
  Poset d = p.dual();
  CHECK(d.leq("c", "a"));
  CHECK(d.leq("b", "a"));
  CHECK_FALSE(d.leq("a", "b"));
  CHECK(d.dual().same_order_as(p));
}

TEST_CASE("poset restriction keeps the induced order") {
  Poset p;
  for (const char* n : {"a", "b", "c"}) p.add_node(n);
  p.add_leq("a", "b");
  p.add_leq("b", "c");
  p.close();
  Poset r = p.restricted_to({"a", "c"});
  CHECK(r.size() == 2);
  CHECK(r.leq("a", "c"));  // closure through the dropped node survives
}

TEST_CASE("a two-cycle is not a partial order") {
  Poset p;
  p.add_node("a");
  p.add_node("b");
  p.add_leq("a", "b");
  p.add_leq("b", "a");
  p.close();
  std::string why;
  CHECK_FALSE(p.is_partial_order(&why));
  CHECK(!why.empty());
}

TEST_CASE("hasse edges drop transitive pairs") {
  Poset p;
  for (const char* n : {"a", "b", "c"}) p.add_node(n);
  p.add_leq("a", "b");
  p.add_leq("b", "c");
  p.add_leq("a", "c");
  p.close();
  auto h = p.hasse_edges();
  CHECK(h.size() == 2);
}
