#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "wildcat/laws.hpp"
#include "wildcat/parser.hpp"

using namespace wildcat;
using testutil::Fixture;

TEST_CASE("class declarations parse with defaults") {
  ClassTable t = parse_class_table({"class List<T extends Object>", "<test>"});
  REQUIRE(t.decls.size() == 1);
  CHECK(t.decls[0].name == "List");
  REQUIRE(t.decls[0].params.size() == 1);
  CHECK(t.decls[0].params[0].name == "T");
  CHECK(t.decls[0].params[0].bound.name == "Object");

  ClassTable t2 = parse_class_table({"class List<T>\nclass LinkedList<T> extends List<T>", ""});
  REQUIRE(t2.decls.size() == 2);
  REQUIRE(t2.decls[1].superclass.has_value());
  CHECK(t2.decls[1].superclass->name == "List");
  REQUIRE(t2.decls[1].superclass->args.size() == 1);
}

TEST_CASE("comments and whitespace are insignificant") {
  auto vt = testutil::make_table("// header\nclass   A \n // tail\n");
  CHECK(vt.class_names().size() == 2);
}

TEST_CASE("type expressions desugar wildcards to intervals") {
  Fixture f(testutil::kSample);

  TypeTerm t = f.type("List<? extends Object>");
  CHECK(t.head == "List");
  REQUIRE(t.args.size() == 1);
  CHECK(t.args[0].lower.is_null());
  CHECK(t.args[0].upper.head == "Object");

  TypeTerm inv = f.type("LinkedList<String>");
  CHECK(inv.args[0].lower == inv.args[0].upper);
  CHECK(inv.args[0].lower.head == "String");

  TypeTerm sup = f.type("List<? super Number>");
  CHECK(sup.args[0].lower.head == "Number");
  CHECK(sup.args[0].upper.head == "Object");

  TypeTerm unb = f.type("List<?>");
  CHECK(unb.args[0].lower.is_null());
  CHECK(unb.args[0].upper.head == "Object");
}

TEST_CASE("rendering picks the minimal surface form") {
  Fixture f(testutil::kSample);
  CHECK(render_type(f.dec.canonical_form(f.type("List<? extends Object>"))) == "List<?>");
  CHECK(render_type(f.type("LinkedList<Integer>")) == "LinkedList<Integer>");
  CHECK(render_type(TypeTerm::null_type()) == "Null");
  CHECK(render_type(f.type("List<? extends List<Integer>>")) ==
        "List<? extends List<Integer>>");
}

TEST_CASE("parse after render is the canonical identity") {
  Fixture f(testutil::kSample);
  std::mt19937 rng(7u);
  for (int i = 0; i < 300; ++i) {
    TypeTerm t = random_type(f.dec, rng, 3);
    if (t.is_null()) continue;
    TypeTerm back = f.type(render_type(t));
    CHECK(f.dec.canonical_form(back) == f.dec.canonical_form(t));
  }
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_class_table({"class A\nclass <", "<test>"});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Syntax);
    CHECK(e.line() == 2);
    CHECK(e.col() > 0);
  }
  try {
    parse_class_table({"klass A", "<test>"});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Syntax);
    CHECK(e.line() == 1);
  }
  Fixture f(testutil::kSample);
  try {
    f.type("List<");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Syntax);
  }
  try {
    f.type("List%<A>");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Syntax);
  }
}

TEST_CASE("type resolution errors") {
  Fixture f(testutil::kSample);
  try {
    f.type("Missing");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownClass);
  }
  try {
    f.type("List");  // raw use of a generic class
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ArityMismatch);
  }
  try {
    f.type("List<Integer, Integer>");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ArityMismatch);
  }
  try {
    f.type("List<Null>");  // Null cannot be an upper endpoint
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IllFormedArgument);
  }
  try {
    f.type("List<? extends Null>");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IllFormedArgument);
  }
}

TEST_CASE("bound violations are ill-formed at parse time") {
  Fixture f(
      "class Number\n"
      "class Integer extends Number\n"
      "class Box<T extends Number>\n");
  CHECK(f.type("Box<Integer>").head == "Box");
  try {
    f.type("Box<Object>");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IllFormedArgument);
  }
}

TEST_CASE("parameter bounds may reference only the parameter itself") {
  CHECK(testutil::make_table("class Comparable<T extends Comparable<T>>\n")
            .is_f_bounded("Comparable", 0));
  try {
    testutil::make_table("class Pair<K, V extends K>\n");
    FAIL("cross-parameter bound accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownClass);
  }
}
