#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "wildcat/category.hpp"

using namespace wildcat;
using testutil::Fixture;

TEST_CASE("the class category has one generator per parameter, to the bound's erasure") {
  Fixture f("class List<T extends Object>\n");
  CategoryPresentation cat = build_class_category(f.table);
  CHECK(cat.objects == std::vector<std::string>{"Object", "List"});
  REQUIRE(cat.generators.size() == 1);
  CHECK(cat.generators[0].src == "List");
  CHECK(cat.generators[0].dst == "Object");

  Fixture plain("class A\nclass B extends A\n");
  CHECK(build_class_category(plain.table).generators.empty());

  Fixture fb(testutil::kFBounded);
  CategoryPresentation fcat = build_class_category(fb.table);
  REQUIRE(fcat.generators.size() == 1);
  CHECK(fcat.generators[0].src == "Comparable");
  CHECK(fcat.generators[0].dst == "Comparable");  // self-loop
}

TEST_CASE("bound heads chain through the generator graph") {
  Fixture f("class List<T>\nclass Matrix<T extends List<T>>\n");
  CategoryPresentation cat = build_class_category(f.table);
  std::set<std::pair<std::string, std::string>> arrows;
  for (const auto& g : cat.generators) arrows.insert({g.src, g.dst});
  CHECK(arrows == std::set<std::pair<std::string, std::string>>{{"List", "Object"},
                                                                {"Matrix", "List"}});
  HomSet composite = hom_set(cat, "Matrix", "Object");
  REQUIRE(composite.paths.size() == 1);
  CHECK(composite.paths[0].size() == 2);
}

TEST_CASE("hom-sets enumerate paths up to the cap") {
  Fixture plain("class A\n");
  CategoryPresentation disc = build_class_category(plain.table);
  HomSet idset = hom_set(disc, "Object", "Object");
  REQUIRE(idset.paths.size() == 1);
  CHECK(idset.paths[0].empty());  // the identity
  CHECK_FALSE(idset.cap_exceeded);

  Fixture f("class List<T>\n");
  CategoryPresentation cat = build_class_category(f.table);
  CHECK(hom_set(cat, "List", "Object").paths.size() == 1);
  CHECK(hom_set(cat, "Object", "List").paths.empty());

  Fixture fb(testutil::kFBounded);
  CategoryPresentation loop = build_class_category(fb.table);
  loop.hom_cap = 3;
  HomSet h = hom_set(loop, "Comparable", "Comparable");
  CHECK(h.cap_exceeded);  // the self-loop keeps extending
  CHECK(h.paths.size() == 4);  // id, u, u*u, u*u*u
}

TEST_CASE("relations quotient the path sets") {
  CategoryPresentation cat;
  cat.objects = {"X"};
  cat.generators.push_back({"u", "X", "X"});
  cat.relations.push_back({{"u", "u"}, {"u"}});  // idempotent loop
  cat.hom_cap = 4;
  HomSet h = hom_set(cat, "X", "X");
  CHECK(h.paths.size() == 2);  // id and u
}

TEST_CASE("representable functors map objects to hom-sets") {
  Fixture f("class A\nclass List<T>\n");
  CategoryPresentation cat = build_class_category(f.table);
  FunctorInstance rep = representable(cat, "List");
  CHECK(rep.object_map.at("List") == std::vector<std::string>{"id"});
  REQUIRE(rep.object_map.at("Object").size() == 1);
  CHECK(rep.object_map.at("A").empty());
  CHECK(functorial(cat, rep));

  Fixture plain("class A\nclass B\n");
  CategoryPresentation disc = build_class_category(plain.table);
  FunctorInstance drep = representable(disc, "A");
  CHECK(drep.object_map.at("A") == std::vector<std::string>{"id"});
  CHECK(drep.object_map.at("B").empty());
  CHECK(drep.object_map.at("Object").empty());
}

TEST_CASE("the instantiation functor maps classes to their level-1 types") {
  Fixture f(testutil::kSmall);
  FunctorInstance inst = instantiation_functor(f.dec, 1);
  CHECK(inst.object_map.at("List") ==
        std::vector<std::string>{"List<? extends A>", "List<? super A>", "List<?>",
                                 "List<A>", "List<Object>"});
  CHECK(inst.object_map.at("Object").size() == 7);  // every non-Null type
  CHECK(functorial(build_class_category(f.table), inst));

  // the generator sends an instantiation to its argument's upper endpoint
  const auto& arrow = inst.arrow_map.begin()->second;
  CHECK(arrow.at("List<? extends A>") == "A");
  CHECK(arrow.at("List<A>") == "A");
  CHECK(arrow.at("List<?>") == "Object");
  CHECK(arrow.at("List<? super A>") == "Object");

  Fixture plain("class A\n");
  CHECK(instantiation_functor(plain.dec, 1).arrow_map.empty());

  Fixture bounded("class Number\nclass Box<T extends Number>\n");
  try {
    instantiation_functor(bounded.dec, 1);
    FAIL("non-Object bound accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedBound);
  }
}

TEST_CASE("natural transformation enumeration on small instances") {
  CategoryPresentation disc;
  disc.objects = {"X"};
  FunctorInstance single;
  single.object_map["X"] = {"*"};
  auto nts = natural_transformations(disc, single, single);
  CHECK(nts.size() == 1);

  Fixture f("class List<T>\n");
  CategoryPresentation cat = build_class_category(f.table);
  FunctorInstance rep = representable(cat, "List");
  auto endo = natural_transformations(cat, rep, rep);
  CHECK(endo.size() == 1);  // hom-sets are singletons
  CHECK(natural(cat, rep, rep, endo[0]));

  // an empty component source forces the empty function, not absence
  FunctorInstance empty_src;
  empty_src.object_map["X"] = {};
  FunctorInstance tgt;
  tgt.object_map["X"] = {"a", "b"};
  CHECK(natural_transformations(disc, empty_src, tgt).size() == 1);
}

TEST_CASE("the canonical evaluation is a bijection on the small table") {
  Fixture f(testutil::kSmall);
  CategoryPresentation cat = build_class_category(f.table);
  FunctorInstance inst = instantiation_functor(f.dec, 1);
  YonedaReport r = yoneda_check(cat, inst, "List");
  CHECK(r.bijective);
  CHECK(r.nat_count == 5);
  CHECK(r.fc_count == 5);
  CHECK_FALSE(r.cap_exceeded);
}

TEST_CASE("in a discrete category the component at the object is free") {
  CategoryPresentation disc;
  disc.objects = {"X", "Y"};
  FunctorInstance f;
  f.object_map["X"] = {"a", "b", "c"};
  f.object_map["Y"] = {"d"};
  YonedaReport r = yoneda_check(disc, f, "X");
  CHECK(r.bijective);
  CHECK(r.nat_count == 3);
}

TEST_CASE("the evaluation on a representable sends the identity family to id") {
  Fixture f("class List<T>\n");
  CategoryPresentation cat = build_class_category(f.table);
  FunctorInstance rep = representable(cat, "List");
  YonedaReport r = yoneda_check(cat, rep, "List");
  CHECK(r.bijective);
  REQUIRE(!r.witnesses.empty());
  bool has_id = false;
  for (const auto& [at_id, elem] : r.witnesses)
    if (elem == "id") has_id = true;
  CHECK(has_id);
}

TEST_CASE("placeholder templates carry their bounds") {
  Fixture f(testutil::kSmall);
  CHECK(skolem_template(f.dec, "List").render() == "List<X_1 extends Object>");
  CHECK(skolem_template(f.dec, "Object").render() == "Object");
  CHECK(skolem_template(f.dec, "A").render() == "A");

  // substituting every well-formed argument reproduces the functor's set
  FunctorInstance inst = instantiation_functor(f.dec, 1);
  SkolemTemplate tpl = skolem_template(f.dec, "List");
  std::set<std::string> filled;
  for (const auto& x : f.dec.enumerate_universe(0)) {
    for (Surface s : {Surface::Invariant, Surface::Extends, Surface::Super,
                      Surface::Unbounded}) {
      ArgInterval a;
      const TypeTerm& bound = tpl.vars[0].second;
      switch (s) {
        case Surface::Invariant: a = {x, x, s}; break;
        case Surface::Extends: a = {TypeTerm::null_type(), x, s}; break;
        case Surface::Super: a = {x, bound, s}; break;
        case Surface::Unbounded: a = {TypeTerm::null_type(), bound, s}; break;
      }
      TypeTerm t = TypeTerm::cls(tpl.cls, {a});
      if (f.dec.well_formed(t)) filled.insert(f.dec.key(t));
    }
  }
  std::set<std::string> expected(inst.object_map.at("List").begin(),
                                 inst.object_map.at("List").end());
  CHECK(filled == expected);
}

TEST_CASE("categories and functors serialize to JSON") {
  Fixture f(testutil::kSmall);
  CategoryPresentation cat = build_class_category(f.table);
  CHECK(category_json(cat).find("generators") != std::string::npos);
  CHECK(functor_json(representable(cat, "List")).find("object_map") != std::string::npos);
}
