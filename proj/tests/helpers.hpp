#pragma once

#include <string>

#include "wildcat/decider.hpp"
#include "wildcat/parser.hpp"

namespace testutil {

inline wildcat::ValidatedClassTable make_table(const std::string& src) {
  return wildcat::validate_class_table(wildcat::parse_class_table({src, "<test>"}));
}

// Keeps the table alive for the decider that points into it.
struct Fixture {
  wildcat::ValidatedClassTable table;
  wildcat::SubtypeDecider dec;

  explicit Fixture(const std::string& src) : table(make_table(src)), dec(table) {}

  wildcat::TypeTerm type(const std::string& text) const {
    return wildcat::parse_type({text, "<test>"}, dec);
  }
};

inline const char* kSmall = "class A\nclass List<T>\n";
inline const char* kSample =
    "class Number\n"
    "class Integer extends Number\n"
    "class String\n"
    "class List<T>\n"
    "class LinkedList<T> extends List<T>\n";
inline const char* kFBounded =
    "class Comparable<T extends Comparable<T>>\n"
    "class Size extends Comparable<Size>\n"
    "class Name extends Comparable<Name>\n";
inline const char* kPair = "class A\nclass Pair<K, V>\n";

}  // namespace testutil
