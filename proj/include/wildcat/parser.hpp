#pragma once

#include <string>

#include "wildcat/core.hpp"
#include "wildcat/decider.hpp"

namespace wildcat {

struct SourceText {
  std::string text;
  std::string origin = "<inline>";
};

// Parses the class-table DSL:
//
//   table   := decl* ;
//   decl    := "class" IDENT tparams? ("extends" stype)? ;
//   tparams := "<" tparam ("," tparam)* ">" ;
//   tparam  := IDENT ("extends" stype)? ;
//   stype   := IDENT targs? ;
//   targs   := "<" targ ("," targ)* ">" ;
//   targ    := "?" | "?" "extends" gtype | "?" "super" gtype | gtype ;
//   gtype   := IDENT targs? | "Null" ;
//
// `//` starts a line comment. Missing `extends` and missing bounds default
// to Object. Name resolution is deferred to validate_class_table.
ClassTable parse_class_table(const SourceText& src);

// Parses a ground type expression and desugars wildcards to intervals:
// `? extends T` -> [Null, T], `? super T` -> [T, bound], `?` -> [Null, bound],
// `T` -> [T, T]. Throws SyntaxError, UnknownClass, ArityMismatch, or
// IllFormedArgument.
TypeTerm parse_type(const SourceText& src, const SubtypeDecider& decider);

}  // namespace wildcat
