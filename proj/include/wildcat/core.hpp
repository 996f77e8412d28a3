#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wildcat {

inline const std::string kObject = "Object";

enum class Errc {
  DuplicateClass,
  UnknownClass,
  ArityMismatch,
  CyclicSubclassing,
  Syntax,
  IllFormedArgument,
  NullHasNoErasure,
  BaseMismatch,
  QuotientNotAntisymmetric,
  ResourceLimit,
  UnsupportedBound,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg, int line = 0, int col = 0);
  Errc code() const { return code_; }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  Errc code_;
  int line_;
  int col_;
};

// Surface syntax an argument was written in. Equality of terms ignores it;
// rendering is driven by it.
enum class Surface { Invariant, Extends, Super, Unbounded };

struct ArgInterval;

// A ground type: NullType, or a class applied to interval arguments.
// A non-generic class is a ClassType with empty args.
struct TypeTerm {
  bool null = false;
  std::string head;
  std::vector<ArgInterval> args;

  static TypeTerm null_type();
  static TypeTerm cls(std::string name, std::vector<ArgInterval> args = {});

  bool is_null() const { return null; }
  bool is_object() const;
};

// A type argument as a nominal type interval [lower, upper]. Invariant
// arguments are degenerate intervals.
struct ArgInterval {
  TypeTerm lower;
  TypeTerm upper;
  Surface surface = Surface::Invariant;
};

bool operator==(const TypeTerm& a, const TypeTerm& b);
inline bool operator!=(const TypeTerm& a, const TypeTerm& b) { return !(a == b); }
bool operator==(const ArgInterval& a, const ArgInterval& b);
inline bool operator!=(const ArgInterval& a, const ArgInterval& b) { return !(a == b); }

// 0 for NullType and argument-free class types, else 1 + max endpoint depth.
int type_depth(const TypeTerm& t);

std::string render_type(const TypeTerm& t);
std::string render_arg(const ArgInterval& a);

// ---------------------------------------------------------------------------
// Class tables. Superclass references and parameter bounds are templates:
// type shapes whose leaves may be declared parameter names.

struct TemplateArg;

struct TypeTemplate {
  enum class Kind { Null, Param, Class };
  Kind kind = Kind::Class;
  std::string name;  // class name or parameter name
  std::vector<TemplateArg> args;

  static TypeTemplate object();
  bool mentions_param(const std::string& p) const;
};

struct TemplateArg {
  Surface surface = Surface::Invariant;
  std::optional<TypeTemplate> type;  // absent iff Unbounded
};

struct TypeParam {
  std::string name;
  TypeTemplate bound = TypeTemplate::object();
  bool f_bounded = false;
};

struct ClassDecl {
  std::string name;
  std::vector<TypeParam> params;
  std::optional<TypeTemplate> superclass;  // nullopt only for Object
};

struct ClassTable {
  std::vector<ClassDecl> decls;
  std::string origin = "<inline>";
};

// A class table that passed validation: names resolved, arities checked,
// extends edges acyclic, effective parameter bounds computed.
class ValidatedClassTable {
 public:
  const std::vector<ClassDecl>& decls() const { return decls_; }
  const std::string& origin() const { return origin_; }

  bool is_declared(const std::string& name) const;
  const ClassDecl& decl(const std::string& name) const;
  std::size_t arity(const std::string& name) const;
  bool is_generic(const std::string& name) const { return arity(name) > 0; }
  bool is_f_bounded(const std::string& cls, std::size_t j) const;
  bool has_f_bounded_decl() const;

  // Effective declared bound of parameter j of cls, as a ground term.
  // For F-bounded parameters this is the bound's erasure instantiated with
  // `?` once, cutting further recursion at Object.
  const TypeTerm& param_bound(const std::string& cls, std::size_t j) const;

  // Declaration order, implicit Object first.
  std::vector<std::string> class_names() const;

 private:
  friend ValidatedClassTable validate_class_table(const ClassTable& table);
  std::vector<ClassDecl> decls_;  // Object prepended
  std::map<std::string, std::size_t> index_;
  std::map<std::string, std::vector<TypeTerm>> bounds_;
  std::string origin_;
};

// Errors: DuplicateClass, UnknownClass, ArityMismatch, CyclicSubclassing.
ValidatedClassTable validate_class_table(const ClassTable& table);

enum class Endpoint { Lower, Upper };

// Substitution of ground intervals for parameter names in a template.
// A bare parameter at argument position becomes the full interval; a
// parameter inside a wildcard bound contributes the matching endpoint.
ArgInterval subst_template_arg(const ValidatedClassTable& vt,
                               const std::string& target_cls, std::size_t pos,
                               const TemplateArg& ta,
                               const std::map<std::string, ArgInterval>& env);
TypeTerm subst_template_type(const ValidatedClassTable& vt, const TypeTemplate& t,
                             const std::map<std::string, ArgInterval>& env,
                             Endpoint ep);

// Declared superclass of t's head with t's arguments substituted.
// Precondition: t is a class type other than Object.
TypeTerm substituted_superclass(const ValidatedClassTable& vt, const TypeTerm& t);

// ---------------------------------------------------------------------------
// Finite partial orders over labeled nodes. The closure matrix is the stored
// relation; Hasse edges are derived.

class Poset {
 public:
  int add_node(const std::string& label);  // idempotent per label
  bool has_node(const std::string& label) const;
  int index_of(const std::string& label) const;  // -1 when absent
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& nodes() const { return labels_; }

  void add_leq(const std::string& a, const std::string& b);
  void add_leq(int a, int b);
  // Reflexive-transitive closure of everything added so far.
  void close();
  bool closed() const { return closed_; }

  bool leq(const std::string& a, const std::string& b) const;
  bool leq(int a, int b) const;

  std::vector<std::pair<int, int>> strict_pairs() const;
  std::vector<std::pair<int, int>> hasse_edges() const;

  // Antisymmetry by enumeration; reflexivity/transitivity hold by closure.
  bool is_partial_order(std::string* violation = nullptr) const;

  // Same label set and same closure.
  bool same_order_as(const Poset& other) const;

  Poset restricted_to(const std::set<std::string>& keep) const;
  Poset dual() const;
  Poset relabeled(const std::function<std::string(const std::string&)>& f) const;

  std::map<std::string, int> level;  // optional construction stage per node

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::vector<std::vector<std::uint64_t>> leq_;  // bit-packed rows
  std::size_t words_ = 0;
  std::vector<std::pair<int, int>> edges_;
  bool closed_ = false;
};

// Reflexive-transitive closure of the extends edges over class names.
// Object is the unique maximum.
Poset subclass_order(const ValidatedClassTable& vt);

}  // namespace wildcat
