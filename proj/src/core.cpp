#include "wildcat/core.hpp"

#include <algorithm>
#include <sstream>

namespace wildcat {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DuplicateClass: return "DuplicateClass";
    case Errc::UnknownClass: return "UnknownClass";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::CyclicSubclassing: return "CyclicSubclassing";
    case Errc::Syntax: return "SyntaxError";
    case Errc::IllFormedArgument: return "IllFormedArgument";
    case Errc::NullHasNoErasure: return "NullHasNoErasure";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::QuotientNotAntisymmetric: return "QuotientNotAntisymmetric";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::UnsupportedBound: return "UnsupportedBound";
  }
  return "Error";
}

Error::Error(Errc code, const std::string& msg, int line, int col)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
      code_(code),
      line_(line),
      col_(col) {}

TypeTerm TypeTerm::null_type() {
  TypeTerm t;
  t.null = true;
  return t;
}

TypeTerm TypeTerm::cls(std::string name, std::vector<ArgInterval> args) {
  TypeTerm t;
  t.head = std::move(name);
  t.args = std::move(args);
  return t;
}

bool TypeTerm::is_object() const { return !null && head == kObject && args.empty(); }

bool operator==(const TypeTerm& a, const TypeTerm& b) {
  if (a.null != b.null) return false;
  if (a.null) return true;
  if (a.head != b.head || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (a.args[i] != b.args[i]) return false;
  return true;
}

bool operator==(const ArgInterval& a, const ArgInterval& b) {
  return a.lower == b.lower && a.upper == b.upper;
}

int type_depth(const TypeTerm& t) {
  if (t.null || t.args.empty()) return 0;
  int m = 0;
  for (const auto& a : t.args) {
    m = std::max(m, type_depth(a.lower));
    m = std::max(m, type_depth(a.upper));
  }
  return 1 + m;
}

std::string render_arg(const ArgInterval& a) {
  switch (a.surface) {
    case Surface::Unbounded: return "?";
    case Surface::Extends: return "? extends " + render_type(a.upper);
    case Surface::Super: return "? super " + render_type(a.lower);
    case Surface::Invariant: return render_type(a.lower);
  }
  return "?";
}

std::string render_type(const TypeTerm& t) {
  if (t.null) return "Null";
  if (t.args.empty()) return t.head;
  std::ostringstream os;
  os << t.head << '<';
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) os << ", ";
    os << render_arg(t.args[i]);
  }
  os << '>';
  return os.str();
}

TypeTemplate TypeTemplate::object() {
  TypeTemplate t;
  t.kind = Kind::Class;
  t.name = kObject;
  return t;
}

bool TypeTemplate::mentions_param(const std::string& p) const {
  if (kind == Kind::Param) return name == p;
  for (const auto& a : args)
    if (a.type && a.type->mentions_param(p)) return true;
  return false;
}

// --------------------------------------------------------------------------
// Validation.

bool ValidatedClassTable::is_declared(const std::string& name) const {
  return index_.count(name) != 0;
}

const ClassDecl& ValidatedClassTable::decl(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error(Errc::UnknownClass, name);
  return decls_[it->second];
}

std::size_t ValidatedClassTable::arity(const std::string& name) const {
  return decl(name).params.size();
}

bool ValidatedClassTable::is_f_bounded(const std::string& cls, std::size_t j) const {
  return decl(cls).params.at(j).f_bounded;
}

bool ValidatedClassTable::has_f_bounded_decl() const {
  for (const auto& d : decls_)
    for (const auto& p : d.params)
      if (p.f_bounded) return true;
  return false;
}

const TypeTerm& ValidatedClassTable::param_bound(const std::string& cls,
                                                 std::size_t j) const {
  auto it = bounds_.find(cls);
  if (it == bounds_.end()) throw Error(Errc::UnknownClass, cls);
  return it->second.at(j);
}

std::vector<std::string> ValidatedClassTable::class_names() const {
  std::vector<std::string> out;
  out.reserve(decls_.size());
  for (const auto& d : decls_) out.push_back(d.name);
  return out;
}

namespace {

// Resolves IDENT leaves of a template: parameter names (from `params`) become
// Param leaves, "Null" becomes a Null leaf, everything else must be a
// declared class with the right arity.
void resolve_template(TypeTemplate& t, const std::set<std::string>& params,
                      const std::map<std::string, std::size_t>& arities) {
  if (t.kind != TypeTemplate::Kind::Class) return;
  if (t.name == "Null") {
    if (!t.args.empty()) throw Error(Errc::ArityMismatch, "Null takes no arguments");
    t.kind = TypeTemplate::Kind::Null;
    return;
  }
  if (params.count(t.name)) {
    if (!t.args.empty())
      throw Error(Errc::ArityMismatch, "type parameter " + t.name + " used with arguments");
    t.kind = TypeTemplate::Kind::Param;
    return;
  }
  auto it = arities.find(t.name);
  if (it == arities.end()) throw Error(Errc::UnknownClass, t.name);
  if (t.args.size() != it->second)
    throw Error(Errc::ArityMismatch, t.name + " expects " + std::to_string(it->second) +
                                         " arguments, got " + std::to_string(t.args.size()));
  for (auto& a : t.args)
    if (a.type) resolve_template(*a.type, params, arities);
}

struct BoundComputer {
  const ValidatedClassTable& vt;
  std::map<std::string, std::vector<TypeTerm>>& bounds;
  std::set<std::string> in_progress;  // (class,param) keys

  TypeTerm bound_of(const std::string& cls, std::size_t j) {
    const std::string key = cls + "#" + std::to_string(j);
    const TypeParam& p = vt.decl(cls).params[j];
    if (in_progress.count(key)) return TypeTerm::cls(kObject);
    in_progress.insert(key);
    TypeTerm result;
    if (p.f_bounded) {
      // One unfolding of the bound's erasure with `?`, cut at Object.
      const std::string& b = p.bound.name;
      std::vector<ArgInterval> args;
      const auto& bparams = vt.decl(b).params;
      for (std::size_t k = 0; k < bparams.size(); ++k) {
        TypeTerm upper = bparams[k].f_bounded ? TypeTerm::cls(kObject) : bound_of(b, k);
        args.push_back(ArgInterval{TypeTerm::null_type(), std::move(upper), Surface::Unbounded});
      }
      result = TypeTerm::cls(b, std::move(args));
    } else {
      result = ground(p.bound);
    }
    in_progress.erase(key);
    return result;
  }

  TypeTerm ground(const TypeTemplate& t) {
    if (t.kind == TypeTemplate::Kind::Null) return TypeTerm::null_type();
    if (t.kind == TypeTemplate::Kind::Param)
      throw Error(Errc::UnknownClass, "unexpected parameter " + t.name + " in ground position");
    std::vector<ArgInterval> args;
    for (std::size_t j = 0; j < t.args.size(); ++j) {
      const TemplateArg& a = t.args[j];
      switch (a.surface) {
        case Surface::Unbounded:
          args.push_back({TypeTerm::null_type(), bound_of(t.name, j), Surface::Unbounded});
          break;
        case Surface::Extends:
          args.push_back({TypeTerm::null_type(), ground(*a.type), Surface::Extends});
          break;
        case Surface::Super:
          args.push_back({ground(*a.type), bound_of(t.name, j), Surface::Super});
          break;
        case Surface::Invariant: {
          TypeTerm g = ground(*a.type);
          args.push_back({g, g, Surface::Invariant});
          break;
        }
      }
    }
    return TypeTerm::cls(t.name, std::move(args));
  }
};

}  // namespace

ValidatedClassTable validate_class_table(const ClassTable& table) {
  ValidatedClassTable vt;
  vt.origin_ = table.origin;
  ClassDecl object;
  object.name = kObject;
  vt.decls_.push_back(object);
  for (const auto& d : table.decls) vt.decls_.push_back(d);

  std::map<std::string, std::size_t> arities;
  for (std::size_t i = 0; i < vt.decls_.size(); ++i) {
    const auto& d = vt.decls_[i];
    if (d.name == "Null") throw Error(Errc::DuplicateClass, "Null is a reserved name");
    if (vt.index_.count(d.name))
      throw Error(Errc::DuplicateClass,
                  d.name == kObject ? "Object is implicitly declared" : d.name);
    vt.index_[d.name] = i;
    arities[d.name] = d.params.size();
  }

  // Resolve names and arities; flag F-bounded parameters.
  for (auto& d : vt.decls_) {
    std::set<std::string> param_names;
    for (const auto& p : d.params) {
      if (!param_names.insert(p.name).second)
        throw Error(Errc::DuplicateClass, "duplicate type parameter " + p.name + " in " + d.name);
    }
    for (auto& p : d.params) {
      // A bound may mention only the parameter being declared.
      resolve_template(p.bound, {p.name}, arities);
      if (p.bound.kind != TypeTemplate::Kind::Class)
        throw Error(Errc::UnknownClass, "bound of " + p.name + " must be a class type");
      p.f_bounded = p.bound.mentions_param(p.name);
    }
    if (d.superclass) {
      resolve_template(*d.superclass, param_names, arities);
      if (d.superclass->kind != TypeTemplate::Kind::Class)
        throw Error(Errc::UnknownClass, "superclass of " + d.name + " must be a class type");
    }
  }

  // Acyclicity of extends edges.
  std::map<std::string, int> state;  // 0 new, 1 active, 2 done
  std::function<void(const std::string&)> visit = [&](const std::string& c) {
    int& s = state[c];
    if (s == 1) throw Error(Errc::CyclicSubclassing, "cycle through " + c);
    if (s == 2) return;
    s = 1;
    const auto& d = vt.decls_[vt.index_.at(c)];
    if (d.superclass) visit(d.superclass->name);
    s = 2;
  };
  for (const auto& d : vt.decls_) visit(d.name);

  // Effective parameter bounds.
  BoundComputer bc{vt, vt.bounds_, {}};
  for (const auto& d : vt.decls_) {
    std::vector<TypeTerm> bs;
    for (std::size_t j = 0; j < d.params.size(); ++j) bs.push_back(bc.bound_of(d.name, j));
    vt.bounds_[d.name] = std::move(bs);
  }
  return vt;
}

// --------------------------------------------------------------------------
// Substitution.

TypeTerm subst_template_type(const ValidatedClassTable& vt, const TypeTemplate& t,
                             const std::map<std::string, ArgInterval>& env,
                             Endpoint ep) {
  switch (t.kind) {
    case TypeTemplate::Kind::Null:
      return TypeTerm::null_type();
    case TypeTemplate::Kind::Param: {
      auto it = env.find(t.name);
      if (it == env.end())
        throw Error(Errc::UnknownClass, "unbound parameter " + t.name);
      return ep == Endpoint::Upper ? it->second.upper : it->second.lower;
    }
    case TypeTemplate::Kind::Class: {
      std::vector<ArgInterval> args;
      for (std::size_t j = 0; j < t.args.size(); ++j)
        args.push_back(subst_template_arg(vt, t.name, j, t.args[j], env));
      return TypeTerm::cls(t.name, std::move(args));
    }
  }
  throw std::logic_error("unreachable template kind");
}

ArgInterval subst_template_arg(const ValidatedClassTable& vt,
                               const std::string& target_cls, std::size_t pos,
                               const TemplateArg& ta,
                               const std::map<std::string, ArgInterval>& env) {
  const TypeTerm& bound = vt.param_bound(target_cls, pos);
  switch (ta.surface) {
    case Surface::Unbounded:
      return {TypeTerm::null_type(), bound, Surface::Unbounded};
    case Surface::Extends:
      return {TypeTerm::null_type(), subst_template_type(vt, *ta.type, env, Endpoint::Upper),
              Surface::Extends};
    case Surface::Super:
      return {subst_template_type(vt, *ta.type, env, Endpoint::Lower), bound, Surface::Super};
    case Surface::Invariant: {
      if (ta.type->kind == TypeTemplate::Kind::Param) {
        auto it = env.find(ta.type->name);
        if (it == env.end())
          throw Error(Errc::UnknownClass, "unbound parameter " + ta.type->name);
        return it->second;  // a bare parameter takes the whole interval
      }
      TypeTerm g = subst_template_type(vt, *ta.type, env, Endpoint::Upper);
      return {g, g, Surface::Invariant};
    }
  }
  throw std::logic_error("unreachable surface");
}

TypeTerm substituted_superclass(const ValidatedClassTable& vt, const TypeTerm& t) {
  if (t.null) throw Error(Errc::NullHasNoErasure, "NullType has no superclass");
  const ClassDecl& d = vt.decl(t.head);
  if (!d.superclass) throw Error(Errc::UnknownClass, "Object has no superclass");
  if (d.params.size() != t.args.size())
    throw Error(Errc::ArityMismatch, render_type(t));
  std::map<std::string, ArgInterval> env;
  for (std::size_t j = 0; j < d.params.size(); ++j) env[d.params[j].name] = t.args[j];
  return subst_template_type(vt, *d.superclass, env, Endpoint::Upper);
}

// --------------------------------------------------------------------------
// Poset.

int Poset::add_node(const std::string& label) {
  auto it = index_.find(label);
  if (it != index_.end()) return it->second;
  int id = static_cast<int>(labels_.size());
  labels_.push_back(label);
  index_[label] = id;
  closed_ = false;
  return id;
}

bool Poset::has_node(const std::string& label) const { return index_.count(label) != 0; }

int Poset::index_of(const std::string& label) const {
  auto it = index_.find(label);
  return it == index_.end() ? -1 : it->second;
}

void Poset::add_leq(const std::string& a, const std::string& b) {
  add_leq(add_node(a), add_node(b));
}

void Poset::add_leq(int a, int b) {
  edges_.emplace_back(a, b);
  closed_ = false;
}

void Poset::close() {
  const std::size_t n = labels_.size();
  words_ = (n + 63) / 64;
  leq_.assign(n, std::vector<std::uint64_t>(words_, 0));
  auto set_bit = [&](std::size_t i, std::size_t j) {
    leq_[i][j / 64] |= std::uint64_t{1} << (j % 64);
  };
  for (std::size_t i = 0; i < n; ++i) set_bit(i, i);
  for (auto [a, b] : edges_) set_bit(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  for (std::size_t k = 0; k < n; ++k) {
    const auto& row_k = leq_[k];
    for (std::size_t i = 0; i < n; ++i) {
      if (!(leq_[i][k / 64] >> (k % 64) & 1)) continue;
      auto& row_i = leq_[i];
      for (std::size_t w = 0; w < words_; ++w) row_i[w] |= row_k[w];
    }
  }
  closed_ = true;
}

bool Poset::leq(int a, int b) const {
  if (!closed_) throw std::logic_error("Poset::leq on unclosed poset");
  const auto i = static_cast<std::size_t>(a);
  const auto j = static_cast<std::size_t>(b);
  return (leq_[i][j / 64] >> (j % 64)) & 1;
}

bool Poset::leq(const std::string& a, const std::string& b) const {
  int ia = index_of(a), ib = index_of(b);
  if (ia < 0 || ib < 0) return false;
  return leq(ia, ib);
}

std::vector<std::pair<int, int>> Poset::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<int, int>> Poset::hasse_edges() const {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq(i, j) || leq(j, i)) continue;
      bool covered = true;
      for (int k = 0; k < n && covered; ++k) {
        if (k == i || k == j) continue;
        if (leq(i, k) && leq(k, j) && !leq(k, i) && !leq(j, k)) covered = false;
      }
      if (covered) out.emplace_back(i, j);
    }
  return out;
}

bool Poset::is_partial_order(std::string* violation) const {
  const int n = static_cast<int>(size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq(i, j) && leq(j, i)) {
        if (violation)
          *violation = labels_[static_cast<std::size_t>(i)] + " and " +
                       labels_[static_cast<std::size_t>(j)] + " are mutually leq";
        return false;
      }
  return true;
}

bool Poset::same_order_as(const Poset& other) const {
  if (size() != other.size()) return false;
  for (const auto& l : labels_)
    if (!other.has_node(l)) return false;
  for (const auto& a : labels_)
    for (const auto& b : labels_)
      if (leq(a, b) != other.leq(a, b)) return false;
  return true;
}

Poset Poset::restricted_to(const std::set<std::string>& keep) const {
  Poset out;
  std::vector<int> self;  // out index -> own index
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (keep.count(labels_[i])) {
      out.add_node(labels_[i]);
      self.push_back(static_cast<int>(i));
    }
  const int m = static_cast<int>(self.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && leq(self[static_cast<std::size_t>(a)], self[static_cast<std::size_t>(b)]))
        out.add_leq(a, b);
  out.close();
  return out;
}

Poset Poset::dual() const {
  Poset out;
  for (const auto& l : labels_) out.add_node(l);
  for (auto [a, b] : strict_pairs()) out.add_leq(b, a);
  out.close();
  return out;
}

Poset Poset::relabeled(const std::function<std::string(const std::string&)>& f) const {
  Poset out;
  for (const auto& l : labels_) out.add_node(f(l));
  for (auto [a, b] : strict_pairs())
    out.add_leq(f(labels_[static_cast<std::size_t>(a)]), f(labels_[static_cast<std::size_t>(b)]));
  out.close();
  return out;
}

Poset subclass_order(const ValidatedClassTable& vt) {
  Poset p;
  for (const auto& d : vt.decls()) p.add_node(d.name);
  for (const auto& d : vt.decls())
    if (d.superclass) p.add_leq(d.name, d.superclass->name);
  p.close();
  return p;
}

}  // namespace wildcat
