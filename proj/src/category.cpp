#include "wildcat/category.hpp"

#include <algorithm>
#include <deque>

#include "json.hpp"

namespace wildcat {

bool CategoryPresentation::has_object(const std::string& o) const {
  return std::find(objects.begin(), objects.end(), o) != objects.end();
}

const Generator& CategoryPresentation::generator(const std::string& name) const {
  for (const auto& g : generators)
    if (g.name == name) return g;
  throw Error(Errc::UnknownClass, "unknown generator " + name);
}

CategoryPresentation build_class_category(const ValidatedClassTable& vt) {
  CategoryPresentation cat;
  cat.objects = vt.class_names();
  for (const auto& d : vt.decls())
    for (std::size_t j = 0; j < d.params.size(); ++j) {
      Generator g;
      g.name = d.name + "#" + std::to_string(j);
      g.src = d.name;
      g.dst = vt.param_bound(d.name, j).head;  // erasure of the bound
      cat.generators.push_back(g);
    }
  return cat;
}

std::string path_token(const Path& p) {
  if (p.empty()) return "id";
  std::string out = p[0];
  for (std::size_t i = 1; i < p.size(); ++i) out += "*" + p[i];
  return out;
}

namespace {

struct HomData {
  std::vector<Path> reps;                  // canonical representatives, sorted
  std::map<std::string, std::string> rep_token;  // token of any enumerated path -> rep token
  bool cap_exceeded = false;
};

// All generator paths x -> y of length <= cap, quotiented by the relations.
// Rewrites that would leave the enumerated set mark the cap as exceeded.
HomData hom_data(const CategoryPresentation& cat, const std::string& x,
                 const std::string& y) {
  HomData out;
  std::vector<std::pair<Path, std::string>> all;  // (path, endpoint)
  std::deque<std::pair<Path, std::string>> queue{{Path{}, x}};
  while (!queue.empty()) {
    auto [p, at] = queue.front();
    queue.pop_front();
    if (at == y) all.emplace_back(p, at);
    if (static_cast<int>(p.size()) >= cat.hom_cap) {
      for (const auto& g : cat.generators)
        if (g.src == at) out.cap_exceeded = true;
      continue;
    }
    for (const auto& g : cat.generators)
      if (g.src == at) {
        Path q = p;
        q.push_back(g.name);
        queue.emplace_back(std::move(q), g.dst);
      }
  }

  std::vector<Path> paths;
  for (auto& [p, _] : all) paths.push_back(std::move(p));
  std::sort(paths.begin(), paths.end());

  // Union-find over the enumerated paths under relation rewrites.
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index[path_token(paths[i])] = i;
  std::vector<std::size_t> parent(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

  std::vector<std::pair<Path, Path>> rewrites;
  for (const auto& [lhs, rhs] : cat.relations) {
    rewrites.emplace_back(lhs, rhs);
    rewrites.emplace_back(rhs, lhs);
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Path& p = paths[i];
    for (const auto& [lhs, rhs] : rewrites) {
      for (std::size_t at = 0; at + lhs.size() <= p.size(); ++at) {
        if (!std::equal(lhs.begin(), lhs.end(), p.begin() + static_cast<long>(at))) continue;
        Path q(p.begin(), p.begin() + static_cast<long>(at));
        q.insert(q.end(), rhs.begin(), rhs.end());
        q.insert(q.end(), p.begin() + static_cast<long>(at + lhs.size()), p.end());
        auto it = index.find(path_token(q));
        if (it != index.end())
          unite(i, it->second);
        else if (static_cast<int>(q.size()) > cat.hom_cap)
          out.cap_exceeded = true;
      }
    }
  }

  std::map<std::size_t, Path> rep;  // class root -> lexicographically least member
  for (std::size_t i = 0; i < paths.size(); ++i) {
    std::size_t r = find(i);
    auto it = rep.find(r);
    if (it == rep.end() || paths[i] < it->second) rep[r] = paths[i];
  }
  for (std::size_t i = 0; i < paths.size(); ++i)
    out.rep_token[path_token(paths[i])] = path_token(rep[find(i)]);
  for (auto& [_, p] : rep) out.reps.push_back(p);
  std::sort(out.reps.begin(), out.reps.end());
  return out;
}

}  // namespace

HomSet hom_set(const CategoryPresentation& cat, const std::string& x,
               const std::string& y) {
  HomData d = hom_data(cat, x, y);
  return {d.reps, d.cap_exceeded};
}

std::string FunctorInstance::apply_path(const CategoryPresentation& cat, const Path& p,
                                        const std::string& elem) const {
  (void)cat;
  std::string e = elem;
  for (const auto& g : p) {
    auto git = arrow_map.find(g);
    if (git == arrow_map.end()) throw Error(Errc::UnknownClass, "no arrow map for " + g);
    auto eit = git->second.find(e);
    if (eit == git->second.end())
      throw Error(Errc::UnknownClass, "arrow " + g + " undefined on " + e);
    e = eit->second;
  }
  return e;
}

bool functorial(const CategoryPresentation& cat, const FunctorInstance& f,
                std::string* why) {
  auto elems = [&](const std::string& o) -> const std::vector<std::string>& {
    static const std::vector<std::string> empty;
    auto it = f.object_map.find(o);
    return it == f.object_map.end() ? empty : it->second;
  };
  for (const auto& g : cat.generators) {
    const auto& dst = elems(g.dst);
    for (const auto& e : elems(g.src)) {
      auto git = f.arrow_map.find(g.name);
      if (git == f.arrow_map.end() || !git->second.count(e)) {
        if (why) *why = "arrow " + g.name + " undefined on " + e;
        return false;
      }
      const std::string& img = git->second.at(e);
      if (std::find(dst.begin(), dst.end(), img) == dst.end()) {
        if (why) *why = "arrow " + g.name + " maps " + e + " outside " + g.dst;
        return false;
      }
    }
  }
  for (const auto& [lhs, rhs] : cat.relations) {
    const std::string& src = lhs.empty() ? rhs[0] : lhs[0];
    const std::string& o = cat.generator(src).src;
    for (const auto& e : elems(o))
      if (f.apply_path(cat, lhs, e) != f.apply_path(cat, rhs, e)) {
        if (why) *why = "relation violated at " + e;
        return false;
      }
  }
  return true;
}

FunctorInstance representable(const CategoryPresentation& cat, const std::string& c) {
  FunctorInstance f;
  std::map<std::string, HomData> hom;
  for (const auto& y : cat.objects) {
    hom[y] = hom_data(cat, c, y);
    if (hom[y].cap_exceeded) f.cap_exceeded = true;
    std::vector<std::string> elems;
    for (const auto& p : hom[y].reps) elems.push_back(path_token(p));
    f.object_map[y] = elems;
  }
  for (const auto& g : cat.generators) {
    std::map<std::string, std::string> action;
    for (const auto& p : hom[g.src].reps) {
      Path q = p;
      q.push_back(g.name);
      auto it = hom[g.dst].rep_token.find(path_token(q));
      if (it == hom[g.dst].rep_token.end()) {
        f.cap_exceeded = true;  // post-composition leaves the enumerated set
        continue;
      }
      action[path_token(p)] = it->second;
    }
    f.arrow_map[g.name] = std::move(action);
  }
  return f;
}

FunctorInstance instantiation_functor(const SubtypeDecider& decider, int depth) {
  const ValidatedClassTable& vt = decider.table();
  for (const auto& d : vt.decls())
    for (const auto& p : d.params) {
      if (p.bound.kind != TypeTemplate::Kind::Class || p.bound.name != kObject ||
          !p.bound.args.empty())
        throw Error(Errc::UnsupportedBound,
                    "instantiation functor requires Object-bounded parameters (" + d.name +
                        "." + p.name + ")");
    }

  std::vector<TypeTerm> universe = decider.enumerate_universe(depth);
  FunctorInstance f;
  for (const auto& c : vt.class_names()) f.object_map[c] = {};
  for (const auto& t : universe) {
    if (t.is_null()) continue;
    f.object_map[kObject].push_back(render_type(t));  // all non-Null types
    if (t.head != kObject) f.object_map[t.head].push_back(render_type(t));
  }
  for (auto& [_, v] : f.object_map) std::sort(v.begin(), v.end());

  for (const auto& d : vt.decls())
    for (std::size_t j = 0; j < d.params.size(); ++j) {
      std::map<std::string, std::string> action;
      for (const auto& t : universe)
        if (!t.is_null() && t.head == d.name)
          action[render_type(t)] = render_type(decider.canonical_form(t.args[j].upper));
      f.arrow_map[d.name + "#" + std::to_string(j)] = std::move(action);
    }
  return f;
}

bool natural(const CategoryPresentation& cat, const FunctorInstance& f,
             const FunctorInstance& g, const NaturalTransformation& nt) {
  for (const auto& gen : cat.generators) {
    auto src_it = f.object_map.find(gen.src);
    if (src_it == f.object_map.end()) continue;
    for (const auto& e : src_it->second) {
      const std::string via_f = f.arrow_map.at(gen.name).at(e);
      const std::string lhs = nt.components.at(gen.dst).at(via_f);
      const std::string rhs = g.arrow_map.at(gen.name).at(nt.components.at(gen.src).at(e));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::vector<NaturalTransformation> natural_transformations(
    const CategoryPresentation& cat, const FunctorInstance& f, const FunctorInstance& g,
    std::size_t cap) {
  auto elems = [](const FunctorInstance& fi, const std::string& o) {
    auto it = fi.object_map.find(o);
    return it == fi.object_map.end() ? std::vector<std::string>{} : it->second;
  };

  // Candidate space size: prod over objects of |g(o)|^|f(o)|.
  double total = 1;
  for (const auto& o : cat.objects) {
    const auto fo = elems(f, o), go = elems(g, o);
    if (fo.empty()) continue;
    if (go.empty()) return {};  // no function into an empty set
    for (std::size_t i = 0; i < fo.size(); ++i) {
      total *= static_cast<double>(go.size());
      if (total > static_cast<double>(cap))
        throw Error(Errc::ResourceLimit, "natural-transformation space too large");
    }
  }

  // Odometer over componentwise choices.
  struct Slot {
    std::string object;
    std::string elem;
    std::vector<std::string> choices;
    std::size_t pick = 0;
  };
  std::vector<Slot> slots;
  for (const auto& o : cat.objects)
    for (const auto& e : elems(f, o)) slots.push_back({o, e, elems(g, o), 0});

  std::vector<NaturalTransformation> out;
  while (true) {
    NaturalTransformation nt;
    for (const auto& o : cat.objects) nt.components[o];  // empty components exist
    for (const auto& s : slots) nt.components[s.object][s.elem] = s.choices[s.pick];
    if (natural(cat, f, g, nt)) out.push_back(std::move(nt));
    std::size_t i = 0;
    for (; i < slots.size(); ++i) {
      if (++slots[i].pick < slots[i].choices.size()) break;
      slots[i].pick = 0;
    }
    if (i == slots.size()) break;
  }
  return out;
}

YonedaReport yoneda_check(const CategoryPresentation& cat, const FunctorInstance& f,
                          const std::string& c) {
  YonedaReport report;
  FunctorInstance rep = representable(cat, c);
  report.cap_exceeded = rep.cap_exceeded || f.cap_exceeded;

  std::vector<NaturalTransformation> nats = natural_transformations(cat, rep, f);
  report.nat_count = nats.size();
  auto it = f.object_map.find(c);
  const std::vector<std::string> fc = it == f.object_map.end() ? std::vector<std::string>{} : it->second;
  report.fc_count = fc.size();

  std::set<std::string> hit;
  bool injective = true, into = true;
  for (const auto& nt : nats) {
    const std::string v = nt.components.at(c).at("id");
    if (!hit.insert(v).second) injective = false;
    if (std::find(fc.begin(), fc.end(), v) == fc.end()) into = false;
    report.witnesses.emplace_back(path_token({}) + " at " + c, v);
  }
  report.bijective = injective && into && hit.size() == fc.size() && !report.cap_exceeded;
  return report;
}

std::string SkolemTemplate::render() const {
  if (vars.empty()) return cls;
  std::string out = cls + "<";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ", ";
    out += vars[i].first + " extends " + render_type(vars[i].second);
  }
  return out + ">";
}

SkolemTemplate skolem_template(const SubtypeDecider& decider, const std::string& cls) {
  const ValidatedClassTable& vt = decider.table();
  if (!vt.is_declared(cls)) throw Error(Errc::UnknownClass, cls);
  SkolemTemplate st;
  st.cls = cls;
  for (std::size_t j = 0; j < vt.arity(cls); ++j)
    st.vars.emplace_back("X_" + std::to_string(j + 1), decider.canonical_bound(cls, j));
  return st;
}

std::string category_json(const CategoryPresentation& cat) {
  nlohmann::json j;
  j["objects"] = cat.objects;
  j["generators"] = nlohmann::json::array();
  for (const auto& g : cat.generators)
    j["generators"].push_back({{"name", g.name}, {"src", g.src}, {"dst", g.dst}});
  j["relations"] = nlohmann::json::array();
  for (const auto& [l, r] : cat.relations) j["relations"].push_back({{"lhs", l}, {"rhs", r}});
  return j.dump(2);
}

std::string functor_json(const FunctorInstance& f) {
  nlohmann::json j;
  j["object_map"] = f.object_map;
  j["arrow_map"] = f.arrow_map;
  return j.dump(2);
}

}  // namespace wildcat
