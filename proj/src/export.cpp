#include "wildcat/export.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace wildcat {

GraphDump dump_level(const SubtypingGraph& g, int level, bool include_null,
                     const std::string& table_name) {
  if (level < 0 || level >= static_cast<int>(g.levels.size()))
    throw Error(Errc::ResourceLimit, "level " + std::to_string(level) + " not constructed");
  const TermPoset& tp = g.levels[static_cast<std::size_t>(level)];

  GraphDump d;
  d.depth = level;
  d.table = table_name;
  std::vector<std::string> keys;
  for (const auto& [k, t] : tp.terms) {
    if (!include_null && t.is_null()) continue;
    keys.push_back(k);
  }
  std::sort(keys.begin(), keys.end());
  std::map<std::string, int> id;
  for (const auto& k : keys) {
    id[k] = static_cast<int>(d.nodes.size());
    auto it = tp.order.level.find(k);
    d.nodes.emplace_back(k, it == tp.order.level.end() ? level : it->second);
  }
  std::vector<int> kidx;
  kidx.reserve(keys.size());
  for (const auto& k : keys) kidx.push_back(tp.order.index_of(k));
  for (std::size_t ia = 0; ia < keys.size(); ++ia)
    for (std::size_t ib = 0; ib < keys.size(); ++ib) {
      const auto& a = keys[ia];
      const auto& b = keys[ib];
      if (ia == ib || !tp.order.leq(kidx[ia], kidx[ib])) continue;
      auto it = g.provenance.find({a, b});
      d.edges.emplace_back(id[a], id[b],
                           it != g.provenance.end() ? provenance_name(it->second)
                                                    : provenance_name(Provenance::Closure));
    }
  return d;
}

std::string graph_to_json(const GraphDump& d) {
  nlohmann::json j;
  j["meta"] = {{"depth", d.depth}, {"table", d.table}};
  j["nodes"] = nlohmann::json::array();
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    j["nodes"].push_back({{"id", static_cast<int>(i)},
                          {"text", d.nodes[i].first},
                          {"level", d.nodes[i].second}});
  j["edges"] = nlohmann::json::array();
  for (const auto& [sub, sup, prov] : d.edges)
    j["edges"].push_back({{"sub", sub}, {"sup", sup}, {"provenance", prov}});
  return j.dump(2);
}

GraphDump graph_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  GraphDump d;
  d.depth = j["meta"]["depth"].get<int>();
  d.table = j["meta"]["table"].get<std::string>();
  for (const auto& n : j["nodes"])
    d.nodes.emplace_back(n["text"].get<std::string>(), n["level"].get<int>());
  for (const auto& e : j["edges"])
    d.edges.emplace_back(e["sub"].get<int>(), e["sup"].get<int>(),
                         e["provenance"].get<std::string>());
  return d;
}

namespace {
const char* dot_color(const std::string& prov) {
  if (prov == "Copy") return "blue";
  if (prov == "Flip") return "red";
  if (prov == "Merge") return "green";
  if (prov == "Superclass") return "black";
  return "gray";  // Flatten, Closure
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}
}  // namespace

std::string graph_to_dot(const GraphDump& d) {
  std::ostringstream os;
  os << "digraph subtyping {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << dot_escape(d.nodes[i].first) << "\"];\n";
  for (const auto& [sub, sup, prov] : d.edges)
    os << "  n" << sub << " -> n" << sup << " [color=" << dot_color(prov) << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace wildcat
