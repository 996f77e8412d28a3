#pragma once

#include <string>
#include <vector>

#include "wildcat/jso.hpp"

namespace wildcat {

// Exported view of one construction level.
// Node ids are dense from 0, nodes sorted by rendered text.
struct GraphDump {
  int depth = 0;
  std::string table;
  std::vector<std::pair<std::string, int>> nodes;            // (text, level)
  std::vector<std::tuple<int, int, std::string>> edges;      // (sub, sup, provenance)
};

GraphDump dump_level(const SubtypingGraph& g, int level, bool include_null,
                     const std::string& table_name);

std::string graph_to_json(const GraphDump& d);
GraphDump graph_from_json(const std::string& text);

// Edges point from subtype to supertype; colors by provenance:
// Copy=blue, Flip=red, Merge=green, Superclass=black, Flatten/Closure=gray.
std::string graph_to_dot(const GraphDump& d);

}  // namespace wildcat
