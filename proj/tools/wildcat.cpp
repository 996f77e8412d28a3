// Command-line front end: parse tables, build subtyping graphs, check laws,
// run the Yoneda comparison for a single class.
//
// Exit codes: 0 ok, 1 law violation, 2 parse/validation error,
// 3 resource limit exceeded, 4 unsupported bound shape.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "wildcat/adjunction.hpp"
#include "wildcat/category.hpp"
#include "wildcat/core.hpp"
#include "wildcat/export.hpp"
#include "wildcat/jso.hpp"
#include "wildcat/laws.hpp"
#include "wildcat/parser.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw wildcat::Error(wildcat::Errc::Syntax, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string table_name(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

int exit_code_for(wildcat::Errc code) {
  switch (code) {
    case wildcat::Errc::ResourceLimit: return 3;
    case wildcat::Errc::UnsupportedBound: return 4;
    default: return 2;
  }
}

int cmd_parse(const std::string& file) {
  auto table = wildcat::validate_class_table(
      wildcat::parse_class_table({read_file(file), file}));
  wildcat::SubtypeDecider decider(table);
  for (const auto& name : table.class_names()) {
    const auto& decl = table.decl(name);
    std::cout << name;
    if (!decl.params.empty()) {
      std::cout << "<";
      for (std::size_t j = 0; j < decl.params.size(); ++j) {
        if (j) std::cout << ", ";
        std::cout << decl.params[j].name << " extends "
                  << wildcat::render_type(table.param_bound(name, j));
        if (table.is_f_bounded(name, j)) std::cout << " (f-bounded)";
      }
      std::cout << ">";
    }
    if (decl.superclass) std::cout << " extends " << decl.superclass->name;
    std::cout << "\n";
  }
  std::cout << table.class_names().size() << " classes\n";
  return 0;
}

int cmd_build(const std::string& file, int depth, bool include_null,
              const std::string& format, const std::string& out, int node_cap) {
  auto table = wildcat::validate_class_table(
      wildcat::parse_class_table({read_file(file), file}));
  wildcat::SubtypeDecider decider(table);
  auto graph = wildcat::construct(decider, depth, static_cast<std::size_t>(node_cap));
  auto dump = wildcat::dump_level(graph, depth, include_null, table_name(file));
  std::string text =
      format == "dot" ? wildcat::graph_to_dot(dump) : wildcat::graph_to_json(dump);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream o(out);
    if (!o) throw wildcat::Error(wildcat::Errc::Syntax, "cannot write file: " + out);
    o << text;
  }
  std::cerr << "nodes=" << dump.nodes.size() << " edges=" << dump.edges.size() << "\n";
  return 0;
}

int cmd_check(const std::string& file, int depth, const std::string& laws) {
  auto table = wildcat::validate_class_table(
      wildcat::parse_class_table({read_file(file), file}));
  wildcat::SubtypeDecider decider(table);
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " " << name << ": " << detail << "\n";
    all_ok = all_ok && ok;
  };

  std::istringstream ls(laws);
  std::string law;
  while (std::getline(ls, law, ',')) {
    if (law == "galois") {
      auto r = wildcat::galois_check(decider, depth);
      report("galois", r.passed(),
             std::to_string(r.checked_pairs) + " pairs, " +
                 std::to_string(r.violations.size()) + " violations");
    } else if (law == "monad") {
      auto r = wildcat::monad_laws_check(decider, depth);
      report("monad", r.passed(),
             std::to_string(r.checked_pairs) + " checks, " +
                 std::to_string(r.violations.size()) + " violations");
    } else if (law == "operad") {
      const unsigned seed = 20260826u;
      auto c = wildcat::check_copy_law(&decider, 40, seed, depth);
      auto f = wildcat::check_flip_law(&decider, 40, seed + 1, depth);
      auto t = wildcat::check_flatten_law(decider, 40, seed + 2, depth);
      auto fmt = [](const wildcat::LawResult& r) {
        return r.law + " " + std::to_string(r.checked) + "/" +
               std::to_string(r.violations) + " bad";
      };
      report("operad", c.passed() && f.passed() && t.passed(),
             fmt(c) + "; " + fmt(f) + "; " + fmt(t));
    } else if (law == "oracle") {
      wildcat::SubtypeDecider oracle(table);
      auto r = wildcat::check_oracle_equivalence(decider, oracle, depth);
      report("oracle", r.passed(),
             std::to_string(r.node_count) + " nodes, " +
                 std::to_string(r.missing_nodes + r.extra_nodes) + " node diffs, " +
                 std::to_string(r.missing_edges + r.extra_edges) + " edge diffs");
    } else {
      throw CLI::ValidationError("--laws", "unknown law: " + law);
    }
  }
  return all_ok ? 0 : 1;
}

int cmd_yoneda(const std::string& file, const std::string& cls, int depth,
               int hom_cap) {
  auto table = wildcat::validate_class_table(
      wildcat::parse_class_table({read_file(file), file}));
  wildcat::SubtypeDecider decider(table);
  auto cat = wildcat::build_class_category(table);
  cat.hom_cap = hom_cap;
  auto f = wildcat::instantiation_functor(decider, depth);
  auto rep = wildcat::skolem_template(decider, cls);
  std::cout << "representing object: " << rep.render() << "\n";
  auto report = wildcat::yoneda_check(cat, f, cls);
  std::cout << "natural transformations: " << report.nat_count << "\n";
  std::cout << "functor values at " << cls << ": " << report.fc_count << "\n";
  if (report.cap_exceeded) std::cout << "warning: hom-set cap exceeded\n";
  std::cout << "canonical map bijective: " << (report.bijective ? "yes" : "no")
            << "\n";
  return report.bijective ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for generic nominal subtyping with wildcards"};
  app.require_subcommand(1);

  std::string file;
  int depth = 1;
  bool no_null = false;
  std::string format = "json";
  std::string out;
  int node_cap = 20000;
  std::string laws = "galois,monad,operad,oracle";
  std::string cls;
  int hom_cap = 8;

  auto* parse = app.add_subcommand("parse", "parse and validate a class table");
  parse->add_option("file", file, "class table file")->required();

  auto* build = app.add_subcommand("build", "construct the subtyping graph");
  build->add_option("file", file, "class table file")->required();
  build->add_option("--depth", depth, "construction depth");
  build->add_flag("--no-null", no_null, "omit the Null bottom node");
  build->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  build->add_option("-o,--output", out, "output file ('-' for stdout)");
  build->add_option("--node-cap", node_cap, "abort if node count exceeds this");

  auto* check = app.add_subcommand("check", "verify laws for a class table");
  check->add_option("file", file, "class table file")->required();
  check->add_option("--depth", depth, "universe depth");
  check->add_option("--laws", laws, "comma list: galois,monad,operad,oracle");

  auto* yoneda = app.add_subcommand("yoneda", "compare hom-functor with instantiation");
  yoneda->add_option("file", file, "class table file")->required();
  yoneda->add_option("--class", cls, "class name")->required();
  yoneda->add_option("--depth", depth, "universe depth");
  yoneda->add_option("--hom-cap", hom_cap, "path length cap for hom-sets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (parse->parsed()) return cmd_parse(file);
    if (build->parsed()) return cmd_build(file, depth, !no_null, format, out, node_cap);
    if (check->parsed()) return cmd_check(file, depth, laws);
    if (yoneda->parsed()) return cmd_yoneda(file, cls, depth, hom_cap);
  } catch (const wildcat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
