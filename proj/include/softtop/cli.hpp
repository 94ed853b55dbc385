#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "softtop/workbench.hpp"

namespace softtop {

inline SpaceFile load_space_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_space_file(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), path + ": " + e.message());
  }
}

inline std::uint64_t default_seed() {
  if (const char* env = std::getenv("SOFTTOP_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("SOFTTOP_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

/// Entry point of the softtop tool; returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite soft topological spaces: set classes, continuity, homeomorphism groups"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "machine"}));

  std::string file;
  std::string file_y;
  std::string set_name;
  std::vector<std::string> classes;
  std::string map;
  std::string kind = "beta-irresolute-homeo";
  SearchSpec spec;
  std::uint64_t seed = 0;

  auto* check = app.add_subcommand("check", "Validate the topology of a space file");
  check->add_option("file", file, "Space file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Classify a named set of a space file");
  classify_cmd->add_option("file", file, "Space file")->required();
  classify_cmd->add_option("--set", set_name, "Set name")->required();

  auto* families = app.add_subcommand("families", "List every soft set in a class");
  families->add_option("file", file, "Space file")->required();
  families->add_option("--class", classes, "Set class, e.g. beta-open")->required()->expected(1);

  auto* map_cmd = app.add_subcommand("map", "Classify a point map between two spaces");
  map_cmd->add_option("domain", file, "Domain space file")->required();
  map_cmd->add_option("codomain", file_y, "Codomain space file")->required();
  map_cmd->add_option("--map", map, "Map literal x1->y1,x2->y2,...")->required();

  auto* group = app.add_subcommand("group", "Build a homeomorphism collection and its group table");
  group->add_option("file", file, "Space file")->required();
  group->add_option("--kind", kind, "soft-homeo | beta-homeo | beta-irresolute-homeo");

  auto* search = app.add_subcommand("search", "Search random spaces for a set in one class but not another");
  search->add_option("--universe", spec.universe_size, "Universe size");
  search->add_option("--params", spec.param_count, "Parameter count");
  search->add_option("--seed", seed, "Seed (default: $SOFTTOP_SEED or 0)");
  search->add_option("--max-trials", spec.max_trials, "Trial budget");
  search->add_option("--density", spec.density, "Cell fill probability for generators");
  search->add_option("--class", classes, "Two classes: found in the first, absent from the second")
      ->required()
      ->expected(2);

  auto* verify = app.add_subcommand("verify-paper", "Run the embedded golden corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const ReportFormat fmt = format == "machine" ? ReportFormat::machine : ReportFormat::text;
  try {
    Report report;
    if (*check) {
      report = cmd_check(load_space_file(file));
    } else if (*classify_cmd) {
      report = cmd_classify(load_space_file(file), set_name);
    } else if (*families) {
      report = cmd_families(load_space_file(file), parse_set_class(classes.at(0)));
    } else if (*map_cmd) {
      report = cmd_map(load_space_file(file), load_space_file(file_y), map);
    } else if (*group) {
      report = cmd_group(load_space_file(file), parse_homeo_kind(kind));
    } else if (*search) {
      spec.seed = search->count("--seed") > 0 ? seed : default_seed();
      report = cmd_search(spec, parse_set_class(classes.at(0)), parse_set_class(classes.at(1)));
    } else if (*verify) {
      report = cmd_verify_paper();
    }
    out << report.render(fmt);
    return report.exit_code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ContextMismatch& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace softtop
