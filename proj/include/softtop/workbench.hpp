#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "softtop/homeo_groups.hpp"
#include "softtop/golden_corpus.hpp"
#include "softtop/search.hpp"
#include "softtop/space_file.hpp"

namespace softtop {

/// Process exit codes of the softtop tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitValidation = 3,
  kExitCap = 4,
  kExitCheckFailed = 5,
};

enum class ReportFormat { text, machine };

/// Command output: a human-readable block plus key=value machine lines.
struct Report {
  std::string command;
  std::vector<std::string> human;
  std::vector<std::pair<std::string, std::string>> verdicts;
  int exit_code = kExitOk;

  void note(std::string line) { human.push_back(std::move(line)); }
  void add(std::string key, std::string value) { verdicts.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
  void add(std::string key, std::size_t value) { add(std::move(key), std::to_string(value)); }

  /// Value of the first verdict with this key, or empty.
  std::string get(std::string_view key) const {
    for (const auto& [k, v] : verdicts) {
      if (k == key) return v;
    }
    return {};
  }

  std::string render(ReportFormat format) const {
    std::ostringstream out;
    if (format == ReportFormat::text) {
      out << "softtop " << command << "\n";
      for (const auto& line : human) out << "  " << line << "\n";
      out << "\n";
    }
    out << "command=" << command << "\n";
    for (const auto& [k, v] : verdicts) out << k << "=" << v << "\n";
    return out.str();
  }
};

inline SoftTopology require_topology(const SpaceFile& file) {
  auto check = build_topology(file);
  if (!check) throw ValidationError("not a soft topology: " + describe(*check.violation));
  return std::move(*check.family);
}

/// Parses "x1->x2, x2->x1, ..." into a total point map between the two contexts.
inline SoftMapping parse_map_literal(std::string_view literal, const ContextRef& dom, const ContextRef& cod) {
  std::vector<std::size_t> points(dom->universe_size(), static_cast<std::size_t>(-1));
  std::size_t pos = 0;
  const auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  while (pos <= literal.size()) {
    const std::size_t comma = literal.find(',', pos);
    const std::size_t stop = comma == std::string_view::npos ? literal.size() : comma;
    const std::string_view pair = literal.substr(pos, stop - pos);
    const std::size_t arrow = pair.find("->");
    if (arrow == std::string_view::npos) {
      throw ParseError(1, pos + 1, "expected 'x->y' in map literal, found '" + std::string(pair) + "'");
    }
    const std::string_view from = trim(pair.substr(0, arrow));
    const std::string_view to = trim(pair.substr(arrow + 2));
    std::size_t x = 0;
    std::size_t y = 0;
    try {
      x = dom->element_index(from);
      y = cod->element_index(to);
    } catch (const InvalidArgument& e) {
      throw ParseError(1, pos + 1, e.what());
    }
    if (points[x] != static_cast<std::size_t>(-1)) {
      throw ParseError(1, pos + 1, "point '" + std::string(from) + "' mapped twice");
    }
    points[x] = y;
    pos = stop + 1;
  }
  for (std::size_t x = 0; x < points.size(); ++x) {
    if (points[x] == static_cast<std::size_t>(-1)) {
      throw ParseError(1, literal.size() + 1, "map literal does not assign '" + dom->universe()[x] + "'");
    }
  }
  return SoftMapping(dom, cod, std::move(points));
}

inline std::string map_literal(const SoftMapping& f) {
  std::string out;
  for (std::size_t x = 0; x < f.points().size(); ++x) {
    if (x) out += ",";
    out += f.domain()->universe()[x] + "->" + f.codomain()->universe()[f(x)];
  }
  return out;
}

inline Report cmd_check(const SpaceFile& file) {
  Report r{"check", {}, {}, kExitOk};
  const auto check = build_topology(file);
  for (const auto& n : check.notices) r.note("notice: " + n);
  r.add("valid", bool(check));
  if (check) {
    r.note("soft topology with " + std::to_string(check.family->size()) + " open sets");
    r.add("members", check.family->size());
    for (Mask m : check.family->open_masks()) r.note("open " + to_string(SoftSet(file.ctx, m)));
  } else {
    r.note("violation: " + describe(*check.violation));
    r.add("violation.op", std::string(to_string(check.violation->op)));
    r.add("violation.left", to_string(check.violation->left));
    r.add("violation.right", to_string(check.violation->right));
    r.add("violation.missing", to_string(check.violation->missing));
    r.exit_code = kExitValidation;
  }
  return r;
}

inline Report cmd_classify(const SpaceFile& file, std::string_view set_name) {
  Report r{"classify", {}, {}, kExitOk};
  const SoftTopology tau = require_topology(file);
  const SoftSet* f = file.find(set_name);
  if (!f) throw InvalidArgument("no set named '" + std::string(set_name) + "'");
  const ClassSet tags = classify(tau, *f);
  r.note(std::string(set_name) + " = " + to_string(*f));
  r.note("int = " + to_string(interior(tau, *f)) + ", cl = " + to_string(closure(tau, *f)));
  r.add("set", to_string(*f));
  for (SetClass c : kAllSetClasses) r.add(std::string(to_string(c)), tags.contains(c));
  return r;
}

inline Report cmd_families(const SpaceFile& file, SetClass cls) {
  Report r{"families", {}, {}, kExitOk};
  const SoftTopology tau = require_topology(file);
  const auto family = enumerate_class(tau, cls);
  r.note(std::to_string(family.size()) + " " + std::string(to_string(cls)) + " sets");
  r.add("class", std::string(to_string(cls)));
  r.add("count", family.size());
  for (std::size_t i = 0; i < family.size(); ++i) r.add("member." + std::to_string(i + 1), to_string(family[i]));
  return r;
}

inline Report cmd_map(const SpaceFile& fx, const SpaceFile& fy, std::string_view literal) {
  Report r{"map", {}, {}, kExitOk};
  const SoftTopology tx = require_topology(fx);
  const SoftTopology ty = require_topology(fy);
  const SoftMapping f = parse_map_literal(literal, fx.ctx, fy.ctx);
  r.add("map", map_literal(f));
  for (ContinuityClass c : kAllContinuityClasses) {
    if (c == ContinuityClass::beta_irresolute && !ty.context().enumerable()) {
      r.note("beta-irresolute skipped: codomain exceeds the enumeration cap");
      continue;
    }
    r.add(std::string(to_string(c)), has_continuity(f, tx, ty, c));
  }
  for (Mask g : ty.open_masks()) {
    const SoftSet pre(fx.ctx, f.preimage(g));
    r.note("f^-1" + to_string(SoftSet(fy.ctx, g)) + " = " + to_string(pre) + " [" +
           (in_class(tx, pre, SetClass::beta_open) ? "beta-open" : "not beta-open") + "]");
  }
  return r;
}

inline std::string permutation_literal(const SoftContext& ctx, const Permutation& p) {
  std::string out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (x) out += ",";
    out += ctx.universe()[x] + "->" + ctx.universe()[p[x]];
  }
  return out;
}

inline Report cmd_group(const SpaceFile& file, HomeoKind kind) {
  Report r{"group", {}, {}, kExitOk};
  const SoftTopology tau = require_topology(file);
  const HomeoCollection c = build_collection(tau, kind);
  r.add("kind", std::string(to_string(kind)));
  r.add("order", c.elements.size());
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    r.add("element." + std::to_string(i), permutation_literal(tau.context(), c.elements[i]));
  }
  const GroupBuild g = build_group(c);
  if (!g) {
    r.note("not a group: " + g.failure->reason);
    r.add("group-axioms", std::string("fail"));
    r.add("failure", g.failure->reason);
    if (!g.failure->left.empty()) r.add("failure.left", permutation_literal(tau.context(), g.failure->left));
    if (!g.failure->right.empty()) r.add("failure.right", permutation_literal(tau.context(), g.failure->right));
    return r;
  }
  const GroupAxioms ax = verify_group_axioms(*g.table);
  r.add("group-axioms", std::string(ax.all() ? "pass" : "fail"));
  r.add("closure", ax.closure);
  r.add("associativity", ax.associativity);
  r.add("identity", ax.identity);
  r.add("inverses", ax.inverses);
  r.add("identity-index", g.table->identity_index);
  r.note("cayley[i][j] = element_j o element_i");
  for (std::size_t i = 0; i < g.table->order(); ++i) {
    std::string row;
    for (std::size_t j = 0; j < g.table->order(); ++j) row += (j ? " " : "") + std::to_string(g.table->cayley[i][j]);
    r.add("cayley." + std::to_string(i), row);
  }
  return r;
}

inline Report cmd_search(const SearchSpec& spec, SetClass a, SetClass b) {
  Report r{"search", {}, {}, kExitOk};
  const SearchOutcome outcome = search_separation(spec, a, b);
  r.add("class-a", std::string(to_string(a)));
  r.add("class-b", std::string(to_string(b)));
  r.add("seed", std::to_string(spec.seed));
  if (!outcome.witness) {
    r.note("no " + std::string(to_string(a)) + " set outside " + std::string(to_string(b)) + " in " +
           std::to_string(outcome.trial) + " trials");
    r.add("result", std::string("exhausted"));
    r.add("trials", outcome.trial);
    return r;
  }
  const Witness& w = *outcome.witness;
  const SoftSet& s = std::get<SoftSet>(w.subject);
  r.note("witness W is " + std::string(to_string(a)) + " but not " + std::string(to_string(b)) + ":");
  std::istringstream lines(serialize_space(w.space, {{"W", s}}));
  for (std::string line; std::getline(lines, line);) r.note("  " + line);
  r.add("result", std::string("witness"));
  r.add("trial", outcome.trial);
  r.add("trial-seed", std::to_string(outcome.trial_seed));
  r.add("witness.set", to_string(s));
  std::string members;
  for (Mask m : w.space.open_masks()) members += (members.empty() ? "" : " ") + to_string(SoftSet(w.space.context_ref(), m));
  r.add("witness.topology", members);
  r.add("reverified", reverify(w));
  return r;
}

inline Report cmd_verify_paper() {
  Report r{"verify-paper", {}, {}, kExitOk};
  std::size_t passed = 0;
  const auto results = corpus::run_all();
  for (const auto& item : results) {
    passed += item.pass ? 1 : 0;
    r.note(std::string(item.pass ? "PASS " : "FAIL ") + item.id + " (" + item.description + "): " + item.detail);
    r.add("item." + item.id, std::string(item.pass ? "pass" : "fail"));
  }
  r.add("items", results.size());
  r.add("passed", passed);
  r.add("result", std::string(passed == results.size() ? "pass" : "fail"));
  if (passed != results.size()) r.exit_code = kExitCheckFailed;
  return r;
}

}  // namespace softtop
