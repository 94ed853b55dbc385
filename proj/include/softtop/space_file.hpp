#pragma once

// Text format for soft topological spaces. One statement per line, '#' starts
// a comment:
//
//   universe: x1 x2 x3
//   params: e1 e2
//   set F1 { e1 = {x1, x2}; e2 = {x1} }      # omitted params are empty
//   topology: F1 F2 ... | discrete | indiscrete
//
// The null and absolute sets join every listed topology automatically.

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "softtop/topology.hpp"

namespace softtop {

struct NamedSet {
  std::string name;
  SoftSet set;
};

enum class TopologyKind { listed, discrete, indiscrete };

struct SpaceFile {
  ContextRef ctx;
  std::vector<NamedSet> sets;  // declaration order
  TopologyKind kind = TopologyKind::listed;
  std::vector<std::string> topology_names;

  const SoftSet* find(std::string_view name) const {
    for (const auto& s : sets) {
      if (s.name == name) return &s.set;
    }
    return nullptr;
  }

  const SoftSet& set(std::string_view name) const {
    if (const auto* s = find(name)) return *s;
    throw InvalidArgument("no set named '" + std::string(name) + "'");
  }
};

namespace detail {

inline bool is_label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

inline bool is_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!is_label_char(c)) return false;
  }
  return true;
}

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

class LineLexer {
 public:
  LineLexer(std::string_view line, std::size_t line_no) : line_no_(line_no) {
    std::size_t i = 0;
    while (i < line.size()) {
      const char c = line[i];
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (is_label_char(c)) {
        const std::size_t start = i;
        while (i < line.size() && is_label_char(line[i])) ++i;
        tokens_.push_back({std::string(line.substr(start, i - start)), start + 1});
        continue;
      }
      if (std::string_view("{}=;,:").find(c) != std::string_view::npos) {
        tokens_.push_back({std::string(1, c), i + 1});
        ++i;
        continue;
      }
      throw ParseError(line_no_, i + 1, std::string("unexpected character '") + c + "'");
    }
    end_column_ = line.size() + 1;
  }

  bool done() const { return pos_ >= tokens_.size(); }
  const Token* peek() const { return done() ? nullptr : &tokens_[pos_]; }
  std::size_t column() const { return done() ? end_column_ : tokens_[pos_].column; }

  Token next(std::string_view what) {
    if (done()) throw ParseError(line_no_, end_column_, "expected " + std::string(what) + ", found end of line");
    return tokens_[pos_++];
  }

  Token expect(std::string_view punct) {
    Token t = next("'" + std::string(punct) + "'");
    if (t.text != punct) {
      throw ParseError(line_no_, t.column, "expected '" + std::string(punct) + "', found '" + t.text + "'");
    }
    return t;
  }

  Token label(std::string_view what) {
    Token t = next(what);
    if (!is_label(t.text)) throw ParseError(line_no_, t.column, "expected " + std::string(what) + ", found '" + t.text + "'");
    return t;
  }

  bool accept(std::string_view punct) {
    if (!done() && tokens_[pos_].text == punct) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::size_t line() const { return line_no_; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_no_;
  std::size_t end_column_ = 1;
};

inline std::vector<std::string> parse_label_list(LineLexer& lex, std::string_view what) {
  std::vector<std::string> out;
  std::unordered_map<std::string, bool> seen;
  while (!lex.done()) {
    const Token t = lex.label(what);
    if (seen.count(t.text)) throw ParseError(lex.line(), t.column, "duplicate " + std::string(what) + " '" + t.text + "'");
    seen[t.text] = true;
    out.push_back(t.text);
  }
  return out;
}

inline Mask parse_set_body(LineLexer& lex, const SoftContext& ctx) {
  lex.expect("{");
  Mask bits = 0;
  std::vector<char> seen(ctx.param_count(), 0);
  while (!lex.accept("}")) {
    const Token p = lex.label("parameter name");
    std::size_t e = 0;
    try {
      e = ctx.param_index(p.text);
    } catch (const InvalidArgument&) {
      throw ParseError(lex.line(), p.column, "undeclared parameter '" + p.text + "'");
    }
    if (seen[e]) throw ParseError(lex.line(), p.column, "parameter '" + p.text + "' given twice");
    seen[e] = 1;
    lex.expect("=");
    lex.expect("{");
    if (!lex.accept("}")) {
      for (;;) {
        const Token x = lex.label("element name");
        try {
          bits |= Mask{1} << ctx.cell(ctx.element_index(x.text), e);
        } catch (const InvalidArgument&) {
          throw ParseError(lex.line(), x.column, "undeclared element '" + x.text + "'");
        }
        if (lex.accept("}")) break;
        lex.expect(",");
      }
    }
    if (lex.accept("}")) break;
    lex.expect(";");
  }
  return bits;
}

}  // namespace detail

inline SpaceFile parse_space_file(std::string_view text) {
  SpaceFile out;
  std::optional<std::vector<std::string>> universe;
  std::optional<std::vector<std::string>> params;
  bool have_topology = false;
  struct Reference {
    std::string name;
    std::size_t line;
    std::size_t column;
  };
  std::vector<Reference> references;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    detail::LineLexer lex(line, line_no);
    if (lex.done()) continue;
    const detail::Token head = lex.label("statement keyword");

    if (head.text == "universe" || head.text == "params") {
      auto& slot = head.text == "universe" ? universe : params;
      if (slot) throw ParseError(line_no, head.column, "'" + head.text + "' declared twice");
      if (!out.sets.empty()) throw ParseError(line_no, head.column, "'" + head.text + "' must precede all sets");
      lex.expect(":");
      slot = detail::parse_label_list(lex, head.text == "universe" ? "element" : "parameter");
      if (slot->empty()) throw ParseError(line_no, lex.column(), "'" + head.text + "' needs at least one label");
      if (universe && params) {
        try {
          out.ctx = SoftContext::make(*universe, *params);
        } catch (const Error& e) {
          throw ParseError(line_no, head.column, e.what());
        }
      }
    } else if (head.text == "set") {
      if (!out.ctx) throw ParseError(line_no, head.column, "'universe' and 'params' must precede sets");
      const detail::Token name = lex.label("set name");
      if (name.text == "discrete" || name.text == "indiscrete") {
        throw ParseError(line_no, name.column, "'" + name.text + "' is reserved");
      }
      if (out.find(name.text)) throw ParseError(line_no, name.column, "duplicate set name '" + name.text + "'");
      const Mask bits = detail::parse_set_body(lex, *out.ctx);
      if (!lex.done()) throw ParseError(line_no, lex.column(), "trailing input after set literal");
      out.sets.push_back({name.text, SoftSet(out.ctx, bits)});
    } else if (head.text == "topology") {
      if (have_topology) throw ParseError(line_no, head.column, "'topology' declared twice");
      have_topology = true;
      lex.expect(":");
      const detail::Token* first = lex.peek();
      if (first && (first->text == "discrete" || first->text == "indiscrete")) {
        out.kind = first->text == "discrete" ? TopologyKind::discrete : TopologyKind::indiscrete;
        lex.next("keyword");
        if (!lex.done()) throw ParseError(line_no, lex.column(), "trailing input after topology keyword");
      } else {
        while (!lex.done()) {
          const detail::Token t = lex.label("set name");
          references.push_back({t.text, line_no, t.column});
          out.topology_names.push_back(t.text);
        }
      }
    } else {
      throw ParseError(line_no, head.column, "unknown statement '" + head.text + "'");
    }
  }

  if (!universe) throw ParseError(line_no, 1, "missing 'universe' declaration");
  if (!params) throw ParseError(line_no, 1, "missing 'params' declaration");
  if (!have_topology) throw ParseError(line_no, 1, "missing 'topology' declaration");
  for (const auto& r : references) {
    if (!out.find(r.name)) throw ParseError(r.line, r.column, "undefined set '" + r.name + "'");
  }
  return out;
}

inline TopologyCheck build_topology(const SpaceFile& file) {
  switch (file.kind) {
    case TopologyKind::discrete: return {discrete(file.ctx), std::nullopt, {}};
    case TopologyKind::indiscrete: return {indiscrete(file.ctx), std::nullopt, {}};
    case TopologyKind::listed: break;
  }
  std::vector<SoftSet> members;
  for (const auto& n : file.topology_names) members.push_back(file.set(n));
  return validate_topology(file.ctx, members);
}

/// "{ e1 = {x1, x2}; e2 = {} }"
inline std::string set_literal(const SoftSet& f) {
  const auto& ctx = f.context();
  std::string out = "{ ";
  for (std::size_t e = 0; e < ctx.param_count(); ++e) {
    if (e) out += "; ";
    out += ctx.params()[e] + " = {";
    bool first = true;
    for (std::size_t x = 0; x < ctx.universe_size(); ++x) {
      if (!f.contains(x, e)) continue;
      if (!first) out += ", ";
      out += ctx.universe()[x];
      first = false;
    }
    out += "}";
  }
  out += " }";
  return out;
}

/// Writes tau (members other than the null and absolute sets as O1, O2, ...)
/// followed by any extra named sets.
inline std::string serialize_space(const SoftTopology& tau, const std::vector<NamedSet>& extra = {}) {
  const auto& ctx = tau.context();
  for (const auto* labels : {&ctx.universe(), &ctx.params()}) {
    for (const auto& l : *labels) {
      if (!detail::is_label(l)) throw InvalidArgument("label '" + l + "' cannot be written to a space file");
    }
  }
  std::string out = "universe:";
  for (const auto& x : ctx.universe()) out += " " + x;
  out += "\nparams:";
  for (const auto& e : ctx.params()) out += " " + e;
  out += "\n";

  std::string topology = "topology:";
  if (tau.size() == 2) {
    topology += " indiscrete";
  } else if (ctx.enumerable() && tau.size() == (std::size_t{1} << ctx.cells())) {
    topology += " discrete";
  } else {
    std::size_t k = 0;
    for (Mask m : tau.open_masks()) {
      if (m == 0 || m == ctx.full_mask()) continue;
      const std::string name = "O" + std::to_string(++k);
      out += "set " + name + " " + set_literal(SoftSet(tau.context_ref(), m)) + "\n";
      topology += " " + name;
    }
  }
  for (const auto& n : extra) out += "set " + n.name + " " + set_literal(n.set) + "\n";
  out += topology + "\n";
  return out;
}

}  // namespace softtop
