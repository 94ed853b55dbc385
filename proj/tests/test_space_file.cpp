#include <gtest/gtest.h>

#include "softtop/space_file.hpp"
#include "support.hpp"

using namespace softtop;
using softtop::testing::labels;

namespace {

void expect_parse_error(const std::string& text, std::size_t line, const std::string& fragment) {
  try {
    parse_space_file(text);
    ADD_FAILURE() << "no error for:\n" << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

const std::string kHead = "universe: x1 x2\nparams: e1 e2\n";

}  // namespace

TEST(SpaceFile, ParsesShippedExample) {
  const SpaceFile f = parse_space_file(kEx33);
  EXPECT_EQ(f.ctx->universe_size(), 3u);
  EXPECT_EQ(f.set("H"), labels(f.ctx, {{}, {"x1"}}));
  EXPECT_TRUE(build_topology(f));
}

TEST(SpaceFile, KeywordsAndComments) {
  const SpaceFile d = parse_space_file(kHead + "# comment\ntopology: discrete\n");
  EXPECT_EQ(build_topology(d).family->size(), 16u);
  const SpaceFile i = parse_space_file(kHead + "topology: indiscrete  # trailing\n");
  EXPECT_EQ(build_topology(i).family->size(), 2u);
  const SpaceFile l = parse_space_file(kHead + "set A { e2 = {x1} }\ntopology: A\n");
  EXPECT_EQ(l.set("A"), labels(l.ctx, {{}, {"x1"}}));
  EXPECT_EQ(build_topology(l).notices.size(), 2u);
}

TEST(SpaceFile, Errors) {
  expect_parse_error(kHead + "set A { e1 = {x1} }\ntopology: A B\n", 4, "undefined set 'B'");
  expect_parse_error(kHead + "set A { e3 = {x1} }\ntopology: A\n", 3, "undeclared parameter");
  expect_parse_error(kHead + "set A { e1 = {x9} }\ntopology: A\n", 3, "undeclared element");
  expect_parse_error(kHead + "set A { e1 = {x1}; e1 = {} }\ntopology: A\n", 3, "given twice");
  expect_parse_error(kHead + "set A { e1 = {x1} }\nset A { e1 = {} }\ntopology: A\n", 4, "duplicate set name");
  expect_parse_error(kHead + "set discrete { e1 = {} }\ntopology: indiscrete\n", 3, "reserved");
  expect_parse_error(kHead + "topology: A\ntopology: A\n", 4, "declared twice");
  expect_parse_error("params: e1\ntopology: discrete\n", 3, "missing 'universe'");
  expect_parse_error(kHead, 3, "missing 'topology'");
  expect_parse_error(kHead + "set A { e1 = {x1 x2} }\ntopology: A\n", 3, "expected ','");
  expect_parse_error(kHead + "set A { e1 = {x1} }}\ntopology: A\n", 3, "trailing input");
  expect_parse_error(kHead + "bogus: 1\n", 3, "unknown statement");
  expect_parse_error("universe: x1 x1\n", 1, "duplicate element");
  expect_parse_error(kHead + "set A { e1 = {x1} } @\n", 3, "unexpected character");
}

TEST(SpaceFile, ErrorColumns) {
  try {
    parse_space_file(kHead + "set A { e1 = {x1} }\ntopology: A Zed\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 13u);
  }
}

TEST(SpaceFile, SerializeRoundTrip) {
  for (const auto& tau : corpus::random_spaces(80, 21, 3, 2)) {
    const SoftSet w(tau.context_ref(), tau.context().full_mask() >> 1);
    const std::string text = serialize_space(tau, {{"W", w}});
    const SpaceFile back = parse_space_file(text);
    const auto check = build_topology(back);
    ASSERT_TRUE(check) << text;
    EXPECT_EQ(check.family->open_masks(), tau.open_masks());
    EXPECT_EQ(back.set("W").bits(), w.bits());
  }
  for (const auto& tau : corpus::golden_spaces()) {
    const SpaceFile back = parse_space_file(serialize_space(tau));
    EXPECT_EQ(build_topology(back).family->open_masks(), tau.open_masks());
  }
}

TEST(SpaceFile, SetLiteral) {
  const auto c = SoftContext::numbered(2, 2);
  EXPECT_EQ(set_literal(labels(c, {{"x1", "x2"}, {}})), "{ e1 = {x1, x2}; e2 = {} }");
}
