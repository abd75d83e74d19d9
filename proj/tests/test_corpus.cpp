#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "wss/constructions.hpp"
#include "wss/corpus.hpp"
#include "wss/errors.hpp"
#include "wss/fingerprint.hpp"

using namespace wss;

namespace {

const std::filesystem::path kData = std::filesystem::path(WSS_SOURCE_DIR) / "data" / "groups";

void expect_parse_error(const std::string& text, std::size_t line, std::size_t column) {
  try {
    parse_group_spec(text);
    ADD_FAILURE() << "accepted: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

}  // namespace

TEST(Builtin, DeclaredOrdersMatch) {
  const auto corpus = builtin_corpus();
  EXPECT_GE(corpus.size(), 50u);
  std::set<std::string> names;
  bool has324 = false, has168 = false;
  for (const auto& e : corpus) {
    EXPECT_TRUE(names.insert(e.name).second) << e.name;
    const Group g = e.build(kDefaultGroupCap);
    EXPECT_EQ(g.order(), e.order) << e.name;
    EXPECT_LE(e.order, 648u);
    if (e.order == 324) has324 = true;
    if (e.name == "PSL(2,7)" && e.order == 168) has168 = true;
  }
  EXPECT_TRUE(has324);
  EXPECT_TRUE(has168);
}

TEST(Builtin, NamesAgreeWithFingerprints) {
  const std::map<std::string, std::string> alias = {{"D6", "S3"}, {"C5:C4", "F20"}};
  for (const auto& e : builtin_corpus()) {
    if (e.order > 24) continue;
    const std::string n = fingerprint(e.build(kDefaultGroupCap)).name;
    if (n == "unrecognized") continue;
    // Products are named by factors, so only compare when the name is not one.
    if (e.name.find('x') != std::string::npos) continue;
    auto it = alias.find(e.name);
    EXPECT_EQ(n, it == alias.end() ? e.name : it->second);
  }
}

TEST(Builtin, ProductBudget) {
  CorpusOptions small;
  small.product_budget = 0;
  const auto base = builtin_corpus(small);
  const auto full = builtin_corpus();
  EXPECT_LT(base.size(), full.size());
  EXPECT_LE(full.size() - base.size(), 100u);
  for (const auto& e : full) EXPECT_LE(e.order, 648u);
}

TEST(Builtin, Lookup) {
  ASSERT_TRUE(builtin_group("A5"));
  EXPECT_EQ(builtin_group("A5")->order, 60u);
  EXPECT_FALSE(builtin_group("nope"));
  EXPECT_THROW(builtin_group("S4")->build(10), CapExceeded);
}

TEST(GroupFile, RoundTrip) {
  for (const auto& e : builtin_corpus()) {
    const Group g = e.build(kDefaultGroupCap);
    const std::string text = serialize_group(e.name, g);
    const GroupSpecFile spec = parse_group_spec(text);
    EXPECT_EQ(spec.name, e.name);
    const Group h = load_group(spec);
    ASSERT_EQ(h.order(), g.order());
    EXPECT_EQ(h.elements(), g.elements());
    for (Elem a = 0; a < g.order(); ++a) {
      for (Elem b = 0; b < g.order(); ++b) ASSERT_EQ(h.mul(a, b), g.mul(a, b));
    }
  }
}

TEST(GroupFile, Parses) {
  const auto s = parse_group_spec("# c\n\nname: X\ndegree: 4\ngens: (1 2)(3 4), (1 3)(2 4)\n");
  EXPECT_EQ(s.name, "X");
  EXPECT_EQ(s.degree, 4u);
  EXPECT_EQ(s.gens, (std::vector<std::string>{"(1 2)(3 4)", "(1 3)(2 4)"}));
  EXPECT_FALSE(s.expected_order);
  EXPECT_EQ(load_group(s).order(), 4u);
  const auto trivial = parse_group_spec("name: T\ndegree: 3\ngens:\n");
  EXPECT_TRUE(trivial.gens.empty());
  EXPECT_EQ(load_group(trivial).order(), 1u);
}

TEST(GroupFile, Errors) {
  expect_parse_error("name: X\ndegree: 4\ngens: (1 5)\n", 3, 10);
  expect_parse_error("name: X\ndegree: 4\nbogus: 1\ngens: (1 2)\n", 3, 1);
  expect_parse_error("name: X\ndegree: 4\ndegree: 4\ngens: (1 2)\n", 3, 1);
  EXPECT_THROW(parse_group_spec("name: X\ngens: (1 2)\n"), ParseError);
  EXPECT_THROW(parse_group_spec("name: X\ndegree: 4\n"), ParseError);
  EXPECT_THROW(parse_group_spec("name: X\ndegree: four\ngens: (1 2)\n"), ParseError);
  EXPECT_THROW(parse_group_spec("name X\ndegree: 4\ngens: (1 2)\n"), ParseError);
  const auto wrong = parse_group_spec("name: X\ndegree: 4\ngens: (1 2)\nexpected_order: 3\n");
  EXPECT_THROW(load_group(wrong), std::runtime_error);
}

TEST(GroupFile, SampleDirectory) {
  const auto corpus = load_corpus_dir(kData);
  ASSERT_EQ(corpus.size(), 4u);
  EXPECT_EQ(corpus[0].name, "D8xC3");
  std::vector<std::string> fp;
  for (const auto& e : corpus) fp.push_back(fingerprint(e.build(kDefaultGroupCap)).name);
  EXPECT_EQ(fp, (std::vector<std::string>{"C3xD8", "Q8", "S3", "S4"}));
  EXPECT_THROW(load_corpus_dir(kData / "missing"), std::runtime_error);
}

TEST(Resolve, NameOrPath) {
  std::string shown;
  EXPECT_EQ(resolve_group("S4", &shown).order(), 24u);
  EXPECT_EQ(shown, "S4");
  EXPECT_EQ(resolve_group((kData / "Q8.grp").string(), &shown).order(), 8u);
  EXPECT_EQ(shown, "Q8");
  EXPECT_THROW(resolve_group("no/such/file"), std::invalid_argument);
}
