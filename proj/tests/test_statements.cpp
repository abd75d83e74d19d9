#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "wss/constructions.hpp"
#include "wss/corpus.hpp"
#include "wss/fingerprint.hpp"
#include "wss/statements.hpp"
#include "wss/structure.hpp"

using namespace wss;

namespace {

StatementResult run(const std::string& id, const char* name, Group g) {
  auto c = make_context(name, std::move(g));
  return verify_statement(id, *c, {});
}

}  // namespace

TEST(Catalog, Selectors) {
  const auto all = expand_statements("all");
  std::set<std::string> ids(all.begin(), all.end());
  EXPECT_EQ(ids.size(), all.size());
  for (const char* id : {"thmB", "thm12", "Q1.3", "L2.6", "L3.5", "C4.12", "hierarchy", "remark1"}) {
    EXPECT_TRUE(ids.count(id)) << id;
  }
  EXPECT_EQ(expand_statements("L2.1"), (std::vector<std::string>{"L2.1i", "L2.1ii", "L2.1iii"}));
  EXPECT_EQ(expand_statements("L3.x"), (std::vector<std::string>{"L3.1", "C3.2", "L3.3", "L3.5"}));
  EXPECT_EQ(expand_statements("C4.x").size(), 10u);
  EXPECT_EQ(expand_statements("lemmas").size(), 14u);
  EXPECT_THROW(expand_statements("L9.9"), std::invalid_argument);
  for (const auto& s : statement_catalog()) {
    if (s.max_order != 0) EXPECT_FALSE(s.restriction.empty()) << s.id;
  }
}

TEST(MaximalSubgroupClause, S3) {
  const auto r = run("L2.7", "S3", symmetric_group(3));
  ASSERT_EQ(r.verdicts.size(), 1u);
  const Verdict& v = r.verdicts[0];
  EXPECT_TRUE(v.hypothesis_satisfied);
  EXPECT_EQ(v.conclusion_holds, true);
  EXPECT_TRUE(v.consistent);
}

TEST(PrimePowerIndex, A5) {
  auto c = make_context("A5", alternating_group(5));
  ASSERT_TRUE(is_nonabelian_simple(c->lattice));
  const auto cls = prime_power_index_subgroups(*c);
  ASSERT_EQ(cls.size(), 1u);
  EXPECT_EQ(cls[0].index, 5u);
  EXPECT_EQ(cls[0].subgroups.size(), 5u);
  for (std::size_t h : cls[0].subgroups) EXPECT_EQ(fingerprint(c->lattice[h]).name, "A4");
  const auto r = verify_statement("L2.6", *c, {});
  ASSERT_EQ(r.verdicts.size(), 1u);
  EXPECT_TRUE(r.verdicts[0].consistent);
}

TEST(PrimePowerIndex, PSL27) {
  auto c = make_context("PSL(2,7)", psl2(7));
  ASSERT_TRUE(is_nonabelian_simple(c->lattice));
  const auto cls = prime_power_index_subgroups(*c);
  ASSERT_EQ(cls.size(), 2u);
  EXPECT_EQ(cls[0].index, 7u);
  EXPECT_EQ(cls[0].subgroups.size(), 14u);
  EXPECT_EQ(fingerprint(c->lattice[cls[0].subgroups[0]]).name, "S4");
  EXPECT_EQ(cls[1].index, 8u);
  EXPECT_EQ(cls[1].subgroups.size(), 8u);
  EXPECT_EQ(fingerprint(c->lattice[cls[1].subgroups[0]]).name, "C7:C3");
  EXPECT_TRUE(verify_statement("L2.6", *c, {}).verdicts.at(0).consistent);
}

TEST(PrimePowerIndex, A6HasNone) {
  auto c = make_context("A6", alternating_group(6));
  ASSERT_EQ(c->lattice.size(), 501u);
  ASSERT_TRUE(is_nonabelian_simple(c->lattice));
  EXPECT_TRUE(prime_power_index_subgroups(*c).empty());
  const auto r = verify_statement("L2.6", *c, {});
  ASSERT_EQ(r.verdicts.size(), 1u);
  EXPECT_TRUE(r.verdicts[0].consistent);
  EXPECT_FALSE(r.verdicts[0].hypothesis_satisfied);
}

TEST(PrimePowerIndex, SkipsNonSimple) {
  EXPECT_TRUE(run("L2.6", "S4", symmetric_group(4)).verdicts.empty());
}

TEST(OddOrderCorollary, EvenOrderIsVacuous) {
  const auto r = run("C4.3", "Q8xC3", direct_product(dicyclic_group(8), cyclic_group(3)));
  ASSERT_EQ(r.verdicts.size(), 1u);
  EXPECT_FALSE(r.verdicts[0].hypothesis_satisfied);
  EXPECT_TRUE(r.verdicts[0].consistent);
}

TEST(ExtremeDOrders, GcdClauses) {
  const auto r = run("remark1", "C2^4", elementary_abelian(2, 4));
  ASSERT_EQ(r.verdicts.size(), 1u);
  const Verdict& v = r.verdicts[0];
  EXPECT_TRUE(v.consistent);
  EXPECT_EQ(v.instances, 3u);
  EXPECT_EQ(v.hypothesis_instances, 2u);
  ASSERT_EQ(v.notes.size(), 1u);
  EXPECT_NE(v.notes[0].find("iota(P) = 4, iota(D) = 2: gcd clause fails"), std::string::npos);
}

TEST(Hierarchy, S4) {
  const auto r = run("hierarchy", "S4", symmetric_group(4));
  ASSERT_EQ(r.verdicts.size(), 1u);
  EXPECT_TRUE(r.verdicts[0].consistent);
  EXPECT_EQ(r.verdicts[0].instances, 30u * 5u);
}

TEST(Hierarchy, UpTo100) {
  std::size_t groups = 0;
  for (const auto& e : builtin_corpus()) {
    if (e.order > 100) continue;
    auto c = make_context(e.name, e.build(kDefaultGroupCap));
    for (const Verdict& v : verify_statement("hierarchy", *c, {}).verdicts) {
      ASSERT_TRUE(v.consistent) << e.name << ' ' << v.witnesses.front();
    }
    ++groups;
  }
  EXPECT_GT(groups, 80u);
}

TEST(Statements, ConsistentUpTo60) {
  for (const auto& e : builtin_corpus()) {
    if (e.order > 60) continue;
    auto c = make_context(e.name, e.build(kDefaultGroupCap));
    for (const auto& id : expand_statements("all")) {
      const auto r = verify_statement(id, *c, {});
      for (const Verdict& v : r.verdicts) {
        ASSERT_EQ(v.statement, id);
        ASSERT_EQ(v.group, e.name);
        ASSERT_LE(v.hypothesis_instances, v.instances);
        ASSERT_TRUE(v.consistent) << e.name << ' ' << id << ' ' << v.witnesses.front();
        if (!v.consistent) ASSERT_FALSE(v.witnesses.empty());
      }
    }
  }
}

TEST(Statements, HypothesesAreExercised) {
  // A suite whose hypotheses never fire proves nothing; every lemma must
  // see at least one instance with a true hypothesis somewhere.
  std::map<std::string, std::uint64_t> fired;
  for (const auto& e : builtin_corpus()) {
    if (e.order > 60) continue;
    auto c = make_context(e.name, e.build(kDefaultGroupCap));
    for (const auto& id : expand_statements("lemmas")) {
      for (const Verdict& v : verify_statement(id, *c, {}).verdicts) fired[id] += v.hypothesis_instances;
    }
  }
  for (const auto& id : expand_statements("lemmas")) EXPECT_GT(fired[id], 0u) << id;
}
