#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wss/errors.hpp"
#include "wss/group.hpp"
#include "wss/perm.hpp"

using namespace wss;

namespace {
Perm P(std::size_t n, const char* s) { return Perm::from_cycles(n, s); }
}  // namespace

TEST(Perm, ComposeInvolutionSquared) { EXPECT_TRUE(compose(P(3, "(1 2)"), P(3, "(1 2)")).is_identity()); }

TEST(Perm, ComposeIsLeftToRight) {
  // Apply (1 2) first, then (2 3): 1 -> 2 -> 3, 3 -> 3 -> 2, 2 -> 1 -> 1.
  const Perm r = compose(P(3, "(1 2)"), P(3, "(2 3)"));
  EXPECT_EQ(r(0), 2u);
  EXPECT_EQ(r(2), 1u);
  EXPECT_EQ(r(1), 0u);
  EXPECT_EQ(r.to_cycles(), "(1 3 2)");
  EXPECT_EQ(compose(P(3, "(2 3)"), P(3, "(1 2)")).to_cycles(), "(1 2 3)");
}

TEST(Perm, ComposeIdentityLaw) {
  const Perm p = P(5, "(1 3 5)(2 4)");
  EXPECT_EQ(compose(p, Perm(5)), p);
  EXPECT_EQ(compose(Perm(5), p), p);
}

TEST(Perm, ComposeDegreeMismatchThrows) { EXPECT_THROW(compose(Perm(3), Perm(4)), std::invalid_argument); }

TEST(Perm, InverseUndoes) {
  const Perm p = P(6, "(1 2 3 4)(5 6)");
  EXPECT_TRUE(compose(p, inverse(p)).is_identity());
}

TEST(Perm, ElementOrder) {
  EXPECT_EQ(element_order(Perm(4)), 1u);
  EXPECT_EQ(element_order(P(4, "(1 2)(3 4)")), 2u);
  EXPECT_EQ(element_order(P(5, "(1 2 3)(4 5)")), 6u);
  for (const char* s : {"(1 2 3 4 5 6 7)", "(1 2)(3 4 5)(6 7 8 9)", "(1 5)(2 3 4)"})
    EXPECT_EQ(element_order(P(9, s)), oracle::naive_order(P(9, s))) << s;
}

TEST(Perm, CycleNotationRoundTrip) {
  for (const char* s : {"()", "(1 2)", "(1 3 2)", "(1 2)(3 4 5)", "(2 6)(3 5 4)"}) EXPECT_EQ(P(6, s).to_cycles(), s);
  EXPECT_EQ(P(4, "(1,2,3)").to_cycles(), "(1 2 3)");
  EXPECT_EQ(P(4, "(1 2)(2 3)").to_cycles(), "(1 3 2)");
}

TEST(Perm, CycleParseErrorsCarryColumns) {
  try {
    P(4, "(1 5)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 4u);
  }
  EXPECT_THROW(P(4, "(1 2"), ParseError);
  EXPECT_THROW(P(4, "(0 1)"), ParseError);
  EXPECT_THROW(P(4, "(1 1)"), ParseError);
  EXPECT_THROW(P(4, "1 2"), ParseError);
}

TEST(Perm, RejectsNonBijection) { EXPECT_THROW(Perm(std::vector<Point>{0, 0, 1}), std::invalid_argument); }

TEST(CloseGenerators, S4) {
  const Group g = close_generators(4, {P(4, "(1 2)"), P(4, "(1 2 3 4)")});
  EXPECT_EQ(g.order(), 24u);
  EXPECT_EQ(oracle::closure(4, {P(4, "(1 2)"), P(4, "(1 2 3 4)")}).size(), 24u);
}

TEST(CloseGenerators, EmptyIsTrivial) {
  const Group g = close_generators(3, {});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_TRUE(g.element(0).is_identity());
}

TEST(CloseGenerators, S5) {
  const std::vector<Perm> gens{P(5, "(1 2 3 4 5)"), P(5, "(1 2)")};
  EXPECT_EQ(close_generators(5, gens).order(), 120u);
  EXPECT_EQ(oracle::closure(5, gens).size(), 120u);
}

TEST(CloseGenerators, MatchesBreadthFirstOracle) {
  const std::vector<std::vector<const char*>> cases = {
      {"(1 2 3)", "(3 4 5)"}, {"(1 2 3 4)", "(2 4)"}, {"(1 2)(3 4)", "(1 3)(2 4)", "(5 6 7)"}, {"(1 2 3 4 5 6)"}};
  for (const auto& c : cases) {
    std::vector<Perm> gens;
    for (const char* s : c) gens.push_back(P(7, s));
    const Group g = close_generators(7, gens);
    const auto ref = oracle::closure(7, gens);
    ASSERT_EQ(g.order(), ref.size());
    std::vector<Perm> sorted(ref.begin(), ref.end());
    EXPECT_EQ(g.elements(), sorted);  // canonical lexicographic order
  }
}

TEST(CloseGenerators, IdentityFirstAndTableConsistent) {
  const Group g = close_generators(4, {P(4, "(1 2)"), P(4, "(1 2 3 4)")});
  EXPECT_TRUE(g.element(Group::identity()).is_identity());
  for (Elem a = 0; a < g.order(); ++a) {
    EXPECT_EQ(g.mul(a, g.inv(a)), Group::identity());
    for (Elem b = 0; b < g.order(); ++b) EXPECT_EQ(g.element(g.mul(a, b)), compose(g.element(a), g.element(b)));
  }
}

TEST(CloseGenerators, Idempotent) {
  const Group g = close_generators(5, {P(5, "(1 2 3)"), P(5, "(3 4 5)")});
  const Group h = close_generators(5, g.elements());
  EXPECT_EQ(g.elements(), h.elements());
}

TEST(CloseGenerators, GeneratorsAreElements) {
  const Group g = close_generators(6, {P(6, "(1 2 3 4 5 6)"), P(6, "(1 6)(2 5)(3 4)")});
  for (const Perm& p : g.generators()) EXPECT_TRUE(g.index_of(p).has_value());
}

TEST(CloseGenerators, CapIsAHardError) {
  try {
    close_generators(6, {P(6, "(1 2)"), P(6, "(1 2 3 4 5 6)")}, 100);
    FAIL();
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.cap(), 100u);
  }
}

TEST(CloseGenerators, WrongDegreeThrows) { EXPECT_THROW(close_generators(4, {Perm(3)}), std::invalid_argument); }

TEST(Arithmetic, Factorization) {
  EXPECT_EQ(factorize(360), (std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(prime_divisors(1), std::vector<std::uint64_t>{});
  EXPECT_EQ(p_part(648, 3), 81u);
  EXPECT_TRUE(is_power_of(1, 5));
  EXPECT_FALSE(is_power_of(12, 2));
  const Group g = close_generators(4, {P(4, "(1 2)"), P(4, "(1 2 3 4)")});
  EXPECT_EQ(g.prime_factorization(), (std::vector<PrimePower>{{2, 3}, {3, 1}}));
}
