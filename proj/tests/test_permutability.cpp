#include <gtest/gtest.h>

#include "wss/constructions.hpp"
#include "wss/corpus.hpp"
#include "wss/permutability.hpp"
#include "wss/structure.hpp"

using namespace wss;

namespace {

struct Ctx {
  Group g;
  SubgroupLattice l;
  explicit Ctx(Group grp) : g(std::move(grp)), l(enumerate_subgroups(g)) {}
  std::size_t idx(std::initializer_list<const char*> gens) const {
    std::vector<Elem> e;
    for (const char* s : gens) e.push_back(*g.index_of(Perm::from_cycles(g.degree(), s)));
    return l.index_of(Subgroup::generated(g, e));
  }
};

// Reference implementations straight from the definitions, using only
// subgroup arithmetic and the list of subgroups.
bool ref_s_permutable(const SubgroupLattice& l, std::size_t h) {
  const std::uint64_t n = l.group().order();
  for (std::uint64_t p : prime_divisors(n)) {
    const std::uint64_t pp = p_part(n, p);
    for (const Subgroup& s : l.entries()) {
      if (s.order() == pp && !permutes(l[h], s)) return false;
    }
  }
  return true;
}

Subgroup ref_h_sg(const SubgroupLattice& l, std::size_t h) {
  Subgroup acc = Subgroup::trivial(l.group());
  for (std::size_t k = 0; k < l.size(); ++k) {
    if (l.contains(h, k) && ref_s_permutable(l, k)) acc = join(acc, l[k]);
  }
  return acc;
}

enum class Kind { wss, wsp, cnormal, ssupp, complemented };

bool ref_embedding(const SubgroupLattice& l, std::size_t h, Kind kind) {
  const Subgroup& H = l[h];
  const Subgroup G = l[l.top()];
  const Subgroup hs = ref_h_sg(l, h);
  const Subgroup cr = core(G, H);
  for (const Subgroup& T : l.entries()) {
    if (product_size(H, T) != G.order()) continue;
    const Subgroup x = intersect(H, T);
    switch (kind) {
      case Kind::wss:
        if (hs.contains(x)) return true;
        break;
      case Kind::wsp:
        if (hs.contains(x) && is_subnormal(G, T)) return true;
        break;
      case Kind::cnormal:
        if (cr.contains(x) && is_normal(G, T)) return true;
        break;
      case Kind::ssupp:
        if (is_supersolvable(T)) return true;
        break;
      case Kind::complemented:
        if (x.is_trivial()) return true;
        break;
    }
  }
  return false;
}

}  // namespace

TEST(SPermutable, Examples) {
  Ctx s3(symmetric_group(3));
  EXPECT_FALSE(is_s_permutable(s3.l, s3.idx({"(1 2)"})));
  EXPECT_TRUE(is_s_permutable(s3.l, s3.idx({"(1 2 3)"})));
  Ctx s4(symmetric_group(4));
  EXPECT_TRUE(is_s_permutable(s4.l, s4.idx({"(1 2)(3 4)", "(1 3)(2 4)"})));
  for (std::size_t n : s4.l.normal_subgroups()) EXPECT_TRUE(is_s_permutable(s4.l, n));
}

TEST(HsG, Examples) {
  Ctx s4(symmetric_group(4));
  const std::size_t v4 = s4.idx({"(1 2)(3 4)", "(1 3)(2 4)"});
  EXPECT_EQ(h_sG(s4.l, v4), s4.l[v4]);
  const std::size_t d8 = s4.idx({"(1 2 3 4)", "(1 3)"});
  EXPECT_EQ(h_sG(s4.l, d8), s4.l[v4]);
  Ctx s3(symmetric_group(3));
  EXPECT_TRUE(h_sG(s3.l, s3.idx({"(1 2)"})).is_trivial());
}

TEST(Supplements, Examples) {
  Ctx s3(symmetric_group(3));
  const auto sup = supplements(s3.l, s3.idx({"(1 2)"}));
  std::vector<std::size_t> expect{s3.l.top(), s3.idx({"(1 2 3)"})};
  EXPECT_EQ(sup, expect);  // descending lattice order
  const auto all = supplements(s3.l, s3.l.top());
  EXPECT_EQ(all.size(), s3.l.size());
}

TEST(Supplements, AlwaysContainTheWholeGroup) {
  for (const auto& e : builtin_corpus()) {
    if (e.order > 60) continue;
    Ctx c(e.build(kDefaultGroupCap));
    for (std::size_t h = 0; h < c.l.size(); ++h) {
      const auto s = supplements(c.l, h);
      ASSERT_FALSE(s.empty());
      ASSERT_EQ(s.front(), c.l.top()) << e.name;
      for (std::size_t t : s) ASSERT_EQ(product_size(c.l[h], c.l[t]), c.g.order());
    }
  }
}

TEST(WeaklySSupplemented, Examples) {
  Ctx s3(symmetric_group(3));
  const auto w = is_weakly_s_supplemented(s3.l, s3.idx({"(1 2)"}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->t, s3.idx({"(1 2 3)"}));
  EXPECT_TRUE(w->intersection.is_trivial());
  Ctx s4(symmetric_group(4));
  EXPECT_FALSE(is_weakly_s_supplemented(s4.l, s4.idx({"(1 2)", "(3 4)"})));
  for (std::size_t n : s4.l.normal_subgroups()) EXPECT_TRUE(is_weakly_s_supplemented(s4.l, n));
}

TEST(WeaklySPermutable, Examples) {
  // A3 is normal, so it is a subnormal supplement of <(1 2)> meeting it trivially.
  Ctx s3(symmetric_group(3));
  const auto w = is_weakly_s_permutable(s3.l, s3.idx({"(1 2)"}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->t, s3.idx({"(1 2 3)"}));
  Ctx s4(symmetric_group(4));
  EXPECT_FALSE(is_weakly_s_permutable(s4.l, s4.idx({"(1 2)", "(3 4)"})));
  Ctx d8c3(direct_product(dihedral_group(8), cyclic_group(3)));
  for (std::size_t h = 0; h < d8c3.l.size(); ++h) {
    if (is_s_permutable(d8c3.l, h)) EXPECT_TRUE(is_weakly_s_permutable(d8c3.l, h));
  }
}

TEST(CNormal, Examples) {
  Ctx s3(symmetric_group(3));
  EXPECT_TRUE(is_c_normal(s3.l, s3.idx({"(1 2)"})));
  Ctx q8(dicyclic_group(8));
  for (std::size_t h = 0; h < q8.l.size(); ++h) EXPECT_TRUE(is_c_normal(q8.l, h));
  Ctx s4(symmetric_group(4));
  EXPECT_TRUE(is_c_normal(s4.l, s4.idx({"(1 2)"})));  // T = A4
  EXPECT_FALSE(is_c_normal(s4.l, s4.idx({"(1 2)", "(3 4)"})));
}

TEST(SupersolvableSupplement, Examples) {
  Ctx d12(dihedral_group(12));
  for (std::size_t h = 0; h < d12.l.size(); ++h) EXPECT_TRUE(has_supersolvable_supplement(d12.l, h));
  Ctx s4(symmetric_group(4));
  const auto w = has_supersolvable_supplement(s4.l, s4.idx({"(1 2)(3 4)", "(1 3)(2 4)"}));
  ASSERT_TRUE(w);
  EXPECT_EQ(s4.l[w->t].order(), 6u);
  Ctx a4(alternating_group(4));
  EXPECT_FALSE(has_supersolvable_supplement(a4.l, a4.idx({"(1 2)(3 4)"})));
}

TEST(Complemented, Examples) {
  Ctx s4(symmetric_group(4));
  EXPECT_TRUE(is_complemented(s4.l, s4.idx({"(1 2)(3 4)", "(1 3)(2 4)"})));
  EXPECT_TRUE(is_complemented(s4.l, s4.l.top()));
  EXPECT_TRUE(is_complemented(s4.l, s4.l.bottom()));
  Ctx c4(cyclic_group(4));
  EXPECT_FALSE(is_complemented(c4.l, 1));
}

TEST(Oracle, MatchesDefinitionsUpTo60) {
  std::size_t compared = 0;
  for (const auto& e : builtin_corpus()) {
    if (e.order > 60) continue;
    Ctx c(e.build(kDefaultGroupCap));
    EmbeddingOracle o(c.l);
    for (std::size_t h = 0; h < c.l.size(); ++h) {
      ASSERT_EQ(o.is_s_permutable(h), ref_s_permutable(c.l, h)) << e.name;
      ASSERT_EQ(c.l[o.h_sG(h)], ref_h_sg(c.l, h)) << e.name;
      ASSERT_EQ(o.weakly_s_supplemented(h).has_value(), ref_embedding(c.l, h, Kind::wss)) << e.name;
      ASSERT_EQ(o.weakly_s_permutable(h).has_value(), ref_embedding(c.l, h, Kind::wsp)) << e.name;
      ASSERT_EQ(o.c_normal(h).has_value(), ref_embedding(c.l, h, Kind::cnormal)) << e.name;
      ASSERT_EQ(o.supersolvable_supplement(h).has_value(), ref_embedding(c.l, h, Kind::ssupp)) << e.name;
      ASSERT_EQ(o.complemented(h).has_value(), ref_embedding(c.l, h, Kind::complemented)) << e.name;
      ++compared;
    }
  }
  EXPECT_GT(compared, 1500u);
}

TEST(Oracle, WitnessInvariantsUpTo100) {
  for (const auto& e : builtin_corpus()) {
    if (e.order > 100) continue;
    Ctx c(e.build(kDefaultGroupCap));
    EmbeddingOracle o(c.l);
    const Subgroup G = c.l[c.l.top()];
    for (std::size_t h = 0; h < c.l.size(); ++h) {
      for (const auto& w : {o.weakly_s_supplemented(h), o.weakly_s_permutable(h), o.c_normal(h),
                            o.supersolvable_supplement(h), o.complemented(h)}) {
        if (!w) continue;
        const Subgroup& T = c.l[w->t];
        ASSERT_EQ(product_size(c.l[h], T), c.g.order()) << e.name;
        ASSERT_EQ(w->intersection, intersect(c.l[h], T)) << e.name;
        if (w->property != Embedding::supersolvable_supplement) ASSERT_TRUE(w->bound.contains(w->intersection));
        if (w->property == Embedding::complemented) ASSERT_TRUE(w->intersection.is_trivial());
        if (w->property == Embedding::weakly_s_permutable) ASSERT_TRUE(is_subnormal(G, T));
        if (w->property == Embedding::c_normal) ASSERT_TRUE(is_normal(G, T));
        if (w->property == Embedding::supersolvable_supplement) ASSERT_TRUE(is_supersolvable(T));
      }
    }
  }
}

TEST(Oracle, HsGIsJoinCoherent) {
  for (const auto& e : builtin_corpus()) {
    if (e.order > 100) continue;
    Ctx c(e.build(kDefaultGroupCap));
    EmbeddingOracle o(c.l);
    for (std::size_t h = 0; h < c.l.size(); ++h) {
      const std::size_t hs = o.h_sG(h);
      ASSERT_TRUE(c.l.contains(h, hs));
      ASSERT_EQ(o.h_sG(hs), hs) << e.name;
      ASSERT_TRUE(o.is_s_permutable(hs)) << e.name;  // joins of s-permutable subgroups are s-permutable
      for (std::size_t k = 0; k < c.l.size(); ++k) {
        if (c.l.contains(h, k) && o.is_s_permutable(k)) ASSERT_TRUE(c.l.contains(hs, k)) << e.name;
      }
    }
  }
}

TEST(Oracle, AmbientSubgroup) {
  // Inside the nilpotent ambient D8 every subgroup is s-permutable.
  Ctx s4(symmetric_group(4));
  EmbeddingOracle o(s4.l);
  const std::size_t d8 = s4.idx({"(1 2 3 4)", "(1 3)"});
  const std::size_t t = s4.idx({"(1 3)"});
  EXPECT_TRUE(o.weakly_s_supplemented(t, d8).has_value());
  EXPECT_TRUE(o.is_s_permutable(t, d8));
  EXPECT_FALSE(o.is_s_permutable(t));
}
