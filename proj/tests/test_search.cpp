#include <gtest/gtest.h>

#include "softtop/search.hpp"
#include "support.hpp"

using namespace softtop;
using softtop::testing::labels;
using softtop::testing::space;
using softtop::testing::topo;

TEST(RandomSpace, DeterministicAndValid) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SearchSpec spec{3, 2, seed, 1, 0.5};
    const SoftTopology a = random_space(spec);
    EXPECT_EQ(a, random_space(spec));
    EXPECT_TRUE(validate_topology(a.context_ref(), a.members()));
  }
}

TEST(RandomSpace, ZeroDensityIsIndiscrete) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) EXPECT_EQ(random_space({2, 2, seed, 1, 0.0}).size(), 2u);
}

TEST(RandomSpace, SpecValidation) {
  EXPECT_THROW(random_space({5, 4, 0, 1, 0.5}), CapExceeded);
  EXPECT_THROW(random_space({0, 2, 0, 1, 0.5}), InvalidArgument);
  EXPECT_THROW(random_space({2, 2, 0, 1, 1.5}), InvalidArgument);
  EXPECT_THROW(search_separation({2, 2, 0, 0, 0.5}, SetClass::open, SetClass::open), InvalidArgument);
}

TEST(CloseFamily, ClosedUnderPairs) {
  const auto c = SoftContext::numbered(3, 1);
  const auto fam = close_family(*c, {0b001, 0b110});
  EXPECT_EQ(fam, (std::vector<Mask>{0, 0b001, 0b110, 0b111}));
}

TEST(SeparatingSet, Examples) {
  const SpaceFile f = space(kEx33);
  const SoftTopology tau = topo(kEx33);
  const auto pre = find_separating_set(tau, SetClass::pre_open, SetClass::alpha_open);
  ASSERT_TRUE(pre);
  EXPECT_TRUE(in_class(tau, f.set("H"), SetClass::pre_open) && !in_class(tau, f.set("H"), SetClass::alpha_open));
  EXPECT_TRUE(find_separating_set(tau, SetClass::beta_open, SetClass::semi_open));
  EXPECT_LE(pre->bits(), f.set("H").bits());
  EXPECT_FALSE(find_separating_set(discrete(SoftContext::numbered(3, 2)), SetClass::beta_open, SetClass::open));
}

TEST(NonclosedPair, Examples) {
  const auto inter = find_nonclosed_pair(topo(kEx36), SetClass::beta_open, FamilyOp::intersection_op);
  ASSERT_TRUE(inter);
  const auto uni = find_nonclosed_pair(topo(kEx38), SetClass::beta_closed, FamilyOp::union_op);
  ASSERT_TRUE(uni);
  for (const auto& tau : corpus::golden_spaces()) {
    if (!tau.context().enumerable()) continue;
    EXPECT_FALSE(find_nonclosed_pair(tau, SetClass::beta_open, FamilyOp::union_op));
  }
  const SpaceFile f = space(kEx36);
  const Witness w{topo(kEx36), std::make_pair(f.set("G"), f.set("H")),
                  Claim{ClaimKind::intersection_not_closed, SetClass::beta_open, SetClass::beta_open}};
  EXPECT_TRUE(reverify(w));
  const SpaceFile g = space(kEx38);
  const Witness v{topo(kEx38), std::make_pair(g.set("G"), g.set("H")),
                  Claim{ClaimKind::union_not_closed, SetClass::beta_closed, SetClass::beta_closed}};
  EXPECT_TRUE(reverify(v));
}

TEST(Search, FindsPreNotAlphaWitness) {
  const SearchOutcome out = search_separation({3, 2, 0, 200, 0.5}, SetClass::pre_open, SetClass::alpha_open);
  ASSERT_TRUE(out.witness);
  EXPECT_TRUE(reverify(*out.witness));
  EXPECT_EQ(out.trial_seed, out.trial);
  const SearchOutcome again = search_separation({3, 2, 0, 200, 0.5}, SetClass::pre_open, SetClass::alpha_open);
  EXPECT_EQ(std::get<SoftSet>(again.witness->subject), std::get<SoftSet>(out.witness->subject));
  EXPECT_EQ(again.witness->space, out.witness->space);
}

TEST(Search, ImplicationNeverSeparates) {
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    const SearchOutcome out = search_separation({3, 2, seed, 50, 0.5}, SetClass::open, SetClass::beta_open);
    EXPECT_FALSE(out.witness);
    EXPECT_EQ(out.trial, 50u);
  }
}

TEST(Reverify, RejectsWrongClaim) {
  const SpaceFile f = space(kEx33);
  const Witness w{topo(kEx33), f.set("H"), Claim{ClaimKind::separates, SetClass::alpha_open, SetClass::pre_open}};
  EXPECT_FALSE(reverify(w));
}

TEST(RandomSpace, PinnedVectors) {
  std::mt19937_64 rng(0);
  EXPECT_EQ(rng(), 2947667278772165694ULL);
  EXPECT_EQ(rng(), 18301848765998365067ULL);
  EXPECT_EQ(random_space({3, 2, 0, 1, 0.5}).open_masks(),
            (std::vector<Mask>{0, 1, 2, 3, 7, 9, 11, 15, 18, 19, 23, 27, 31, 63}));
  EXPECT_EQ(random_space({3, 2, 1, 1, 0.5}).open_masks(), (std::vector<Mask>{0, 47, 63}));
  EXPECT_EQ(random_space({3, 2, 42, 1, 0.5}).open_masks(), (std::vector<Mask>{0, 4, 15, 16, 20, 31, 48, 52, 63}));
}

TEST(Search, ProvenImplicationsNeverSeparate) {
  for (const auto& [from, to] : corpus::kHierarchyImplications) {
    const SearchOutcome out = search_separation({3, 2, 11, 60, 0.5}, from, to);
    EXPECT_FALSE(out.witness) << to_string(from) << " => " << to_string(to);
  }
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const SoftTopology tau = random_space({3, 2, seed, 1, 0.5});
    EXPECT_FALSE(find_nonclosed_pair(tau, SetClass::beta_open, FamilyOp::union_op));
    EXPECT_FALSE(find_nonclosed_pair(tau, SetClass::beta_closed, FamilyOp::intersection_op));
  }
}
