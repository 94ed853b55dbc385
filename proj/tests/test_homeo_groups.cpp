#include <gtest/gtest.h>

#include "softtop/homeo_groups.hpp"
#include "support.hpp"

using namespace softtop;
using softtop::testing::topo;

namespace {

std::size_t order(const SoftTopology& tau, HomeoKind k) { return build_collection(tau, k).elements.size(); }

}  // namespace

TEST(HomeoKindNames, Parse) {
  for (HomeoKind k : kAllHomeoKinds) EXPECT_EQ(parse_homeo_kind(to_string(k)), k);
  EXPECT_EQ(parse_homeo_kind("beta"), HomeoKind::beta_homeo);
  EXPECT_THROW(parse_homeo_kind("gamma"), InvalidArgument);
}

TEST(ClassifyBijection, Identity) {
  for (const auto& tau : corpus::golden_spaces()) {
    if (!tau.context().enumerable()) continue;
    const auto tags = classify_bijection(identity_permutation(tau.context().universe_size()), tau);
    for (HomeoKind k : kAllHomeoKinds) EXPECT_TRUE(tags.contains(k));
  }
}

TEST(ClassifyBijection, TranspositionOnTwoPointSpaceHasNoTag) {
  const auto tags = classify_bijection({1, 0}, topo(kEx36));
  for (HomeoKind k : kAllHomeoKinds) EXPECT_FALSE(tags.contains(k));
}

TEST(ClassifyBijection, IndiscreteAcceptsEveryPermutation) {
  const SoftTopology tau = topo(kIndiscrete3);
  Permutation p = identity_permutation(3);
  do {
    EXPECT_TRUE(classify_bijection(p, tau).contains(HomeoKind::beta_irresolute_homeo));
  } while (std::next_permutation(p.begin(), p.end()));
  EXPECT_THROW(classify_bijection({0, 0, 1}, tau), InvalidArgument);
}

TEST(Collections, FrozenOrders) {
  const SoftTopology t33 = topo(kEx33);
  EXPECT_EQ(order(t33, HomeoKind::soft_homeo), 1u);
  EXPECT_EQ(order(t33, HomeoKind::beta_homeo), 3u);
  EXPECT_EQ(order(t33, HomeoKind::beta_irresolute_homeo), 1u);
  const SoftTopology t44 = topo(kEx44_X);
  for (HomeoKind k : kAllHomeoKinds) EXPECT_EQ(order(t44, k), 2u);
  for (HomeoKind k : kAllHomeoKinds) {
    EXPECT_EQ(order(topo(kIndiscrete3), k), 6u);
    EXPECT_EQ(order(topo(kEx43_Y), k), 6u);
  }
}

TEST(Collections, BoundEnforced) {
  const auto c = SoftContext::numbered(7, 1);
  EXPECT_THROW(build_collection(indiscrete(c), HomeoKind::soft_homeo), CapExceeded);
}

TEST(Group, SymmetricGroupOnIndiscreteSpace) {
  const GroupBuild g = build_group(build_collection(topo(kIndiscrete3), HomeoKind::beta_irresolute_homeo));
  ASSERT_TRUE(g);
  EXPECT_EQ(g.table->order(), 6u);
  EXPECT_TRUE(verify_group_axioms(*g.table).all());
  EXPECT_EQ(g.table->elements[g.table->identity_index], identity_permutation(3));
  // cayley[i][j] = elements_j o elements_i
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      EXPECT_EQ(g.table->elements[g.table->cayley[i][j]], then(g.table->elements[i], g.table->elements[j]));
    }
    EXPECT_EQ(g.table->cayley[i][g.table->inverse[i]], g.table->identity_index);
  }
}

TEST(Group, BetaHomeoCollectionMayFailClosure) {
  const GroupBuild g = build_group(build_collection(topo(kEx33), HomeoKind::beta_homeo));
  ASSERT_FALSE(g);
  EXPECT_EQ(g.failure->reason, "not closed under composition");
}

TEST(Subgroup, PositiveAndNegative) {
  const GroupTable s3 = *build_group(build_collection(topo(kIndiscrete3), HomeoKind::beta_irresolute_homeo)).table;
  EXPECT_TRUE(is_subgroup({identity_permutation(3)}, s3));
  EXPECT_TRUE(is_subgroup({identity_permutation(3), {1, 0, 2}}, s3));
  EXPECT_TRUE(is_subgroup({identity_permutation(3), {1, 2, 0}, {2, 0, 1}}, s3));
  std::vector<Permutation> dropped = s3.elements;
  dropped.erase(dropped.begin() + 1);
  const SubgroupCheck bad = is_subgroup(dropped, s3);
  EXPECT_FALSE(bad);
  EXPECT_FALSE(bad.reason.empty());
  EXPECT_FALSE(is_subgroup({{1, 0, 2}}, s3));
}

TEST(Subgroup, SoftHomeosInsideBetaIrresolute) {
  for (const auto& tau : corpus::random_spaces(40, 77, 4, 2)) {
    const auto sh = build_group(build_collection(tau, HomeoKind::soft_homeo));
    const auto sbr = build_group(build_collection(tau, HomeoKind::beta_irresolute_homeo));
    ASSERT_TRUE(sh);
    ASSERT_TRUE(sbr);
    EXPECT_TRUE(verify_group_axioms(*sbr.table).all());
    EXPECT_TRUE(is_subgroup(*sh.table, *sbr.table));
    const auto sb = build_collection(tau, HomeoKind::beta_homeo).elements;
    for (const auto& p : sbr.table->elements) EXPECT_TRUE(std::binary_search(sb.begin(), sb.end(), p));
  }
}

TEST(Conjugation, IdentityAndSymmetricGroup) {
  const SoftTopology tau = topo(kIndiscrete3);
  const GroupTable s3 = *build_group(build_collection(tau, HomeoKind::beta_irresolute_homeo)).table;
  const ConjugationCheck id = conjugation_iso(SoftMapping::identity(tau.context_ref()), s3, s3);
  EXPECT_TRUE(id.is_isomorphism());
  for (std::size_t i = 0; i < s3.order(); ++i) EXPECT_EQ(id.mapping[i], i);

  const SoftMapping t(tau.context_ref(), tau.context_ref(), {1, 0, 2});
  const ConjugationCheck c = conjugation_iso(t, s3, s3);
  EXPECT_TRUE(c.is_isomorphism());
  EXPECT_EQ(conjugate(t, {1, 2, 0}), (Permutation{2, 0, 1}));
  for (const auto& g : s3.elements) {
    const SoftMapping gm = as_self_map(tau, g);
    EXPECT_TRUE(conjugation_functorial(t, gm, s3));
  }
}

TEST(Conjugation, RejectsNonHomeomorphism) {
  const SoftTopology tau = topo(kEx36);
  const GroupTable g = *build_group(build_collection(tau, HomeoKind::beta_irresolute_homeo)).table;
  EXPECT_THROW(conjugation_iso(SoftMapping(tau.context_ref(), tau.context_ref(), {1, 0}), g, g), InvalidArgument);
}

// Inclusion chain for bijections between two different spaces.
TEST(Inclusion, BetweenDistinctSpaces) {
  const auto spaces = corpus::random_spaces(30, 313, 3, 2);
  for (const auto& x : spaces) {
    for (const auto& y : spaces) {
      if (x.context().universe_size() != y.context().universe_size() ||
          x.context().param_count() != y.context().param_count()) {
        continue;
      }
      const auto cy = SoftContext::make(
          [&] {
            std::vector<std::string> u;
            for (const auto& l : y.context().universe()) u.push_back("y" + l.substr(1));
            return u;
          }(),
          y.context().params());
      const SoftTopology ty = SoftTopology::trusted(cy, y.open_masks());
      const HomeoTester tester(x, ty);
      Permutation p = identity_permutation(x.context().universe_size());
      do {
        const SoftMapping f(x.context_ref(), cy, p);
        const HomeoKindSet k = tester.classify(f);
        if (k.contains(HomeoKind::soft_homeo)) {
          EXPECT_TRUE(k.contains(HomeoKind::beta_irresolute_homeo));
        }
        if (k.contains(HomeoKind::beta_irresolute_homeo)) {
          EXPECT_TRUE(k.contains(HomeoKind::beta_homeo));
        }
      } while (std::next_permutation(p.begin(), p.end()));
    }
  }
}
