#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "unicount/composition.hpp"
#include "unicount/errors.hpp"
#include "unicount/partitions.hpp"
#include "unicount/subspace_counts.hpp"

using namespace unicount;

TEST_CASE("partition basics") {
  const Partition pi({1, 2});  // sorted on construction
  CHECK_EQ(pi.parts(), std::vector<int>{2, 1});
  CHECK_EQ(pi.n(), 3);
  CHECK_EQ(pi.num_parts(), 2);
  CHECK_EQ(pi.max_part(), 2);
  CHECK_EQ(pi.multiplicity(1), 1);
  CHECK_EQ(pi.multiplicity(2), 1);
  CHECK_EQ(pi.multiplicity(3), 0);
  CHECK_EQ(pi.parts_above(0), 2);
  CHECK_EQ(pi.parts_above(1), 1);
  CHECK_EQ(pi.parts_above(2), 0);
  CHECK_EQ(pi.str(), "(2,1)");
  CHECK_EQ(Partition().str(), "()");
  CHECK_THROWS_AS(Partition({2, 0}), InvalidInputError);
  CHECK_THROWS_AS(Partition({-1}), InvalidInputError);
}

TEST_CASE("partition from multiplicities") {
  // one part of size 1, one of size 3
  CHECK_EQ(Partition::from_multiplicities({1, 0, 1}), Partition({3, 1}));
  CHECK_EQ(Partition::from_multiplicities({}), Partition());
}

TEST_CASE("partitions_of enumerates reverse-lexicographically") {
  CHECK_EQ(partitions_of(0), std::vector<Partition>{Partition()});
  const std::vector<Partition> expected = {
      Partition({4}), Partition({3, 1}), Partition({2, 2}),
      Partition({2, 1, 1}), Partition({1, 1, 1, 1})};
  CHECK_EQ(partitions_of(4), expected);
  CHECK_EQ(partitions_of(8).size(), 22);
  SUBCASE("all distinct and of the right size") {
    const auto all = partitions_of(6);
    CHECK_EQ(all.size(), 11);
    std::set<std::vector<int>> seen;
    for (const Partition& p : all) {
      CHECK_EQ(p.n(), 6);
      seen.insert(p.parts());
    }
    CHECK_EQ(seen.size(), all.size());
  }
}

TEST_CASE("compositions") {
  CHECK_EQ(BlockComposition({1, 2, 1}).str(), "(1,2,1)");
  CHECK_EQ(BlockComposition::borel(3).blocks(), std::vector<int>{1, 1, 1});
  CHECK_THROWS_AS(BlockComposition({1, 0}), InvalidInputError);
  SUBCASE("all compositions of n") {
    const auto comps = compositions_of(4);
    CHECK_EQ(comps.size(), 8);  // 2^(n-1)
    std::set<std::vector<int>> seen;
    for (const BlockComposition& c : comps) {
      CHECK_EQ(c.n(), 4);
      seen.insert(c.blocks());
    }
    CHECK_EQ(seen.size(), comps.size());
    CHECK(seen.count({4}));
    CHECK(seen.count({1, 1, 1, 1}));
    CHECK(seen.count({2, 1, 1}));
  }
  CHECK_EQ(compositions_of(0).size(), 1);
}

TEST_CASE("dimension vectors") {
  const DimVector d = DimVector::from_blocks(BlockComposition({1, 2, 1}));
  CHECK_EQ(d.dims(), std::vector<int>{1, 3, 4});
  CHECK_EQ(d.ambient(), 4);
  CHECK_EQ(d.levels(), 3);
  CHECK_EQ(d.dim(0), 1);
  CHECK_EQ(d.block_sizes(), std::vector<int>{1, 2, 1});
  CHECK_EQ(d.quotient_by_first().dims(), std::vector<int>{2, 3});
  CHECK_EQ(DimVector::complete(3).dims(), std::vector<int>{1, 2, 3});
  CHECK_EQ(DimVector().ambient(), 0);
  CHECK_THROWS_AS(DimVector({2, 2}), InvalidInputError);
  CHECK_THROWS_AS(DimVector({3, 1}), InvalidInputError);
  CHECK_THROWS_AS(DimVector({0, 1}), InvalidInputError);
}

TEST_CASE("gaussian binomials") {
  CHECK_EQ(gaussian_binomial(4, 2), Polynomial({1, 1, 2, 1, 1}));
  CHECK_EQ(gaussian_binomial(3, 1), Polynomial({1, 1, 1}));
  CHECK_EQ(gaussian_binomial(5, 0), Polynomial::one());
  CHECK_EQ(gaussian_binomial(5, 5), Polynomial::one());
  CHECK(gaussian_binomial(3, 4).is_zero());
  CHECK(gaussian_binomial(3, -1).is_zero());
  SUBCASE("symmetry and Pascal identity") {
    for (int n = 0; n <= 7; ++n)
      for (int k = 0; k <= n; ++k) {
        CHECK_EQ(gaussian_binomial(n, k), gaussian_binomial(n, n - k));
        if (n > 0 && k > 0)
          CHECK_EQ(gaussian_binomial(n, k),
                   gaussian_binomial(n - 1, k - 1) +
                       Polynomial::monomial(k) * gaussian_binomial(n - 1, k));
      }
  }
  SUBCASE("evaluation at 1 gives the ordinary binomial") {
    CHECK_EQ(gaussian_binomial(6, 3).eval(Int(1)), 20);
    CHECK_EQ(gaussian_binomial(8, 2).eval(Int(1)), 28);
  }
}

TEST_CASE("subspaces avoiding a fixed subspace") {
  // q^(m*l) [n-m choose l]
  CHECK_EQ(count_avoiding_subspaces(3, 1, 1),
           Polynomial::monomial(1) * gaussian_binomial(2, 1));
  CHECK_EQ(count_avoiding_subspaces(4, 2, 2), Polynomial::monomial(4));
  CHECK_EQ(count_avoiding_subspaces(3, 0, 2), gaussian_binomial(3, 2));
  CHECK_EQ(count_avoiding_subspaces(5, 2, 0), Polynomial::one());
  CHECK(count_avoiding_subspaces(3, 2, 2).is_zero());
  CHECK_THROWS_AS(count_avoiding_subspaces(2, 3, 1), InvalidInputError);
  CHECK_THROWS_AS(count_avoiding_subspaces(-1, 0, 0), InvalidInputError);
}

TEST_CASE("subspaces with a prescribed flag intersection profile") {
  SUBCASE("single level is a plain subspace count") {
    CHECK_EQ(count_flag_profile_subspaces({3}, {2}), gaussian_binomial(3, 2));
  }
  SUBCASE("avoiding the first flag step") {
    // 1-dim subspaces of F^3 meeting a fixed line trivially
    CHECK_EQ(count_flag_profile_subspaces({1, 3}, {0, 1}), Polynomial({0, 1, 1}));
  }
  SUBCASE("containing the whole flag") {
    CHECK_EQ(count_flag_profile_subspaces({1, 3}, {1, 1}), Polynomial::one());
  }
  SUBCASE("repeated flag dimensions force equal profile entries") {
    // the flag step is the same space twice, so the profile cannot jump
    CHECK_EQ(count_flag_profile_subspaces({2, 2}, {1, 1}),
             gaussian_binomial(2, 1));
    CHECK(count_flag_profile_subspaces({2, 2}, {0, 1}).is_zero());
  }
  SUBCASE("unrealizable profiles give zero") {
    CHECK(count_flag_profile_subspaces({1, 3}, {1, 0}).is_zero());   // decreasing
    CHECK(count_flag_profile_subspaces({1, 3}, {2, 2}).is_zero());   // exceeds dim
    CHECK(count_flag_profile_subspaces({1, 3}, {0, 3}).is_zero());   // jump too big
  }
  SUBCASE("length mismatch throws") {
    CHECK_THROWS_AS(count_flag_profile_subspaces({1, 2}, {1}),
                    DimensionMismatchError);
  }
  SUBCASE("non-nondecreasing flag dims throw") {
    CHECK_THROWS_AS(count_flag_profile_subspaces({3, 1}, {1, 1}),
                    InvalidInputError);
  }
}
