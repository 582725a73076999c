#include "schurhr/polya.hpp"
#include "schurhr/quadform.hpp"
#include "schurhr/random_instances.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace schurhr;

namespace {

std::vector<Rational> q(std::initializer_list<int> v) { return std::vector<Rational>(v.begin(), v.end()); }

// All minors of the rows x cols lower-triangular Toeplitz section, brute force.
bool all_section_minors_nonnegative(std::span<const Rational> mu, int size) {
  const int n = size;
  for (unsigned rmask = 1; rmask < (1u << n); ++rmask)
    for (unsigned cmask = 1; cmask < (1u << n); ++cmask) {
      if (__builtin_popcount(rmask) != __builtin_popcount(cmask)) continue;
      std::vector<int> rows, cols;
      for (int i = 0; i < n; ++i) {
        if (rmask >> i & 1u) rows.push_back(i);
        if (cmask >> i & 1u) cols.push_back(i);
      }
      if (toeplitz_minor(mu, rows, cols) < 0) return false;
    }
  return true;
}

} // namespace

TEST(PolyaMinors, Examples) {
  EXPECT_TRUE(polya_check_minors(q({1, 2, 1})));
  EXPECT_FALSE(polya_check_minors(q({1, 0, 1})));
  EXPECT_TRUE(polya_check_minors(q({1})));
  EXPECT_FALSE(polya_check_minors(q({1, 1, 1})));
  EXPECT_THROW(polya_check_minors(q({1, -1})), std::invalid_argument);
  EXPECT_THROW(polya_check_minors(std::vector<Rational>(9, Rational(1))), std::invalid_argument);
}

TEST(PolyaMinors, ExplicitNegativeMinor) {
  const auto mu = q({1, 0, 1});
  const std::vector<int> rows{1, 2}, cols{0, 1};
  EXPECT_EQ(toeplitz_minor(mu, rows, cols), -1);
}

TEST(PolyaMinors, DefaultRowBounds) {
  const std::vector<int> want{400, 400, 400, 104, 44, 26, 19, 15};
  for (std::size_t len = 1; len <= 8; ++len) EXPECT_EQ(polya_default_rows(len), want[len - 1]) << len;
}

TEST(PolyaMinors, SmallSectionCannotDecide) {
  // every minor of the 3x3 section of 1 + z + z^2 is nonnegative
  EXPECT_TRUE(all_section_minors_nonnegative(q({1, 1, 1}), 3));
  EXPECT_FALSE(all_section_minors_nonnegative(q({1, 1, 1}), 4));
  EXPECT_FALSE(polya_check_roots(q({1, 1, 1})));
}

TEST(PolyaMinors, AgreesWithBruteForceOnSections) {
  // A row bound n sees every minor of the n x n section and more (minors of
  // the infinite matrix may spread wider than n), so passing implies the
  // section passes, and larger bounds only get stricter.
  Rng rng(71);
  int section_only = 0;
  for (int k = 0; k < 60; ++k) {
    std::vector<Rational> mu(static_cast<std::size_t>(uniform_int(rng, 2, 4)));
    for (auto& v : mu) v = uniform_int(rng, 0, 4);
    if (mu[0] == 0) mu[0] = 1;
    const int n = uniform_int(rng, 2, 5);
    const bool fast = polya_check_minors(mu, n);
    const bool section = all_section_minors_nonnegative(mu, n);
    if (fast) EXPECT_TRUE(section) << k;
    section_only += section && !fast;
    if (polya_check_minors(mu, n + 1)) EXPECT_TRUE(fast) << k;
  }
  EXPECT_GT(section_only, 0);
}

TEST(PolyaRoots, Examples) {
  EXPECT_TRUE(polya_check_roots(q({1, 2, 1})));
  EXPECT_FALSE(polya_check_roots(q({1, 0, 1})));
  EXPECT_TRUE(polya_check_roots(q({2, 3, 1})));
  EXPECT_TRUE(polya_check_roots(q({0, 0, 1, 1})));
}

TEST(Polya, RoutesAgreeOnRandomSequences) {
  Rng rng(72);
  for (int k = 0; k < 150; ++k) {
    std::vector<Rational> mu(static_cast<std::size_t>(uniform_int(rng, 1, 5)));
    for (auto& v : mu) v = uniform_int(rng, 0, 6);
    EXPECT_EQ(polya_check_minors(mu), polya_check_roots(mu)) << k;
  }
}

TEST(Polya, ProductsOfLinearFactorsArePf) {
  Rng rng(73);
  for (int k = 0; k < 20; ++k) {
    std::vector<Rational> mu{1};
    for (int f = uniform_int(rng, 1, 4); f > 0; --f) {
      const Rational t = random_rational(rng, Rational(1, 4), 4, 4);
      std::vector<Rational> next(mu.size() + 1);
      for (std::size_t i = 0; i < mu.size(); ++i) {
        next[i] += mu[i];
        next[i + 1] += t * mu[i];
      }
      mu = next;
    }
    EXPECT_TRUE(polya_check_roots(mu));
    EXPECT_TRUE(polya_check_minors(mu));
  }
}

TEST(PolyaCombination, UnitSequenceGivesSchurClass) {
  const Space space({2, 3});
  const SplitBundle e(space, {{1, 0}, {1, 0}, {0, 1}});
  const CohClass h = CohClass::linear(space, std::vector<Rational>{1, 1});
  EXPECT_EQ(polya_combination_class(Partition{2, 1}, e, h, q({1, 0, 0})), schur_class(Partition{2, 1}, e));
  EXPECT_THROW(polya_combination_class(Partition{2}, e, h, q({1})), std::invalid_argument);
  EXPECT_THROW(polya_combination_class(Partition{2, 1}, e, h * h, q({1})), std::invalid_argument);
}

TEST(PolyaCombination, BinomialRowGivesWeakHr) {
  const Space space({2, 3});
  const SplitBundle e(space, {{1, 0}, {1, 0}, {0, 1}});
  const CohClass h = CohClass::linear(space, std::vector<Rational>{1, 1});
  for (const auto& mu : {q({1, 1}), q({1, 2, 1}), q({1, 3, 3, 1})}) {
    const CohClass omega = polya_combination_class(Partition{2, 1}, e, h, mu);
    EXPECT_TRUE(is_weak_hr(intersection_form(omega, space)));
  }
}
