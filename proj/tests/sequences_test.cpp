#include "schurhr/random_instances.hpp"
#include "schurhr/schur.hpp"
#include "schurhr/sequences.hpp"

#include <gtest/gtest.h>

using namespace schurhr;

namespace {

std::vector<Rational> q(std::initializer_list<int> v) { return std::vector<Rational>(v.begin(), v.end()); }

} // namespace

TEST(LogConcave, Examples) {
  EXPECT_TRUE(is_log_concave(q({1, 2, 3, 2, 1})));
  EXPECT_FALSE(is_log_concave(q({1, 1, 2})));
  EXPECT_TRUE(is_log_concave(q({1, 3, 3, 1})));
  EXPECT_TRUE(is_ultra_log_concave(q({1, 3, 3, 1})));
  std::string why;
  EXPECT_FALSE(is_log_concave(q({1, -1, 1}), &why));
  EXPECT_NE(why.find("negative"), std::string::npos);
}

TEST(LogConcave, InteriorZerosUseBareInequality) {
  EXPECT_FALSE(is_log_concave(q({1, 0, 1})));
  EXPECT_TRUE(is_log_concave(q({1, 0, 0, 1})));
  EXPECT_TRUE(is_log_concave(q({0, 0, 5, 0})));
}

TEST(LogConcave, UltraImpliesPlain) {
  Rng rng(51);
  for (int k = 0; k < 300; ++k) {
    const auto v = random_rational_vector(rng, static_cast<std::size_t>(uniform_int(rng, 1, 6)), 0, 5, 3);
    if (is_ultra_log_concave(v)) EXPECT_TRUE(is_log_concave(v));
  }
}

TEST(DerivedValueSequence, Examples) {
  const std::vector<Rational> ones{1, 1};
  const Sequence s = derived_value_sequence(Partition{1, 1}, ones);
  EXPECT_EQ(s.values, q({3, 6, 3}));
  EXPECT_EQ(s.start, 0);
  const std::vector<Rational> zero(3);
  const Sequence z = derived_value_sequence(Partition{2, 1}, zero);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(z.at(i), 0);
  EXPECT_GT(z.at(3), 0);
  EXPECT_EQ(z.at(-1), 0);
  EXPECT_EQ(z.at(9), 0);
}

TEST(DerivedValueSequence, RandomPointsLogConcave) {
  Rng rng(52);
  for (int k = 0; k < 300; ++k) {
    const auto e = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    const Partition lambda = random_partition(rng, uniform_int(rng, 1, 6), 6, static_cast<int>(e));
    const auto x = random_rational_vector(rng, e, 0, 10, 5);
    EXPECT_TRUE(is_log_concave(derived_value_sequence(lambda, x))) << lambda.to_string();
  }
}

TEST(DerivedValueSequence, SingleRowIsUltraLogConcave) {
  Rng rng(53);
  for (int e = 1; e <= 5; ++e)
    for (int k = 0; k < 20; ++k) {
      const auto x = random_rational_vector(rng, static_cast<std::size_t>(e), 0, 10, 5);
      EXPECT_TRUE(is_ultra_log_concave(derived_value_sequence(Partition{e}, x).values));
    }
}

TEST(PairValueSequence, Examples) {
  const std::vector<Rational> one{1};
  // lambda = mu = (1), d = 2: i = 0..1, s^(i)(1) s^(i)(1)
  const Sequence s = pair_value_sequence(Partition{1}, Partition{1}, 2, one, one);
  ASSERT_EQ(s.values.size(), 2u);
  EXPECT_EQ(s.values[0], 1);
  EXPECT_EQ(s.values[1], 1);
  EXPECT_THROW(pair_value_sequence(Partition{1}, Partition{1}, 3, one, one), std::invalid_argument);
  const std::vector<Rational> zero{0, 0};
  EXPECT_TRUE(is_log_concave(pair_value_sequence(Partition{2}, Partition{1, 1}, 2, zero, zero)));
}

TEST(PairValueSequence, RandomPointsLogConcave) {
  Rng rng(54);
  for (int k = 0; k < 200; ++k) {
    const auto x = random_rational_vector(rng, 3, 0, 10, 5);
    const auto y = random_rational_vector(rng, 3, 0, 10, 5);
    EXPECT_TRUE(is_log_concave(pair_value_sequence(Partition{2, 1}, Partition{1, 1}, 4, x, y)));
  }
}
