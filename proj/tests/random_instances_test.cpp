#include "schurhr/bundle.hpp"
#include "schurhr/random_instances.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace schurhr;

TEST(InstanceSeed, DeterministicAndSpread) {
  EXPECT_EQ(instance_seed(42, 7), instance_seed(42, 7));
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(instance_seed(42, i));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(instance_seed(1, 0), instance_seed(2, 0));
}

TEST(RandomRational, InRangeAndCanonical) {
  Rng rng(91);
  for (int k = 0; k < 500; ++k) {
    const Rational q = random_rational(rng, Rational(-1, 2), 3, 6);
    EXPECT_GE(q, Rational(-1, 2));
    EXPECT_LE(q, 3);
    Rational c = q;
    c.canonicalize();
    EXPECT_EQ(c.get_num(), q.get_num());
    EXPECT_EQ(c.get_den(), q.get_den());
    EXPECT_LE(q.get_den(), 6);
  }
  EXPECT_THROW(random_rational(rng, 1, 0), std::invalid_argument);
}

TEST(RandomSpace, Bounds) {
  Rng rng(92);
  for (int k = 0; k < 200; ++k) {
    const Space s = random_space(rng, 2, 6, 3);
    EXPECT_GE(s.dimension(), 2);
    EXPECT_LE(s.dimension(), 6);
    EXPECT_LE(s.factor_count(), 3u);
  }
}

TEST(RandomPartition, Bounds) {
  Rng rng(93);
  for (int k = 0; k < 200; ++k) {
    const int w = uniform_int(rng, 0, 8);
    const Partition p = random_partition(rng, w, 4, 3);
    EXPECT_EQ(p.weight(), w > 12 ? -1 : w);
    EXPECT_LE(p.length(), 4u);
    EXPECT_LE(p.largest(), 3);
  }
  EXPECT_THROW(random_partition(rng, 13, 4, 3), std::invalid_argument);
}

TEST(RandomClasses, NefClassesAreNef) {
  Rng rng(94);
  for (int k = 0; k < 100; ++k) {
    const Space s = random_space(rng, 1, 6, 3);
    EXPECT_TRUE(is_nef_class(random_nef_class(rng, s)));
    EXPECT_EQ(random_degree1_class(rng, s, -3, 3).degree() <= 1, true);
  }
}

TEST(RandomStreams, ReproducibleFromSeed) {
  Rng a(instance_seed(5, 3)), b(instance_seed(5, 3));
  const Space sa = random_space(a, 1, 6, 3), sb = random_space(b, 1, 6, 3);
  EXPECT_EQ(sa, sb);
  EXPECT_EQ(to_string(random_rational(a, 0, 1)), to_string(random_rational(b, 0, 1)));
}
