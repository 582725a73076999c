#include "schurhr/bundle.hpp"
#include "schurhr/random_instances.hpp"
#include "schurhr/schur.hpp"

#include <gtest/gtest.h>

using namespace schurhr;

namespace {

const Space kP2P3({2, 3});

CohClass a() { return CohClass::hyperplane(kP2P3, 0); }
CohClass b() { return CohClass::hyperplane(kP2P3, 1); }

// O(1,0) + O(1,0) + O(0,1)
SplitBundle example_bundle() { return SplitBundle(kP2P3, {{1, 0}, {1, 0}, {0, 1}}); }

} // namespace

TEST(SplitBundle, Validation) {
  EXPECT_THROW(SplitBundle(kP2P3, {{1}}), std::invalid_argument);
  EXPECT_THROW(SplitBundle(kP2P3, {}), std::invalid_argument);
  EXPECT_THROW(SplitBundle(kP2P3, {{1, 0}}, {Rational(1)}), std::invalid_argument);
}

TEST(Chern, ExampleBundle) {
  const SplitBundle e = example_bundle();
  EXPECT_EQ(chern(e, 0), CohClass::unit(kP2P3));
  EXPECT_EQ(chern(e, 1), Rational(2) * a() + b());
  EXPECT_EQ(chern(e, 3), a() * a() * b());
  EXPECT_TRUE(chern(e, 4).is_zero());
}

TEST(Chern, ProjectiveSpaceTangentLike) {
  // O(1)^{n+1} on P^n: c_p = binom(n+1, p) tau^p
  for (int n = 1; n <= 5; ++n) {
    const Space pn({n});
    const SplitBundle e(pn, std::vector<std::vector<int>>(static_cast<std::size_t>(n + 1), {1}));
    const CohClass tau = CohClass::hyperplane(pn, 0);
    for (int p = 0; p <= n; ++p)
      EXPECT_EQ(chern(e, p), Rational(binomial(n + 1, p)) * tau.pow(static_cast<unsigned>(p)));
  }
}

TEST(Chern, TwistRuleDegreeOne) {
  Rng rng(21);
  for (int k = 0; k < 40; ++k) {
    const Space space = random_space(rng, 1, 6, 3);
    const SplitBundle e = random_bundle(rng, space, static_cast<std::size_t>(uniform_int(rng, 1, 4)));
    const SplitBundle untwisted(space, e.lines());
    // c_1(E<delta>) = c_1(E) + e delta
    EXPECT_EQ(chern(e, 1), chern(untwisted, 1) + Rational(static_cast<long>(e.rank())) * e.twist_class());
    for (int p = 0; p <= static_cast<int>(e.rank()) + 1; ++p)
      EXPECT_EQ(total_chern(e).homogeneous_part(p), chern_by_twist_rule(e, p)) << p;
  }
}

TEST(Chern, WhitneySum) {
  Rng rng(22);
  for (int k = 0; k < 20; ++k) {
    const Space space = random_space(rng, 2, 5, 2);
    const SplitBundle e = random_bundle(rng, space, 2), f = random_bundle(rng, space, 2);
    const SplitBundle f_same(space, f.lines(), e.twist());
    EXPECT_EQ(total_chern(direct_sum(e, f_same)), total_chern(e) * total_chern(f_same));
  }
  EXPECT_THROW(direct_sum(SplitBundle(kP2P3, {{1, 0}}, {Rational(1), 0}), SplitBundle(kP2P3, {{0, 1}})),
               std::invalid_argument);
}

TEST(CharClass, Examples) {
  const SplitBundle e = example_bundle();
  const Polynomial c1 = elementary(1, 3);
  EXPECT_EQ(char_class(c1 * c1, e), Rational(4) * a() * a() + Rational(4) * a() * b() + b() * b());
  const CohClass s111 = Rational(3) * a() * a() * b() + Rational(2) * a() * b() * b() + b().pow(3);
  EXPECT_EQ(schur_class(Partition{1, 1, 1}, e), s111);
  EXPECT_EQ(char_class(schur_jt(Partition{1, 1, 1}, 3), e), s111);
  EXPECT_TRUE(schur_class(Partition{4}, e).is_zero());
  EXPECT_THROW(char_class(Polynomial::variable(3, 0), e), std::invalid_argument);
  EXPECT_THROW(char_class(elementary(1, 2), e), std::invalid_argument);
}

TEST(DerivedSchurClass, EndpointOrders) {
  Rng rng(23);
  for (int k = 0; k < 20; ++k) {
    const Space space = random_space(rng, 2, 5, 2);
    const SplitBundle e = random_nef_bundle(rng, space, static_cast<std::size_t>(uniform_int(rng, 1, 3)));
    const Partition lambda = random_partition(rng, uniform_int(rng, 1, 4), 4, static_cast<int>(e.rank()));
    EXPECT_EQ(derived_schur_class(lambda, 0, e), schur_class(lambda, e));
    const CohClass top = derived_schur_class(lambda, lambda.weight(), e);
    EXPECT_EQ(top.degree(), 0);
    EXPECT_GT(top.coefficient(Exponents(space.factor_count(), 0)), 0);
  }
}

TEST(Nef, Examples) {
  EXPECT_TRUE(is_nef(SplitBundle(kP2P3, {{1, 0}, {0, 1}})));
  EXPECT_FALSE(is_nef(SplitBundle(kP2P3, {{-1, 0}})));
  EXPECT_TRUE(is_nef(SplitBundle(kP2P3, {{-1, 2}}, {Rational(3, 2), 0})));
  EXPECT_TRUE(is_nef_class(CohClass(kP2P3)));
  EXPECT_FALSE(is_nef_class(a() - b()));
}

TEST(RandomNefBundle, IsNef) {
  Rng rng(24);
  for (int k = 0; k < 50; ++k) {
    const Space space = random_space(rng, 1, 6, 3);
    EXPECT_TRUE(is_nef(random_nef_bundle(rng, space, static_cast<std::size_t>(uniform_int(rng, 1, 4)))));
  }
}
