#include "schurhr/positivity.hpp"
#include "schurhr/quadform.hpp"
#include "schurhr/random_instances.hpp"
#include "schurhr/sequences.hpp"

#include <gtest/gtest.h>

using namespace schurhr;

namespace {

const Space kP2P3({2, 3});

CohClass a() { return CohClass::hyperplane(kP2P3, 0); }
CohClass b() { return CohClass::hyperplane(kP2P3, 1); }

SplitBundle example_bundle() { return SplitBundle(kP2P3, {{1, 0}, {1, 0}, {0, 1}}); }

SplitBundle ones_on(const Space& space, std::size_t rank) {
  return SplitBundle(space, std::vector<std::vector<int>>(rank, std::vector<int>(space.factor_count(), 1)));
}

} // namespace

TEST(FultonLazarsfeld, Examples) {
  const Space p2({2});
  EXPECT_EQ(fl_positivity(ones_on(p2, 2), Partition{1, 1}, 0), 3);
  // s_(2,1)^(1) at equal roots tau: coefficient of t in s_(2,1)(tau + t, tau + t)
  EXPECT_GE(fl_positivity(ones_on(p2, 2), Partition{2, 1}, 1), 0);
  EXPECT_EQ(fl_positivity(ones_on(p2, 1), Partition{2, 1}, 1), 0);
  EXPECT_THROW(fl_positivity(ones_on(p2, 2), Partition{1}, 0), std::invalid_argument);
}

TEST(FultonLazarsfeld, RandomNefNonnegative) {
  Rng rng(61);
  for (int k = 0; k < 100; ++k) {
    const Space space = random_space(rng, 1, 5, 3);
    const SplitBundle e = random_nef_bundle(rng, space, static_cast<std::size_t>(uniform_int(rng, 1, 3)));
    const int i = uniform_int(rng, 0, 2);
    const int w = space.dimension() + i;
    const Partition lambda = random_partition(rng, w, w, static_cast<int>(e.rank()) + 1);
    EXPECT_GE(fl_positivity(e, lambda, i), 0);
  }
}

TEST(MonomialPositivity, ReducesToSingle) {
  const Space p3({3});
  const SplitBundle e = ones_on(p3, 2), f = SplitBundle(p3, {{1}, {2}});
  EXPECT_GE(monomial_positivity({e, f}, {Partition{2}, Partition{1}}, {0, 0}), 0);
  EXPECT_EQ(monomial_positivity({e}, {Partition{2, 1}}, {0}), fl_positivity(e, Partition{2, 1}, 0));
  EXPECT_EQ(monomial_positivity({e, f}, {Partition{3}, Partition{}}, {0, 0}), 0);
  EXPECT_THROW(monomial_positivity({e, f}, {Partition{2}, Partition{2}}, {0, 0}), std::invalid_argument);
}

TEST(HodgeIndex, Examples) {
  const Space p3({3});
  const CohClass tau = CohClass::hyperplane(p3, 0);
  auto r = hodge_index_check(tau, tau, tau, p3);
  EXPECT_TRUE(r.ok && r.precondition);
  EXPECT_EQ(r.lhs, 1);
  EXPECT_EQ(r.rhs, 1);

  const CohClass omega = schur_class(Partition{1, 1, 1}, example_bundle());
  r = hodge_index_check(omega, a(), b(), kP2P3);
  EXPECT_TRUE(r.ok && r.precondition);
  EXPECT_EQ(r.lhs, 3);
  EXPECT_EQ(r.rhs, 4);
  r = hodge_index_check(omega, a() - Rational(2) * b(), b(), kP2P3);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.lhs, 15);
  EXPECT_EQ(r.rhs, 16);
}

TEST(HodgeIndex, FailsWithoutPrecondition) {
  // (2,0,0) at t = 1/4: not weak HR, and the inequality can fail there
  const SplitBundle e = example_bundle();
  const Rational t(1, 4);
  const CohClass omega = (1 - t) * chern(e, 3) + t * schur_class(Partition{1, 1, 1}, e);
  const auto r = hodge_index_check(omega, a(), b(), kP2P3);
  EXPECT_FALSE(r.precondition);
  EXPECT_FALSE(r.ok);
}

TEST(ImprovedInequality, Examples) {
  const Space p3({3});
  const CohClass tau = CohClass::hyperplane(p3, 0);
  auto r = schur_hodge_improved_check(ones_on(p3, 2), tau, Partition{1, 1}, tau);
  EXPECT_TRUE(r.ok && r.precondition);
  r = schur_hodge_improved_check(ones_on(p3, 2), tau, Partition{1, 1}, CohClass(p3));
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.lhs, 0);
  EXPECT_EQ(r.rhs, 0);
  r = schur_hodge_improved_check(example_bundle(), a() + b(), Partition{2, 1, 1}, a() - b());
  EXPECT_TRUE(r.ok && r.precondition);
  r = schur_hodge_improved_check(SplitBundle(p3, {{-1}, {1}}), tau, Partition{1, 1}, tau);
  EXPECT_FALSE(r.precondition);
}

TEST(KtSequence, Examples) {
  const Space p2({2});
  const SplitBundle e = ones_on(p2, 2);
  const Sequence s = kt_sequence(e, e, Partition{1, 1}, Partition{1, 1});
  EXPECT_EQ(s.values.size(), 3u);
  EXPECT_TRUE(is_log_concave(s));
  EXPECT_EQ(s.at(-1), 0);
  EXPECT_THROW(kt_sequence(e, e, Partition{}, Partition{1}), std::invalid_argument);
}

TEST(KtSequence, SingleRowRecoversChernPowers) {
  // lambda = (e) gives s^(j) = c_{e-j}; F = O(h) with mu = (1^d) gives
  // s_mu^(i)(F) = binom(d, i) h^{d-i}. Term i is binom(d, i) int c_i(E) h^{d-i}.
  const Space space({1, 2});
  const SplitBundle e(space, {{1, 0}, {0, 1}, {1, 1}});
  const SplitBundle f(space, {{1, 1}});
  const CohClass h = CohClass::linear(space, std::vector<Rational>{1, 1});
  const Sequence s = kt_sequence(e, f, Partition{3}, Partition{1, 1, 1});
  ASSERT_EQ(s.start, 0);
  ASSERT_EQ(s.values.size(), 4u);
  for (int i = 0; i <= 3; ++i)
    EXPECT_EQ(s.at(i), Rational(binomial(3, i)) * integrate(chern(e, i) * h.pow(static_cast<unsigned>(3 - i)))) << i;
  EXPECT_TRUE(is_log_concave(s));
}

TEST(KtSequence, RandomNefLogConcave) {
  Rng rng(62);
  for (int k = 0; k < 60; ++k) {
    const Space space = random_space(rng, 1, 4, 2);
    const SplitBundle e = random_nef_bundle(rng, space, static_cast<std::size_t>(uniform_int(rng, 1, 3)));
    const SplitBundle f = random_nef_bundle(rng, space, static_cast<std::size_t>(uniform_int(rng, 1, 3)));
    const int d = space.dimension();
    const int l = uniform_int(rng, 0, d), m = d - l + uniform_int(rng, 0, 1);
    const Partition lambda = random_partition(rng, l, std::max(l, 1), static_cast<int>(e.rank()));
    const Partition mu = random_partition(rng, m, std::max(m, 1), static_cast<int>(f.rank()));
    EXPECT_TRUE(is_log_concave(kt_sequence(e, f, lambda, mu)));
  }
}
