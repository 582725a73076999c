#include "schurhr/lorentzian.hpp"
#include "schurhr/random_instances.hpp"
#include "schurhr/schur.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace schurhr;

namespace {

Polynomial x(std::size_t n, std::size_t j) { return Polynomial::variable(n, j); }

LorentzianOptions perturbed(const Rational& eps = Rational(1, 100)) { return {LorentzianMode::perturbed, eps, true}; }

} // namespace

TEST(Compositions, CountAndOrder) {
  EXPECT_EQ(compositions_of(3, 3).size(), 10u);
  EXPECT_EQ(compositions_of(0, 2).size(), 1u);
  EXPECT_EQ(compositions_of(2, 2).front(), (Exponents{2, 0}));
  for (const auto& c : compositions_of(4, 3)) EXPECT_EQ(c[0] + c[1] + c[2], 4);
}

TEST(Lorentzian, StrictExamples) {
  const auto x1 = x(2, 0), x2 = x(2, 1);
  auto r = lorentzian_check(x1 * x2);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.hessians_checked, 1u);
  r = lorentzian_check(x1 * x1 + x2 * x2);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.failing_alpha.has_value());
  EXPECT_EQ(r.failing_inertia, (Inertia{2, 0, 0}));
  EXPECT_FALSE(lorentzian_check(x1 * x2 - x1 * x1).ok);
  EXPECT_THROW(lorentzian_check(x1 * x2 + x1), std::invalid_argument);
}

TEST(Lorentzian, NormalizedTwoVariableSquareNeedsPerturbation) {
  const Polynomial p = normalize(schur_jt(Partition{1, 1}, 2));
  const auto strict = lorentzian_check(p);
  EXPECT_FALSE(strict.ok);
  EXPECT_EQ(strict.failing_inertia, (Inertia{1, 0, 1}));
  const auto pert = lorentzian_check(p, perturbed());
  EXPECT_TRUE(pert.ok);
  EXPECT_EQ(pert.epsilon, Rational(1, 100));
}

TEST(Lorentzian, PerturbedPolynomialConvergesToInput) {
  // The eps = 0 construction returns N(s_lambda) itself.
  for (std::size_t e = 1; e <= 3; ++e)
    for (int w = 1; w <= 4; ++w)
      for (const auto& lambda : partitions_of(w)) {
        const Polynomial s = schur_jt(lambda, e);
        if (s.is_zero()) continue;
        EXPECT_EQ(perturbed_polynomial(normalize(s), 0), normalize(s)) << lambda.to_string();
      }
}

TEST(Lorentzian, NormalizedSchurPolynomialsCertified) {
  for (std::size_t e = 1; e <= 3; ++e)
    for (int w = 0; w <= 5; ++w)
      for (const auto& lambda : partitions_of(w)) {
        const Polynomial s = schur_jt(lambda, e);
        if (s.is_zero()) continue;
        EXPECT_TRUE(lorentzian_check(normalize(s), perturbed()).ok) << lambda.to_string() << " e=" << e;
      }
}

TEST(Lorentzian, PowersOfLinearFormsAreDegenerate) {
  Rng rng(81);
  for (int k = 0; k < 20; ++k) {
    const std::size_t e = static_cast<std::size_t>(uniform_int(rng, 2, 3));
    Polynomial l(e);
    for (std::size_t j = 0; j < e; ++j) l += scale(x(e, j), random_rational(rng, Rational(1, 3), 3, 3));
    // a power of a positive linear form: every Hessian has rank one
    const Polynomial p = l.pow(static_cast<unsigned>(uniform_int(rng, 2, 4)));
    const auto r = lorentzian_check(p);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.failing_inertia.positive, 1);
    EXPECT_EQ(r.failing_inertia.negative, 0);
  }
}

TEST(LemmaBridge, Examples) {
  const auto x1 = x(2, 0), x2 = x(2, 1);
  EXPECT_TRUE(lemma_bridge_check(schur_jt(Partition{1, 1}, 2), 2, {0, 0}).ok);
  EXPECT_EQ(lemma_bridge_check(schur_jt(Partition{1, 1}, 2), 2, {0, 0}).hessian, (Matrix{{1, 1}, {1, 1}}));
  EXPECT_TRUE(lemma_bridge_check(x1 * x1 * x2, 2, {1, 0}).ok);
  EXPECT_TRUE(lemma_bridge_check(x1 * x1 * x2, 3, {1, 0}).ok);
  // zero coefficient at alpha + d_i + d_j stays zero on both sides
  const auto r = lemma_bridge_check(x1 * x1 * x2, 2, {0, 1});
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.hessian(1, 1), 0);
  EXPECT_THROW(lemma_bridge_check(x1 * x1 * x2, 1, {1, 0}), std::invalid_argument);
  EXPECT_THROW(lemma_bridge_check(x1 * x1 * x2, 2, {0, 0}), std::invalid_argument);
}

TEST(LemmaBridge, RandomHomogeneous) {
  Rng rng(82);
  for (int k = 0; k < 40; ++k) {
    const std::size_t e = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const int d = uniform_int(rng, 2, 5);
    Polynomial p(e);
    for (const auto& m : compositions_of(d, e))
      if (uniform_int(rng, 0, 1)) p.add_term(m, random_rational(rng, -4, 4, 3));
    if (p.is_zero()) p.add_term(compositions_of(d, e).back(), 1);
    const int box = p.max_variable_degree() + uniform_int(rng, 0, 2);
    for (const auto& alpha : compositions_of(d - 2, e)) {
      if (*std::max_element(alpha.begin(), alpha.end()) > box) continue;
      EXPECT_TRUE(lemma_bridge_check(p, box, alpha).ok);
    }
  }
}

TEST(HessianVsIntersection, Examples) {
  EXPECT_TRUE(hessian_vs_intersection(Partition{1, 1}, 2, 2, {0, 0}, Rational(1, 100)).ok);
  EXPECT_TRUE(hessian_vs_intersection(Partition{2}, 2, 2, {0, 0}, Rational(1, 10)).ok);
  EXPECT_TRUE(hessian_vs_intersection(Partition{1, 1}, 2, 2, {0, 0}, 0).ok);
  EXPECT_THROW(hessian_vs_intersection(Partition{1, 1}, 2, 2, {1, 0}, 0), std::invalid_argument);
}

TEST(HessianVsIntersection, PointFactorsAndRandomCases) {
  // alpha_j = N makes factor j a point; its Hessian row must vanish
  EXPECT_TRUE(hessian_vs_intersection(Partition{2, 2, 1}, 2, 3, {3, 0}, Rational(1, 7)).ok);
  Rng rng(83);
  for (int k = 0; k < 20; ++k) {
    const int e = uniform_int(rng, 1, 3);
    const int n = uniform_int(rng, std::max(e, 2), 3);
    const Partition lambda = random_partition(rng, uniform_int(rng, 2, n * e), n, e);
    for (const auto& alpha : compositions_of(lambda.weight() - 2, static_cast<std::size_t>(e))) {
      if (*std::max_element(alpha.begin(), alpha.end()) > n) continue;
      EXPECT_TRUE(hessian_vs_intersection(lambda, e, n, alpha, random_rational(rng, 0, Rational(1, 2), 20)).ok)
          << lambda.to_string();
    }
  }
}
