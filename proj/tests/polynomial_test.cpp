#include "schurhr/matrix.hpp"
#include "schurhr/polynomial.hpp"
#include "schurhr/random_instances.hpp"
#include "schurhr/schur.hpp"

#include <gtest/gtest.h>

using namespace schurhr;

namespace {

Polynomial x(std::size_t n, std::size_t j) { return Polynomial::variable(n, j); }

Polynomial random_poly(Rng& rng, std::size_t n, int max_deg) {
  Polynomial p(n);
  for (int k = 0; k < 6; ++k) {
    Exponents e(n);
    for (auto& v : e) v = uniform_int(rng, 0, max_deg);
    p.add_term(e, random_rational(rng, -4, 4, 3));
  }
  return p;
}

} // namespace

TEST(Polynomial, Arithmetic) {
  const auto x1 = x(2, 0), x2 = x(2, 1);
  EXPECT_EQ((x1 + x2) * (x1 - x2), x1 * x1 - x2 * x2);
  EXPECT_EQ(scale(x1 * x2, Rational(3, 2)), Polynomial::monomial({1, 1}, Rational(3, 2)));
  EXPECT_TRUE((x1 - x1).is_zero());
  EXPECT_EQ((x1 - x1).degree(), -1);
}

TEST(Polynomial, Substitute) {
  // x1 -> x1 + t in x1^2, ring (x1, t)
  const auto x1 = x(2, 0), t = x(2, 1);
  const std::vector<Polynomial> sub{x1 + t, t};
  EXPECT_EQ(substitute(x1 * x1, sub), x1 * x1 + Rational(2) * x1 * t + t * t);
}

TEST(Polynomial, Evaluate) {
  const auto x1 = x(2, 0), x2 = x(2, 1);
  const Polynomial p = x1 * x1 + x1 * x2 + x2 * x2;
  const std::vector<Rational> a{1, 1}, b{2, 0};
  EXPECT_EQ(evaluate(p, a), 3);
  EXPECT_EQ(evaluate(p, b), 4);
}

TEST(Polynomial, Coefficient) {
  const auto x1 = x(2, 0), x2 = x(2, 1);
  const Polynomial p = x1 * x1 + x1 * x2 + x2 * x2;
  const std::vector<int> e11{1, 1}, e02{0, 2}, e12{1, 2};
  EXPECT_EQ(p.coefficient(e11), 1);
  EXPECT_EQ((x1 * x1).coefficient(e02), 0);
  EXPECT_EQ((Rational(3) * x1 * x2 * x2).coefficient(e12), 3);
}

TEST(Polynomial, ToStringOrder) {
  const auto x1 = x(2, 0), x2 = x(2, 1);
  EXPECT_EQ((x2 * x2 + x1 * x2 + x1 * x1).to_string(), "x1^2 + x1*x2 + x2^2");
  EXPECT_EQ((x1 - Rational(3, 2) * x2 * x2).to_string(), "-3/2*x2^2 + x1");
}

TEST(Elementary, Examples) {
  EXPECT_EQ(elementary(1, 2), x(2, 0) + x(2, 1));
  EXPECT_EQ(elementary(2, 2), x(2, 0) * x(2, 1));
  EXPECT_TRUE(elementary(3, 2).is_zero());
  EXPECT_EQ(elementary(0, 3), Polynomial::constant(3, 1));
}

TEST(Normalize, Examples) {
  const auto x1 = x(2, 0), x2 = x(2, 1);
  EXPECT_EQ(normalize(x1 * x1), scale(x1 * x1, Rational(1, 2)));
  EXPECT_EQ(normalize(x1 * x2), x1 * x2);
  EXPECT_EQ(normalize(schur_jt(Partition{1, 1}, 2)),
            scale(x1 * x1, Rational(1, 2)) + x1 * x2 + scale(x2 * x2, Rational(1, 2)));
}

TEST(Normalize, RoundTrip) {
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    const Polynomial p = random_poly(rng, 3, 4);
    EXPECT_EQ(denormalize(normalize(p)), p);
    EXPECT_EQ(normalize(denormalize(p)), p);
  }
}

TEST(BoxReverse, Examples) {
  const auto x1 = x(2, 0), x2 = x(2, 1);
  EXPECT_EQ(box_reverse(x1, 1), x2);
  EXPECT_EQ(box_reverse(Polynomial::constant(2, 1), 1), x1 * x2);
  EXPECT_EQ(box_reverse(schur_jt(Partition{2, 1}, 2), 2), x1 + x2);
  EXPECT_THROW(box_reverse(x1 * x1, 1), std::invalid_argument);
}

TEST(BoxReverse, InvolutionAndCoefficientReflection) {
  Rng rng(12);
  for (int k = 0; k < 50; ++k) {
    const Polynomial p = random_poly(rng, 3, 3);
    const int b = p.max_variable_degree() + uniform_int(rng, 0, 2);
    const Polynomial q = box_reverse(p, b);
    EXPECT_EQ(box_reverse(q, b), p);
    for (const auto& [e, c] : p.terms()) {
      Exponents r(e.size());
      for (std::size_t j = 0; j < e.size(); ++j) r[j] = b - e[j];
      EXPECT_EQ(q.coefficient(r), c);
    }
  }
}

TEST(RestrictToBox, DropsLargeExponents) {
  const auto x1 = x(2, 0), x2 = x(2, 1);
  EXPECT_EQ(restrict_to_box(x1 * x1 * x1 + x1 * x2, 2), x1 * x2);
}

TEST(Hessian, Examples) {
  const auto x1 = x(2, 0), x2 = x(2, 1);
  const std::vector<int> zero2{0, 0}, a10{1, 0}, a100{1, 0, 0};
  EXPECT_EQ(hessian_of_partial(normalize(schur_jt(Partition{1, 1}, 2)), zero2), (Matrix{{1, 1}, {1, 1}}));
  EXPECT_EQ(hessian_of_partial(x1 * x1 * x1, a10), (Matrix{{6, 0}, {0, 0}}));
  const auto y = [](std::size_t j) { return x(3, j); };
  EXPECT_EQ(hessian_of_partial(y(0) * y(1) * y(2), a100), (Matrix{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
  EXPECT_THROW(hessian_of_partial(x1 * x2, a10), std::invalid_argument);
}

TEST(Hessian, QuadraticFormReproducesPartial) {
  // d^alpha p = 1/2 x^T M x at random points
  Rng rng(13);
  for (int k = 0; k < 30; ++k) {
    Polynomial p(3);
    for (int t = 0; t < 5; ++t) {
      Exponents e(3);
      e[0] = uniform_int(rng, 0, 4);
      e[1] = uniform_int(rng, 0, 4 - e[0]);
      e[2] = 4 - e[0] - e[1];
      p.add_term(e, random_rational(rng, -3, 3, 2));
    }
    const std::vector<int> alpha{1, 1, 0};
    const Matrix m = hessian_of_partial(p, alpha);
    const Polynomial d = partial(p, alpha);
    const auto pt = random_rational_vector(rng, 3, -2, 2, 3);
    Rational quad = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) quad += m(i, j) * pt[i] * pt[j];
    EXPECT_EQ(quad / 2, evaluate(d, pt));
  }
}

TEST(ElementaryBasis, RoundTripOnSymmetric) {
  for (std::size_t e = 1; e <= 4; ++e)
    for (int w = 0; w <= 5; ++w)
      for (const auto& lambda : partitions_of(w)) {
        const Polynomial s = schur_jt(lambda, e);
        EXPECT_TRUE(is_symmetric(s));
        EXPECT_EQ(from_elementary_basis(to_elementary_basis(s)), s);
      }
  EXPECT_FALSE(is_symmetric(x(2, 0)));
  EXPECT_THROW(to_elementary_basis(x(2, 0)), std::invalid_argument);
}

TEST(DivideExact, QuotientAndFailure) {
  const auto x1 = x(2, 0), x2 = x(2, 1);
  EXPECT_EQ(divide_exact(x1 * x1 - x2 * x2, x1 - x2), x1 + x2);
  EXPECT_THROW(divide_exact(x1 * x1 + x2, x1 - x2), std::domain_error);
}

TEST(Polynomial, CoefficientOfPowerAndExtend) {
  const auto x1 = x(2, 0), x2 = x(2, 1);
  const Polynomial p = x1 * x1 * x2 + Rational(3) * x1 * x1 + x2;
  const Polynomial c = coefficient_of_power(p, 0, 2);
  EXPECT_EQ(c, x(1, 0) + Polynomial::constant(1, 3));
  EXPECT_EQ(extend_variables(x1, 3), x(3, 0));
}
