#include "schurhr/random_instances.hpp"
#include "schurhr/upoly.hpp"

#include <gtest/gtest.h>

using namespace schurhr;

namespace {

UPoly from_roots(const std::vector<Rational>& roots) {
  UPoly p(std::vector<Rational>{1});
  for (const auto& r : roots) p = p * UPoly(std::vector<Rational>{-r, 1});
  return p;
}

} // namespace

TEST(UPoly, TrimAndEvaluate) {
  const UPoly p(std::vector<Rational>{1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p(Rational(3)), 7);
  EXPECT_TRUE(UPoly(std::vector<Rational>{0, 0}).is_zero());
}

TEST(UPoly, DivmodReconstructs) {
  Rng rng(41);
  for (int k = 0; k < 50; ++k) {
    const UPoly a(random_rational_vector(rng, static_cast<std::size_t>(uniform_int(rng, 1, 7)), -5, 5, 3));
    UPoly b(random_rational_vector(rng, static_cast<std::size_t>(uniform_int(rng, 1, 4)), -5, 5, 3));
    if (b.is_zero()) continue;
    UPoly q, r;
    divmod(a, b, q, r);
    EXPECT_EQ(q * b - (UPoly() - r), a);
    EXPECT_LT(r.degree(), b.degree() == 0 ? 0 : b.degree());
  }
  UPoly q, r;
  EXPECT_THROW(divmod(UPoly(std::vector<Rational>{1}), UPoly(), q, r), std::domain_error);
}

TEST(Sturm, CountsDistinctRealRoots) {
  EXPECT_EQ(count_real_roots(from_roots({1, 2, 3})), 3);
  EXPECT_EQ(count_real_roots(from_roots({1, 1, 2})), 2);
  EXPECT_EQ(count_real_roots(UPoly(std::vector<Rational>{1, 0, 1})), 0);
  EXPECT_EQ(count_real_roots(from_roots({Rational(-1, 3), Rational(1, 7), 5}) * UPoly(std::vector<Rational>{1, 0, 1})), 3);
}

TEST(Sturm, RealRootedness) {
  EXPECT_TRUE(has_only_real_roots(UPoly(std::vector<Rational>{1, 2, 1})));
  EXPECT_FALSE(has_only_real_roots(UPoly(std::vector<Rational>{1, 0, 1})));
  EXPECT_TRUE(has_only_real_roots(UPoly(std::vector<Rational>{2, 3, 1})));
  EXPECT_FALSE(has_only_real_roots(UPoly(std::vector<Rational>{1, 1, 1})));
  EXPECT_TRUE(has_only_real_roots(UPoly(std::vector<Rational>{5})));
  EXPECT_TRUE(has_only_real_roots(UPoly()));
}

TEST(Sturm, RandomRootedProducts) {
  Rng rng(42);
  for (int k = 0; k < 100; ++k) {
    std::vector<Rational> roots = random_rational_vector(rng, static_cast<std::size_t>(uniform_int(rng, 1, 6)), -5, 5, 4);
    const UPoly p = from_roots(roots);
    std::sort(roots.begin(), roots.end());
    const auto distinct = std::unique(roots.begin(), roots.end()) - roots.begin();
    EXPECT_EQ(count_real_roots(p), distinct);
    EXPECT_TRUE(has_only_real_roots(p));
    EXPECT_EQ(squarefree_part(p).degree(), distinct);
    // one complex pair breaks it
    EXPECT_FALSE(has_only_real_roots(p * UPoly(std::vector<Rational>{2, 1, 1})));
  }
}
