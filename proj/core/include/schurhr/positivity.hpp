#pragma once

#include "schurhr/bundle.hpp"
#include "schurhr/cohomology.hpp"
#include "schurhr/partition.hpp"

#include <string>
#include <vector>

namespace schurhr {

// Outcome of a two-sided inequality lhs <= rhs. `precondition` is false when
// the hypotheses of the inequality failed; `ok` is then not meaningful and
// `note` says why.
struct InequalityReport {
  Rational lhs;
  Rational rhs;
  bool ok = false;
  bool precondition = true;
  std::string note;
};

// integral of s_lambda^{(i)}(E). Requires |lambda| = dim X + i; throws
// otherwise. Nefness is the caller's hypothesis and is not enforced.
Rational fl_positivity(const SplitBundle& bundle, const Partition& lambda, int i);

// integral of prod_j s_{lambda_j}^{(i_j)}(E_j); the degrees must add up to
// dim X.
Rational monomial_positivity(const std::vector<SplitBundle>& bundles, const std::vector<Partition>& lambdas,
                             const std::vector<int>& orders);

// (int a^2 W)(int b^2 W) <= (int a b W)^2. The precondition is weak HR of W
// and int b^2 W >= 0.
InequalityReport hodge_index_check(const CohClass& omega, const CohClass& a, const CohClass& b, const Space& space);

// (int a^2 s'(E))(int h s(E)) <= 2 (int a h s'(E))(int a s(E)), s = s_lambda,
// s' = s_lambda^{(1)}, |lambda| = dim X - 1. The precondition is E and h nef.
InequalityReport schur_hodge_improved_check(const SplitBundle& bundle, const CohClass& h, const Partition& lambda,
                                            const CohClass& a);

} // namespace schurhr
