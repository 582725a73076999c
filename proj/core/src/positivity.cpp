#include "schurhr/positivity.hpp"

#include "schurhr/quadform.hpp"

#include <stdexcept>

namespace schurhr {

Rational fl_positivity(const SplitBundle& bundle, const Partition& lambda, int i) {
  const int d = bundle.space().dimension();
  if (lambda.weight() != d + i)
    throw std::invalid_argument("fl_positivity: |lambda| = " + std::to_string(lambda.weight()) + " but dim X + i = " +
                                std::to_string(d + i));
  return integrate(derived_schur_class(lambda, i, bundle));
}

Rational monomial_positivity(const std::vector<SplitBundle>& bundles, const std::vector<Partition>& lambdas,
                             const std::vector<int>& orders) {
  if (bundles.empty() || bundles.size() != lambdas.size() || bundles.size() != orders.size())
    throw std::invalid_argument("monomial_positivity: need equally many bundles, partitions and orders");
  const Space& space = bundles.front().space();
  int degree = 0;
  for (std::size_t j = 0; j < bundles.size(); ++j) {
    if (!(bundles[j].space() == space)) throw std::invalid_argument("monomial_positivity: bundles on different spaces");
    degree += lambdas[j].weight() - orders[j];
  }
  if (degree != space.dimension())
    throw std::invalid_argument("monomial_positivity: total degree " + std::to_string(degree) + " differs from dim X = " +
                                std::to_string(space.dimension()));
  CohClass product = CohClass::unit(space);
  for (std::size_t j = 0; j < bundles.size(); ++j)
    product = product * derived_schur_class(lambdas[j], orders[j], bundles[j]);
  return integrate(product);
}

InequalityReport hodge_index_check(const CohClass& omega, const CohClass& a, const CohClass& b, const Space& space) {
  InequalityReport r;
  const Rational aa = pairing(omega, a, a);
  const Rational bb = pairing(omega, b, b);
  const Rational ab = pairing(omega, a, b);
  r.lhs = aa * bb;
  r.rhs = ab * ab;
  r.ok = r.lhs <= r.rhs;
  if (!is_weak_hr(intersection_form(omega, space))) {
    r.precondition = false;
    r.note = "intersection form is not weak HR";
  } else if (bb < 0) {
    r.precondition = false;
    r.note = "integral of b^2 omega is negative";
  }
  return r;
}

InequalityReport schur_hodge_improved_check(const SplitBundle& bundle, const CohClass& h, const Partition& lambda,
                                            const CohClass& a) {
  const int d = bundle.space().dimension();
  if (lambda.weight() != d - 1)
    throw std::invalid_argument("schur_hodge_improved_check: |lambda| = " + std::to_string(lambda.weight()) +
                                ", expected dim X - 1 = " + std::to_string(d - 1));
  const CohClass s = schur_class(lambda, bundle);
  const CohClass s1 = derived_schur_class(lambda, 1, bundle);
  InequalityReport r;
  r.lhs = integrate(a * a * s1) * integrate(h * s);
  r.rhs = 2 * integrate(a * h * s1) * integrate(a * s);
  r.ok = r.lhs <= r.rhs;
  if (!is_nef(bundle)) {
    r.precondition = false;
    r.note = "bundle is not nef";
  } else if (!is_nef_class(h)) {
    r.precondition = false;
    r.note = "h is not nef";
  }
  return r;
}

} // namespace schurhr
