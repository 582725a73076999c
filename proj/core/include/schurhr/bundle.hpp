#pragma once

#include "schurhr/cohomology.hpp"
#include "schurhr/partition.hpp"
#include "schurhr/polynomial.hpp"

#include <vector>

namespace schurhr {

// Formal split bundle O(l_1) + ... + O(l_e) on a product of projective
// spaces, twisted by a rational degree-1 class delta. Each l_i is an integer
// multidegree over tau_1..tau_k; the Chern roots are l_i + delta.
class SplitBundle {
public:
  SplitBundle(Space space, std::vector<std::vector<int>> lines, std::vector<Rational> twist = {});

  const Space& space() const { return space_; }
  const std::vector<std::vector<int>>& lines() const { return lines_; }
  const std::vector<Rational>& twist() const { return twist_; }
  std::size_t rank() const { return lines_.size(); }

  // Root i as a coefficient vector, l_i + delta.
  std::vector<Rational> root_coefficients(std::size_t i) const;
  std::vector<CohClass> roots() const;
  // Roots of the untwisted bundle.
  std::vector<CohClass> line_roots() const;
  CohClass twist_class() const;

  // E<delta> -> E<delta + extra>
  SplitBundle twisted(const std::vector<Rational>& extra) const;

private:
  Space space_;
  std::vector<std::vector<int>> lines_;
  std::vector<Rational> twist_;
};

// E + F; both twists must agree.
SplitBundle direct_sum(const SplitBundle& a, const SplitBundle& b);

// prod_i (1 + root_i)
CohClass total_chern(const SplitBundle& bundle);

// c_p from the roots. Builds with SCHURHR_CROSSCHECK also evaluate the twist
// rule and throw std::logic_error on disagreement.
CohClass chern(const SplitBundle& bundle, int p);
// sum_k binom(e - k, p - k) c_k(untwisted) delta^{p - k}
CohClass chern_by_twist_rule(const SplitBundle& bundle, int p);

// p evaluated at the Chern roots. p must have rank() variables and be
// symmetric.
CohClass char_class(const Polynomial& p, const SplitBundle& bundle);

CohClass schur_class(const Partition& lambda, const SplitBundle& bundle);
CohClass derived_schur_class(const Partition& lambda, int i, const SplitBundle& bundle);

// Every root has nonnegative coordinates in the tau basis.
bool is_nef(const SplitBundle& bundle);
// A degree-1 class with nonnegative coordinates (zero counts).
bool is_nef_class(const CohClass& h);

} // namespace schurhr
