#pragma once

#include "schurhr/cohomology.hpp"
#include "schurhr/matrix.hpp"

#include <string>

namespace schurhr {

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  int dimension() const { return positive + negative + zero; }
  std::string to_string() const;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Sylvester inertia by exact symmetric congruence: 1x1 pivots where the
// diagonal allows, otherwise a 2x2 hyperbolic block. Throws on asymmetric
// input.
Inertia inertia(const Matrix& m);

// Exactly one positive eigenvalue and nondegenerate.
bool is_hr(const Inertia& s);
bool is_hr(const Matrix& m);
// At most one positive eigenvalue, and not negative definite.
bool is_weak_hr(const Inertia& s);
bool is_weak_hr(const Matrix& m);

// M_ij = integral of tau_i * omega * tau_j over X. omega must be homogeneous
// of degree dim X - 2 (the zero class is accepted).
Matrix intersection_form(const CohClass& omega, const Space& space);

// integral of a * omega * b for degree-1 classes a, b.
Rational pairing(const CohClass& omega, const CohClass& a, const CohClass& b);

} // namespace schurhr
