#pragma once

#include "schurhr/partition.hpp"
#include "schurhr/polynomial.hpp"

#include <string>
#include <vector>

namespace schurhr {

// Jacobi-Trudi determinant det(c_{lambda_r - r + s}) written in the
// elementary basis: the result has e variables, variable k standing for
// c_{k+1}. Computed by fraction-free (Bareiss) elimination.
Polynomial schur_elementary_form(const Partition& lambda, std::size_t e);

// The same determinant expanded in x_1..x_e. Zero exactly when
// lambda_1 > e. Results are memoized per (lambda, e); the memo is
// internally synchronized.
Polynomial schur_jt(const Partition& lambda, std::size_t e);

// sum_alpha K x^alpha where K counts semistandard tableaux of the conjugate
// shape with content alpha. Independent of schur_jt.
Polynomial schur_ssyt(const Partition& lambda, std::size_t e);

// Coefficient of t^i in s_lambda(x_1 + t, ..., x_e + t); zero for i outside
// 0..|lambda|.
Polynomial derived_schur(const Partition& lambda, int i, std::size_t e);
// All of them, index i = 0..|lambda|.
std::vector<Polynomial> derived_schur_all(const Partition& lambda, std::size_t e);

struct IdentityCheck {
  std::string label;
  bool ok = false;
};

// The closed forms for derived Schur polynomials of weight at most 3, each
// compared against derived_schur. Requires e >= 3.
std::vector<IdentityCheck> derived_schur_table_check(std::size_t e);

// s^{(i)}_{(p)} = binom(e - p + i, i) c_{p - i} for all 0 <= i <= p <= e.
std::vector<IdentityCheck> derived_chern_check(std::size_t e);

// box_reverse(s_{dual(lambda)}, N) == s_lambda, where dual is taken in the
// N x e box.
bool dual_reversal_check(const Partition& lambda, std::size_t e, int n);

void clear_schur_cache();

} // namespace schurhr
