#pragma once

#include "schurhr/matrix.hpp"
#include "schurhr/partition.hpp"
#include "schurhr/polynomial.hpp"
#include "schurhr/quadform.hpp"

#include <optional>
#include <string>

namespace schurhr {

enum class LorentzianMode { strict, perturbed };

struct LorentzianOptions {
  LorentzianMode mode = LorentzianMode::strict;
  Rational epsilon = Rational(1, 100);
  // Perturbed mode: try again once at epsilon / 10 before giving up.
  bool retry = true;
};

struct LorentzianReport {
  bool ok = false;
  bool positive_coefficients = false;
  // Number of exponent vectors alpha with |alpha| = d - 2 examined.
  std::size_t hessians_checked = 0;
  // First alpha whose Hessian has the wrong inertia, if any.
  std::optional<Exponents> failing_alpha;
  Inertia failing_inertia;
  // Perturbed mode: the epsilon that produced the verdict.
  Rational epsilon = 0;
  // The polynomial the strict test ran on.
  Polynomial tested;
};

// Strict: all stored coefficients positive and every Hessian of a
// (d-2)-order partial has inertia (1, e-1, 0). Perturbed: the strict test on
// N(p_eps), see perturbed_polynomial. Throws on non-homogeneous input.
LorentzianReport lorentzian_check(const Polynomial& p, const LorentzianOptions& options = {});

// For p = N(s): with b = max(max_j deg_{x_j} s, deg s), q = x^b s(1/x),
// q_eps(x) = q(x_1 + eps sum x, ..., x_e + eps sum x), and p_eps the box-b
// reversal of the part of q_eps inside the box. Returns N(p_eps).
Polynomial perturbed_polynomial(const Polynomial& p, const Rational& epsilon);

// Hessian of d^alpha N(p) against ([q t_i t_j]_beta), q the box reversal of
// p in the e'-box, beta = e' - alpha.
struct BridgeReport {
  bool ok = false;
  Matrix hessian;
  Matrix other;
};
BridgeReport lemma_bridge_check(const Polynomial& p, int box, const Exponents& alpha);

// p_eps built from s_{dual lambda}(x + eps sum x) in the N-box versus the
// intersection form of s_{dual lambda}(E<eps h>) on prod_j P^{N - alpha_j},
// E = sum_j O(tau_j). Factors with N - alpha_j = 0 are points; their rows
// of the Hessian must vanish.
BridgeReport hessian_vs_intersection(const Partition& lambda, int e, int n, const Exponents& alpha,
                                     const Rational& epsilon);

// All exponent vectors of length `vars` summing to `total`, in grlex order.
std::vector<Exponents> compositions_of(int total, std::size_t vars);

} // namespace schurhr
