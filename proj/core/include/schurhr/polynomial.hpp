#pragma once

#include "schurhr/matrix.hpp"
#include "schurhr/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace schurhr {

using Exponents = std::vector<int>;

// Graded lexicographic order, largest first: higher total degree wins, ties
// broken lexicographically with x1 > x2 > ... This is the canonical
// iteration and serialization order of Polynomial.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over Q. Never stores a zero coefficient.
class Polynomial {
public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t j);
  static Polynomial monomial(Exponents exponents, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Total degree; -1 for the zero polynomial.
  int degree() const;
  // The zero polynomial counts as homogeneous.
  bool is_homogeneous() const;
  int degree_in(std::size_t j) const;
  int max_variable_degree() const;

  Rational coefficient(std::span<const int> exponents) const;
  // Adds c * x^exponents, dropping the term if the result cancels.
  void add_term(const Exponents& exponents, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  friend Polynomial operator-(Polynomial p) { return p *= Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned k) const;

  // Human readable, e.g. "x1^2 + x1*x2 - 3/2*x2^2". Variable names default to
  // x1..xn.
  std::string to_string(const std::vector<std::string>& names = {}) const;

private:
  void require_same_ring(const Polynomial& other, const char* op) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

Polynomial scale(const Polynomial& p, const Rational& c);

// Simultaneous substitution x_j -> replacements[j]. All replacements must live
// in the same ring; the result lives there too.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> replacements);

Rational evaluate(const Polynomial& p, std::span<const Rational> point);

// Evaluates p at elements of any commutative Q-algebra: needs A*A, A+A and
// Rational*A. `one` is the unit of the algebra.
template <class A>
A evaluate_in(const Polynomial& p, std::span<const A> values, const A& one);

Polynomial derivative(const Polynomial& p, std::size_t j);
Polynomial partial(const Polynomial& p, std::span<const int> alpha);

// sum_mu a_mu / mu! x^mu
Polynomial normalize(const Polynomial& p);
// Inverse of normalize: sum_mu a_mu * mu! x^mu
Polynomial denormalize(const Polynomial& p);

// q = x_1^b ... x_e^b p(1/x_1, ..., 1/x_e); [q]_beta = [p]_{b - beta}.
// Throws if b is below the degree of p in some variable.
Polynomial box_reverse(const Polynomial& p, int bound);

// Drops every term with an exponent above `bound` in some variable.
Polynomial restrict_to_box(const Polynomial& p, int bound);

// Symmetric matrix M with d^alpha p = 1/2 x^T M x, for homogeneous p of
// degree |alpha| + 2.
Matrix hessian_of_partial(const Polynomial& p, std::span<const int> alpha);

// i-th elementary symmetric polynomial in e variables (zero outside 0..e).
Polynomial elementary(int i, std::size_t e);

// Invariance under every transposition (checked on adjacent ones, which
// generate the symmetric group).
bool is_symmetric(const Polynomial& p);

// Rewrites a symmetric polynomial in the elementary basis: the result has
// nvars() == e and variable k stands for c_{k+1}. Throws on non-symmetric input.
Polynomial to_elementary_basis(const Polynomial& p);
// Inverse: substitutes c_k -> elementary(k, e).
Polynomial from_elementary_basis(const Polynomial& c_poly);

// Exact quotient a / b. Throws std::domain_error if b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

// Coefficient of x_j^k viewed as a polynomial in the remaining variables
// (the result has nvars() - 1 variables).
Polynomial coefficient_of_power(const Polynomial& p, std::size_t j, int k);

// Same polynomial viewed in a ring with more variables appended.
Polynomial extend_variables(const Polynomial& p, std::size_t nvars);

std::vector<std::string> variable_names(const std::string& stem, std::size_t n);

// --- template implementation ---

template <class A>
A evaluate_in(const Polynomial& p, std::span<const A> values, const A& one) {
  if (values.size() != p.nvars()) throw std::invalid_argument("evaluate_in: point length does not match variable count");
  std::vector<std::vector<A>> powers(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) powers[j].push_back(one);

  A result = Rational(0) * one;
  for (const auto& [exps, c] : p.terms()) {
    A term = c * one;
    for (std::size_t j = 0; j < exps.size(); ++j) {
      auto& pw = powers[j];
      while (pw.size() <= static_cast<std::size_t>(exps[j])) pw.push_back(pw.back() * values[j]);
      if (exps[j] > 0) term = term * pw[static_cast<std::size_t>(exps[j])];
    }
    result = result + term;
  }
  return result;
}

} // namespace schurhr
