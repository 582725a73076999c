#pragma once

#include "schurhr/polynomial.hpp"
#include "schurhr/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace schurhr {

// X = P^{n_1} x ... x P^{n_k}, every n_j >= 1.
class Space {
public:
  Space() = default;
  explicit Space(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  std::size_t factor_count() const { return factors_.size(); }
  int dimension() const { return dimension_; }

  std::string to_string() const;

  friend bool operator==(const Space& a, const Space& b) { return a.factors_ == b.factors_; }

private:
  std::vector<int> factors_;
  int dimension_ = 0;
};

// Element of H^*(X; Q) = Q[tau_1..tau_k] / (tau_j^{n_j + 1}). Terms are
// keyed by multi-exponent (m_1..m_k) with m_j <= n_j; anything beyond is
// truncated on construction.
class CohClass {
public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  CohClass() = default;
  explicit CohClass(Space space) : space_(std::move(space)) {}

  static CohClass unit(const Space& space);
  static CohClass scalar(const Space& space, const Rational& c);
  // tau_j, the pullback of the hyperplane class of factor j.
  static CohClass hyperplane(const Space& space, std::size_t j);
  // sum_j coefficients[j] tau_j
  static CohClass linear(const Space& space, std::span<const Rational> coefficients);
  static CohClass monomial(const Space& space, const Exponents& exponents, const Rational& c = 1);

  const Space& space() const { return space_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Degree (in H^{p,p} units) of the top nonzero part; -1 when zero.
  int degree() const;
  bool is_homogeneous() const;
  CohClass homogeneous_part(int degree) const;
  Rational coefficient(const Exponents& exponents) const;

  // Coefficients over tau_1..tau_k of a degree-1 class; throws if the class
  // has other components.
  std::vector<Rational> linear_coefficients() const;

  void add_term(const Exponents& exponents, const Rational& c);

  CohClass& operator+=(const CohClass& other);
  CohClass& operator-=(const CohClass& other);
  CohClass& operator*=(const Rational& c);
  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator*(const CohClass& a, const CohClass& b) { return multiply(a, b); }
  friend CohClass operator*(const Rational& c, CohClass u) { return u *= c; }
  friend CohClass operator-(CohClass u) { return u *= Rational(-1); }
  friend bool operator==(const CohClass& a, const CohClass& b);

  CohClass pow(unsigned k) const;

  friend CohClass multiply(const CohClass& a, const CohClass& b);

  // e.g. "3*t1^2*t2 + 2*t1*t2^2"
  std::string to_string(const std::vector<std::string>& names = {}) const;

private:
  void require_same_space(const CohClass& other, const char* op) const;

  Space space_;
  TermMap terms_;
};

// Coefficient of tau_1^{n_1} ... tau_k^{n_k}; zero on other degrees.
Rational integrate(const CohClass& u);

// (tau_1, ..., tau_k)
std::vector<CohClass> h11_basis(const Space& space);

// p(values) computed inside the cohomology ring.
CohClass evaluate_at_classes(const Polynomial& p, std::span<const CohClass> values, const Space& space);

} // namespace schurhr
