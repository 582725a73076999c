#pragma once

#include "schurhr/rational.hpp"

#include <string>
#include <vector>

namespace schurhr {

// Dense univariate polynomial over Q, coefficient i multiplying z^i. The
// leading coefficient is never stored as zero.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& leading() const { return c_.back(); }
  Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational operator()(const Rational& z) const;

  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  std::string to_string() const;

private:
  void trim();
  std::vector<Rational> c_;
};

UPoly derivative(const UPoly& p);
// a = q*b + r with deg r < deg b. Throws on b == 0.
void divmod(const UPoly& a, const UPoly& b, UPoly& quotient, UPoly& remainder);
UPoly monic_gcd(UPoly a, UPoly b);
// p / gcd(p, p'): same roots, all simple.
UPoly squarefree_part(const UPoly& p);

// Sturm chain p, p', -rem(p, p'), ...
std::vector<UPoly> sturm_chain(const UPoly& p);
// Number of distinct real roots.
int count_real_roots(const UPoly& p);
// Every complex root is real. The zero polynomial and constants qualify.
bool has_only_real_roots(const UPoly& p);

} // namespace schurhr
