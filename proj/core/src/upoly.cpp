#include "schurhr/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace schurhr {

UPoly::UPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::operator()(const Rational& z) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * z + *it;
  return v;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

std::string UPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << schurhr::to_string(c_[i]);
  return "[" + os.str() + "]";
}

UPoly derivative(const UPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> c(static_cast<std::size_t>(p.degree()));
  for (std::size_t i = 1; i <= c.size(); ++i) c[i - 1] = p[i] * static_cast<long>(i);
  return UPoly(std::move(c));
}

void divmod(const UPoly& a, const UPoly& b, UPoly& quotient, UPoly& remainder) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  const int db = b.degree();
  std::vector<Rational> q(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0);
  for (int k = a.degree(); k >= db; --k) {
    const Rational f = r[static_cast<std::size_t>(k)] / b.leading();
    q[static_cast<std::size_t>(k - db)] = f;
    if (f == 0) continue;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= f * b[static_cast<std::size_t>(i)];
  }
  quotient = UPoly(std::move(q));
  remainder = UPoly(std::move(r));
}

UPoly monic_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  std::vector<Rational> c = a.coefficients();
  const Rational lead = c.back();
  for (auto& x : c) x /= lead;
  return UPoly(std::move(c));
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() < 1) return p;
  UPoly q, r;
  divmod(p, monic_gcd(p, derivative(p)), q, r);
  return q;
}

std::vector<UPoly> sturm_chain(const UPoly& p) {
  std::vector<UPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  UPoly d = derivative(p);
  while (!d.is_zero()) {
    chain.push_back(d);
    UPoly q, r;
    divmod(chain[chain.size() - 2], chain.back(), q, r);
    d = UPoly() - r;
  }
  return chain;
}

namespace {

// Sign variations at +infinity (at_plus) or -infinity.
int variations_at_infinity(const std::vector<UPoly>& chain, bool at_plus) {
  int changes = 0, last = 0;
  for (const auto& f : chain) {
    int s = sgn(f.leading());
    if (!at_plus && f.degree() % 2 == 1) s = -s;
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

} // namespace

int count_real_roots(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
  const auto chain = sturm_chain(p);
  return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

bool has_only_real_roots(const UPoly& p) {
  if (p.degree() < 1) return true;
  const UPoly g = squarefree_part(p);
  return count_real_roots(g) == g.degree();
}

} // namespace schurhr
