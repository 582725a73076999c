#include "schurhr/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schurhr {

namespace {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Grlex-leading term.
const Polynomial::TermMap::value_type& leading(const Polynomial& p) { return *p.terms().begin(); }

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j]) return false;
  return true;
}

} // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t j) {
  if (j >= nvars) throw std::invalid_argument("variable index out of range");
  Exponents e(nvars, 0);
  e[j] = 1;
  return monomial(std::move(e), 1);
}

Polynomial Polynomial::monomial(Exponents exponents, const Rational& c) {
  for (int x : exponents)
    if (x < 0) throw std::invalid_argument("negative exponent in monomial");
  Polynomial p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total_degree(t.first) == d; });
}

int Polynomial::degree_in(std::size_t j) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[j]);
  return d;
}

int Polynomial::max_variable_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_)
    for (int x : e) d = std::max(d, x);
  return d;
}

Rational Polynomial::coefficient(std::span<const int> exponents) const {
  if (exponents.size() != nvars_) throw std::invalid_argument("coefficient: exponent vector has the wrong length");
  auto it = terms_.find(Exponents(exponents.begin(), exponents.end()));
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& exponents, const Rational& c) {
  if (exponents.size() != nvars_) throw std::invalid_argument("add_term: exponent vector has the wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::require_same_ring(const Polynomial& other, const char* op) const {
  if (nvars_ != other.nvars_)
    throw std::invalid_argument(std::string(op) + ": variable count mismatch (" + std::to_string(nvars_) + " vs " +
                                std::to_string(other.nvars_) + ")");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(other, "add");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(other, "subtract");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b, "multiply");
  Polynomial r(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [e, c] : a.terms_) {
    if (e != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  const auto var = [&](std::size_t j) { return j < names.size() ? names[j] : "x" + std::to_string(j + 1); };

  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    const Rational mag = abs(c);
    const bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    bool need_star = false;
    if (mag != 1 || is_const) {
      os << schurhr::to_string(mag);
      need_star = true;
    }
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      os << (need_star ? "*" : "") << var(j);
      if (e[j] > 1) os << '^' << e[j];
      need_star = true;
    }
  }
  return os.str();
}

Polynomial scale(const Polynomial& p, const Rational& c) { return c * p; }

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> replacements) {
  if (replacements.size() != p.nvars())
    throw std::invalid_argument("substitute: need one replacement per variable (" + std::to_string(p.nvars()) + ")");
  if (replacements.empty()) return p;
  const std::size_t m = replacements.front().nvars();
  for (const auto& r : replacements)
    if (r.nvars() != m) throw std::invalid_argument("substitute: replacements live in different rings");
  return evaluate_in<Polynomial>(p, replacements, Polynomial::constant(m, 1));
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.nvars())
    throw std::invalid_argument("evaluate: point has length " + std::to_string(point.size()) + ", expected " +
                                std::to_string(p.nvars()));
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t j = 0; j < e.size(); ++j)
      for (int k = 0; k < e[j]; ++k) term *= point[j];
    sum += term;
  }
  return sum;
}

Polynomial derivative(const Polynomial& p, std::size_t j) {
  if (j >= p.nvars()) throw std::invalid_argument("derivative: variable index out of range");
  Polynomial r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[j] == 0) continue;
    Exponents f = e;
    --f[j];
    r.add_term(f, c * e[j]);
  }
  return r;
}

Polynomial partial(const Polynomial& p, std::span<const int> alpha) {
  if (alpha.size() != p.nvars()) throw std::invalid_argument("partial: multi-index has the wrong length");
  Polynomial r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    Rational coeff = c;
    bool vanishes = false;
    for (std::size_t j = 0; j < e.size() && !vanishes; ++j) {
      if (alpha[j] < 0) throw std::invalid_argument("partial: negative derivative order");
      if (alpha[j] > e[j]) {
        vanishes = true;
        break;
      }
      // falling factorial e_j (e_j - 1) ... (e_j - alpha_j + 1)
      for (int k = 0; k < alpha[j]; ++k) coeff *= e[j] - k;
      f[j] -= alpha[j];
    }
    if (!vanishes) r.add_term(f, coeff);
  }
  return r;
}

Polynomial normalize(const Polynomial& p) {
  Polynomial r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Integer denom = 1;
    for (int x : e) denom *= factorial(x);
    r.add_term(e, c / Rational(denom));
  }
  return r;
}

Polynomial denormalize(const Polynomial& p) {
  Polynomial r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Integer f = 1;
    for (int x : e) f *= factorial(x);
    r.add_term(e, c * Rational(f));
  }
  return r;
}

Polynomial box_reverse(const Polynomial& p, int bound) {
  if (p.max_variable_degree() > bound)
    throw std::invalid_argument("box_reverse: bound " + std::to_string(bound) + " is below the degree " +
                                std::to_string(p.max_variable_degree()) + " of some variable");
  Polynomial r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Exponents f(e.size());
    for (std::size_t j = 0; j < e.size(); ++j) f[j] = bound - e[j];
    r.add_term(f, c);
  }
  return r;
}

Polynomial restrict_to_box(const Polynomial& p, int bound) {
  Polynomial r(p.nvars());
  for (const auto& [e, c] : p.terms())
    if (std::all_of(e.begin(), e.end(), [bound](int x) { return x <= bound; })) r.add_term(e, c);
  return r;
}

Matrix hessian_of_partial(const Polynomial& p, std::span<const int> alpha) {
  const std::size_t n = p.nvars();
  if (alpha.size() != n) throw std::invalid_argument("hessian_of_partial: multi-index has the wrong length");
  if (!p.is_homogeneous()) throw std::invalid_argument("hessian_of_partial: polynomial is not homogeneous");
  const int order = std::accumulate(alpha.begin(), alpha.end(), 0);
  if (!p.is_zero() && order != p.degree() - 2)
    throw std::invalid_argument("hessian_of_partial: |alpha| = " + std::to_string(order) + " but degree is " +
                                std::to_string(p.degree()));

  const Polynomial quad = partial(p, alpha);
  Matrix m(n, n);
  for (const auto& [e, c] : quad.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < n; ++j)
      for (int k = 0; k < e[j]; ++k) idx.push_back(j);
    // quad is homogeneous of degree 2
    const std::size_t i = idx[0], j = idx[1];
    if (i == j) {
      m(i, i) = 2 * c;
    } else {
      m(i, j) = c;
      m(j, i) = c;
    }
  }
  return m;
}

Polynomial elementary(int i, std::size_t e) {
  Polynomial r(e);
  if (i < 0 || static_cast<std::size_t>(i) > e) return r;
  // walk all 0/1 vectors with i ones
  std::vector<int> mask(e, 0);
  std::fill(mask.begin(), mask.begin() + i, 1);
  do {
    r.add_term(mask, 1);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return r;
}

bool is_symmetric(const Polynomial& p) {
  for (std::size_t j = 0; j + 1 < p.nvars(); ++j)
    for (const auto& [e, c] : p.terms()) {
      Exponents f = e;
      std::swap(f[j], f[j + 1]);
      if (p.coefficient(f) != c) return false;
    }
  return true;
}

Polynomial to_elementary_basis(const Polynomial& p) {
  if (!is_symmetric(p)) throw std::invalid_argument("to_elementary_basis: polynomial is not symmetric");
  const std::size_t e = p.nvars();
  std::vector<Polynomial> elem;
  for (std::size_t k = 1; k <= e; ++k) elem.push_back(elementary(static_cast<int>(k), e));

  Polynomial rest = p;
  Polynomial out(e);
  while (!rest.is_zero()) {
    const auto [lead, c] = leading(rest);
    // lead is weakly decreasing for a symmetric polynomial
    Exponents c_exps(e, 0);
    for (std::size_t k = 0; k < e; ++k) c_exps[k] = lead[k] - (k + 1 < e ? lead[k + 1] : 0);
    out.add_term(c_exps, c);
    Polynomial prod = Polynomial::constant(e, c);
    for (std::size_t k = 0; k < e; ++k)
      if (c_exps[k] > 0) prod *= elem[k].pow(static_cast<unsigned>(c_exps[k]));
    rest -= prod;
  }
  return out;
}

Polynomial from_elementary_basis(const Polynomial& c_poly) {
  const std::size_t e = c_poly.nvars();
  std::vector<Polynomial> elem;
  for (std::size_t k = 1; k <= e; ++k) elem.push_back(elementary(static_cast<int>(k), e));
  if (e == 0) return c_poly;
  return substitute(c_poly, elem);
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
  if (a.nvars() != b.nvars()) throw std::invalid_argument("divide_exact: variable count mismatch");
  const auto& [lb, cb] = leading(b);
  Polynomial rest = a;
  Polynomial q(a.nvars());
  Exponents shift(a.nvars());
  while (!rest.is_zero()) {
    const auto [lr, cr] = leading(rest);
    if (!divides(lb, lr)) throw std::domain_error("divide_exact: polynomial is not divisible");
    for (std::size_t j = 0; j < shift.size(); ++j) shift[j] = lr[j] - lb[j];
    const Polynomial t = Polynomial::monomial(shift, cr / cb);
    q += t;
    rest -= t * b;
  }
  return q;
}

Polynomial coefficient_of_power(const Polynomial& p, std::size_t j, int k) {
  if (j >= p.nvars()) throw std::invalid_argument("coefficient_of_power: variable index out of range");
  Polynomial r(p.nvars() - 1);
  for (const auto& [e, c] : p.terms()) {
    if (e[j] != k) continue;
    Exponents f;
    f.reserve(e.size() - 1);
    for (std::size_t l = 0; l < e.size(); ++l)
      if (l != j) f.push_back(e[l]);
    r.add_term(f, c);
  }
  return r;
}

Polynomial extend_variables(const Polynomial& p, std::size_t nvars) {
  if (nvars < p.nvars()) throw std::invalid_argument("extend_variables: cannot drop variables");
  Polynomial r(nvars);
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f.resize(nvars, 0);
    r.add_term(f, c);
  }
  return r;
}

std::vector<std::string> variable_names(const std::string& stem, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j) names.push_back(stem + std::to_string(j + 1));
  return names;
}

} // namespace schurhr
