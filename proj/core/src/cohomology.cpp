#include "schurhr/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schurhr {

namespace {

int total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

} // namespace

Space::Space(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("a space needs at least one projective factor");
  for (int n : factors_)
    if (n < 1) throw std::invalid_argument("projective factors must have dimension >= 1");
  dimension_ = std::accumulate(factors_.begin(), factors_.end(), 0);
}

std::string Space::to_string() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < factors_.size(); ++j) os << (j ? " x " : "") << "P^" << factors_[j];
  return os.str();
}

CohClass CohClass::unit(const Space& space) { return scalar(space, 1); }

CohClass CohClass::scalar(const Space& space, const Rational& c) {
  CohClass u(space);
  u.add_term(Exponents(space.factor_count(), 0), c);
  return u;
}

CohClass CohClass::hyperplane(const Space& space, std::size_t j) {
  if (j >= space.factor_count()) throw std::invalid_argument("hyperplane class index out of range");
  Exponents e(space.factor_count(), 0);
  e[j] = 1;
  return monomial(space, e);
}

CohClass CohClass::linear(const Space& space, std::span<const Rational> coefficients) {
  if (coefficients.size() != space.factor_count())
    throw std::invalid_argument("linear class: expected " + std::to_string(space.factor_count()) + " coefficients, got " +
                                std::to_string(coefficients.size()));
  CohClass u(space);
  Exponents e(space.factor_count(), 0);
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    e[j] = 1;
    u.add_term(e, coefficients[j]);
    e[j] = 0;
  }
  return u;
}

CohClass CohClass::monomial(const Space& space, const Exponents& exponents, const Rational& c) {
  CohClass u(space);
  u.add_term(exponents, c);
  return u;
}

int CohClass::degree() const { return terms_.empty() ? -1 : total(terms_.begin()->first); }

bool CohClass::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total(t.first) == d; });
}

CohClass CohClass::homogeneous_part(int degree) const {
  CohClass u(space_);
  for (const auto& [e, c] : terms_)
    if (total(e) == degree) u.terms_.emplace(e, c);
  return u;
}

Rational CohClass::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Rational> CohClass::linear_coefficients() const {
  std::vector<Rational> out(space_.factor_count());
  for (const auto& [e, c] : terms_) {
    if (total(e) != 1) throw std::invalid_argument("linear_coefficients: class is not of degree 1");
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] == 1) out[j] = c;
  }
  return out;
}

void CohClass::add_term(const Exponents& exponents, const Rational& c) {
  if (exponents.size() != space_.factor_count())
    throw std::invalid_argument("cohomology exponent vector has the wrong length");
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (exponents[j] < 0) throw std::invalid_argument("negative exponent in cohomology class");
    if (exponents[j] > space_.factors()[j]) return;
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void CohClass::require_same_space(const CohClass& other, const char* op) const {
  if (!(space_ == other.space_))
    throw std::invalid_argument(std::string(op) + ": classes live on different spaces (" + space_.to_string() + " vs " +
                                other.space_.to_string() + ")");
}

CohClass& CohClass::operator+=(const CohClass& other) {
  require_same_space(other, "add");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& other) {
  require_same_space(other, "subtract");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

CohClass& CohClass::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

CohClass multiply(const CohClass& a, const CohClass& b) {
  a.require_same_space(b, "multiply");
  const auto& bounds = a.space_.factors();
  CohClass r(a.space_);
  Exponents e(bounds.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      bool vanishes = false;
      for (std::size_t j = 0; j < e.size(); ++j) {
        e[j] = ea[j] + eb[j];
        if (e[j] > bounds[j]) {
          vanishes = true;
          break;
        }
      }
      if (!vanishes) r.add_term(e, ca * cb);
    }
  return r;
}

bool operator==(const CohClass& a, const CohClass& b) {
  if (!(a.space_ == b.space_) || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [e, c] : a.terms_) {
    if (e != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

CohClass CohClass::pow(unsigned k) const {
  CohClass result = unit(space_);
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

std::string CohClass::to_string(const std::vector<std::string>& names) const {
  Polynomial p(space_.factor_count());
  for (const auto& [e, c] : terms_) p.add_term(e, c);
  return p.to_string(names.empty() ? variable_names("t", space_.factor_count()) : names);
}

Rational integrate(const CohClass& u) { return u.coefficient(u.space().factors()); }

std::vector<CohClass> h11_basis(const Space& space) {
  std::vector<CohClass> basis;
  for (std::size_t j = 0; j < space.factor_count(); ++j) basis.push_back(CohClass::hyperplane(space, j));
  return basis;
}

CohClass evaluate_at_classes(const Polynomial& p, std::span<const CohClass> values, const Space& space) {
  for (const auto& v : values)
    if (!(v.space() == space)) throw std::invalid_argument("evaluate_at_classes: value lives on a different space");
  return evaluate_in<CohClass>(p, values, CohClass::unit(space));
}

} // namespace schurhr
