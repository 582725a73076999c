#include "schurhr/quadform.hpp"

#include <stdexcept>
#include <vector>

namespace schurhr {

std::string Inertia::to_string() const {
  return "(" + std::to_string(positive) + "," + std::to_string(negative) + "," + std::to_string(zero) + ")";
}

Inertia inertia(const Matrix& m) {
  if (!m.square() || !m.is_symmetric()) throw std::invalid_argument("inertia: matrix is not symmetric");
  Matrix a = m;
  const std::size_t n = a.rows();
  std::vector<bool> done(n, false);
  Inertia s;
  std::size_t remaining = n;

  auto count = [&s](const Rational& pivot) { (pivot > 0 ? s.positive : s.negative) += 1; };

  while (remaining > 0) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n && p == n; ++i)
      if (!done[i] && a(i, i) != 0) p = i;

    if (p != n) {
      const Rational pivot = a(p, p);
      count(pivot);
      done[p] = true;
      --remaining;
      for (std::size_t r = 0; r < n; ++r) {
        if (done[r] || a(r, p) == 0) continue;
        const Rational f = a(r, p) / pivot;
        for (std::size_t c = 0; c < n; ++c)
          if (!done[c]) a(r, c) -= f * a(p, c);
      }
      continue;
    }

    // All remaining diagonal entries vanish: look for a hyperbolic pair.
    std::size_t bi = n, bj = n;
    for (std::size_t i = 0; i < n && bi == n; ++i) {
      if (done[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if (!done[j] && a(i, j) != 0) {
          bi = i;
          bj = j;
          break;
        }
    }
    if (bi == n) {
      s.zero += static_cast<int>(remaining);
      break;
    }

    const Rational b = a(bi, bj);
    s.positive += 1;
    s.negative += 1;
    done[bi] = done[bj] = true;
    remaining -= 2;
    // Schur complement of [[0,b],[b,0]].
    std::vector<std::size_t> rest;
    for (std::size_t r = 0; r < n; ++r)
      if (!done[r]) rest.push_back(r);
    Matrix upd(n, n);
    for (std::size_t r : rest)
      for (std::size_t c : rest) upd(r, c) = (a(r, bi) * a(bj, c) + a(r, bj) * a(bi, c)) / b;
    for (std::size_t r : rest)
      for (std::size_t c : rest) a(r, c) -= upd(r, c);
  }
  return s;
}

bool is_hr(const Inertia& s) { return s.zero == 0 && s.positive == 1; }
bool is_hr(const Matrix& m) { return is_hr(inertia(m)); }

bool is_weak_hr(const Inertia& s) { return s.positive <= 1 && (s.positive == 1 || s.zero >= 1); }
bool is_weak_hr(const Matrix& m) { return is_weak_hr(inertia(m)); }

Matrix intersection_form(const CohClass& omega, const Space& space) {
  if (!(omega.space() == space)) throw std::invalid_argument("intersection_form: class lives on a different space");
  const int target = space.dimension() - 2;
  if (!omega.is_homogeneous())
    throw std::invalid_argument("intersection_form: class is not homogeneous (degrees " +
                                std::to_string(omega.degree()) + " and lower present)");
  if (!omega.is_zero() && omega.degree() != target)
    throw std::invalid_argument("intersection_form: class has degree " + std::to_string(omega.degree()) +
                                ", expected " + std::to_string(target));

  const std::size_t k = space.factor_count();
  Matrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Exponents need = space.factors();
      --need[i];
      --need[j];
      bool valid = true;
      for (int x : need) valid = valid && x >= 0;
      if (valid) m(i, j) = omega.coefficient(need);
    }
  return m;
}

Rational pairing(const CohClass& omega, const CohClass& a, const CohClass& b) { return integrate(a * omega * b); }

} // namespace schurhr
