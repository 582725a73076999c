#include "schurhr/polya.hpp"

#include "schurhr/matrix.hpp"

#include <stdexcept>
#include <string>

namespace schurhr {

namespace {

// Sign of det m by fraction-free (Bareiss) elimination.
int bareiss_sign(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  int s = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      s = -s;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return s * sgn(m[n - 1][n - 1]);
}

// Conjugate-side scan: for every partition k with k_1 <= n and at most
// max_rows parts, det(h_{k_a - a + b}) = det(e_{k'_a - a + b}), where
// h = mu / mu_0 and e is the inverse series, sum_i (-1)^i e_i h_{m-i} = 0.
// k' has at most n parts, so each determinant is at most n x n.
//
// With integer mu, e_m = P_m / mu_0^m for integers P_m. Scaling row a of
// the r x r determinant by mu_0^{k'_a - a + r - 1} (a positive factor) turns
// entry (a, b) into P_{k'_a - a + b} mu_0^{r - 1 - b}.
struct DualScan {
  std::vector<Integer> numerators;
  Integer mu0;
  int n;
  int max_rows;
  std::vector<int> parts;

  bool current_ok() const {
    const std::size_t r = parts.size();
    std::vector<Integer> mu0_pow(r, 1);
    for (std::size_t i = 1; i < r; ++i) mu0_pow[i] = mu0_pow[i - 1] * mu0;
    std::vector<std::vector<Integer>> m(r, std::vector<Integer>(r));
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) {
        const int k = parts[a] - static_cast<int>(a) + static_cast<int>(b);
        if (k >= 0) m[a][b] = numerators[static_cast<std::size_t>(k)] * mu0_pow[r - 1 - b];
      }
    return bareiss_sign(std::move(m)) >= 0;
  }

  bool scan(int bound) {
    if (!parts.empty() && !current_ok()) return false;
    if (static_cast<int>(parts.size()) == n) return true;
    for (int k = bound; k >= 1; --k) {
      parts.push_back(k);
      const bool ok = scan(k);
      parts.pop_back();
      if (!ok) return false;
    }
    return true;
  }
};

// mu scaled to coprime integers.
std::vector<Integer> integer_sequence(std::span<const Rational> mu) {
  Integer den = 1;
  for (const auto& x : mu) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out;
  for (const auto& x : mu) out.push_back(Integer(x.get_num() * (den / x.get_den())));
  return out;
}

// P_m = (-1)^{m+1} sum_{i<m} (-1)^i P_i mu_{m-i} mu_0^{m-1-i}, P_0 = 1.
std::vector<Integer> inverse_numerators(const std::vector<Integer>& mu, int terms) {
  auto at = [&mu](int k) { return k < static_cast<int>(mu.size()) ? mu[static_cast<std::size_t>(k)] : Integer(0); };
  std::vector<Integer> mu0_pow{1};
  for (int i = 1; i < terms; ++i) mu0_pow.push_back(mu0_pow.back() * mu[0]);
  std::vector<Integer> p{Integer(1)};
  for (int m = 1; m < terms; ++m) {
    Integer acc = 0;
    for (int i = 0; i < m; ++i) {
      const Integer t = p[static_cast<std::size_t>(i)] * at(m - i) * mu0_pow[static_cast<std::size_t>(m - 1 - i)];
      if (i % 2 == 0) acc += t; else acc -= t;
    }
    p.push_back(m % 2 == 1 ? acc : Integer(-acc));
  }
  return p;
}

} // namespace

Rational toeplitz_minor(std::span<const Rational> mu, std::span<const int> rows, std::span<const int> cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("toeplitz_minor: row and column counts differ");
  Matrix m(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) {
      const int k = rows[a] - cols[b];
      if (k >= 0 && k < static_cast<int>(mu.size())) m(a, b) = mu[static_cast<std::size_t>(k)];
    }
  return determinant(std::move(m));
}

namespace {

void require_nonnegative(std::span<const Rational> mu) {
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] < 0) throw std::invalid_argument("Polya sequence entry " + std::to_string(i) + " is negative");
}

} // namespace

int polya_default_rows(std::size_t length) {
  // a single entry has no minors beyond itself, so any bound will do
  if (length <= 1) return kPolyaMaxRows;
  const long n = static_cast<long>(length) - 1;
  int rows = 1;
  for (int r = 1; r <= kPolyaMaxRows; ++r) {
    if (binomial(r + n, n) > kPolyaMinorBudget) break;
    rows = r;
  }
  return rows;
}

bool polya_check_minors(std::span<const Rational> mu, int max_rows) {
  if (mu.size() > kPolyaMinorLengthCap)
    throw std::invalid_argument("polya_check_minors: length " + std::to_string(mu.size()) + " exceeds the cap of " +
                                std::to_string(kPolyaMinorLengthCap));
  if (max_rows < 0) throw std::invalid_argument("polya_check_minors: max_rows must be nonnegative");
  require_nonnegative(mu);
  // Leading zeros only shift the matrix down; drop them so that mu_0 > 0.
  while (!mu.empty() && mu.front() == 0) mu = mu.subspan(1);
  if (mu.empty()) return true;
  if (max_rows == 0) max_rows = polya_default_rows(mu.size());
  const int n = static_cast<int>(mu.size()) - 1;
  if (n == 0) return true;
  const auto ints = integer_sequence(mu);
  DualScan s{inverse_numerators(ints, max_rows + n), ints[0], n, max_rows, {}};
  return s.scan(max_rows);
}

bool polya_check_roots(std::span<const Rational> mu) {
  require_nonnegative(mu);
  return has_only_real_roots(UPoly(std::vector<Rational>(mu.begin(), mu.end())));
}

CohClass polya_combination_class(const Partition& lambda, const SplitBundle& bundle, const CohClass& h,
                                 std::span<const Rational> mu) {
  const Space& space = bundle.space();
  if (lambda.weight() != space.dimension() - 2)
    throw std::invalid_argument("polya_combination_class: |lambda| = " + std::to_string(lambda.weight()) +
                                ", expected dim X - 2 = " + std::to_string(space.dimension() - 2));
  if (!(h.space() == space)) throw std::invalid_argument("polya_combination_class: h lives on a different space");
  if (!h.is_zero() && (h.degree() != 1 || !h.is_homogeneous()))
    throw std::invalid_argument("polya_combination_class: h must have degree 1");
  CohClass out(space);
  CohClass h_power = CohClass::unit(space);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] != 0) out += mu[i] * (derived_schur_class(lambda, static_cast<int>(i), bundle) * h_power);
    h_power = h_power * h;
  }
  return out;
}

} // namespace schurhr
