#include "schurhr/schur.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace schurhr {

namespace {

using Key = std::pair<std::vector<int>, std::size_t>;

struct SchurMemo {
  std::mutex mutex;
  std::map<Key, Polynomial> schur;
  std::map<Key, std::vector<Polynomial>> derived;
};

SchurMemo& memo() {
  static SchurMemo m;
  return m;
}

Key key_of(const Partition& lambda, std::size_t e) { return {lambda.trimmed().parts(), e}; }

Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m, std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(nvars, 1);
  bool negate = false;
  Polynomial prev = Polynomial::constant(nvars, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return Polynomial(nvars);
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = Polynomial(nvars);
    }
    prev = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  return negate ? -det : det;
}

Polynomial c_entry(int index, std::size_t e) {
  if (index < 0 || static_cast<std::size_t>(index) > e) return Polynomial(e);
  if (index == 0) return Polynomial::constant(e, 1);
  return Polynomial::variable(e, static_cast<std::size_t>(index - 1));
}

void compositions(int total, std::size_t parts, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (current.size() + 1 == parts) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int v = total; v >= 0; --v) {
    current.push_back(v);
    compositions(total - v, parts, current, out);
    current.pop_back();
  }
}

void require_vars(std::size_t e) {
  if (e < 1) throw std::invalid_argument("Schur polynomials need at least one variable");
}

} // namespace

Polynomial schur_elementary_form(const Partition& lambda, std::size_t e) {
  require_vars(e);
  const Partition l = lambda.trimmed();
  const std::size_t n = l.size();
  std::vector<std::vector<Polynomial>> m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      m[r].push_back(c_entry(l[r] - static_cast<int>(r) + static_cast<int>(s), e));
  return bareiss_determinant(std::move(m), e);
}

Polynomial schur_jt(const Partition& lambda, std::size_t e) {
  require_vars(e);
  const Key key = key_of(lambda, e);
  {
    std::lock_guard lock(memo().mutex);
    if (auto it = memo().schur.find(key); it != memo().schur.end()) return it->second;
  }
  Polynomial s = from_elementary_basis(schur_elementary_form(lambda, e));
  std::lock_guard lock(memo().mutex);
  return memo().schur.try_emplace(key, std::move(s)).first->second;
}

Polynomial schur_ssyt(const Partition& lambda, std::size_t e) {
  require_vars(e);
  const Partition shape = conjugate(lambda);
  Polynomial s(e);
  std::vector<std::vector<int>> contents;
  std::vector<int> scratch;
  compositions(lambda.weight(), e, scratch, contents);
  for (const auto& alpha : contents) {
    const auto k = ssyt_count(shape, alpha);
    if (k) s.add_term(alpha, Rational(Integer(static_cast<unsigned long>(k))));
  }
  return s;
}

std::vector<Polynomial> derived_schur_all(const Partition& lambda, std::size_t e) {
  require_vars(e);
  const Key key = key_of(lambda, e);
  {
    std::lock_guard lock(memo().mutex);
    if (auto it = memo().derived.find(key); it != memo().derived.end()) return it->second;
  }

  // x_j -> x_j + t, with t as an extra trailing variable
  const Polynomial s = extend_variables(schur_jt(lambda, e), e + 1);
  const Polynomial t = Polynomial::variable(e + 1, e);
  std::vector<Polynomial> shifted;
  for (std::size_t j = 0; j < e; ++j) shifted.push_back(Polynomial::variable(e + 1, j) + t);
  shifted.push_back(t);
  const Polynomial expanded = substitute(s, shifted);

  std::vector<Polynomial> all;
  for (int i = 0; i <= lambda.weight(); ++i) all.push_back(coefficient_of_power(expanded, e, i));

  std::lock_guard lock(memo().mutex);
  return memo().derived.try_emplace(key, std::move(all)).first->second;
}

Polynomial derived_schur(const Partition& lambda, int i, std::size_t e) {
  require_vars(e);
  if (i < 0 || i > lambda.weight()) return Polynomial(e);
  return derived_schur_all(lambda, e)[static_cast<std::size_t>(i)];
}

std::vector<IdentityCheck> derived_schur_table_check(std::size_t e) {
  if (e < 3) throw std::invalid_argument("derived_schur_table_check: needs e >= 3");
  const auto c = [e](int k) { return elementary(k, e); };
  const auto k = [e](const Integer& v) { return Polynomial::constant(e, Rational(v)); };
  const long n = static_cast<long>(e);
  const Integer ez = n;

  struct Row {
    Partition lambda;
    int i;
    Polynomial expected;
    std::string label;
  };
  const std::vector<Row> rows = {
      {{1}, 0, c(1), "s_(1) = c1"},
      {{1}, 1, k(ez), "s_(1)^(1) = e"},
      {{2, 0}, 0, c(2), "s_(2,0) = c2"},
      {{2, 0}, 1, k(ez - 1) * c(1), "s_(2,0)^(1) = (e-1) c1"},
      {{2, 0}, 2, k(binomial(n, 2)), "s_(2,0)^(2) = binom(e,2)"},
      {{1, 1}, 0, c(1) * c(1) - c(2), "s_(1,1) = c1^2 - c2"},
      {{1, 1}, 1, k(ez + 1) * c(1), "s_(1,1)^(1) = (e+1) c1"},
      {{1, 1}, 2, k(binomial(n + 1, 2)), "s_(1,1)^(2) = binom(e+1,2)"},
      {{3, 0, 0}, 0, c(3), "s_(3,0,0) = c3"},
      {{3, 0, 0}, 1, k(ez - 2) * c(2), "s_(3,0,0)^(1) = (e-2) c2"},
      {{3, 0, 0}, 2, k(binomial(n - 1, 2)) * c(1), "s_(3,0,0)^(2) = binom(e-1,2) c1"},
      {{3, 0, 0}, 3, k(binomial(n, 3)), "s_(3,0,0)^(3) = binom(e,3)"},
      {{2, 1, 0}, 0, c(1) * c(2) - c(3), "s_(2,1,0) = c1 c2 - c3"},
      {{2, 1, 0}, 1, k(2) * c(2) + k(ez - 1) * c(1) * c(1), "s_(2,1,0)^(1) = 2 c2 + (e-1) c1^2"},
      {{2, 1, 0}, 2, k(ez * ez - 1) * c(1), "s_(2,1,0)^(2) = (e^2-1) c1"},
      {{2, 1, 0}, 3, k(2 * binomial(n + 1, 3)), "s_(2,1,0)^(3) = 2 binom(e+1,3)"},
      {{1, 1, 1}, 0, c(1).pow(3) - k(2) * c(1) * c(2) + c(3), "s_(1,1,1) = c1^3 - 2 c1 c2 + c3"},
      {{1, 1, 1}, 1, k(ez + 2) * (c(1) * c(1) - c(2)), "s_(1,1,1)^(1) = (e+2)(c1^2 - c2)"},
      {{1, 1, 1}, 2, k(binomial(n + 2, 2)) * c(1), "s_(1,1,1)^(2) = binom(e+2,2) c1"},
      {{1, 1, 1}, 3, k(binomial(n + 2, 3)), "s_(1,1,1)^(3) = binom(e+2,3)"},
  };

  std::vector<IdentityCheck> out;
  for (const auto& row : rows)
    out.push_back({row.label + " [e=" + std::to_string(e) + "]", derived_schur(row.lambda, row.i, e) == row.expected});
  return out;
}

std::vector<IdentityCheck> derived_chern_check(std::size_t e) {
  require_vars(e);
  std::vector<IdentityCheck> out;
  const long n = static_cast<long>(e);
  for (int p = 1; p <= n; ++p)
    for (int i = 0; i <= p; ++i) {
      const Polynomial expected = Rational(binomial(n - p + i, i)) * elementary(p - i, e);
      out.push_back({"s_(" + std::to_string(p) + ")^(" + std::to_string(i) + ") [e=" + std::to_string(e) + "]",
                     derived_schur(Partition{p}, i, e) == expected});
    }
  return out;
}

bool dual_reversal_check(const Partition& lambda, std::size_t e, int n) {
  const Partition bar = dual_in_box(lambda, static_cast<int>(e), n);
  return box_reverse(schur_jt(bar, e), n) == schur_jt(lambda, e);
}

void clear_schur_cache() {
  std::lock_guard lock(memo().mutex);
  memo().schur.clear();
  memo().derived.clear();
}

} // namespace schurhr
