#include "schurhr/lorentzian.hpp"

#include "schurhr/bundle.hpp"
#include "schurhr/cohomology.hpp"
#include "schurhr/schur.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schurhr {

namespace {

void fill_compositions(int total, std::size_t vars, Exponents& current, std::vector<Exponents>& out) {
  if (current.size() + 1 == vars) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int v = total; v >= 0; --v) {
    current.push_back(v);
    fill_compositions(total - v, vars, current, out);
    current.pop_back();
  }
}

// x_j -> x_j + eps * (x_1 + ... + x_e)
Polynomial spread(const Polynomial& q, const Rational& epsilon) {
  const std::size_t e = q.nvars();
  Polynomial sum(e);
  for (std::size_t j = 0; j < e; ++j) sum += Polynomial::variable(e, j);
  std::vector<Polynomial> shifted;
  for (std::size_t j = 0; j < e; ++j) shifted.push_back(Polynomial::variable(e, j) + epsilon * sum);
  return substitute(q, shifted);
}

LorentzianReport strict_check(const Polynomial& p) {
  LorentzianReport r;
  r.tested = p;
  if (!p.is_homogeneous()) throw std::invalid_argument("lorentzian_check: polynomial is not homogeneous");
  if (p.is_zero()) return r;
  r.positive_coefficients =
      std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second > 0; });
  r.ok = r.positive_coefficients;
  const int d = p.degree();
  if (d < 2) return r;
  const Inertia want{1, static_cast<int>(p.nvars()) - 1, 0};
  for (const auto& alpha : compositions_of(d - 2, p.nvars())) {
    ++r.hessians_checked;
    const Inertia s = inertia(hessian_of_partial(p, alpha));
    if (!(s == want)) {
      r.ok = false;
      r.failing_alpha = alpha;
      r.failing_inertia = s;
      break;
    }
  }
  return r;
}

} // namespace

std::vector<Exponents> compositions_of(int total, std::size_t vars) {
  std::vector<Exponents> out;
  if (vars == 0 || total < 0) return out;
  Exponents current;
  fill_compositions(total, vars, current, out);
  return out;
}

Polynomial perturbed_polynomial(const Polynomial& p, const Rational& epsilon) {
  const Polynomial s = denormalize(p);
  const int box = std::max(s.max_variable_degree(), s.degree());
  const Polynomial q_eps = spread(box_reverse(s, box), epsilon);
  return normalize(box_reverse(restrict_to_box(q_eps, box), box));
}

LorentzianReport lorentzian_check(const Polynomial& p, const LorentzianOptions& options) {
  if (!p.is_homogeneous()) throw std::invalid_argument("lorentzian_check: polynomial is not homogeneous");
  if (options.mode == LorentzianMode::strict) return strict_check(p);
  if (options.epsilon <= 0) throw std::invalid_argument("lorentzian_check: epsilon must be positive");

  LorentzianReport r = strict_check(perturbed_polynomial(p, options.epsilon));
  r.epsilon = options.epsilon;
  if (!r.ok && options.retry) {
    const Rational smaller = options.epsilon / 10;
    r = strict_check(perturbed_polynomial(p, smaller));
    r.epsilon = smaller;
  }
  return r;
}

BridgeReport lemma_bridge_check(const Polynomial& p, int box, const Exponents& alpha) {
  if (!p.is_homogeneous() || p.is_zero())
    throw std::invalid_argument("lemma_bridge_check: polynomial must be nonzero and homogeneous");
  if (alpha.size() != p.nvars()) throw std::invalid_argument("lemma_bridge_check: alpha has the wrong length");
  if (std::accumulate(alpha.begin(), alpha.end(), 0) != p.degree() - 2)
    throw std::invalid_argument("lemma_bridge_check: |alpha| must equal deg p - 2");
  if (box < p.max_variable_degree()) throw std::invalid_argument("lemma_bridge_check: box below a variable degree");
  for (int a : alpha)
    if (a < 0 || a > box) throw std::invalid_argument("lemma_bridge_check: alpha outside the box");

  const std::size_t e = p.nvars();
  const Polynomial q = box_reverse(p, box);
  BridgeReport r;
  r.hessian = hessian_of_partial(normalize(p), alpha);
  r.other = Matrix(e, e);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) {
      // [q t_i t_j]_beta = [q]_{beta - delta_i - delta_j}
      Exponents need(e);
      bool inside = true;
      for (std::size_t k = 0; k < e; ++k) {
        need[k] = box - alpha[k] - (k == i) - (k == j);
        inside = inside && need[k] >= 0;
      }
      if (inside) r.other(i, j) = q.coefficient(need);
    }
  r.ok = r.hessian == r.other;
  return r;
}

BridgeReport hessian_vs_intersection(const Partition& lambda, int e, int n, const Exponents& alpha,
                                     const Rational& epsilon) {
  if (e < 1 || n < 1) throw std::invalid_argument("hessian_vs_intersection: e and N must be positive");
  if (alpha.size() != static_cast<std::size_t>(e))
    throw std::invalid_argument("hessian_vs_intersection: alpha must have e entries");
  if (std::accumulate(alpha.begin(), alpha.end(), 0) != lambda.weight() - 2)
    throw std::invalid_argument("hessian_vs_intersection: |alpha| must equal |lambda| - 2");
  for (int a : alpha)
    if (a < 0 || a > n) throw std::invalid_argument("hessian_vs_intersection: need 0 <= alpha_j <= N");

  const auto ue = static_cast<std::size_t>(e);
  const Partition dual = dual_in_box(lambda, e, n);

  // Polynomial side.
  const Polynomial q_eps = spread(schur_jt(dual, ue), epsilon);
  const Polynomial p_eps = box_reverse(restrict_to_box(q_eps, n), n);
  BridgeReport r;
  r.hessian = hessian_of_partial(normalize(p_eps), alpha);

  // Geometric side, on the factors of positive dimension.
  std::vector<std::size_t> kept;
  std::vector<int> factors;
  for (std::size_t j = 0; j < ue; ++j)
    if (n - alpha[j] > 0) {
      kept.push_back(j);
      factors.push_back(n - alpha[j]);
    }
  const Space space(factors);
  const std::size_t k = factors.size();
  std::vector<std::vector<int>> lines;
  for (std::size_t j = 0; j < ue; ++j) {
    std::vector<int> l(k, 0);
    auto it = std::find(kept.begin(), kept.end(), j);
    if (it != kept.end()) l[static_cast<std::size_t>(it - kept.begin())] = 1;
    lines.push_back(std::move(l));
  }
  const SplitBundle twisted(space, std::move(lines), std::vector<Rational>(k, epsilon));
  const Matrix form = intersection_form(schur_class(dual, twisted), space);

  r.other = Matrix(ue, ue);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) r.other(kept[a], kept[b]) = form(a, b);
  r.ok = r.hessian == r.other;
  return r;
}

} // namespace schurhr
