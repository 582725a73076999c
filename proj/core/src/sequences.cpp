#include "schurhr/sequences.hpp"

#include "schurhr/schur.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace schurhr {

Rational Sequence::at(int i) const {
  const int k = i - start;
  return k >= 0 && k < static_cast<int>(values.size()) ? values[static_cast<std::size_t>(k)] : Rational(0);
}

std::string Sequence::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < values.size(); ++k) os << (k ? "," : "") << schurhr::to_string(values[k]);
  os << "]";
  return os.str();
}

bool is_log_concave(std::span<const Rational> values, std::string* diagnostic) {
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] < 0) {
      if (diagnostic) *diagnostic = "negative value at position " + std::to_string(i);
      return false;
    }
  for (std::size_t i = 1; i + 1 < values.size(); ++i)
    if (values[i - 1] * values[i + 1] > values[i] * values[i]) {
      if (diagnostic) *diagnostic = "inequality fails at position " + std::to_string(i);
      return false;
    }
  return true;
}

bool is_log_concave(const Sequence& s, std::string* diagnostic) { return is_log_concave(s.values, diagnostic); }

bool is_ultra_log_concave(std::span<const Rational> values) {
  if (values.empty()) return true;
  const long n = static_cast<long>(values.size()) - 1;
  std::vector<Rational> scaled;
  for (long i = 0; i <= n; ++i) scaled.push_back(values[static_cast<std::size_t>(i)] / Rational(binomial(n, i)));
  return is_log_concave(scaled);
}

Sequence kt_sequence(const SplitBundle& e_bundle, const SplitBundle& f_bundle, const Partition& lambda,
                     const Partition& mu) {
  if (!(e_bundle.space() == f_bundle.space())) throw std::invalid_argument("kt_sequence: bundles on different spaces");
  const int d = e_bundle.space().dimension();
  const int l = lambda.weight(), m = mu.weight();
  if (l + m < d) throw std::invalid_argument("kt_sequence: |lambda| + |mu| must be at least dim X");
  Sequence s;
  s.label = "kt";
  s.start = std::max(0, m - d);
  const int stop = std::min(m, l + m - d);
  for (int i = s.start; i <= stop; ++i) {
    const CohClass a = derived_schur_class(lambda, l + m - d - i, e_bundle);
    const CohClass b = derived_schur_class(mu, i, f_bundle);
    s.values.push_back(integrate(a * b));
  }
  return s;
}

Sequence derived_value_sequence(const Partition& lambda, std::span<const Rational> x) {
  if (x.empty()) throw std::invalid_argument("derived_value_sequence: empty point");
  Sequence s;
  s.label = "derived-value";
  for (const auto& p : derived_schur_all(lambda, x.size())) s.values.push_back(evaluate(p, x));
  return s;
}

Sequence pair_value_sequence(const Partition& lambda, const Partition& mu, int d, std::span<const Rational> x,
                             std::span<const Rational> y) {
  if (x.empty() || y.empty()) throw std::invalid_argument("pair_value_sequence: empty point");
  const int l = lambda.weight(), m = mu.weight();
  if (d > l + m) throw std::invalid_argument("pair_value_sequence: d must be at most |lambda| + |mu|");
  const auto ds_x = derived_schur_all(lambda, x.size());
  const auto ds_y = derived_schur_all(mu, y.size());
  Sequence s;
  s.label = "pair-value";
  s.start = 0;
  const int stop = std::min(m, d - m);
  for (int i = 0; i <= stop; ++i) {
    const auto j = static_cast<std::size_t>(l + m - d + i);
    s.values.push_back(evaluate(ds_x[j], x) * evaluate(ds_y[static_cast<std::size_t>(i)], y));
  }
  return s;
}

} // namespace schurhr
