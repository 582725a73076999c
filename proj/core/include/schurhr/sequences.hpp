#pragma once

#include "schurhr/bundle.hpp"
#include "schurhr/partition.hpp"

#include <span>
#include <string>
#include <vector>

namespace schurhr {

// values[k] is the term at index start + k; everything outside is zero.
struct Sequence {
  int start = 0;
  std::vector<Rational> values;
  std::string label;

  Rational at(int i) const;
  std::string to_string() const;
};

// a_{i-1} a_{i+1} <= a_i^2 at every interior index. False when some value is
// negative; `diagnostic`, if given, receives the reason.
bool is_log_concave(std::span<const Rational> values, std::string* diagnostic = nullptr);
bool is_log_concave(const Sequence& s, std::string* diagnostic = nullptr);
// a_i / binom(n, i) is log-concave, n = values.size() - 1.
bool is_ultra_log_concave(std::span<const Rational> values);

// i -> integral of s_lambda^{(|lambda|+|mu|-d-i)}(E) s_mu^{(i)}(F) over
// max(0, |mu|-d) <= i <= min(|mu|, |lambda|+|mu|-d). Throws when
// |lambda| + |mu| < d or the bundles live on different spaces.
Sequence kt_sequence(const SplitBundle& e_bundle, const SplitBundle& f_bundle, const Partition& lambda,
                     const Partition& mu);

// (s_lambda^{(i)}(x))_{i = 0..|lambda|}
Sequence derived_value_sequence(const Partition& lambda, std::span<const Rational> x);

// i -> s_lambda^{(|lambda|+|mu|-d+i)}(x) s_mu^{(i)}(y) over the indices where
// both factors can be nonzero. Throws when d > |lambda| + |mu|.
Sequence pair_value_sequence(const Partition& lambda, const Partition& mu, int d, std::span<const Rational> x,
                             std::span<const Rational> y);

} // namespace schurhr
