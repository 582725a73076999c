#include "schurhr/random_instances.hpp"

#include <algorithm>
#include <stdexcept>

namespace schurhr {

std::uint64_t instance_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, int max_den) {
  if (hi < lo || max_den < 1) throw std::invalid_argument("random_rational: empty range");
  const int q = uniform_int(rng, 1, max_den);
  // Numerators p with lo <= p/q <= hi.
  const Rational lo_q = lo * q, hi_q = hi * q;
  mpz_class p_lo, p_hi;
  mpz_cdiv_q(p_lo.get_mpz_t(), lo_q.get_num_mpz_t(), lo_q.get_den_mpz_t());
  mpz_fdiv_q(p_hi.get_mpz_t(), hi_q.get_num_mpz_t(), hi_q.get_den_mpz_t());
  if (p_hi < p_lo) return lo;
  const long span = mpz_class(p_hi - p_lo).get_si();
  const long offset = std::uniform_int_distribution<long>(0, span)(rng);
  Rational r(mpz_class(p_lo + offset), q);
  r.canonicalize();
  return r;
}

std::vector<Rational> random_rational_vector(Rng& rng, std::size_t n, const Rational& lo, const Rational& hi,
                                             int max_den) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_rational(rng, lo, hi, max_den));
  return v;
}

Space random_space(Rng& rng, int min_dim, int max_dim, int max_factors) {
  if (min_dim < 1 || max_dim < min_dim || max_factors < 1) throw std::invalid_argument("random_space: bad bounds");
  const int d = uniform_int(rng, min_dim, max_dim);
  const int k = uniform_int(rng, 1, std::min(max_factors, d));
  // Split d into k positive parts.
  std::vector<int> cuts;
  for (int c = 1; c < d; ++c) cuts.push_back(c);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(static_cast<std::size_t>(k - 1));
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> factors;
  int prev = 0;
  for (int c : cuts) {
    factors.push_back(c - prev);
    prev = c;
  }
  factors.push_back(d - prev);
  return Space(factors);
}

SplitBundle random_bundle(Rng& rng, const Space& space, std::size_t rank, int max_degree) {
  const std::size_t k = space.factor_count();
  std::vector<std::vector<int>> lines(rank, std::vector<int>(k));
  for (auto& l : lines)
    for (auto& x : l) x = uniform_int(rng, -1, max_degree);
  return SplitBundle(space, std::move(lines), random_rational_vector(rng, k, -2, 2, 4));
}

SplitBundle random_nef_bundle(Rng& rng, const Space& space, std::size_t rank, int max_degree) {
  const std::size_t k = space.factor_count();
  std::vector<std::vector<int>> lines(rank, std::vector<int>(k));
  for (auto& l : lines)
    for (auto& x : l) x = uniform_int(rng, -1, max_degree);
  std::vector<Rational> twist(k);
  for (std::size_t j = 0; j < k; ++j) {
    int lowest = 0;
    for (const auto& l : lines) lowest = std::min(lowest, l[j]);
    const Rational extra = uniform_int(rng, 0, 2) == 0 ? Rational(0) : random_rational(rng, 0, 1, 4);
    twist[j] = Rational(-lowest) + extra;
  }
  return SplitBundle(space, std::move(lines), std::move(twist));
}

Partition random_partition(Rng& rng, int weight, int max_parts, int max_part) {
  const auto all = partitions_in_box(weight, max_parts, max_part);
  if (all.empty()) throw std::invalid_argument("random_partition: no partition fits");
  return all[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(all.size()) - 1))];
}

CohClass random_degree1_class(Rng& rng, const Space& space, const Rational& lo, const Rational& hi) {
  const auto c = random_rational_vector(rng, space.factor_count(), lo, hi, 4);
  return CohClass::linear(space, c);
}

CohClass random_nef_class(Rng& rng, const Space& space) { return random_degree1_class(rng, space, 0, 2); }

} // namespace schurhr
