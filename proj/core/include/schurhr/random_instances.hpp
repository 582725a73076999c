#pragma once

#include "schurhr/bundle.hpp"
#include "schurhr/cohomology.hpp"
#include "schurhr/partition.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace schurhr {

using Rng = std::mt19937_64;

// Independent stream for instance `index` of a run seeded with `master`
// (splitmix64 of the pair), so shards can be generated in any order.
std::uint64_t instance_seed(std::uint64_t master, std::uint64_t index);

int uniform_int(Rng& rng, int lo, int hi);
// p/q with 1 <= q <= max_den and lo <= p/q <= hi.
Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, int max_den = 6);
std::vector<Rational> random_rational_vector(Rng& rng, std::size_t n, const Rational& lo, const Rational& hi,
                                             int max_den = 6);

// Product of projective spaces with dimension in [min_dim, max_dim] and at
// most max_factors factors.
Space random_space(Rng& rng, int min_dim, int max_dim, int max_factors);

// Lines with degrees in [-1, max_degree]; the twist is raised until every
// root is nonnegative, plus a small random nonnegative extra.
SplitBundle random_nef_bundle(Rng& rng, const Space& space, std::size_t rank, int max_degree = 2);
// Arbitrary lines and twist, nef or not.
SplitBundle random_bundle(Rng& rng, const Space& space, std::size_t rank, int max_degree = 2);

// Uniform among partitions of `weight` with parts at most max_part and at
// most max_parts parts. Throws if there are none.
Partition random_partition(Rng& rng, int weight, int max_parts, int max_part);

CohClass random_degree1_class(Rng& rng, const Space& space, const Rational& lo, const Rational& hi);
CohClass random_nef_class(Rng& rng, const Space& space);

} // namespace schurhr
