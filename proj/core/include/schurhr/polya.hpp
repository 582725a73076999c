#pragma once

#include "schurhr/bundle.hpp"
#include "schurhr/partition.hpp"
#include "schurhr/upoly.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace schurhr {

inline constexpr std::size_t kPolyaMinorLengthCap = 8;
// Budget on the number of Jacobi-Trudi minors the automatic row bound may
// generate.
inline constexpr std::uint64_t kPolyaMinorBudget = 200000;
inline constexpr int kPolyaMaxRows = 400;

// Row bound used when none is given: the largest R <= kPolyaMaxRows whose
// minor count binom(R + length - 1, length - 1) stays within the budget.
int polya_default_rows(std::size_t length);

// Every minor of the lower-triangular Toeplitz matrix (mu_{i-j}) with at
// most max_rows rows (0 = polya_default_rows) is nonnegative.
//
// Minors with contiguous columns are the straight-shape Jacobi-Trudi
// determinants det(mu_{k_a - a + b}), k a partition with k_1 <= length - 1;
// every other minor is a nonnegative (Littlewood-Richardson) combination of
// those, so only they are examined, each through its conjugate form.
// Throws on negative entries or length above kPolyaMinorLengthCap.
bool polya_check_minors(std::span<const Rational> mu, int max_rows = 0);

// det(mu_{rows[a] - cols[b]}), directly.
Rational toeplitz_minor(std::span<const Rational> mu, std::span<const int> rows, std::span<const int> cols);

// sum mu_i z^i has only real roots (Sturm count on its squarefree part).
bool polya_check_roots(std::span<const Rational> mu);

// sum_i mu_i s_lambda^{(i)}(E) h^i. Requires |lambda| = dim X - 2 and h of
// degree 1.
CohClass polya_combination_class(const Partition& lambda, const SplitBundle& bundle, const CohClass& h,
                                 std::span<const Rational> mu);

} // namespace schurhr
