#pragma once

// Exhaustive searches for "odd major index" candidates that depend only on
// the descent set (S_n) or on the descent and negative sets (B_n).

#include <optional>
#include <vector>

#include "weylstat/polynomial.hpp"

namespace weylstat {

/// Weights j_1..j_{n-1} in [0, deg target] with
/// sum_pi x^{sum_{i in D(pi)} j_i} = target, the first in lexicographic
/// order, or nothing. target must be univariate; n <= 6.
std::optional<std::vector<int>> search_descent_major_A(int n, const MultiPoly& target);

struct DescentNegWeights {
  std::vector<int> j;  // descent weights j_0..j_{n-1}
  std::vector<int> k;  // negative-position weights k_1..k_n
};

/// Weights with sum_sigma x^{sum_{i in D(sigma)} j_i + sum_{i in Neg(sigma)} k_i}
/// = target (type B descents, sigma(0) = 0), the first in lexicographic
/// order of (j, k), or nothing. n <= 3.
std::optional<DescentNegWeights> search_descent_neg_major_B(int n, const MultiPoly& target);

}  // namespace weylstat
