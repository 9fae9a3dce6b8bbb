#pragma once

// Overpartitions: weakly decreasing positive parts where the last occurrence
// of each distinct value may carry an overline.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "weylstat/polynomial.hpp"

namespace weylstat {

struct Overpartition {
  std::vector<int> parts;
  /// overlined[i] refers to parts[i]; only last occurrences may be set.
  std::vector<bool> overlined;

  int weight() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool valid() const;
};

/// "(2',1)"; the empty overpartition prints as "()".
std::string format(const Overpartition& p);

struct OverpartitionQuery {
  int max_part = 0;
  std::optional<int> weight;
  std::optional<int> max_weight;
  std::optional<int> length;
  std::optional<int> max_length;
};

/// Visits every overpartition with parts <= max_part meeting the query, in
/// reverse lexicographic order of parts with plain before overlined. Throws
/// std::invalid_argument when the query is infinite (max_part > 0 and neither
/// a weight nor a length bound).
void for_each_overpartition(const OverpartitionQuery& q, const std::function<void(const Overpartition&)>& f);
std::vector<Overpartition> overpartitions(const OverpartitionQuery& q);

/// P_{n,m}(q) = sum of q^|lambda| over lambda_1 <= n, l(lambda) = m.
MultiPoly overpartition_length_poly(int n, int m, const std::string& var = "q");
/// P_{n,m}(q) from q-binomials: sum_i q^{C(i,2)+m} [n,i]_q [n+m-i-1, m-i]_q.
MultiPoly overpartition_length_closed(int n, int m, const std::string& var = "q");

}  // namespace weylstat
