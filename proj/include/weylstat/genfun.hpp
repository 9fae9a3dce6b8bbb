#pragma once

// Twisted generating functions sum_{sigma} chi(sigma) prod var^{stat(sigma)}
// over an enumerated set, computed in parallel chunks and merged in chunk
// order.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weylstat/enumeration.hpp"
#include "weylstat/polynomial.hpp"
#include "weylstat/statistics.hpp"

namespace weylstat {

enum class Character : std::uint8_t { trivial, sign_length, sign_neg, sign_length_neg };

std::string_view character_name(Character c);
/// Accepts trivial, sign_length (or "length"), sign_neg ("neg"),
/// sign_length_neg ("length_neg").
Character parse_character(std::string_view s);
void check_character(Character c, Family f);

struct StatBinding {
  std::vector<std::pair<Stat, std::string>> terms;

  /// "omaj:q1,emaj:q2"; the empty string is the empty binding.
  static StatBinding parse(std::string_view text);
  std::string to_string() const;
};

void check_binding(const StatBinding& b, Family f);

/// 0 means the number of hardware threads.
int resolve_jobs(int jobs);

struct SweepResult {
  std::vector<MultiPoly> cells;
  std::vector<std::uint64_t> cell_counts;
  std::uint64_t count = 0;
};

/// Cell index for an element, or -1 to drop it. Must be thread-safe.
using Classifier = std::function<int(std::span<const int>)>;

/// One sweep over spec accumulating into `cells` polynomials.
SweepResult classified_genfun(const GroupSpec& spec, Character chi, const StatBinding& binding, int cells,
                              const Classifier& classify, int jobs = 0);

MultiPoly twisted_genfun(const GroupSpec& spec, Character chi, const StatBinding& binding, int jobs = 0);
SweepResult twisted_genfun_counted(const GroupSpec& spec, Character chi, const StatBinding& binding, int jobs = 0);

/// sum over S_n of prod_{i in D(pi)} x_i, variables x1..x{n-1}.
MultiPoly descent_set_genfun(int n);

/// sum over S_n (or B_n) of x^{odd length}.
MultiPoly odd_length_distribution_A(int n, const std::string& var = "x");
MultiPoly odd_length_distribution_B(int n, const std::string& var = "x");

}  // namespace weylstat
