#pragma once

// Streaming enumeration of S_n, B_n, D_n with quotient / Neg / sign / domino
// filters, the domino bijections, and chunking for parallel sweeps.
//
// Order: type A is lexicographic in one-line notation. Types B and D run over
// |sigma| lexicographically and, for each |sigma|, over the allowed sign masks
// in increasing order (bit i-1 set means position i is negative).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "weylstat/permutation.hpp"

namespace weylstat {

enum class Family : std::uint8_t { A, B, D };

char family_letter(Family f);
Family parse_family(std::string_view s);

/// Default full-sweep ceilings; GroupSpec::force lifts them up to kMaxRank.
int rank_ceiling(Family f);

class CeilingExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GroupSpec {
  Family family = Family::A;
  int n = 1;
  /// Type A only: sigma(j) < sigma(j+1) for every j in quotient.
  IndexSet quotient{Interval{1, 31}};
  std::optional<IndexSet> neg_exact;
  std::optional<IndexSet> neg_odd_exact;
  std::optional<IndexSet> neg_even_exact;
  std::optional<int> neg_parity;
  /// (position, +1 or -1)
  std::vector<std::pair<int, int>> position_signs;
  /// (position, value): |sigma(position)| = value
  std::vector<std::pair<int, int>> abs_values;
  bool domino = false;
  /// 1: |sigma| has no descent at odd positions; 0: none at even positions
  /// (type A convention on |sigma|).
  std::optional<int> no_abs_descents_of_parity;
  bool force = false;

  static GroupSpec full(Family f, int n) {
    GroupSpec g;
    g.family = f;
    g.n = n;
    return g;
  }
};

/// Throws std::invalid_argument (or CeilingExceeded) for malformed specs.
void validate(const GroupSpec& spec);
std::uint64_t group_order(Family f, int n);
std::uint64_t factorial(int n);

/// Allowed sign masks, bit i-1 = position i negative. {0} for type A.
std::vector<std::uint32_t> allowed_sign_masks(const GroupSpec& spec);

/// Half-open range of |sigma| lexicographic ranks in [0, n!).
struct Chunk {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};
std::vector<Chunk> make_chunks(int n, int pieces);

/// The k-th permutation of [n] in lexicographic order (k < n!).
void unrank_permutation(int n, std::uint64_t k, int* out);

bool is_domino_window(std::span<const int> w, bool is_signed);
bool is_domino_A(const Perm& p);
bool is_domino_B(const SignedPerm& s);
bool in_quotient(std::span<const int> w, const IndexSet& J);

namespace detail {

struct PreparedSpec {
  const GroupSpec* spec;
  std::vector<std::uint32_t> masks;
  bool is_signed;
};

PreparedSpec prepare(const GroupSpec& spec);
bool accept_pattern(const PreparedSpec& p, const int* abs_perm);

}  // namespace detail

/// Calls f(std::span<const int>) for every element of spec in the chunk.
template <class F>
void for_each_element(const GroupSpec& spec, Chunk chunk, F&& f) {
  const auto prep = detail::prepare(spec);
  const int n = spec.n;
  if (chunk.begin >= chunk.end) return;
  int perm[kMaxRank];
  int window[kMaxRank];
  unrank_permutation(n, chunk.begin, perm);
  const std::span<const int> view(window, static_cast<std::size_t>(n));
  for (std::uint64_t k = chunk.begin; k < chunk.end; ++k) {
    if (detail::accept_pattern(prep, perm)) {
      for (std::uint32_t mask : prep.masks) {
        for (int i = 0; i < n; ++i) window[i] = ((mask >> i) & 1u) ? -perm[i] : perm[i];
        if (spec.domino && !is_domino_window(view, prep.is_signed)) continue;
        f(view);
      }
    }
    std::next_permutation(perm, perm + n);
  }
}

template <class F>
void for_each_element(const GroupSpec& spec, F&& f) {
  validate(spec);
  for_each_element(spec, Chunk{0, factorial(spec.n)}, std::forward<F>(f));
}

std::vector<Perm> elements_A(const GroupSpec& spec);
std::vector<SignedPerm> elements_B(const GroupSpec& spec);
std::uint64_t count_elements(const GroupSpec& spec);

/// Pairs (sigma, S) -> u in D(S_{2m}); see the inverse for the reverse map.
Perm domino_bij_A(const Perm& sigma, const IndexSet& S);
/// Throws std::invalid_argument when u is not in the image.
std::pair<Perm, IndexSet> domino_bij_A_inverse(const Perm& u);
SignedPerm domino_bij_B(const SignedPerm& sigma, const IndexSet& S);
std::pair<SignedPerm, IndexSet> domino_bij_B_inverse(const SignedPerm& u);

}  // namespace weylstat
