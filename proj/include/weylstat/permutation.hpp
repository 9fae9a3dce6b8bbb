#pragma once

// Elements of S_n, B_n and D_n, descent and negative sets, length functions
// and the small maps (star, flattening, absolute values) built on them.
//
// Positions are 1-based throughout. Descent position 0 only exists in the
// type B and type D conventions.

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weylstat {

inline constexpr int kMaxRank = 12;

/// Thrown by the text parsers; carries the 0-based offset of the offending
/// character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Closed integer interval used as the ambient universe of an IndexSet.
struct Interval {
  int lo = 0;
  int hi = 31;
  bool contains(int v) const noexcept { return lo <= v && v <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A finite set of small non-negative integers (0..31) stored as a bitmask,
/// tagged with the interval it is meant to live in.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(Interval universe) : universe_(universe) {}
  IndexSet(std::initializer_list<int> members, Interval universe = {});
  IndexSet(std::span<const int> members, Interval universe = {});

  static IndexSet from_mask(std::uint32_t mask, Interval universe = {});

  bool contains(int v) const noexcept { return v >= 0 && v < 32 && ((mask_ >> v) & 1u); }
  bool empty() const noexcept { return mask_ == 0; }
  int size() const noexcept;
  int sum() const noexcept;
  std::uint32_t mask() const noexcept { return mask_; }
  Interval universe() const noexcept { return universe_; }
  std::vector<int> members() const;

  void insert(int v);

  IndexSet even_part() const;
  IndexSet odd_part() const;
  /// {i + j : j in J} intersected with [n].
  IndexSet shifted(int i, int n) const;
  /// {k * j : j in J}.
  IndexSet scaled(int k) const;
  /// {j / 2 : j in J}; every member must be even.
  IndexSet halved() const;
  /// {i* : i in S} for the star map of rank n.
  IndexSet star_image(int n) const;

  std::string to_string() const;

  /// Membership equality; the universe is only a hint.
  friend bool operator==(const IndexSet& a, const IndexSet& b) noexcept { return a.mask_ == b.mask_; }

 private:
  std::uint32_t mask_ = 0;
  Interval universe_{};
};

/// All subsets of {lo..hi}, in increasing bitmask order.
std::vector<IndexSet> all_subsets(int lo, int hi);

/// A permutation of [n] in one-line notation.
class Perm {
 public:
  explicit Perm(std::span<const int> entries);
  Perm(std::initializer_list<int> entries);

  static Perm identity(int n);
  /// Skips validation; for generators that build valid permutations.
  static Perm unchecked(std::span<const int> entries) noexcept;

  int rank() const noexcept { return n_; }
  /// sigma(i) for i in [n].
  int operator()(int i) const noexcept { return v_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> entries() const noexcept { return {v_.data(), static_cast<std::size_t>(n_)}; }
  Perm inverse() const;

  friend bool operator==(const Perm& a, const Perm& b) noexcept;
  friend bool operator<(const Perm& a, const Perm& b) noexcept;

 private:
  Perm() = default;
  std::array<int, kMaxRank> v_{};
  int n_ = 0;
};

/// A signed permutation of [n] in window notation; sigma(-i) = -sigma(i).
/// D_n membership is the predicate in_D(), not a separate type.
class SignedPerm {
 public:
  explicit SignedPerm(std::span<const int> window);
  SignedPerm(std::initializer_list<int> window);
  explicit SignedPerm(const Perm& p);

  static SignedPerm identity(int n);
  static SignedPerm unchecked(std::span<const int> window) noexcept;

  int rank() const noexcept { return n_; }
  /// sigma(i) for i in [n]; sigma(0) is not stored (its value depends on the
  /// descent convention).
  int operator()(int i) const noexcept { return v_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> window() const noexcept { return {v_.data(), static_cast<std::size_t>(n_)}; }
  /// Signed position of value v in [+-n], i.e. sigma^{-1}(v).
  int position_of(int v) const;
  bool in_D() const noexcept;

  friend bool operator==(const SignedPerm& a, const SignedPerm& b) noexcept;
  friend bool operator<(const SignedPerm& a, const SignedPerm& b) noexcept;

 private:
  SignedPerm() = default;
  std::array<int, kMaxRank> v_{};
  int n_ = 0;
};

// Text formats: "[8,1,7,2,5,6,3,4]" and, for unsigned permutations of rank
// at most 9, the compact digit string "81725634".
Perm parse_perm(std::string_view text);
SignedPerm parse_signed_perm(std::string_view text);
std::string format(const Perm& p);
std::string format(const SignedPerm& s);

/// {i in [n-1] : a_i > a_{i+1}} for any integer sequence.
IndexSet descent_set_A(std::span<const int> seq);
IndexSet descent_set_A(const Perm& p);
/// Descents in [0, n-1] with sigma(0) = 0.
IndexSet descent_set_B(const SignedPerm& s);
/// Descents in [0, n-1] with sigma(0) = -sigma(2); requires n >= 2.
IndexSet descent_set_D(const SignedPerm& s);
/// Positions carrying negative window entries.
IndexSet neg_set(const SignedPerm& s);

int length_A(std::span<const int> seq) noexcept;
int length_A(const Perm& p) noexcept;
int length_A(const SignedPerm& s) noexcept;
int length_B(const SignedPerm& s) noexcept;
/// Requires an even number of negative entries.
int length_D(const SignedPerm& s);

/// The star map on [+-n]: even i -> i - sgn(i); odd i -> i + sgn(i) when that
/// stays in [+-n]; otherwise i.
int star(int i, int n);

/// Left multiplication by the value swap (i, i*) (and (-i, -i*) in the
/// signed case). i must lie in [n-1].
Perm star_transpose(int i, const Perm& p);
SignedPerm star_transpose(int i, const SignedPerm& s);

/// The unique permutation with the same relative order as values.
Perm flatten(std::span<const int> values);

/// [sigma(1), ..., sigma(n-1), |sigma(n)|].
SignedPerm abs_last(const SignedPerm& s);
/// [|sigma(1)|, ..., |sigma(n)|].
SignedPerm abs_all(const SignedPerm& s);

}  // namespace weylstat
