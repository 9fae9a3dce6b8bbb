#pragma once

// Named permutation statistics. Unsigned carriers use the type A descent
// convention, signed carriers the type B one (sigma(0) = 0). The D-flavoured
// tags (dmaj, odesD, ...) are B statistics of |sigma|_n.

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "weylstat/permutation.hpp"

namespace weylstat {

enum class Stat : std::uint8_t {
  des, maj, odes, edes, omaj, emaj,
  neg, oneg, eneg,
  fmaj, ofmaj, efmaj,
  dmaj, odmaj, edmaj, odesD, edesD, onegD, enegD,
  lenA, lenB, lenD,
  oddlenA, oddlenB,
};

inline constexpr int kStatCount = 24;

enum class Carrier : std::uint8_t { perm, signed_perm, even_signed_perm };

const std::array<Stat, kStatCount>& all_stats();
std::string_view stat_name(Stat s);
/// Lowercase tag as printed by stat_name; throws std::invalid_argument.
Stat parse_stat(std::string_view name);

/// Narrowest carrier the tag is defined on. Perm stats are also legal on a
/// signed window (read with the B convention) except oddlenA.
Carrier stat_carrier(Stat s);
bool legal_on_perm(Stat s);
bool legal_on_signed(Stat s);

int eval_stat(Stat s, const Perm& p);
int eval_stat(Stat s, const SignedPerm& w);

int odd_length_A(const Perm& p);
/// Half the number of inverted pairs (i, j), i < j in {-n..n}, of mixed
/// parity, with sigma(0) = 0.
int odd_length_B(const SignedPerm& w);

// Mask helpers. A descent mask has bit i set for a descent at position i,
// a negative mask has bit i set when sigma(i) < 0.
inline constexpr std::uint32_t kOddBits = 0xAAAAAAAAu;
inline constexpr std::uint32_t kEvenBits = 0x55555555u;

int mask_sum(std::uint32_t m) noexcept;
/// sum over odd i in m of (i+1)/2
int odd_major(std::uint32_t desc) noexcept;
/// sum over even i in m of i/2
int even_major(std::uint32_t desc) noexcept;

/// Evaluates many statistics of one element cheaply. Descent and negative
/// masks are computed up front; inversion counts and the |sigma|_n masks on
/// first use. The window must outlive the evaluator.
class StatEvaluator {
 public:
  StatEvaluator(std::span<const int> window, bool is_signed) noexcept;

  /// Throws std::invalid_argument for tags illegal on the carrier.
  int operator()(Stat s);

  std::uint32_t descent_mask() const noexcept { return desc_; }
  std::uint32_t neg_mask() const noexcept { return neg_; }
  int length_A();
  int length_B();
  int length_D();

 private:
  void ensure_abs_last();

  std::span<const int> w_;
  bool signed_;
  std::uint32_t desc_ = 0;
  std::uint32_t neg_ = 0;
  int inversions_ = -1;
  int neg_sum_ = 0;
  bool have_abs_last_ = false;
  std::uint32_t desc_abs_last_ = 0;
  std::uint32_t neg_abs_last_ = 0;
};

}  // namespace weylstat
