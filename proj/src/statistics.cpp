#include "weylstat/statistics.hpp"

#include <bit>
#include <cstdlib>
#include <string>

namespace weylstat {

namespace {

constexpr std::array<Stat, kStatCount> kAll = {
    Stat::des,   Stat::maj,   Stat::odes,  Stat::edes,  Stat::omaj,  Stat::emaj,    Stat::neg,     Stat::oneg,
    Stat::eneg,  Stat::fmaj,  Stat::ofmaj, Stat::efmaj, Stat::dmaj,  Stat::odmaj,   Stat::edmaj,   Stat::odesD,
    Stat::edesD, Stat::onegD, Stat::enegD, Stat::lenA,  Stat::lenB,  Stat::lenD,    Stat::oddlenA, Stat::oddlenB,
};

constexpr std::array<std::string_view, kStatCount> kNames = {
    "des",   "maj",   "odes",  "edes",  "omaj", "emaj", "neg",  "oneg",    "eneg",   "fmaj",  "ofmaj", "efmaj",
    "dmaj",  "odmaj", "edmaj", "odesD", "edesD", "onegD", "enegD", "lenA", "lenB", "lenD", "oddlenA", "oddlenB",
};

std::uint32_t descents_of(std::span<const int> w, bool is_signed) noexcept {
  std::uint32_t d = 0;
  if (is_signed && !w.empty() && w[0] < 0) d |= 1u;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i - 1] > w[i]) d |= 1u << i;
  }
  return d;
}

std::uint32_t negatives_of(std::span<const int> w) noexcept {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0) m |= 1u << (i + 1);
  }
  return m;
}

}  // namespace

const std::array<Stat, kStatCount>& all_stats() { return kAll; }

std::string_view stat_name(Stat s) { return kNames[static_cast<std::size_t>(s)]; }

Stat parse_stat(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return kAll[i];
  }
  throw std::invalid_argument("unknown statistic '" + std::string(name) + "'");
}

Carrier stat_carrier(Stat s) {
  switch (s) {
    case Stat::des:
    case Stat::maj:
    case Stat::odes:
    case Stat::edes:
    case Stat::omaj:
    case Stat::emaj:
    case Stat::lenA:
    case Stat::oddlenA:
      return Carrier::perm;
    case Stat::lenD:
      return Carrier::even_signed_perm;
    default:
      return Carrier::signed_perm;
  }
}

bool legal_on_perm(Stat s) { return stat_carrier(s) == Carrier::perm; }
bool legal_on_signed(Stat s) { return s != Stat::oddlenA; }

int mask_sum(std::uint32_t m) noexcept {
  int total = 0;
  for (; m != 0; m &= m - 1) total += std::countr_zero(m);
  return total;
}

int odd_major(std::uint32_t desc) noexcept {
  int total = 0;
  for (std::uint32_t m = desc & kOddBits; m != 0; m &= m - 1) total += (std::countr_zero(m) + 1) / 2;
  return total;
}

int even_major(std::uint32_t desc) noexcept {
  int total = 0;
  for (std::uint32_t m = desc & kEvenBits; m != 0; m &= m - 1) total += std::countr_zero(m) / 2;
  return total;
}

StatEvaluator::StatEvaluator(std::span<const int> window, bool is_signed) noexcept
    : w_(window), signed_(is_signed), desc_(descents_of(window, is_signed)) {
  if (signed_) {
    neg_ = negatives_of(window);
    for (int v : window) {
      if (v < 0) neg_sum_ -= v;
    }
  }
}

int StatEvaluator::length_A() {
  if (inversions_ < 0) inversions_ = weylstat::length_A(w_);
  return inversions_;
}

int StatEvaluator::length_B() { return length_A() + neg_sum_; }

int StatEvaluator::length_D() {
  const int negs = std::popcount(neg_);
  if (negs % 2 != 0) throw std::invalid_argument("lenD needs an even number of negative entries");
  return length_B() - negs;
}

void StatEvaluator::ensure_abs_last() {
  if (have_abs_last_) return;
  const std::size_t n = w_.size();
  desc_abs_last_ = desc_;
  neg_abs_last_ = neg_ & ~(1u << n);
  if (n >= 1 && w_[n - 1] < 0) {
    const int last = -w_[n - 1];
    const int before = n >= 2 ? w_[n - 2] : 0;
    if (before > last) {
      desc_abs_last_ |= 1u << (n - 1);
    } else {
      desc_abs_last_ &= ~(1u << (n - 1));
    }
  }
  have_abs_last_ = true;
}

int StatEvaluator::operator()(Stat s) {
  if (!signed_ && !legal_on_perm(s)) {
    throw std::invalid_argument(std::string(stat_name(s)) + " needs a signed permutation");
  }
  if (signed_ && !legal_on_signed(s)) {
    throw std::invalid_argument(std::string(stat_name(s)) + " is defined on unsigned permutations only");
  }
  switch (s) {
    case Stat::des: return std::popcount(desc_);
    case Stat::maj: return mask_sum(desc_);
    case Stat::odes: return std::popcount(desc_ & kOddBits);
    case Stat::edes: return std::popcount(desc_ & kEvenBits);
    case Stat::omaj: return odd_major(desc_);
    case Stat::emaj: return even_major(desc_);
    case Stat::neg: return std::popcount(neg_);
    case Stat::oneg: return std::popcount(neg_ & kOddBits);
    case Stat::eneg: return std::popcount(neg_ & kEvenBits);
    case Stat::fmaj: return 2 * mask_sum(desc_) + std::popcount(neg_);
    case Stat::ofmaj: return 2 * odd_major(desc_) + std::popcount(neg_ & kOddBits);
    case Stat::efmaj: return 2 * even_major(desc_) + std::popcount(neg_ & kEvenBits);
    case Stat::dmaj:
      ensure_abs_last();
      return 2 * mask_sum(desc_abs_last_) + std::popcount(neg_abs_last_);
    case Stat::odmaj:
      ensure_abs_last();
      return 2 * odd_major(desc_abs_last_) + std::popcount(neg_abs_last_ & kOddBits);
    case Stat::edmaj:
      ensure_abs_last();
      return 2 * even_major(desc_abs_last_) + std::popcount(neg_abs_last_ & kEvenBits);
    case Stat::odesD:
      ensure_abs_last();
      return std::popcount(desc_abs_last_ & kOddBits);
    case Stat::edesD:
      ensure_abs_last();
      return std::popcount(desc_abs_last_ & kEvenBits);
    case Stat::onegD:
      ensure_abs_last();
      return std::popcount(neg_abs_last_ & kOddBits);
    case Stat::enegD:
      ensure_abs_last();
      return std::popcount(neg_abs_last_ & kEvenBits);
    case Stat::lenA: return length_A();
    case Stat::lenB: return length_B();
    case Stat::lenD: return length_D();
    case Stat::oddlenA: return odd_length_A(Perm::unchecked(w_));
    case Stat::oddlenB: return odd_length_B(SignedPerm::unchecked(w_));
  }
  return 0;
}

int eval_stat(Stat s, const Perm& p) {
  StatEvaluator ev(p.entries(), false);
  return ev(s);
}

int eval_stat(Stat s, const SignedPerm& w) {
  StatEvaluator ev(w.window(), true);
  return ev(s);
}

int odd_length_A(const Perm& p) {
  const int n = p.rank();
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; j += 2) count += p(i) > p(j);
  }
  return count;
}

int odd_length_B(const SignedPerm& w) {
  const int n = w.rank();
  auto value = [&](int i) { return i == 0 ? 0 : (i > 0 ? w(i) : -w(-i)); };
  int count = 0;
  for (int i = -n; i <= n; ++i) {
    for (int j = i + 1; j <= n; j += 2) count += value(i) > value(j);
  }
  // the pair set is symmetric under (i, j) -> (-j, -i), so count is even
  return count / 2;
}

}  // namespace weylstat
