#include "weylstat/enumeration.hpp"

#include <bit>
#include <cstdlib>
#include <numeric>
#include <string>

namespace weylstat {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::D: return 'D';
  }
  return '?';
}

Family parse_family(std::string_view s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "D" || s == "d") return Family::D;
  throw std::invalid_argument("unknown family '" + std::string(s) + "' (expected A, B or D)");
}

int rank_ceiling(Family f) { return f == Family::A ? 10 : 8; }

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t group_order(Family f, int n) {
  switch (f) {
    case Family::A: return factorial(n);
    case Family::B: return factorial(n) << n;
    case Family::D: return (factorial(n) << n) / 2;
  }
  return 0;
}

namespace {

void require_within(const IndexSet& s, int lo, int hi, const char* what) {
  for (int v : s.members()) {
    if (v < lo || v > hi) {
      throw std::invalid_argument(std::string(what) + " " + s.to_string() + " is not inside [" + std::to_string(lo) +
                                  ", " + std::to_string(hi) + "]");
    }
  }
}

}  // namespace

void validate(const GroupSpec& spec) {
  const int n = spec.n;
  if (n < 1 || n > kMaxRank) {
    throw std::invalid_argument("rank " + std::to_string(n) + " outside [1, " + std::to_string(kMaxRank) + "]");
  }
  if (!spec.force && n > rank_ceiling(spec.family)) {
    throw CeilingExceeded("rank " + std::to_string(n) + " exceeds the type " + family_letter(spec.family) +
                          " ceiling " + std::to_string(rank_ceiling(spec.family)) + " (" +
                          std::to_string(group_order(spec.family, n)) + " elements); pass force to override");
  }
  require_within(spec.quotient, 1, n - 1, "quotient");
  const bool is_signed = spec.family != Family::A;
  if (!is_signed) {
    if (spec.neg_exact || spec.neg_odd_exact || spec.neg_even_exact || spec.neg_parity || !spec.position_signs.empty()) {
      throw std::invalid_argument("sign filters need family B or D");
    }
  } else if (!spec.quotient.empty()) {
    throw std::invalid_argument("quotients are supported for type A only");
  }
  if (spec.neg_exact) require_within(*spec.neg_exact, 1, n, "Neg set");
  if (spec.neg_odd_exact) {
    require_within(*spec.neg_odd_exact, 1, n, "odd Neg set");
    if (!(spec.neg_odd_exact->even_part().empty())) throw std::invalid_argument("odd Neg set has an even member");
  }
  if (spec.neg_even_exact) {
    require_within(*spec.neg_even_exact, 1, n, "even Neg set");
    if (!(spec.neg_even_exact->odd_part().empty())) throw std::invalid_argument("even Neg set has an odd member");
  }
  if (spec.neg_parity && *spec.neg_parity != 0 && *spec.neg_parity != 1) {
    throw std::invalid_argument("Neg parity must be 0 or 1");
  }
  if (spec.family == Family::D && spec.neg_parity && *spec.neg_parity != 0) {
    throw std::invalid_argument("D_n elements have an even number of negatives");
  }
  for (auto [pos, sign] : spec.position_signs) {
    if (pos < 1 || pos > n || (sign != 1 && sign != -1)) {
      throw std::invalid_argument("bad sign constraint at position " + std::to_string(pos));
    }
  }
  for (auto [pos, value] : spec.abs_values) {
    if (pos < 1 || pos > n || value < 1 || value > n) {
      throw std::invalid_argument("bad value constraint |sigma(" + std::to_string(pos) + ")| = " + std::to_string(value));
    }
  }
  if (spec.no_abs_descents_of_parity && *spec.no_abs_descents_of_parity != 0 && *spec.no_abs_descents_of_parity != 1) {
    throw std::invalid_argument("descent parity must be 0 or 1");
  }
}

std::vector<std::uint32_t> allowed_sign_masks(const GroupSpec& spec) {
  if (spec.family == Family::A) return {0u};
  const int n = spec.n;
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const std::uint32_t neg = mask << 1;  // IndexSet layout, bit i = position i
    const int count = std::popcount(mask);
    if (spec.family == Family::D && count % 2 != 0) continue;
    if (spec.neg_parity && count % 2 != *spec.neg_parity) continue;
    if (spec.neg_exact && spec.neg_exact->mask() != neg) continue;
    if (spec.neg_odd_exact && spec.neg_odd_exact->mask() != (neg & 0xAAAAAAAAu)) continue;
    if (spec.neg_even_exact && spec.neg_even_exact->mask() != (neg & 0x55555555u)) continue;
    bool ok = true;
    for (auto [pos, sign] : spec.position_signs) {
      const bool negative = (mask >> (pos - 1)) & 1u;
      if (negative != (sign < 0)) ok = false;
    }
    if (ok) out.push_back(mask);
  }
  return out;
}

std::vector<Chunk> make_chunks(int n, int pieces) {
  const std::uint64_t total = factorial(n);
  pieces = std::max(1, pieces);
  const std::uint64_t k = std::min<std::uint64_t>(static_cast<std::uint64_t>(pieces), total);
  std::vector<Chunk> out;
  for (std::uint64_t i = 0; i < k; ++i) out.push_back({total * i / k, total * (i + 1) / k});
  return out;
}

void unrank_permutation(int n, std::uint64_t k, int* out) {
  int pool[kMaxRank];
  std::iota(pool, pool + n, 1);
  int left = n;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t f = factorial(n - 1 - i);
    const auto idx = static_cast<int>(k / f);
    k %= f;
    out[i] = pool[idx];
    std::copy(pool + idx + 1, pool + left, pool + idx);
    --left;
  }
}

bool is_domino_window(std::span<const int> w, bool is_signed) {
  const int n = static_cast<int>(w.size());
  int pos[kMaxRank + 1];
  for (int i = 0; i < n; ++i) {
    const int v = w[static_cast<std::size_t>(i)];
    if (v > 0) {
      pos[v] = i + 1;
    } else {
      pos[-v] = -(i + 1);
    }
  }
  if (!is_signed) {
    for (int i = 1; i <= n; ++i) pos[i] = std::abs(pos[i]);
  }
  for (int i = 1; i < n; ++i) {
    const int j = star(i, n);
    if (std::abs(pos[i] - pos[j]) > 1) return false;
  }
  return true;
}

bool is_domino_A(const Perm& p) { return is_domino_window(p.entries(), false); }
bool is_domino_B(const SignedPerm& s) { return is_domino_window(s.window(), true); }

bool in_quotient(std::span<const int> w, const IndexSet& J) {
  for (int j : J.members()) {
    if (j < 1 || j >= static_cast<int>(w.size())) throw std::invalid_argument("quotient index out of range");
    if (w[static_cast<std::size_t>(j - 1)] > w[static_cast<std::size_t>(j)]) return false;
  }
  return true;
}

namespace detail {

PreparedSpec prepare(const GroupSpec& spec) {
  return PreparedSpec{&spec, allowed_sign_masks(spec), spec.family != Family::A};
}

bool accept_pattern(const PreparedSpec& p, const int* abs_perm) {
  const GroupSpec& spec = *p.spec;
  for (std::uint32_t m = spec.quotient.mask(); m != 0; m &= m - 1) {
    const int j = std::countr_zero(m);
    if (abs_perm[j - 1] > abs_perm[j]) return false;
  }
  for (auto [pos, value] : spec.abs_values) {
    if (abs_perm[pos - 1] != value) return false;
  }
  if (spec.no_abs_descents_of_parity) {
    const int parity = *spec.no_abs_descents_of_parity;
    for (int i = parity == 1 ? 1 : 2; i < spec.n; i += 2) {
      if (abs_perm[i - 1] > abs_perm[i]) return false;
    }
  }
  return true;
}

}  // namespace detail

std::vector<Perm> elements_A(const GroupSpec& spec) {
  if (spec.family != Family::A) throw std::invalid_argument("elements_A needs family A");
  std::vector<Perm> out;
  for_each_element(spec, [&](std::span<const int> w) { out.push_back(Perm::unchecked(w)); });
  return out;
}

std::vector<SignedPerm> elements_B(const GroupSpec& spec) {
  if (spec.family == Family::A) throw std::invalid_argument("elements_B needs family B or D");
  std::vector<SignedPerm> out;
  for_each_element(spec, [&](std::span<const int> w) { out.push_back(SignedPerm::unchecked(w)); });
  return out;
}

std::uint64_t count_elements(const GroupSpec& spec) {
  std::uint64_t c = 0;
  for_each_element(spec, [&](std::span<const int>) { ++c; });
  return c;
}

namespace {

void check_pair_set(const IndexSet& S, int m) {
  for (int j : S.members()) {
    if (j < 1 || j > m) throw std::invalid_argument("S = " + S.to_string() + " is not a subset of [" + std::to_string(m) + "]");
  }
  if (2 * m > kMaxRank) throw std::invalid_argument("image rank exceeds " + std::to_string(kMaxRank));
}

}  // namespace

Perm domino_bij_A(const Perm& sigma, const IndexSet& S) {
  const int m = sigma.rank();
  check_pair_set(S, m);
  std::vector<int> u;
  for (int j = 1; j <= m; ++j) {
    const int v = sigma(j);
    if (S.contains(j)) {
      u.insert(u.end(), {2 * v, 2 * v - 1});
    } else {
      u.insert(u.end(), {2 * v - 1, 2 * v});
    }
  }
  return Perm(u);
}

std::pair<Perm, IndexSet> domino_bij_A_inverse(const Perm& u) {
  if (u.rank() % 2 != 0) throw std::invalid_argument(format(u) + " has odd rank; not a domino image");
  const int m = u.rank() / 2;
  std::vector<int> sigma;
  IndexSet S(Interval{1, m});
  for (int j = 1; j <= m; ++j) {
    const int a = u(2 * j - 1);
    const int b = u(2 * j);
    const int v = (std::max(a, b) + 1) / 2;
    if (std::max(a, b) != 2 * v || std::min(a, b) != 2 * v - 1) {
      throw std::invalid_argument(format(u) + " is not in the image of the domino bijection");
    }
    sigma.push_back(v);
    if (a == 2 * v) S.insert(j);
  }
  return {Perm(sigma), S};
}

SignedPerm domino_bij_B(const SignedPerm& sigma, const IndexSet& S) {
  const int m = sigma.rank();
  check_pair_set(S, m);
  std::vector<int> u;
  for (int j = 1; j <= m; ++j) {
    const int v = sigma(j);
    const bool in = S.contains(j);
    if (v > 0) {
      u.insert(u.end(), in ? std::initializer_list<int>{2 * v, 2 * v - 1} : std::initializer_list<int>{2 * v - 1, 2 * v});
    } else {
      u.insert(u.end(), in ? std::initializer_list<int>{2 * v + 1, 2 * v} : std::initializer_list<int>{2 * v, 2 * v + 1});
    }
  }
  return SignedPerm(u);
}

std::pair<SignedPerm, IndexSet> domino_bij_B_inverse(const SignedPerm& u) {
  if (u.rank() % 2 != 0) throw std::invalid_argument(format(u) + " has odd rank; not a domino image");
  const int m = u.rank() / 2;
  std::vector<int> sigma;
  IndexSet S(Interval{1, m});
  for (int j = 1; j <= m; ++j) {
    const int a = u(2 * j - 1);
    const int b = u(2 * j);
    const bool same_sign = (a > 0) == (b > 0);
    const int hi = std::max(std::abs(a), std::abs(b));
    const int lo = std::min(std::abs(a), std::abs(b));
    if (!same_sign || hi % 2 != 0 || lo != hi - 1) {
      throw std::invalid_argument(format(u) + " is not in the image of the signed domino bijection");
    }
    const int v = hi / 2;
    sigma.push_back(a > 0 ? v : -v);
    // positive pair: j in S iff the even value comes first; negative pair: iff the odd one does
    if (a > 0 ? a == hi : std::abs(a) == lo) S.insert(j);
  }
  return {SignedPerm(sigma), S};
}

}  // namespace weylstat
