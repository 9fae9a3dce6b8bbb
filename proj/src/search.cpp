#include "weylstat/search.hpp"

#include <bit>
#include <map>
#include <stdexcept>

#include "weylstat/enumeration.hpp"

namespace weylstat {

namespace {

struct Pattern {
  std::uint32_t desc;
  std::uint32_t neg;
  std::int64_t count;
};

// Odometer over weights in [0, bound]^len, most significant first. Returns
// the first vector for which accept() holds.
template <class Accept>
std::optional<std::vector<int>> odometer(std::size_t len, int bound, Accept accept) {
  std::vector<int> w(len, 0);
  while (true) {
    if (accept(w)) return w;
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (w[i] < bound) {
        ++w[i];
        break;
      }
      w[i] = 0;
      if (i == 0) return std::nullopt;
    }
    if (len == 0) return std::nullopt;
  }
}

bool matches(const std::vector<Pattern>& patterns, const std::vector<int>& desc_w, const std::vector<int>& neg_w,
             const std::vector<std::int64_t>& target, std::vector<std::int64_t>& scratch) {
  std::fill(scratch.begin(), scratch.end(), 0);
  for (const auto& p : patterns) {
    std::size_t e = 0;
    for (std::uint32_t m = p.desc; m; m &= m - 1) e += static_cast<std::size_t>(desc_w[static_cast<std::size_t>(std::countr_zero(m))]);
    for (std::uint32_t m = p.neg; m; m &= m - 1) e += static_cast<std::size_t>(neg_w[static_cast<std::size_t>(std::countr_zero(m))]);
    if (e >= scratch.size()) return false;
    scratch[e] += p.count;
  }
  return scratch == target;
}

}  // namespace

std::optional<std::vector<int>> search_descent_major_A(int n, const MultiPoly& target) {
  if (n < 1 || n > 6) throw std::invalid_argument("descent-major search supports 1 <= n <= 6");
  const auto seq = coefficient_sequence(target);
  if (seq.empty()) return std::nullopt;
  std::map<std::uint32_t, std::int64_t> counts;
  for_each_element(GroupSpec::full(Family::A, n), [&](std::span<const int> w) { ++counts[descent_set_A(w).mask()]; });
  std::vector<Pattern> patterns;
  for (auto [mask, c] : counts) patterns.push_back({mask, 0, c});
  const int bound = static_cast<int>(seq.size()) - 1;
  std::vector<std::int64_t> scratch(seq.size());
  // descent weights are indexed by position; index 0 stays unused with weight 0
  auto found = odometer(static_cast<std::size_t>(n - 1), bound, [&](const std::vector<int>& j) {
    std::vector<int> by_pos(static_cast<std::size_t>(n), 0);
    for (int i = 1; i < n; ++i) by_pos[static_cast<std::size_t>(i)] = j[static_cast<std::size_t>(i - 1)];
    return matches(patterns, by_pos, {}, seq, scratch);
  });
  return found;
}

std::optional<DescentNegWeights> search_descent_neg_major_B(int n, const MultiPoly& target) {
  if (n < 1 || n > 3) throw std::invalid_argument("descent-neg search supports 1 <= n <= 3");
  const auto seq = coefficient_sequence(target);
  if (seq.empty()) return std::nullopt;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::int64_t> counts;
  for_each_element(GroupSpec::full(Family::B, n), [&](std::span<const int> w) {
    const auto s = SignedPerm::unchecked(w);
    ++counts[{descent_set_B(s).mask(), neg_set(s).mask()}];
  });
  std::vector<Pattern> patterns;
  for (const auto& [key, c] : counts) patterns.push_back({key.first, key.second, c});
  const int bound = static_cast<int>(seq.size()) - 1;
  std::vector<std::int64_t> scratch(seq.size());
  const auto un = static_cast<std::size_t>(n);
  auto found = odometer(2 * un, bound, [&](const std::vector<int>& jk) {
    std::vector<int> desc_w(jk.begin(), jk.begin() + static_cast<long>(un));
    std::vector<int> neg_w(un + 1, 0);  // position 0 never negative
    for (std::size_t i = 1; i <= un; ++i) neg_w[i] = jk[un + i - 1];
    return matches(patterns, desc_w, neg_w, seq, scratch);
  });
  if (!found) return std::nullopt;
  DescentNegWeights out;
  out.j.assign(found->begin(), found->begin() + static_cast<long>(un));
  out.k.assign(found->begin() + static_cast<long>(un), found->end());
  return out;
}

}  // namespace weylstat
