#include "weylstat/overpartition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace weylstat {

int Overpartition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Overpartition::valid() const {
  if (overlined.size() != parts.size()) return false;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) return false;
    if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return false;
    const bool last = i + 1 == parts.size() || parts[i + 1] != parts[i];
    if (overlined[i] && !last) return false;
  }
  return true;
}

std::string format(const Overpartition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.parts[i]);
    if (p.overlined[i]) out += "'";
  }
  return out + ")";
}

namespace {

struct Walker {
  const OverpartitionQuery& q;
  const std::function<void(const Overpartition&)>& f;
  int weight_cap;
  int length_cap;
  Overpartition cur;

  void emit() {
    if (q.weight && cur.weight() != *q.weight) return;
    if (q.length && cur.length() != *q.length) return;
    f(cur);
  }

  void walk(int value, int weight) {
    if (value == 0) {
      emit();
      return;
    }
    const int room_len = length_cap - cur.length();
    for (int c = 0; c <= room_len && weight + c * value <= weight_cap; ++c) {
      for (int bar = 0; bar <= (c > 0 ? 1 : 0); ++bar) {
        for (int k = 0; k < c; ++k) {
          cur.parts.push_back(value);
          cur.overlined.push_back(bar == 1 && k == c - 1);
        }
        walk(value - 1, weight + c * value);
        cur.parts.resize(cur.parts.size() - static_cast<std::size_t>(c));
        cur.overlined.resize(cur.parts.size());
      }
    }
  }
};

}  // namespace

void for_each_overpartition(const OverpartitionQuery& q, const std::function<void(const Overpartition&)>& f) {
  if (q.max_part < 0) throw std::invalid_argument("max part must be non-negative");
  constexpr int kUnbounded = 1 << 20;
  int weight_cap = kUnbounded;
  if (q.weight) weight_cap = *q.weight;
  if (q.max_weight) weight_cap = std::min(weight_cap, *q.max_weight);
  int length_cap = kUnbounded;
  if (q.length) length_cap = *q.length;
  if (q.max_length) length_cap = std::min(length_cap, *q.max_length);
  if (q.max_part > 0 && weight_cap == kUnbounded && length_cap == kUnbounded) {
    throw std::invalid_argument("overpartition query needs a weight or length bound");
  }
  if (weight_cap < 0 || length_cap < 0) return;
  // a length bound also bounds the weight
  weight_cap = static_cast<int>(std::min<long>(weight_cap, static_cast<long>(length_cap) * q.max_part));
  Walker w{q, f, weight_cap, length_cap, {}};
  w.walk(q.max_part, 0);
}

std::vector<Overpartition> overpartitions(const OverpartitionQuery& q) {
  std::vector<Overpartition> out;
  for_each_overpartition(q, [&](const Overpartition& p) { out.push_back(p); });
  return out;
}

MultiPoly overpartition_length_poly(int n, int m, const std::string& var) {
  if (n < 0 || m < 0) throw std::invalid_argument("P_{n,m} needs n, m >= 0");
  std::map<std::uint32_t, std::int64_t> counts;
  OverpartitionQuery q;
  q.max_part = n;
  q.length = m;
  for_each_overpartition(q, [&](const Overpartition& p) { ++counts[static_cast<std::uint32_t>(p.weight())]; });
  MultiPoly::Terms t;
  for (auto [w, c] : counts) t.emplace(MultiPoly::Exponents{w}, c);
  return MultiPoly({var}, std::move(t));
}

MultiPoly overpartition_length_closed(int n, int m, const std::string& var) {
  if (n < 0 || m < 0) throw std::invalid_argument("P_{n,m} needs n, m >= 0");
  MultiPoly sum;
  for (int i = 0; i <= std::min(n, m); ++i) {
    if (n + m - i - 1 < m - i) continue;  // n = 0 leaves only the i = m = 0 term
    const auto shift = static_cast<std::uint32_t>(i * (i - 1) / 2 + m);
    sum += MultiPoly::monomial(1, {{var, shift}}) * q_binomial(n, i, var) * q_binomial(n + m - i - 1, m - i, var);
  }
  if (n == 0 && m == 0) return MultiPoly(1);
  return sum;
}

}  // namespace weylstat
