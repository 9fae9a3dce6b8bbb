#include "weylstat/permutation.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace weylstat {

namespace {

void check_rank(std::size_t n) {
  if (n < 1 || n > static_cast<std::size_t>(kMaxRank)) {
    throw std::invalid_argument("rank must lie in [1, " + std::to_string(kMaxRank) + "], got " +
                                std::to_string(n));
  }
}

void check_member(int v, Interval universe) {
  if (v < 0 || v > 31) throw std::invalid_argument("index set member out of range: " + std::to_string(v));
  if (!universe.contains(v)) {
    throw std::invalid_argument("index " + std::to_string(v) + " outside [" + std::to_string(universe.lo) + ", " +
                                std::to_string(universe.hi) + "]");
  }
}

// Parses "[a,b,c]" into integers. Whitespace is allowed around tokens.
std::vector<int> parse_bracketed(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[') throw ParseError("expected '['", i);
  ++i;
  skip_ws();
  if (i < text.size() && text[i] == ']') throw ParseError("empty window", i);
  while (true) {
    skip_ws();
    std::size_t start = i;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      negative = text[i] == '-';
      ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected an integer", i);
    }
    long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1000000) throw ParseError("integer too large", start);
      ++i;
    }
    out.push_back(static_cast<int>(negative ? -value : value));
    skip_ws();
    if (i >= text.size()) throw ParseError("unterminated window", i);
    if (text[i] == ',') {
      ++i;
      continue;
    }
    if (text[i] == ']') {
      ++i;
      break;
    }
    throw ParseError("expected ',' or ']'", i);
  }
  skip_ws();
  if (i != text.size()) throw ParseError("trailing characters", i);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// IndexSet

IndexSet::IndexSet(std::initializer_list<int> members, Interval universe)
    : IndexSet(std::span<const int>(members.begin(), members.size()), universe) {}

IndexSet::IndexSet(std::span<const int> members, Interval universe) : universe_(universe) {
  for (int v : members) insert(v);
}

IndexSet IndexSet::from_mask(std::uint32_t mask, Interval universe) {
  IndexSet s(universe);
  for (std::uint32_t m = mask; m != 0; m &= m - 1) s.insert(std::countr_zero(m));
  return s;
}

int IndexSet::size() const noexcept { return std::popcount(mask_); }

int IndexSet::sum() const noexcept {
  int total = 0;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) total += std::countr_zero(m);
  return total;
}

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

void IndexSet::insert(int v) {
  check_member(v, universe_);
  mask_ |= 1u << v;
}

IndexSet IndexSet::even_part() const {
  IndexSet s(universe_);
  s.mask_ = mask_ & 0x55555555u;
  return s;
}

IndexSet IndexSet::odd_part() const {
  IndexSet s(universe_);
  s.mask_ = mask_ & 0xAAAAAAAAu;
  return s;
}

IndexSet IndexSet::shifted(int i, int n) const {
  IndexSet s(Interval{1, n});
  for (int j : members()) {
    int v = i + j;
    if (v >= 1 && v <= n) s.insert(v);
  }
  return s;
}

IndexSet IndexSet::scaled(int k) const {
  if (k < 0) throw std::invalid_argument("negative scale factor");
  IndexSet s(Interval{universe_.lo * k, std::min(31, universe_.hi * k)});
  for (int j : members()) s.insert(j * k);
  return s;
}

IndexSet IndexSet::halved() const {
  IndexSet s(Interval{(universe_.lo + 1) / 2, universe_.hi / 2});
  for (int j : members()) {
    if (j % 2 != 0) throw std::invalid_argument("halving " + to_string() + " leaves a non-integer");
    s.insert(j / 2);
  }
  return s;
}

IndexSet IndexSet::star_image(int n) const {
  IndexSet s(universe_);
  for (int j : members()) s.insert(star(j, n));
  return s;
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : members()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::vector<IndexSet> all_subsets(int lo, int hi) {
  std::vector<IndexSet> out;
  if (hi < lo) {
    out.emplace_back(Interval{lo, std::max(lo, hi)});
    return out;
  }
  const int width = hi - lo + 1;
  out.reserve(std::size_t{1} << width);
  for (std::uint32_t bits = 0; bits < (1u << width); ++bits) {
    out.push_back(IndexSet::from_mask(bits << lo, Interval{lo, hi}));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Perm

Perm::Perm(std::span<const int> entries) {
  check_rank(entries.size());
  n_ = static_cast<int>(entries.size());
  std::array<bool, kMaxRank + 1> seen{};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    int v = entries[i];
    if (v < 1 || v > n_ || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of [" + std::to_string(n_) + "]");
    }
    seen[static_cast<std::size_t>(v)] = true;
    v_[i] = v;
  }
}

Perm::Perm(std::initializer_list<int> entries) : Perm(std::span<const int>(entries.begin(), entries.size())) {}

Perm Perm::identity(int n) {
  check_rank(static_cast<std::size_t>(n));
  Perm p;
  p.n_ = n;
  std::iota(p.v_.begin(), p.v_.begin() + n, 1);
  return p;
}

Perm Perm::unchecked(std::span<const int> entries) noexcept {
  Perm p;
  p.n_ = static_cast<int>(entries.size());
  std::copy(entries.begin(), entries.end(), p.v_.begin());
  return p;
}

Perm Perm::inverse() const {
  Perm p;
  p.n_ = n_;
  for (int i = 0; i < n_; ++i) p.v_[static_cast<std::size_t>(v_[static_cast<std::size_t>(i)] - 1)] = i + 1;
  return p;
}

bool operator==(const Perm& a, const Perm& b) noexcept {
  return a.n_ == b.n_ && std::equal(a.v_.begin(), a.v_.begin() + a.n_, b.v_.begin());
}

bool operator<(const Perm& a, const Perm& b) noexcept {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return std::lexicographical_compare(a.v_.begin(), a.v_.begin() + a.n_, b.v_.begin(), b.v_.begin() + b.n_);
}

// ---------------------------------------------------------------------------
// SignedPerm

SignedPerm::SignedPerm(std::span<const int> window) {
  check_rank(window.size());
  n_ = static_cast<int>(window.size());
  std::array<bool, kMaxRank + 1> seen{};
  for (std::size_t i = 0; i < window.size(); ++i) {
    int a = std::abs(window[i]);
    if (a < 1 || a > n_ || seen[static_cast<std::size_t>(a)]) {
      throw std::invalid_argument("not a signed permutation of [" + std::to_string(n_) + "]");
    }
    seen[static_cast<std::size_t>(a)] = true;
    v_[i] = window[i];
  }
}

SignedPerm::SignedPerm(std::initializer_list<int> window)
    : SignedPerm(std::span<const int>(window.begin(), window.size())) {}

SignedPerm::SignedPerm(const Perm& p) : SignedPerm(p.entries()) {}

SignedPerm SignedPerm::identity(int n) { return SignedPerm(Perm::identity(n)); }

SignedPerm SignedPerm::unchecked(std::span<const int> window) noexcept {
  SignedPerm s;
  s.n_ = static_cast<int>(window.size());
  std::copy(window.begin(), window.end(), s.v_.begin());
  return s;
}

int SignedPerm::position_of(int v) const {
  for (int i = 0; i < n_; ++i) {
    if (v_[static_cast<std::size_t>(i)] == v) return i + 1;
    if (v_[static_cast<std::size_t>(i)] == -v) return -(i + 1);
  }
  throw std::invalid_argument("value " + std::to_string(v) + " outside [+-" + std::to_string(n_) + "]");
}

bool SignedPerm::in_D() const noexcept {
  int negatives = 0;
  for (int i = 0; i < n_; ++i) negatives += v_[static_cast<std::size_t>(i)] < 0;
  return negatives % 2 == 0;
}

bool operator==(const SignedPerm& a, const SignedPerm& b) noexcept {
  return a.n_ == b.n_ && std::equal(a.v_.begin(), a.v_.begin() + a.n_, b.v_.begin());
}

bool operator<(const SignedPerm& a, const SignedPerm& b) noexcept {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return std::lexicographical_compare(a.v_.begin(), a.v_.begin() + a.n_, b.v_.begin(), b.v_.begin() + b.n_);
}

// ---------------------------------------------------------------------------
// Text formats

Perm parse_perm(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t");
  if (first != std::string_view::npos && std::isdigit(static_cast<unsigned char>(text[first]))) {
    std::size_t last = text.find_last_not_of(" \t");
    std::vector<int> digits;
    for (std::size_t i = first; i <= last; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected a digit", i);
      digits.push_back(text[i] - '0');
    }
    if (digits.size() > 9) throw ParseError("compact form is limited to rank 9; use brackets", first);
    return Perm(digits);
  }
  std::vector<int> values = parse_bracketed(text);
  return Perm(values);
}

SignedPerm parse_signed_perm(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t");
  if (first != std::string_view::npos && std::isdigit(static_cast<unsigned char>(text[first]))) {
    return SignedPerm(parse_perm(text));
  }
  std::vector<int> values = parse_bracketed(text);
  return SignedPerm(values);
}

namespace {
std::string format_window(std::span<const int> values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out + "]";
}
}  // namespace

std::string format(const Perm& p) { return format_window(p.entries()); }
std::string format(const SignedPerm& s) { return format_window(s.window()); }

// ---------------------------------------------------------------------------
// Descents, negatives, lengths

IndexSet descent_set_A(std::span<const int> seq) {
  const int n = static_cast<int>(seq.size());
  IndexSet d(Interval{1, std::max(1, n - 1)});
  for (int i = 1; i < n; ++i) {
    if (seq[static_cast<std::size_t>(i - 1)] > seq[static_cast<std::size_t>(i)]) d.insert(i);
  }
  return d;
}

IndexSet descent_set_A(const Perm& p) { return descent_set_A(p.entries()); }

namespace {
IndexSet descent_set_with_zero(const SignedPerm& s, int sigma0) {
  const int n = s.rank();
  IndexSet d(Interval{0, n - 1});
  int prev = sigma0;
  for (int i = 1; i <= n; ++i) {
    if (prev > s(i)) d.insert(i - 1);
    prev = s(i);
  }
  return d;
}
}  // namespace

IndexSet descent_set_B(const SignedPerm& s) { return descent_set_with_zero(s, 0); }

IndexSet descent_set_D(const SignedPerm& s) {
  if (s.rank() < 2) throw std::invalid_argument("type D descents need rank >= 2");
  return descent_set_with_zero(s, -s(2));
}

IndexSet neg_set(const SignedPerm& s) {
  IndexSet d(Interval{1, s.rank()});
  for (int i = 1; i <= s.rank(); ++i) {
    if (s(i) < 0) d.insert(i);
  }
  return d;
}

int length_A(std::span<const int> seq) noexcept {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) inversions += seq[i] > seq[j];
  }
  return inversions;
}

int length_A(const Perm& p) noexcept { return length_A(p.entries()); }
int length_A(const SignedPerm& s) noexcept { return length_A(s.window()); }

int length_B(const SignedPerm& s) noexcept {
  int total = length_A(s.window());
  for (int v : s.window()) {
    if (v < 0) total -= v;
  }
  return total;
}

int length_D(const SignedPerm& s) {
  if (!s.in_D()) throw std::invalid_argument(format(s) + " has an odd number of negative entries");
  return length_B(s) - neg_set(s).size();
}

// ---------------------------------------------------------------------------
// Maps

int star(int i, int n) {
  if (i == 0 || i > n || i < -n) {
    throw std::invalid_argument("star: " + std::to_string(i) + " outside [+-" + std::to_string(n) + "]");
  }
  const int sgn = i > 0 ? 1 : -1;
  if (i % 2 == 0) return i - sgn;
  const int moved = i + sgn;
  return (moved >= -n && moved <= n) ? moved : i;
}

namespace {
void check_star_index(int i, int n) {
  if (i < 1 || i > n - 1) {
    throw std::invalid_argument("star_transpose index " + std::to_string(i) + " outside [" + std::to_string(n - 1) + "]");
  }
}
}  // namespace

Perm star_transpose(int i, const Perm& p) {
  const int n = p.rank();
  check_star_index(i, n);
  const int j = star(i, n);
  std::array<int, kMaxRank> v{};
  for (int k = 1; k <= n; ++k) {
    int x = p(k);
    v[static_cast<std::size_t>(k - 1)] = x == i ? j : (x == j ? i : x);
  }
  return Perm::unchecked({v.data(), static_cast<std::size_t>(n)});
}

SignedPerm star_transpose(int i, const SignedPerm& s) {
  const int n = s.rank();
  check_star_index(i, n);
  const int j = star(i, n);
  std::array<int, kMaxRank> v{};
  for (int k = 1; k <= n; ++k) {
    int x = s(k);
    int a = std::abs(x);
    int swapped = a == i ? j : (a == j ? i : a);
    v[static_cast<std::size_t>(k - 1)] = x < 0 ? -swapped : swapped;
  }
  return SignedPerm::unchecked({v.data(), static_cast<std::size_t>(n)});
}

Perm flatten(std::span<const int> values) {
  check_rank(values.size());
  std::vector<int> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("flatten: values are not distinct");
  }
  std::vector<int> ranks;
  ranks.reserve(values.size());
  for (int v : values) {
    ranks.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  }
  return Perm(ranks);
}

SignedPerm abs_last(const SignedPerm& s) {
  std::array<int, kMaxRank> v{};
  std::copy(s.window().begin(), s.window().end(), v.begin());
  v[static_cast<std::size_t>(s.rank() - 1)] = std::abs(v[static_cast<std::size_t>(s.rank() - 1)]);
  return SignedPerm::unchecked({v.data(), static_cast<std::size_t>(s.rank())});
}

SignedPerm abs_all(const SignedPerm& s) {
  std::array<int, kMaxRank> v{};
  for (int i = 0; i < s.rank(); ++i) v[static_cast<std::size_t>(i)] = std::abs(s(i + 1));
  return SignedPerm::unchecked({v.data(), static_cast<std::size_t>(s.rank())});
}

}  // namespace weylstat
