#include "weylstat/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

namespace weylstat {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

std::uint32_t total_degree(const MultiPoly::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

// Graded order: a before b when deg a < deg b, or equal degree and a > b lexicographically.
bool graded_before(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da < db;
  return b < a;
}

std::vector<std::string> union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

MultiPoly::MultiPoly(std::int64_t c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

MultiPoly::MultiPoly(std::vector<std::string> vars, Terms terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
  for (const auto& [e, c] : terms_) {
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent arity does not match variables");
  }
  normalize();
}

MultiPoly MultiPoly::variable(const std::string& name) { return monomial(1, {{name, 1}}); }

MultiPoly MultiPoly::monomial(std::int64_t c, const std::vector<std::pair<std::string, std::uint32_t>>& powers) {
  std::map<std::string, std::uint32_t> merged;
  for (const auto& [v, e] : powers) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    merged[v] += e;
  }
  std::vector<std::string> vars;
  Exponents exps;
  for (const auto& [v, e] : merged) {
    vars.push_back(v);
    exps.push_back(e);
  }
  Terms t;
  if (c != 0) t.emplace(exps, c);
  return MultiPoly(std::move(vars), std::move(t));
}

void MultiPoly::normalize() {
  // sort variables (merging is not needed; names are unique by construction)
  if (!std::is_sorted(vars_.begin(), vars_.end())) {
    std::vector<std::size_t> order(vars_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vars_[a] < vars_[b]; });
    std::vector<std::string> vars;
    for (auto i : order) vars.push_back(vars_[i]);
    Terms t;
    for (const auto& [e, c] : terms_) {
      Exponents ne;
      for (auto i : order) ne.push_back(e[i]);
      t.emplace(std::move(ne), c);
    }
    vars_ = std::move(vars);
    terms_ = std::move(t);
  }
  if (std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end()) {
    throw std::invalid_argument("duplicate variable name");
  }
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] != 0;
  }
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) vars.push_back(vars_[i]);
  }
  Terms t;
  for (const auto& [e, c] : terms_) {
    Exponents ne;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (used[i]) ne.push_back(e[i]);
    }
    t.emplace(std::move(ne), c);
  }
  vars_ = std::move(vars);
  terms_ = std::move(t);
}

MultiPoly::Terms MultiPoly::lifted(const std::vector<std::string>& vars) const {
  if (vars == vars_) return terms_;
  std::vector<std::size_t> where;
  for (const auto& v : vars_) {
    where.push_back(static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin()));
  }
  Terms t;
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
    t.emplace(std::move(ne), c);
  }
  return t;
}

std::int64_t MultiPoly::coefficient(const std::vector<std::pair<std::string, std::uint32_t>>& powers) const {
  Exponents e(vars_.size(), 0);
  for (const auto& [v, k] : powers) {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) {
      if (k != 0) return 0;
      continue;
    }
    e[static_cast<std::size_t>(it - vars_.begin())] += k;
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

int MultiPoly::degree() const noexcept {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total_degree(e)));
  return d;
}

int MultiPoly::degree_in(std::string_view var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (terms_.empty()) return -1;
  if (it == vars_.end()) return 0;
  const auto k = static_cast<std::size_t>(it - vars_.begin());
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[k]);
  return static_cast<int>(d);
}

std::int64_t MultiPoly::at_ones() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s = checked_add(s, c);
  return s;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& b) {
  auto vars = union_vars(vars_, b.vars_);
  Terms t = lifted(vars);
  for (auto& [e, c] : b.lifted(vars)) {
    auto [it, fresh] = t.emplace(e, c);
    if (!fresh) it->second = checked_add(it->second, c);
  }
  vars_ = std::move(vars);
  terms_ = std::move(t);
  normalize();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& b) { return *this += -b; }

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r = a;
  for (auto& [e, c] : r.terms_) {
    if (c == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("polynomial coefficient overflow");
    c = -c;
  }
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto vars = union_vars(a.vars_, b.vars_);
  const auto ta = a.lifted(vars);
  const auto tb = b.lifted(vars);
  MultiPoly::Terms out;
  MultiPoly::Exponents e(vars.size());
  for (const auto& [ea, ca] : ta) {
    for (const auto& [eb, cb] : tb) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      const auto prod = checked_mul(ca, cb);
      auto [it, fresh] = out.emplace(e, prod);
      if (!fresh) it->second = checked_add(it->second, prod);
    }
  }
  return MultiPoly(std::move(vars), std::move(out));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& b) { return *this = *this * b; }

MultiPoly pow(const MultiPoly& p, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent in pow");
  MultiPoly result(1);
  MultiPoly base = p;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

DivisionResult divide(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  auto vars = union_vars(num.variables(), den.variables());
  auto lift = [&](const MultiPoly& p) {
    MultiPoly::Terms t;
    const auto& pv = p.variables();
    for (const auto& [e, c] : p.terms()) {
      MultiPoly::Exponents ne(vars.size(), 0);
      for (std::size_t i = 0; i < pv.size(); ++i) {
        ne[static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), pv[i]) - vars.begin())] = e[i];
      }
      t.emplace(std::move(ne), c);
    }
    return t;
  };
  MultiPoly::Terms r = lift(num);
  const auto d = lift(den);
  auto leading = [](const MultiPoly::Terms& t) {
    auto best = t.begin();
    for (auto it = t.begin(); it != t.end(); ++it) {
      if (graded_before(best->first, it->first)) best = it;
    }
    return best;
  };
  const auto lead_d = leading(d);
  MultiPoly::Terms quotient, remainder;
  while (!r.empty()) {
    const auto lead_r = leading(r);
    const auto& er = lead_r->first;
    const auto cr = lead_r->second;
    bool divisible = cr % lead_d->second == 0;
    for (std::size_t i = 0; divisible && i < er.size(); ++i) divisible = er[i] >= lead_d->first[i];
    if (!divisible) {
      remainder.emplace(er, cr);
      r.erase(lead_r);
      continue;
    }
    MultiPoly::Exponents eq(er.size());
    for (std::size_t i = 0; i < er.size(); ++i) eq[i] = er[i] - lead_d->first[i];
    const auto cq = cr / lead_d->second;
    quotient[eq] = checked_add(quotient[eq], cq);
    for (const auto& [ed, cd] : d) {
      MultiPoly::Exponents e(ed.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ed[i] + eq[i];
      auto& slot = r[e];
      slot = checked_add(slot, -checked_mul(cq, cd));
      if (slot == 0) r.erase(e);
    }
  }
  return {MultiPoly(vars, std::move(quotient)), MultiPoly(vars, std::move(remainder))};
}

MultiPoly div_exact(const MultiPoly& num, const MultiPoly& den) {
  auto [q, r] = divide(num, den);
  if (!r.is_zero()) {
    throw InexactDivision("inexact division of " + to_string(num) + " by " + to_string(den) + ", remainder " +
                              to_string(r),
                          r);
  }
  return q;
}

MultiPoly truncate(const MultiPoly& p, const DegreeCaps& caps) {
  const auto& vars = p.variables();
  std::vector<std::uint32_t> cap(vars.size(), std::numeric_limits<std::uint32_t>::max());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = caps.find(vars[i]);
    if (it != caps.end()) cap[i] = it->second;
  }
  MultiPoly::Terms t;
  for (const auto& [e, c] : p.terms()) {
    bool keep = true;
    for (std::size_t i = 0; keep && i < e.size(); ++i) keep = e[i] <= cap[i];
    if (keep) t.emplace(e, c);
  }
  return MultiPoly(vars, std::move(t));
}

MultiPoly mul_truncated(const MultiPoly& a, const MultiPoly& b, const DegreeCaps& caps) {
  return truncate(truncate(a, caps) * truncate(b, caps), caps);
}

MultiPoly geometric_series(const MultiPoly& m, const DegreeCaps& caps) {
  if (m.coefficient({}) != 0) throw std::domain_error("geometric series needs a zero constant term");
  for (const auto& [e, c] : m.terms()) {
    bool capped = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0 && caps.count(m.variables()[i])) capped = true;
    }
    if (!capped) throw std::domain_error("geometric series of " + to_string(m) + " is not finite under the caps");
  }
  MultiPoly sum(1), power(1);
  while (true) {
    power = mul_truncated(power, m, caps);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum;
}

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings) {
  const auto& vars = p.variables();
  std::vector<MultiPoly> images;
  for (const auto& v : vars) {
    auto it = bindings.find(v);
    images.push_back(it == bindings.end() ? MultiPoly::variable(v) : it->second);
  }
  // cache powers per variable
  std::vector<std::vector<MultiPoly>> powers(vars.size());
  auto power_of = [&](std::size_t i, std::uint32_t k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly(1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  MultiPoly result;
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= power_of(i, e[i]);
    }
    result += term;
  }
  return result;
}

MultiPoly substitute_laurent(const MultiPoly& p, const std::map<std::string, LaurentMonomial>& bindings) {
  const auto& vars = p.variables();
  std::map<std::string, std::int64_t> acc;
  std::map<std::vector<std::pair<std::string, std::int64_t>>, std::int64_t> image;
  for (const auto& [e, c] : p.terms()) {
    acc.clear();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = bindings.find(vars[i]);
      if (it == bindings.end()) {
        acc[vars[i]] += e[i];
        continue;
      }
      for (const auto& [v, k] : it->second) acc[v] += static_cast<std::int64_t>(k) * e[i];
    }
    std::vector<std::pair<std::string, std::int64_t>> key;
    for (const auto& [v, k] : acc) {
      if (k != 0) key.emplace_back(v, k);
    }
    auto& slot = image[key];
    slot = checked_add(slot, c);
  }
  MultiPoly result;
  for (const auto& [key, c] : image) {
    if (c == 0) continue;
    std::vector<std::pair<std::string, std::uint32_t>> powers;
    for (const auto& [v, k] : key) {
      if (k < 0) {
        throw std::domain_error("substitution leaves a negative power of " + v + " in " + to_string(p));
      }
      powers.emplace_back(v, static_cast<std::uint32_t>(k));
    }
    result += MultiPoly::monomial(c, powers);
  }
  return result;
}

MultiPoly q_int(int n, const std::string& var) {
  if (n < 0) throw std::invalid_argument("q-integer of a negative number");
  MultiPoly::Terms t;
  for (int i = 0; i < n; ++i) t.emplace(MultiPoly::Exponents{static_cast<std::uint32_t>(i)}, 1);
  return MultiPoly({var}, std::move(t));
}

MultiPoly q_factorial(int n, const std::string& var) {
  if (n < 0) throw std::invalid_argument("q-factorial of a negative number");
  MultiPoly r(1);
  for (int i = 2; i <= n; ++i) r *= q_int(i, var);
  return r;
}

MultiPoly q_binomial(int a, int b, const std::string& var) {
  if (a < 0 || b < 0 || b > a) throw std::invalid_argument("q-binomial arguments out of range");
  return div_exact(q_factorial(a, var), q_factorial(b, var) * q_factorial(a - b, var));
}

std::vector<std::int64_t> coefficient_sequence(const MultiPoly& p) {
  if (p.variables().size() > 1) throw std::invalid_argument("shape queries need a univariate polynomial");
  std::vector<std::int64_t> seq(static_cast<std::size_t>(std::max(0, p.degree() + 1)), 0);
  for (const auto& [e, c] : p.terms()) seq[e.empty() ? 0 : e[0]] = c;
  return seq;
}

bool is_symmetric(const MultiPoly& p, int doubled_center) {
  const auto seq = coefficient_sequence(p);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] == 0) continue;
    const long mirror = static_cast<long>(doubled_center) - static_cast<long>(i);
    if (mirror < 0 || mirror >= static_cast<long>(seq.size()) || seq[static_cast<std::size_t>(mirror)] != seq[i]) {
      return false;
    }
  }
  return true;
}

bool is_unimodal(const MultiPoly& p) {
  auto seq = coefficient_sequence(p);
  std::size_t lo = 0;
  while (lo < seq.size() && seq[lo] == 0) ++lo;
  if (lo == seq.size()) return true;
  std::size_t i = lo + 1;
  while (i < seq.size() && seq[i] >= seq[i - 1]) ++i;
  while (i < seq.size() && seq[i] <= seq[i - 1]) ++i;
  if (i != seq.size()) return false;
  for (std::size_t k = lo; k < seq.size(); ++k) {
    if (seq[k] <= 0) return false;
  }
  return true;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<MultiPoly::Exponents, std::int64_t>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return graded_before(a.first, b.first); });
  const auto& vars = p.variables();
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool constant = total_degree(e) == 0;
    std::uint64_t mag = c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    bool need_star = false;
    if (constant || mag != 1) {
      out += std::to_string(mag);
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) out += "*";
      out += vars[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
      need_star = true;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("polynomial parse error: " + msg + " at position " + std::to_string(i_));
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool starts_factor() {
    skip();
    if (i_ >= s_.size()) return false;
    const auto c = static_cast<unsigned char>(s_[i_]);
    return s_[i_] == '(' || std::isalpha(c) || std::isdigit(c);
  }

  MultiPoly expr() {
    MultiPoly acc;
    bool negate = false;
    if (peek('+') || peek('-')) {
      negate = s_[i_] == '-';
      ++i_;
    }
    acc = term();
    if (negate) acc = -acc;
    while (peek('+') || peek('-')) {
      const bool minus = s_[i_] == '-';
      ++i_;
      MultiPoly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = power();
    while (true) {
      if (peek('*')) {
        ++i_;
        acc *= power();
      } else if (starts_factor()) {
        acc *= power();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (peek('^')) {
      ++i_;
      skip();
      const std::size_t start = i_;
      long e = 0;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        e = e * 10 + (s_[i_] - '0');
        if (e > 100000) fail("exponent too large");
        ++i_;
      }
      if (i_ == start) fail("expected a non-negative exponent");
      base = pow(base, static_cast<int>(e));
    }
    return base;
  }

  MultiPoly primary() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const auto c = static_cast<unsigned char>(s_[i_]);
    if (s_[i_] == '(') {
      ++i_;
      MultiPoly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++i_;
      return inner;
    }
    if (std::isdigit(c)) {
      std::int64_t v = 0;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        v = checked_add(checked_mul(v, 10), s_[i_] - '0');
        ++i_;
      }
      return MultiPoly(v);
    }
    if (std::isalpha(c)) {
      const std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      return MultiPoly::variable(std::string(s_.substr(start, i_ - start)));
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace weylstat
