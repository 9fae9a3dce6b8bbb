#pragma once

// Sparse multivariate polynomials over the integers with named variables.
// Coefficients are checked 64-bit integers; overflow raises
// std::overflow_error.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace weylstat {

class MultiPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using Terms = std::map<Exponents, std::int64_t>;

  MultiPoly() = default;
  MultiPoly(std::int64_t c);  // NOLINT: constants convert implicitly
  /// Terms are indexed by `vars`; the result is normalized (variables sorted,
  /// zero terms and unused variables dropped).
  MultiPoly(std::vector<std::string> vars, Terms terms);

  static MultiPoly variable(const std::string& name);
  /// c * prod name^e
  static MultiPoly monomial(std::int64_t c, const std::vector<std::pair<std::string, std::uint32_t>>& powers);

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Coefficient of prod name^e; absent variables have exponent 0.
  std::int64_t coefficient(const std::vector<std::pair<std::string, std::uint32_t>>& powers) const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  int degree_in(std::string_view var) const;
  /// Sum of all coefficients.
  std::int64_t at_ones() const;

  MultiPoly& operator+=(const MultiPoly& b);
  MultiPoly& operator-=(const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& b);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) noexcept {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  void normalize();
  /// Re-express over a superset of the current variables.
  Terms lifted(const std::vector<std::string>& vars) const;

  std::vector<std::string> vars_;
  Terms terms_;
};

MultiPoly pow(const MultiPoly& p, int e);

class InexactDivision : public std::domain_error {
 public:
  InexactDivision(const std::string& what, MultiPoly remainder)
      : std::domain_error(what), remainder_(std::move(remainder)) {}
  const MultiPoly& remainder() const noexcept { return remainder_; }

 private:
  MultiPoly remainder_;
};

struct DivisionResult {
  MultiPoly quotient;
  MultiPoly remainder;
};

/// Multivariate division by the graded-lex leading term of den.
DivisionResult divide(const MultiPoly& num, const MultiPoly& den);
/// Throws InexactDivision when the remainder is nonzero.
MultiPoly div_exact(const MultiPoly& num, const MultiPoly& den);

/// Degree caps per variable; variables not listed are uncapped.
using DegreeCaps = std::map<std::string, std::uint32_t>;
MultiPoly truncate(const MultiPoly& p, const DegreeCaps& caps);
MultiPoly mul_truncated(const MultiPoly& a, const MultiPoly& b, const DegreeCaps& caps);
/// 1/(1 - m) expanded as a truncated geometric series; m must have zero
/// constant term and some capped variable in every term.
MultiPoly geometric_series(const MultiPoly& m, const DegreeCaps& caps);

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings);

/// Monomial substitution var -> prod name^e where e may be negative (for
/// rewrites like x1 = x/q). Throws std::domain_error if any exponent of the
/// image is negative.
using LaurentMonomial = std::map<std::string, int>;
MultiPoly substitute_laurent(const MultiPoly& p, const std::map<std::string, LaurentMonomial>& bindings);

MultiPoly q_int(int n, const std::string& var);
MultiPoly q_factorial(int n, const std::string& var);
MultiPoly q_binomial(int a, int b, const std::string& var);

/// Coefficients c_0..c_deg of a polynomial in at most one variable.
std::vector<std::int64_t> coefficient_sequence(const MultiPoly& p);
/// Symmetric about doubled_center / 2.
bool is_symmetric(const MultiPoly& p, int doubled_center);
/// Weakly increasing then weakly decreasing on the span between the lowest
/// and highest nonzero exponents, with no internal zeros.
bool is_unimodal(const MultiPoly& p);

/// "1 + 3*x*z + 3*x^2*y + x^3*y*z": degree ascending, lex-descending inside a degree.
std::string to_string(const MultiPoly& p);
/// Accepts the to_string format plus parentheses, '^' on groups and implicit
/// multiplication ("(1+y^2)(1-2xy)"). Identifiers are [A-Za-z][A-Za-z0-9_]*.
MultiPoly parse_poly(std::string_view text);

}  // namespace weylstat
