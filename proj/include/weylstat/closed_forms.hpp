#pragma once

// Right-hand sides of the identities as explicit products. A builder whose
// right-hand side has a denominator returns it separately; nothing divides
// implicitly.

#include <optional>
#include <string_view>

#include "weylstat/permutation.hpp"
#include "weylstat/polynomial.hpp"

namespace weylstat {

/// num / den, compared against a left-hand side L as L * den == num.
struct ClosedForm {
  MultiPoly num;
  MultiPoly den{1};
};

/// (1 + (-1)^n) / 2
int p_parity(int n);

struct FormParams {
  std::optional<IndexSet> J;
  std::optional<IndexSet> S;
  std::optional<int> eps;
  /// +1 or -1: the sign of sigma(n) in the four-corner identities
  std::optional<int> sign;
  std::optional<int> m;
};

/// Dispatch by identity id (rank n; parameters as the identity needs).
/// Throws std::invalid_argument for unknown ids or missing parameters.
ClosedForm closed_form(std::string_view id, int n, const FormParams& params = {});

// Type A. Variables follow the identity's binding.
ClosedForm odd_eulerian_rhs(int n);   // y^lenA q^omaj x^odes
ClosedForm even_eulerian_rhs(int n);  // y^lenA q^emaj x^edes
MultiPoly gessel_simion_odd_rhs(int n);
MultiPoly gessel_simion_even_rhs(int n);
/// n!/2^k * sum over overpartitions with parts <= k of q^|l| x^len, truncated
MultiPoly overpartition_rhs(int n, int k, const DegreeCaps& caps);
MultiPoly omaj_distribution_rhs(int n);
MultiPoly emaj_distribution_rhs(int n);
/// (-1)^l q1^omaj q2^emaj x1^odes x2^edes over S_{2m}^J
MultiPoly parabolic_signed_rhs(int m, const IndexSet& J);
MultiPoly bivariate_even_rank_rhs(int m);
MultiPoly signed_maj_des_rhs(int m, const IndexSet& J);
MultiPoly odd_quotient_rhs(int m);

// Types B and D, variables x, y, z (four corners: x, y, z1, z2).
MultiPoly trivial_B_odd_rhs(int n);
MultiPoly trivial_B_even_rhs(int n);
MultiPoly trivial_D_odd_rhs(int n);
MultiPoly trivial_D_even_rhs(int n);
/// The even D product with the factor (1 + 2zx + y x^n) as printed; differs
/// from trivial_D_even_rhs for odd n.
MultiPoly trivial_D_even_printed(int n);
MultiPoly evenneg_odd_rhs(int n, const IndexSet& S);
MultiPoly even_odd_neg_rhs(int n, const IndexSet& S);
MultiPoly four_corner_factor(int n);
MultiPoly fourcorners_rhs(int n, int sign, int eps);
ClosedForm efourcorners_rhs(int n, int sign, int eps);
MultiPoly ell_odd_rhs(int n);
MultiPoly ell_even_rhs(int n);
MultiPoly odmaj_odd_rhs(int n);
MultiPoly odmaj_even_rhs(int n);
MultiPoly ell_neg_odd_rhs(int n);
MultiPoly ell_neg_even_rhs(int n);
MultiPoly neg_char_odd_rhs(int n);
MultiPoly neg_char_even_rhs(int n);

/// Printed regression strings, parsed.
MultiPoly s5_signed_bivariate_printed();
MultiPoly b5_signed_bivariate_printed();
MultiPoly s5_descent_set_printed();
MultiPoly s5_odd_length_printed();

}  // namespace weylstat
