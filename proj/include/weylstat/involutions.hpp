#pragma once

// Sign-reversing involutions behind the reduction identities, and an
// exhaustive checker for their contracts.

#include <cstdint>
#include <string>

#include "weylstat/enumeration.hpp"
#include "weylstat/permutation.hpp"

namespace weylstat {

class OutsideDomain : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (r, r*) sigma with r the least i in [n-1] whose value pair sits at
/// distance >= 2. Domain: S_n minus the domino permutations.
Perm iota_A(const Perm& sigma);

/// s_r^* sigma with r the least i in [n-1] whose signed positions differ by
/// more than 1. Domain: B_n minus D(B_n).
SignedPerm phi_B(const SignedPerm& sigma);

enum class Side : std::uint8_t { odd, even };

/// Odd side: r = |sigma(n)|; even side: r = |sigma(1)|. Swaps the absolute
/// values r and r* keeping signs. Domain: r* != r.
SignedPerm psi_B(const SignedPerm& sigma, Side side);

/// Negates sigma(i+1) for the least i in [n-1] of the side's parity with
/// |sigma(i)| > |sigma(i+1)|. Domain: such an i exists.
SignedPerm tilde_neg(const SignedPerm& sigma, Side side);

struct PairingCheck {
  std::uint64_t domain_size = 0;
  std::uint64_t pairs = 0;
  bool ok = true;
  std::string first_failure;
};

/// iota_A on S_n^J minus D(S_n): involutive, fixed-point free, stays in the
/// quotient, flips the length parity, keeps the descent set.
PairingCheck check_iota_A(int n, const IndexSet& J);
/// phi_B on B_n minus D(B_n): flips lenB parity, keeps descents and Neg.
PairingCheck check_phi_B(int n);
/// psi_B: flips lenB parity, keeps Neg and the descents of the side's parity.
PairingCheck check_psi_B(int n, Side side);
/// tilde_neg: flips neg parity, keeps the side's neg count, descent count
/// and major index.
PairingCheck check_tilde_neg(int n, Side side);

}  // namespace weylstat
