#include "weylstat/involutions.hpp"

#include <bit>
#include <cstdlib>
#include <map>
#include <tuple>

#include "weylstat/statistics.hpp"

namespace weylstat {

namespace {

SignedPerm swap_abs_values(const SignedPerm& s, int a, int b) {
  std::array<int, kMaxRank> v{};
  for (int k = 1; k <= s.rank(); ++k) {
    const int x = s(k);
    const int m = std::abs(x);
    const int swapped = m == a ? b : (m == b ? a : m);
    v[static_cast<std::size_t>(k - 1)] = x < 0 ? -swapped : swapped;
  }
  return SignedPerm::unchecked({v.data(), static_cast<std::size_t>(s.rank())});
}

int first_bad_pair(std::span<const int> w, bool is_signed) {
  const int n = static_cast<int>(w.size());
  int pos[kMaxRank + 1];
  for (int i = 0; i < n; ++i) {
    const int v = w[static_cast<std::size_t>(i)];
    if (v > 0) {
      pos[v] = i + 1;
    } else {
      pos[-v] = is_signed ? -(i + 1) : i + 1;
    }
  }
  for (int i = 1; i < n; ++i) {
    if (std::abs(pos[i] - pos[star(i, n)]) >= 2) return i;
  }
  return 0;
}

}  // namespace

Perm iota_A(const Perm& sigma) {
  const int r = first_bad_pair(sigma.entries(), false);
  if (r == 0) throw OutsideDomain("iota_A: " + format(sigma) + " is a domino permutation");
  return star_transpose(r, sigma);
}

SignedPerm phi_B(const SignedPerm& sigma) {
  const int r = first_bad_pair(sigma.window(), true);
  if (r == 0) throw OutsideDomain("phi_B: " + format(sigma) + " is a signed domino permutation");
  return star_transpose(r, sigma);
}

SignedPerm psi_B(const SignedPerm& sigma, Side side) {
  const int n = sigma.rank();
  if (side == Side::odd && n % 2 == 0) throw OutsideDomain("psi_B odd side needs odd rank");
  const int r = std::abs(side == Side::odd ? sigma(n) : sigma(1));
  const int partner = star(r, n);
  if (partner == r) throw OutsideDomain("psi_B: " + format(sigma) + " carries the fixed value " + std::to_string(r));
  return swap_abs_values(sigma, r, partner);
}

SignedPerm tilde_neg(const SignedPerm& sigma, Side side) {
  const int n = sigma.rank();
  for (int i = side == Side::odd ? 1 : 2; i < n; i += 2) {
    if (std::abs(sigma(i)) > std::abs(sigma(i + 1))) {
      std::array<int, kMaxRank> v{};
      std::copy(sigma.window().begin(), sigma.window().end(), v.begin());
      v[static_cast<std::size_t>(i)] = -v[static_cast<std::size_t>(i)];
      return SignedPerm::unchecked({v.data(), static_cast<std::size_t>(n)});
    }
  }
  throw OutsideDomain("tilde_neg: " + format(sigma) + " has no absolute descent of the requested parity");
}

namespace {

template <class Elem, class Map, class InDomain, class Invariant, class Sign>
PairingCheck run_pairing(const std::vector<Elem>& elems, Map f, InDomain in_domain, Invariant invariant, Sign sign) {
  PairingCheck out;
  auto fail = [&](const Elem& x, const std::string& why) {
    if (out.ok) out.first_failure = format(x) + ": " + why;
    out.ok = false;
  };
  for (const auto& x : elems) {
    if (!in_domain(x)) continue;
    ++out.domain_size;
    Elem y = f(x);
    if (y == x) {
      fail(x, "fixed point");
      continue;
    }
    if (!in_domain(y)) {
      fail(x, "image " + format(y) + " leaves the domain");
      continue;
    }
    if (!(f(y) == x)) fail(x, "not an involution");
    if (sign(x) == sign(y)) fail(x, "sign not reversed");
    if (invariant(x) != invariant(y)) fail(x, "tracked statistics changed");
    if (x < y) ++out.pairs;
  }
  if (out.ok && 2 * out.pairs != out.domain_size) {
    out.ok = false;
    out.first_failure = "domain does not split into 2-cycles";
  }
  return out;
}

std::vector<SignedPerm> all_B(int n) { return elements_B(GroupSpec::full(Family::B, n)); }

}  // namespace

PairingCheck check_iota_A(int n, const IndexSet& J) {
  GroupSpec spec = GroupSpec::full(Family::A, n);
  spec.quotient = J;
  const auto elems = elements_A(spec);
  return run_pairing(
      elems, [](const Perm& p) { return iota_A(p); },
      [&](const Perm& p) { return in_quotient(p.entries(), J) && !is_domino_A(p); },
      [](const Perm& p) { return descent_set_A(p).mask(); }, [](const Perm& p) { return length_A(p) % 2; });
}

PairingCheck check_phi_B(int n) {
  return run_pairing(
      all_B(n), [](const SignedPerm& s) { return phi_B(s); }, [](const SignedPerm& s) { return !is_domino_B(s); },
      [](const SignedPerm& s) { return std::make_pair(descent_set_B(s).mask(), neg_set(s).mask()); },
      [](const SignedPerm& s) { return length_B(s) % 2; });
}

PairingCheck check_psi_B(int n, Side side) {
  const std::uint32_t parity_bits = side == Side::odd ? kOddBits : kEvenBits;
  return run_pairing(
      all_B(n), [side](const SignedPerm& s) { return psi_B(s, side); },
      [&](const SignedPerm& s) {
        const int r = std::abs(side == Side::odd ? s(n) : s(1));
        return !(side == Side::odd && n % 2 == 0) && star(r, n) != r;
      },
      [&](const SignedPerm& s) { return std::make_pair(neg_set(s).mask(), descent_set_B(s).mask() & parity_bits); },
      [](const SignedPerm& s) { return length_B(s) % 2; });
}

PairingCheck check_tilde_neg(int n, Side side) {
  const std::uint32_t parity_bits = side == Side::odd ? kOddBits : kEvenBits;
  auto has_descent = [&](const SignedPerm& s) {
    for (int i = side == Side::odd ? 1 : 2; i < n; i += 2) {
      if (std::abs(s(i)) > std::abs(s(i + 1))) return true;
    }
    return false;
  };
  return run_pairing(
      all_B(n), [side](const SignedPerm& s) { return tilde_neg(s, side); }, has_descent,
      [&](const SignedPerm& s) {
        const auto d = descent_set_B(s).mask();
        const int major = side == Side::odd ? odd_major(d) : even_major(d);
        return std::make_tuple(neg_set(s).mask() & parity_bits, std::popcount(d & parity_bits), major);
      },
      [](const SignedPerm& s) { return neg_set(s).size() % 2; });
}

}  // namespace weylstat
