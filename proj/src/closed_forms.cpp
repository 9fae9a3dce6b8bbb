#include "weylstat/closed_forms.hpp"

#include <functional>
#include <map>
#include <string>

#include "weylstat/enumeration.hpp"
#include "weylstat/overpartition.hpp"
#include "weylstat/statistics.hpp"

namespace weylstat {

namespace {

MultiPoly var(const char* name) { return MultiPoly::variable(name); }

MultiPoly mono(std::int64_t c, std::vector<std::pair<std::string, std::uint32_t>> powers) {
  return MultiPoly::monomial(c, powers);
}

std::int64_t fact(int n) { return static_cast<std::int64_t>(factorial(n)); }

std::int64_t half_fact(int n, int k) { return fact(n) >> k; }

// prod_{i=lo..hi} f(i)
MultiPoly product(int lo, int hi, const std::function<MultiPoly(int)>& f) {
  MultiPoly r(1);
  for (int i = lo; i <= hi; ++i) r *= f(i);
  return r;
}

MultiPoly factor_3(int j) {
  // 1 + 3xz + 3y x^{2j} + y z x^{2j+1}
  const auto e = static_cast<std::uint32_t>(2 * j);
  return MultiPoly(1) + mono(3, {{"x", 1}, {"z", 1}}) + mono(3, {{"y", 1}, {"x", e}}) +
         mono(1, {{"y", 1}, {"z", 1}, {"x", e + 1}});
}

MultiPoly one_minus_yx(int i) { return MultiPoly(1) - mono(1, {{"y", 1}, {"x", static_cast<std::uint32_t>(i)}}); }

// sum over S_m^K of q^{scale*maj} x^des with the given variable names
MultiPoly quotient_maj_des(int m, const IndexSet& K, const char* qv, const char* xv, int scale) {
  GroupSpec spec = GroupSpec::full(Family::A, m);
  spec.quotient = K;
  std::map<std::pair<int, int>, std::int64_t> acc;
  for_each_element(spec, [&](std::span<const int> w) {
    const auto d = descent_set_A(w);
    ++acc[{scale * d.sum(), d.size()}];
  });
  MultiPoly r;
  for (const auto& [k, c] : acc) {
    r += mono(c, {{qv, static_cast<std::uint32_t>(k.first)}, {xv, static_cast<std::uint32_t>(k.second)}});
  }
  return r;
}

IndexSet even_half(const IndexSet& J) { return J.even_part().halved(); }

}  // namespace

int p_parity(int n) { return n % 2 == 0 ? 1 : 0; }

ClosedForm odd_eulerian_rhs(int n) {
  const int k = n / 2;
  ClosedForm f;
  f.num = q_factorial(n, "y") * product(1, k, [](int i) {
            return MultiPoly(1) + mono(1, {{"y", 1}, {"x", 1}, {"q", static_cast<std::uint32_t>(i)}});
          });
  f.den = pow(MultiPoly(1) + var("y"), k);
  return f;
}

ClosedForm even_eulerian_rhs(int n) {
  const int k = (n - 1) / 2;
  ClosedForm f;
  f.num = q_factorial(n, "y") * product(1, k, [](int i) {
            return MultiPoly(1) + mono(1, {{"y", 1}, {"x", 1}, {"q", static_cast<std::uint32_t>(i)}});
          });
  f.den = pow(MultiPoly(1) + var("y"), k);
  return f;
}

MultiPoly gessel_simion_odd_rhs(int n) {
  return MultiPoly(fact(n / 2)) * product(1, n / 2, [](int i) {
           return MultiPoly(1) - mono(1, {{"q", static_cast<std::uint32_t>(i)}});
         });
}

MultiPoly gessel_simion_even_rhs(int n) {
  return MultiPoly(p_parity(n + 1) * fact(n / 2)) * product(1, (n - 1) / 2, [](int i) {
           return MultiPoly(1) - mono(1, {{"q", static_cast<std::uint32_t>(i)}});
         });
}

MultiPoly overpartition_rhs(int n, int k, const DegreeCaps& caps) {
  OverpartitionQuery q;
  q.max_part = k;
  auto qc = caps.find("q");
  auto xc = caps.find("x");
  if (qc == caps.end() || xc == caps.end()) throw std::invalid_argument("overpartition series needs caps on q and x");
  q.max_weight = static_cast<int>(qc->second);
  q.max_length = static_cast<int>(xc->second);
  std::map<std::pair<int, int>, std::int64_t> acc;
  for_each_overpartition(q, [&](const Overpartition& p) { ++acc[{p.weight(), p.length()}]; });
  MultiPoly r;
  for (const auto& [wl, c] : acc) {
    r += mono(c, {{"q", static_cast<std::uint32_t>(wl.first)}, {"x", static_cast<std::uint32_t>(wl.second)}});
  }
  return MultiPoly(half_fact(n, k)) * r;
}

MultiPoly omaj_distribution_rhs(int n) {
  return MultiPoly(half_fact(n, n / 2)) *
         product(1, n / 2, [](int i) { return MultiPoly(1) + mono(1, {{"q", static_cast<std::uint32_t>(i)}}); });
}

MultiPoly emaj_distribution_rhs(int n) {
  return MultiPoly(half_fact(n, (n - 1) / 2)) * product(1, (n - 1) / 2, [](int i) {
           return MultiPoly(1) + mono(1, {{"q", static_cast<std::uint32_t>(i)}});
         });
}

MultiPoly parabolic_signed_rhs(int m, const IndexSet& J) {
  MultiPoly r = product(1, m, [&](int i) {
    if (J.contains(2 * i - 1)) return MultiPoly(1);
    return MultiPoly(1) - mono(1, {{"x1", 1}, {"q1", static_cast<std::uint32_t>(i)}});
  });
  return r * quotient_maj_des(m, even_half(J), "q2", "x2", 1);
}

MultiPoly bivariate_even_rank_rhs(int m) {
  return q_factorial(m, "q2") *
         product(1, m, [](int i) { return MultiPoly(1) - mono(1, {{"q1", static_cast<std::uint32_t>(i)}}); });
}

MultiPoly signed_maj_des_rhs(int m, const IndexSet& J) {
  MultiPoly r = product(1, m, [&](int i) {
    if (J.contains(2 * i - 1)) return MultiPoly(1);
    return MultiPoly(1) - mono(1, {{"x", 1}, {"q", static_cast<std::uint32_t>(2 * i - 1)}});
  });
  return r * quotient_maj_des(m, even_half(J), "q", "x", 2);
}

MultiPoly odd_quotient_rhs(int m) { return quotient_maj_des(m, IndexSet(Interval{1, m}), "q2", "x2", 1); }

MultiPoly trivial_B_odd_rhs(int n) {
  return MultiPoly(half_fact(n, n / 2)) * pow(MultiPoly(1) + mono(1, {{"x", 1}, {"z", 1}}), p_parity(n + 1)) *
         product(1, n / 2, factor_3);
}

MultiPoly trivial_B_even_rhs(int n) {
  return MultiPoly(half_fact(n, (n - 1) / 2)) * (MultiPoly(1) + var("y")) *
         pow(MultiPoly(1) + mono(1, {{"x", 1}, {"z", 1}}), p_parity(n)) * product(1, (n - 1) / 2, factor_3);
}

MultiPoly trivial_D_odd_rhs(int n) {
  const MultiPoly edge = MultiPoly(1) + mono(2, {{"z", 1}, {"x", 1}}) +
                         mono(1, {{"y", 1}, {"x", static_cast<std::uint32_t>(n)}});
  return MultiPoly(half_fact(n, n / 2)) * pow(edge, p_parity(n)) * product(1, (n - 1) / 2, factor_3);
}

namespace {
MultiPoly trivial_D_even_with(int n, int edge_exponent) {
  const MultiPoly edge = MultiPoly(1) + mono(2, {{"z", 1}, {"x", 1}}) +
                         mono(1, {{"y", 1}, {"x", static_cast<std::uint32_t>(edge_exponent)}});
  return MultiPoly(half_fact(n, (n - 1) / 2)) * (MultiPoly(1) + var("y")) * pow(edge, p_parity(n + 1)) *
         product(1, (n - 2) / 2, factor_3);
}
}  // namespace

MultiPoly trivial_D_even_rhs(int n) { return trivial_D_even_with(n, 2 * (n / 2)); }
MultiPoly trivial_D_even_printed(int n) { return trivial_D_even_with(n, n); }

MultiPoly evenneg_odd_rhs(int n, const IndexSet& S) {
  if (n % 2 != 0) throw std::invalid_argument("evenneg needs even rank");
  const int m = n / 2;
  if (!(S.star_image(n) == S)) return {};
  const std::int64_t sign = (S.size() / 2) % 2 == 0 ? 1 : -1;
  return MultiPoly(sign * fact(m)) * product(1, m, one_minus_yx);
}

MultiPoly even_odd_neg_rhs(int n, const IndexSet& S) {
  if (n % 2 != 1) throw std::invalid_argument("even-odd-NEG needs odd rank");
  const int m = (n - 1) / 2;
  IndexSet shifted(Interval{1, std::max(1, 2 * m)});
  for (int s : S.members()) {
    if (s >= 2) shifted.insert(s - 1);
  }
  if (m == 0 ? !shifted.empty() : !(shifted.star_image(2 * m) == shifted)) return {};
  const MultiPoly base = MultiPoly(fact(m)) * product(1, m, one_minus_yx);
  if (S.contains(1)) {
    const std::int64_t sign = ((S.size() + 1) / 2) % 2 == 0 ? 1 : -1;
    return MultiPoly(sign) * var("y") * base;
  }
  const std::int64_t sign = (S.size() / 2) % 2 == 0 ? 1 : -1;
  return MultiPoly(sign) * base;
}

MultiPoly four_corner_factor(int n) {
  return MultiPoly(fact(n / 2)) * pow(MultiPoly(1) - mono(1, {{"z1", 1}, {"z2", 1}}), (n - 1) / 2) *
         product(1, n / 2, one_minus_yx);
}

MultiPoly fourcorners_rhs(int n, int sign, int eps) {
  const MultiPoly o = four_corner_factor(n);
  if (sign > 0) return MultiPoly(p_parity(eps)) * o;
  return -mono(1, {{"z1", 1}, {"z2", static_cast<std::uint32_t>(1 - eps)}}) * MultiPoly(p_parity(n + eps)) * o;
}

ClosedForm efourcorners_rhs(int n, int sign, int eps) {
  const MultiPoly o = four_corner_factor(n);
  const MultiPoly lead = pow(-mono(1, {{"y", 1}, {"z1", 1}}), eps) * MultiPoly(p_parity(n + 1));
  ClosedForm f;
  f.den = MultiPoly(1) - mono(1, {{"z1", 1}, {"z2", 1}});
  f.num = sign > 0 ? lead * o : -(lead * mono(1, {{"z1", 1}, {"z2", 1}}) * o);
  return f;
}

namespace {
MultiPoly one_minus_xz() { return MultiPoly(1) - mono(1, {{"x", 1}, {"z", 1}}); }
MultiPoly one_plus_xz() { return MultiPoly(1) + mono(1, {{"x", 1}, {"z", 1}}); }
MultiPoly one_minus_yx2(int i) { return one_minus_yx(2 * i); }
}  // namespace

MultiPoly ell_odd_rhs(int n) {
  return MultiPoly(fact(n / 2)) * pow(one_minus_xz(), (n + 1) / 2) * product(1, n / 2, one_minus_yx2);
}

MultiPoly ell_even_rhs(int n) {
  return MultiPoly(p_parity(n + 1) * fact(n / 2)) * pow(one_minus_xz(), n / 2) * product(0, n / 2, one_minus_yx2);
}

MultiPoly odmaj_odd_rhs(int n) {
  return MultiPoly(fact(n / 2)) * pow(one_minus_xz(), (n - 1) / 2) * product(1, n / 2, one_minus_yx2);
}

MultiPoly odmaj_even_rhs(int n) {
  return MultiPoly(p_parity(n + 1) * fact(n / 2)) * (MultiPoly(1) + var("y")) *
         pow(one_minus_xz(), std::max(0, (n - 2) / 2)) * product(1, n / 2, one_minus_yx2);
}

MultiPoly ell_neg_odd_rhs(int n) {
  return MultiPoly(fact(n / 2)) * pow(one_plus_xz(), p_parity(n + 1)) * pow(one_minus_xz(), n / 2) *
         product(1, n / 2, one_minus_yx2);
}

MultiPoly ell_neg_even_rhs(int n) {
  return MultiPoly(p_parity(n + 1) * fact(n / 2)) * (MultiPoly(1) + var("y")) * pow(one_minus_xz(), n / 2) *
         product(1, n / 2, one_minus_yx2);
}

MultiPoly neg_char_odd_rhs(int n) {
  return MultiPoly(half_fact(n, n / 2)) * pow(one_minus_xz(), (n + 1) / 2) * product(1, n / 2, one_minus_yx2);
}

MultiPoly neg_char_even_rhs(int n) {
  return MultiPoly(half_fact(n, (n - 1) / 2)) * pow(one_minus_xz(), n / 2) *
         product(0, (n - 1) / 2, one_minus_yx2);
}

MultiPoly s5_signed_bivariate_printed() { return parse_poly("(1+y^2)(1+x^3+x*y^4+x^4*y^4-2*x^3*y^2-2*x*y^2)"); }

MultiPoly b5_signed_bivariate_printed() {
  return parse_poly(
      "(1-x1)(1-x1*x2)^2(1+x2^2)(x1^6*x2^4 - 2*x1^4*x2^2 + x1^2*x2^4 + x1^4 - 2*x1^2*x2^2 + 1)");
}

MultiPoly s5_descent_set_printed() {
  return parse_poly(
      "1+4*x4 + 9*x3 + 6*x3*x4 +9*x2+16*x2*x4+11*x2*x3 +4*x2*x3*x4 + 4*x1 +11*x1*x4+ 16*x1*x3 + 9*x1*x3*x4 "
      "+6*x1*x2 +9*x1*x2*x4 + 4*x1*x2*x3 + x1*x2*x3*x4");
}

MultiPoly s5_odd_length_printed() { return parse_poly("1+12x+23x^2+48x^3+23x^4+12x^5+x^6"); }

ClosedForm closed_form(std::string_view id, int n, const FormParams& params) {
  auto need_J = [&]() -> const IndexSet& {
    if (!params.J) throw std::invalid_argument(std::string(id) + " needs a J parameter");
    return *params.J;
  };
  auto need_S = [&]() -> const IndexSet& {
    if (!params.S) throw std::invalid_argument(std::string(id) + " needs an S parameter");
    return *params.S;
  };
  auto need_int = [&](const std::optional<int>& v, const char* what) {
    if (!v) throw std::invalid_argument(std::string(id) + " needs " + what);
    return *v;
  };
  auto plain = [](MultiPoly p) { return ClosedForm{std::move(p), MultiPoly(1)}; };
  if (id == "thm-odd-eulerian") return odd_eulerian_rhs(n);
  if (id == "thm-even-eulerian") return even_eulerian_rhs(n);
  if (id == "cor-gessel-simion-odd") return plain(gessel_simion_odd_rhs(n));
  if (id == "cor-gessel-simion-even") return plain(gessel_simion_even_rhs(n));
  if (id == "cor-overpartition-odd") return plain(overpartition_rhs(n, n / 2, {{"x", 6}, {"q", 21}}));
  if (id == "cor-overpartition-even") return plain(overpartition_rhs(n, (n - 1) / 2, {{"x", 6}, {"q", 21}}));
  if (id == "cor-unimodal") return plain(omaj_distribution_rhs(n));
  if (id == "prop-overpartition-unimodal") return plain(overpartition_length_closed(n, need_int(params.m, "m")));
  if (id == "thm-parabolic-signed") return plain(parabolic_signed_rhs(n, need_J()));
  if (id == "cor-bivariate-even-rank") return plain(bivariate_even_rank_rhs(n));
  if (id == "cor-signed-maj-des") return plain(signed_maj_des_rhs(n, need_J()));
  if (id == "cor-odd-quotient") return plain(odd_quotient_rhs(n));
  if (id == "thm-trivial-B-odd") return plain(trivial_B_odd_rhs(n));
  if (id == "thm-trivial-B-even") return plain(trivial_B_even_rhs(n));
  if (id == "thm-trivial-D-odd") return plain(trivial_D_odd_rhs(n));
  if (id == "thm-trivial-D-even") return plain(trivial_D_even_rhs(n));
  if (id == "lemma-evenneg") return plain(evenneg_odd_rhs(n, need_S()));
  if (id == "lemma-even-odd-neg") return plain(even_odd_neg_rhs(n, need_S()));
  if (id == "thm-fourcorners") {
    return plain(fourcorners_rhs(n, need_int(params.sign, "sign"), need_int(params.eps, "eps")));
  }
  if (id == "thm-efourcorners") return efourcorners_rhs(n, need_int(params.sign, "sign"), need_int(params.eps, "eps"));
  if (id == "cor-ell-odd") return plain(ell_odd_rhs(n));
  if (id == "cor-ell-even") return plain(ell_even_rhs(n));
  if (id == "cor-ell-omaj-zero") return plain(MultiPoly());
  if (id == "cor-odmaj-odd") return plain(odmaj_odd_rhs(n));
  if (id == "cor-odmaj-even") return plain(odmaj_even_rhs(n));
  if (id == "cor-ell-neg-odd") return plain(ell_neg_odd_rhs(n));
  if (id == "cor-ell-neg-even") return plain(ell_neg_even_rhs(n));
  if (id == "thm-neg-char-odd") return plain(neg_char_odd_rhs(n));
  if (id == "thm-neg-char-even") return plain(neg_char_even_rhs(n));
  if (id == "s5-signed-bivariate") return plain(s5_signed_bivariate_printed());
  if (id == "b5-signed-bivariate") return plain(b5_signed_bivariate_printed());
  if (id == "s4-quotient-omaj") return plain(parse_poly("5q^3 +3q^2 + 3q + 1"));
  if (id == "s5-quotient-emaj") return plain(parse_poly("16q^3 + 4q^2 + 9q + 1"));
  if (id == "s3-bivariate") return plain(parse_poly("q1*q2 + 2*q1 + 2*q2 + 1"));
  if (id == "s5-descent-set-genfun") return plain(s5_descent_set_printed());
  throw std::invalid_argument("no closed form registered for '" + std::string(id) + "'");
}

}  // namespace weylstat
