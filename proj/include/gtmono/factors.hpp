#pragma once

#include "gtmono/poly.hpp"
#include "gtmono/scalars.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gtmono {

/// Dense univariate polynomial with rational coefficients, lowest power first.
struct UniPoly {
  std::vector<Rational> coeffs;

  Rational operator()(const Rational &z) const {
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
      acc = acc * z + *it;
    return acc;
  }
  Rational coefficient(std::size_t power) const {
    return power < coeffs.size() ? coeffs[power] : Rational(0);
  }
  friend bool operator==(const UniPoly &, const UniPoly &) = default;
};

/// Gegenbauer polynomial C^nu_k from its explicit finite sum.
inline UniPoly gegenbauer(const Rational &nu, unsigned k) {
  UniPoly out;
  out.coeffs.assign(k + 1, Rational(0));
  for (unsigned i = 0; 2 * i <= k; ++i) {
    const unsigned power = k - 2 * i;
    Rational term = pochhammer(nu, k - i) / (factorial(i) * factorial(power));
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, power);
    term *= Rational(two_pow);
    if (i % 2 == 1)
      term = -term;
    out.coeffs[power] = term;
  }
  return out;
}

/// Indices of the embedding factors F^{(a)}_{m,j} and X^{(a)}_{m,j}.
struct FactorSpec {
  int m = 3;
  unsigned j = 0;
  unsigned a = 0;

  void validate() const {
    if (m < 3)
      throw InvalidArgument("embedding factors need m >= 3, got m = " +
                            std::to_string(m));
  }
  unsigned degree() const { return j + a; }
};

/// F^{(a)}_{m,j} as a scalar polynomial in x_1..x_m, embedded in
/// (R^nvars, C_alg). |x|^a C(x_m/|x|) expands without radicals because only
/// powers (2 x_m)^{a-2i} |x|^{2i} occur.
inline CliffPoly embedding_factor_F(const FactorSpec &spec, int nvars, int alg_dim) {
  spec.validate();
  if (nvars < spec.m)
    throw DimensionMismatch("F factor in R^" + std::to_string(spec.m) +
                            " cannot live in R^" + std::to_string(nvars));
  const int m = spec.m;
  const unsigned a = spec.a;
  const Rational nu = make_rational(m, 2) + spec.j - 1;
  const Rational scale = pochhammer(Rational(spec.j + 1), a) /
                         pochhammer(Rational(m + 2 * static_cast<int>(spec.j) - 2), a);
  const UniPoly c = gegenbauer(nu, a);

  CliffPoly radius2(nvars, alg_dim);
  for (int i = 1; i <= m; ++i) {
    auto x = CliffPoly::variable(nvars, alg_dim, i);
    radius2 += x * x;
  }
  const CliffPoly xm = CliffPoly::variable(nvars, alg_dim, m);

  CliffPoly out(nvars, alg_dim);
  CliffPoly radius_pow = CliffPoly::scalar(nvars, alg_dim, 1);
  for (unsigned i = 0; 2 * i <= a; ++i) {
    const unsigned p = a - 2 * i;
    // c.coefficient(p) already contains the 2^p factor.
    out += power(xm, p) * radius_pow * GaussianRational(c.coefficient(p));
    radius_pow = radius_pow * radius2;
  }
  return out * GaussianRational(scale);
}

inline CliffPoly embedding_factor_F(const FactorSpec &spec) {
  return embedding_factor_F(spec, spec.m, spec.m);
}

/// X^{(a)}_{m,j} = F^{(a)}_{m,j} + (j+1)/(m+2j-1) F^{(a-1)}_{m,j+1} x_ e_m with
/// x_ = x_1 e_1 + ... + x_{m-1} e_{m-1}.
inline CliffPoly embedding_factor_X(const FactorSpec &spec, int nvars, int alg_dim) {
  spec.validate();
  if (alg_dim < spec.m)
    throw DimensionMismatch("X factor in R^" + std::to_string(spec.m) +
                            " needs coefficients in C_" + std::to_string(spec.m) +
                            " or larger");
  CliffPoly out = embedding_factor_F(spec, nvars, alg_dim);
  if (spec.a == 0)
    return out;
  FactorSpec lower{spec.m, spec.j + 1, spec.a - 1};
  const Rational ratio = make_rational(static_cast<long>(spec.j + 1),
                       static_cast<long>(spec.m + 2 * spec.j - 1));
  CliffPoly tail = embedding_factor_F(lower, nvars, alg_dim) *
                   right_multiply(vector_variable(nvars, alg_dim, spec.m - 1),
                                  Multivector::basis_vector(alg_dim, spec.m));
  return out + tail * GaussianRational(ratio);
}

inline CliffPoly embedding_factor_X(const FactorSpec &spec) {
  return embedding_factor_X(spec, spec.m, spec.m);
}

/// C^nu_{2l}(0) = (-1)^l (nu)_l / l!.
inline Rational gegenbauer_even_at_zero(const Rational &nu, unsigned l) {
  Rational v = pochhammer(nu, l) / factorial(l);
  return l % 2 == 0 ? v : Rational(-v);
}

/// Constant relating CK((x_ e_m)^a P) to X^{(a)}_{m,j} P for P monogenic of
/// degree j.
inline Rational mu_constant(const FactorSpec &spec) {
  spec.validate();
  const int m = spec.m;
  const int j = static_cast<int>(spec.j);
  const unsigned l = spec.a / 2;
  const Rational sign = (l % 2 == 0) ? Rational(1) : Rational(-1);
  if (spec.a % 2 == 0)
    return sign / gegenbauer_even_at_zero(make_rational(m, 2) + j - 1, l);
  const Rational ratio = make_rational(m + 2 * j + 2 * static_cast<int>(l) - 1, m + 2 * j - 2);
  return sign * ratio / gegenbauer_even_at_zero(make_rational(m, 2) + j, l);
}

/// The constant c with CK((x_ e_m)^a P) = c X^{(a)}_{m,j} P for the stored
/// normalization of X. It differs from mu_constant by the Pochhammer ratio
/// that normalizes F: c = mu (m+2j-2)_a / (j+1)_a.
inline Rational ck_constant(const FactorSpec &spec) {
  spec.validate();
  const int m = spec.m;
  const unsigned j = spec.j;
  return mu_constant(spec) * pochhammer(Rational(m + 2 * static_cast<int>(j) - 2), spec.a) /
         pochhammer(Rational(j + 1), spec.a);
}

} // namespace gtmono
