#pragma once

#include "gtmono/analysis.hpp"
#include "gtmono/bases.hpp"
#include "gtmono/clifford.hpp"
#include "gtmono/expression.hpp"
#include "gtmono/poly.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <vector>

namespace gtmono {

// Readable gtest failure messages.
inline void PrintTo(const Multivector &a, std::ostream *os) { *os << to_string(a); }
inline void PrintTo(const CliffPoly &p, std::ostream *os) { *os << to_expression(p); }

} // namespace gtmono

namespace gtmono::testing {

/// Small rationals p/q with |p| <= 6, 1 <= q <= 5.
inline Rational random_rational(std::mt19937_64 &rng) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
  return make_rational(num(rng), den(rng));
}

inline GaussianRational random_scalar(std::mt19937_64 &rng, bool real_only = false) {
  return real_only ? GaussianRational(random_rational(rng))
                   : GaussianRational(random_rational(rng), random_rational(rng));
}

inline Multivector random_multivector(std::mt19937_64 &rng, int dim, int nterms = 4,
                                      bool real_only = false) {
  std::uniform_int_distribution<BladeMask> blade(0, (BladeMask{1} << dim) - 1);
  Multivector out(dim);
  for (int t = 0; t < nterms; ++t)
    out += Multivector::blade(dim, blade(rng), random_scalar(rng, real_only));
  return out;
}

inline CliffPoly random_poly(std::mt19937_64 &rng, int nvars, int alg, unsigned max_degree,
                             int nterms = 5, bool real_only = false) {
  std::uniform_int_distribution<int> var(0, nvars - 1);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  CliffPoly out(nvars, alg);
  for (int t = 0; t < nterms; ++t) {
    ExponentVector e(nvars, 0);
    const unsigned d = deg(rng);
    for (unsigned s = 0; s < d; ++s)
      ++e[var(rng)];
    out.add_term(e, random_multivector(rng, alg, 2, real_only));
  }
  return out;
}

inline double blade_value(const Multivector &a, BladeMask mask) {
  return to_double(a.coefficient(mask).re());
}

/// Evaluates every blade coefficient of a real-valued polynomial at x.
inline std::vector<double> evaluate_real(const CliffPoly &p, const std::vector<double> &x) {
  std::vector<double> out(std::size_t{1} << p.algebra_dimension(), 0.0);
  for (const auto &[e, c] : p.terms()) {
    double mono = 1.0;
    for (std::size_t v = 0; v < e.size(); ++v)
      mono *= std::pow(x[v], e[v]);
    for (const auto &[mask, z] : c.terms())
      out[mask] += mono * to_double(z.re());
  }
  return out;
}

struct MonteCarloEstimate {
  double mean = 0;
  double standard_error = 0;
};

/// Estimates the scalar part of the integral of conj(P) Q over the unit ball
/// by uniform sampling, for real-valued P and Q. Points come from rejection
/// sampling of the cube; the estimate is volume * sample mean.
inline MonteCarloEstimate monte_carlo_l2_scalar(const CliffPoly &p, const CliffPoly &q,
                                                std::size_t samples, std::uint64_t seed) {
  const int m = p.nvars();
  const int alg = p.algebra_dimension();
  // Scalar part of conj(a) b for real a, b is sum_A sign(A) a_A b_A where
  // sign(A) is the scalar part of conj(e_A) e_A.
  std::vector<double> sign(std::size_t{1} << alg);
  for (BladeMask mask = 0; mask < sign.size(); ++mask) {
    const Multivector b = Multivector::blade(alg, mask);
    sign[mask] = to_double((conjugate(b) * b).scalar_part().re());
  }
  const double volume = std::pow(M_PI, m / 2.0) / std::tgamma(m / 2.0 + 1);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::vector<double> x(m);
  double sum = 0, sum_sq = 0;
  for (std::size_t s = 0; s < samples;) {
    double r2 = 0;
    for (auto &c : x) {
      c = coord(rng);
      r2 += c * c;
    }
    if (r2 > 1.0)
      continue;
    const auto pv = evaluate_real(p, x);
    const auto qv = evaluate_real(q, x);
    double f = 0;
    for (std::size_t a = 0; a < pv.size(); ++a)
      f += sign[a] * pv[a] * qv[a];
    sum += f;
    sum_sq += f * f;
    ++s;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  const double variance = (sum_sq / n - mean * mean) * n / (n - 1);
  return {volume * mean, volume * std::sqrt(variance / n)};
}

inline double to_double(const ExactBallValue &v) {
  return gtmono::to_double(v.coeff.scalar_part().re()) * std::pow(M_PI, v.pi_power());
}

} // namespace gtmono::testing
