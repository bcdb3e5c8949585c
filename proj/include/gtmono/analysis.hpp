#pragma once

#include "gtmono/bases.hpp"
#include "gtmono/clifford.hpp"
#include "gtmono/linalg.hpp"
#include "gtmono/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gtmono {

/// Value coeff * pi^{floor(m/2)} of an integral over the unit ball in R^m.
struct ExactBallValue {
  int m = 0;
  Multivector coeff;

  int pi_power() const { return m / 2; }
  bool is_zero() const { return coeff.is_zero(); }
  friend bool operator==(const ExactBallValue &, const ExactBallValue &) = default;
};

namespace detail {

/// Gamma(h/2) = value * sqrt(pi)^{h odd} for a positive integer h.
inline Rational gamma_half_integer(unsigned h) {
  if (h % 2 == 0)
    return factorial(h / 2 - 1);
  const unsigned t = (h - 1) / 2; // Gamma(t + 1/2) = (2t)! / (4^t t!) sqrt(pi)
  mpz_class four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, t);
  return factorial(2 * t) / (Rational(four_pow) * factorial(t));
}

} // namespace detail

/// Rational r with integral_{B_m} x^alpha = r * pi^{floor(m/2)}, where
/// m = alpha.size(). Uses 2 prod Gamma((a_i+1)/2) / (Gamma((|a|+m)/2) (|a|+m)).
inline Rational ball_monomial_coefficient(const ExponentVector &alpha) {
  const unsigned m = static_cast<unsigned>(alpha.size());
  if (m == 0)
    throw InvalidArgument("ball integral needs m >= 1");
  unsigned degree = 0;
  Rational numerator(2);
  for (auto a : alpha) {
    if (a % 2 != 0)
      return Rational(0);
    numerator *= detail::gamma_half_integer(a + 1u);
    degree += a;
  }
  const unsigned h = degree + m;
  return numerator / (detail::gamma_half_integer(h) * h);
}

inline ExactBallValue monomial_ball_integral(int m, const ExponentVector &alpha) {
  if (static_cast<int>(alpha.size()) != m)
    throw DimensionMismatch("exponent vector length does not match m");
  return {m, Multivector::scalar(m, ball_monomial_coefficient(alpha))};
}

/// (P, Q) = integral over B_m of conj(P) Q.
inline ExactBallValue l2_inner(const CliffPoly &p, const CliffPoly &q) {
  p.check_same_shape(q);
  const int m = p.nvars();
  std::map<ExponentVector, Rational> cache;
  std::vector<Multivector::Term> acc;
  ExponentVector sum(m);
  for (const auto &[ea, ca] : p.terms()) {
    const Multivector left = conjugate(ca);
    for (const auto &[eb, cb] : q.terms()) {
      bool odd = false;
      for (int i = 0; i < m; ++i) {
        sum[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
        odd = odd || (sum[i] % 2 != 0);
      }
      if (odd)
        continue;
      auto it = cache.find(sum);
      if (it == cache.end())
        it = cache.emplace(sum, ball_monomial_coefficient(sum)).first;
      const GaussianRational weight(it->second);
      Multivector product = left * cb;
      for (auto &term : product.terms())
        acc.emplace_back(term.first, term.second * weight);
    }
  }
  return {m, Multivector::from_terms(p.algebra_dimension(), std::move(acc))};
}

/// sum_alpha alpha! conj(a_alpha) b_alpha.
inline Multivector fischer_inner(const CliffPoly &p, const CliffPoly &q) {
  p.check_same_shape(q);
  Multivector out(p.algebra_dimension());
  for (const auto &[e, a] : p.terms()) {
    auto it = q.terms().find(e);
    if (it == q.terms().end())
      continue;
    Rational weight(1);
    for (auto power : e)
      weight *= factorial(power);
    out += (conjugate(a) * it->second) * GaussianRational(weight);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generalized Taylor expansion.

enum class SpaceKind { harmonic, clifford, spinor };

inline std::string to_string(SpaceKind kind) {
  switch (kind) {
  case SpaceKind::harmonic:
    return "harmonic";
  case SpaceKind::clifford:
    return "clifford";
  case SpaceKind::spinor:
    return "spinor";
  }
  return "?";
}

struct ExpansionContext {
  int m = 3;
  Chirality chirality = Chirality::plus;
};

using BasisLabel = std::variant<HarmLabel, MonoLabel>;

struct TaylorEntry {
  unsigned k = 0;
  BasisLabel mu;
  std::optional<SpinLabel> nu;
  /// Complex scalar for harmonic and spinor kinds, full multivector for the
  /// Clifford kind (where it multiplies the basis element from the right).
  Multivector coeff;

  friend bool operator==(const TaylorEntry &, const TaylorEntry &) = default;
};

/// Nonzero coefficients, ordered by degree and then by label enumeration.
struct TaylorTable {
  std::vector<TaylorEntry> entries;
  friend bool operator==(const TaylorTable &, const TaylorTable &) = default;
};

inline std::string label_to_string(unsigned k, const BasisLabel &mu) {
  return std::visit([k](const auto &l) { return label_to_string(k, l); }, mu);
}

class NotInSpace : public Error {
public:
  using Error::Error;
};

namespace detail {

/// d_{x_m}^{k-k_{m-1}} ... d_{x_3}^{k_3-k_2} then `lowest` k_2 times, where
/// level(r) = k_r for 2 <= r <= m-1.
template <typename Label, typename Lowest>
CliffPoly apply_derivative_chain(CliffPoly g, int m, unsigned k, const Label &mu,
                                 Lowest lowest) {
  for (int r = m; r >= 3 && !g.is_zero(); --r) {
    const unsigned upper = r == m ? k : mu.level(r);
    const unsigned lower = mu.level(r - 1);
    for (unsigned t = 0; t < upper - lower && !g.is_zero(); ++t)
      g = partial_derivative(g, r);
  }
  for (unsigned t = 0; t < mu.level(2) && !g.is_zero(); ++t)
    g = lowest(g);
  return g;
}

inline void check_context(const CliffPoly &g, const ExpansionContext &ctx) {
  if (ctx.m < 3)
    throw InvalidArgument("expansions need m >= 3");
  if (g.nvars() != ctx.m)
    throw DimensionMismatch("polynomial has " + std::to_string(g.nvars()) +
                            " variables, expansion context m = " +
                            std::to_string(ctx.m));
}

} // namespace detail

/// Derivative chain of the Appell property: d_s^{k_2} d_3^{k_3-k_2} ... d_m^{k-k_{m-1}} g.
inline CliffPoly harmonic_chain(const CliffPoly &g, int m, unsigned k, const HarmLabel &mu) {
  const int sign = mu.sign();
  return detail::apply_derivative_chain(g, m, k, mu, [sign](const CliffPoly &p) {
    return partial_complex(p, sign);
  });
}

/// Same chain with d_12 in place of d_s.
inline CliffPoly clifford_chain(const CliffPoly &g, int m, unsigned k, const MonoLabel &mu) {
  return detail::apply_derivative_chain(g, m, k, mu,
                                        [](const CliffPoly &p) { return partial_12(p); });
}

/// Chain with d_+ or d_- chosen by the last sign of nu.
inline CliffPoly spinor_chain(const CliffPoly &g, int m, unsigned k, const MonoLabel &mu,
                              const SpinLabel &nu) {
  const int sign = nu.last_plus() ? 1 : -1;
  return detail::apply_derivative_chain(g, m, k, mu, [sign](const CliffPoly &p) {
    return partial_complex(p, sign);
  });
}

/// g = sum_nu g^nu v^nu for spinor-valued g; throws NotInSpace otherwise.
inline std::map<SpinLabel, CliffPoly>
split_spinor_polynomial(const CliffPoly &g, const std::map<SpinLabel, Multivector> &gens) {
  std::map<SpinLabel, CliffPoly> out;
  for (const auto &[nu, v] : gens)
    out.emplace(nu, CliffPoly(g.nvars(), g.algebra_dimension()));
  for (const auto &[e, c] : g.terms()) {
    std::map<SpinLabel, GaussianRational> parts;
    try {
      parts = spinor_components(c, gens);
    } catch (const InvalidArgument &) {
      throw NotInSpace("input values are not spinor-valued");
    }
    for (const auto &[nu, z] : parts)
      if (!z.is_zero())
        out.at(nu).add_term(e, Multivector::scalar(g.algebra_dimension(), z));
  }
  return out;
}

namespace detail {

struct TaylorSlot {
  BasisLabel mu;
  std::optional<SpinLabel> nu;
  Multivector generator{0};
  std::vector<unsigned> levels;
};

/// Labels of degree k in enumeration order.
inline std::vector<TaylorSlot> taylor_slots(SpaceKind kind, int m, unsigned k,
                                            const std::map<SpinLabel, Multivector> &gens) {
  std::vector<TaylorSlot> out;
  if (kind == SpaceKind::harmonic) {
    for (const auto &mu : enumerate_harmonic_labels(m, k)) {
      std::vector<unsigned> levels;
      for (int c : mu.chain)
        levels.push_back(static_cast<unsigned>(std::abs(c)));
      out.push_back({mu, std::nullopt, Multivector(0), std::move(levels)});
    }
    return out;
  }
  for (const auto &mu : enumerate_monogenic_labels(m, k)) {
    if (kind == SpaceKind::clifford)
      out.push_back({mu, std::nullopt, Multivector(0), mu.chain});
    else
      for (const auto &[nu, v] : gens)
        out.push_back({mu, nu, v, mu.chain});
  }
  return out;
}

/// (1/k!) chain(g) at 0 for a homogeneous g of degree k.
inline Multivector chain_coefficient(const CliffPoly &gk, SpaceKind kind, int m, unsigned k,
                                     const TaylorSlot &slot,
                                     const std::map<SpinLabel, Multivector> &gens) {
  const GaussianRational inv_kfact(Rational(1 / factorial(k)));
  switch (kind) {
  case SpaceKind::harmonic:
    return constant_term(harmonic_chain(gk, m, k, std::get<HarmLabel>(slot.mu))) * inv_kfact;
  case SpaceKind::clifford:
    return constant_term(clifford_chain(gk, m, k, std::get<MonoLabel>(slot.mu))) * inv_kfact;
  case SpaceKind::spinor: {
    const CliffPoly component = split_spinor_polynomial(gk, gens).at(*slot.nu);
    return constant_term(spinor_chain(component, m, k, std::get<MonoLabel>(slot.mu), *slot.nu)) *
           inv_kfact;
  }
  }
  return Multivector(gk.algebra_dimension());
}

/// Basis element times its coefficient, on the side the expansion uses.
inline CliffPoly weighted_element(SpaceKind kind, int m, unsigned k, const TaylorSlot &slot,
                                  int alg, const Multivector &t) {
  switch (kind) {
  case SpaceKind::harmonic:
    return left_multiply(t, harmonic_element(m, k, std::get<HarmLabel>(slot.mu), m, alg));
  case SpaceKind::clifford:
    return right_multiply(monogenic_element(m, k, std::get<MonoLabel>(slot.mu), m, alg), t);
  case SpaceKind::spinor:
    return spinor_element(m, k, std::get<MonoLabel>(slot.mu), slot.generator) * t.scalar_part();
  }
  return CliffPoly(m, alg);
}

inline int checked_algebra(const CliffPoly &g, SpaceKind kind, const ExpansionContext &ctx) {
  const int m = ctx.m;
  if (kind == SpaceKind::harmonic) {
    if (!is_harmonic(g))
      throw NotInSpace("input fails harmonicity");
    return g.algebra_dimension();
  }
  if (!is_monogenic(g))
    throw NotInSpace("input fails monogenicity");
  if (kind == SpaceKind::clifford) {
    if (g.algebra_dimension() < m)
      throw DimensionMismatch("Clifford expansion needs coefficients in C_m");
    return g.algebra_dimension();
  }
  if (g.algebra_dimension() != spinor_algebra_dimension(m))
    throw DimensionMismatch("spinor-valued polynomials on R^" + std::to_string(m) +
                            " take values in C_" +
                            std::to_string(spinor_algebra_dimension(m)));
  split_spinor_polynomial(g, spinor_generators(m, ctx.chirality));
  return g.algebra_dimension();
}

inline void push_nonzero(TaylorTable &table, unsigned k, const std::vector<TaylorSlot> &slots,
                         const std::vector<Multivector> &coeffs) {
  for (std::size_t i = 0; i < slots.size(); ++i)
    if (!coeffs[i].is_zero())
      table.entries.push_back({k, slots[i].mu, slots[i].nu, coeffs[i]});
}

} // namespace detail

/// The derivative chain read off label by label with no correction. On basis
/// elements this is exact for m = 3; for m >= 4 the chain of a label also
/// sees basis elements whose level vector is lexicographically smaller.
inline TaylorTable chain_coefficients(const CliffPoly &g, SpaceKind kind,
                                      const ExpansionContext &ctx) {
  detail::check_context(g, ctx);
  const int alg = detail::checked_algebra(g, kind, ctx);
  const auto gens = kind == SpaceKind::spinor ? spinor_generators(ctx.m, ctx.chirality)
                                              : std::map<SpinLabel, Multivector>{};
  TaylorTable table;
  for (int d = 0; d <= g.degree(); ++d) {
    const unsigned k = static_cast<unsigned>(d);
    const CliffPoly gk = g.homogeneous_part(k);
    if (gk.is_zero())
      continue;
    const auto slots = detail::taylor_slots(kind, ctx.m, k, gens);
    std::vector<Multivector> coeffs(slots.size(), Multivector(alg));
    for (std::size_t i = 0; i < slots.size(); ++i)
      coeffs[i] = detail::chain_coefficient(gk, kind, ctx.m, k, slots[i], gens);
    detail::push_nonzero(table, k, slots, coeffs);
  }
  return table;
}

/// Generalized Taylor coefficients. The chain of a label annihilates every
/// basis element with a larger level vector and returns 1 on its own, so
/// labels are visited in increasing level order and each found term is
/// removed from the remainder before the next chain is applied.
inline TaylorTable taylor_expand(const CliffPoly &g, SpaceKind kind,
                                 const ExpansionContext &ctx) {
  detail::check_context(g, ctx);
  const int alg = detail::checked_algebra(g, kind, ctx);
  const auto gens = kind == SpaceKind::spinor ? spinor_generators(ctx.m, ctx.chirality)
                                              : std::map<SpinLabel, Multivector>{};
  TaylorTable table;
  for (int d = 0; d <= g.degree(); ++d) {
    const unsigned k = static_cast<unsigned>(d);
    CliffPoly rest = g.homogeneous_part(k);
    if (rest.is_zero())
      continue;
    const auto slots = detail::taylor_slots(kind, ctx.m, k, gens);
    std::vector<std::size_t> order(slots.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return slots[a].levels < slots[b].levels;
    });
    std::vector<Multivector> coeffs(slots.size(), Multivector(alg));
    for (std::size_t i : order) {
      if (rest.is_zero())
        break;
      const Multivector t = detail::chain_coefficient(rest, kind, ctx.m, k, slots[i], gens);
      if (t.is_zero())
        continue;
      coeffs[i] = t;
      rest -= detail::weighted_element(kind, ctx.m, k, slots[i], alg, t);
    }
    if (!rest.is_zero())
      throw NotInSpace("degree " + std::to_string(k) +
                       " part is not spanned by the basis elements");
    detail::push_nonzero(table, k, slots, coeffs);
  }
  return table;
}

/// Inverse of taylor_expand: harmonic and spinor kinds use left scalar
/// coefficients, the Clifford kind sums f_{k,mu} t on the right.
inline CliffPoly reconstruct(const TaylorTable &table, SpaceKind kind,
                             const ExpansionContext &ctx) {
  const int m = ctx.m;
  if (m < 3)
    throw InvalidArgument("expansions need m >= 3");
  int alg = kind == SpaceKind::spinor ? spinor_algebra_dimension(m) : m;
  if (!table.entries.empty())
    alg = table.entries.front().coeff.dimension();
  std::map<SpinLabel, Multivector> gens;
  if (kind == SpaceKind::spinor) {
    gens = spinor_generators(m, ctx.chirality);
    if (alg != spinor_algebra_dimension(m))
      throw DimensionMismatch("spinor coefficients must live in C_" +
                              std::to_string(spinor_algebra_dimension(m)));
  }
  CliffPoly out(m, alg);
  for (const auto &entry : table.entries) {
    if (entry.coeff.dimension() != alg)
      throw DimensionMismatch("mixed coefficient algebras in Taylor table");
    switch (kind) {
    case SpaceKind::harmonic: {
      const auto *mu = std::get_if<HarmLabel>(&entry.mu);
      if (!mu || entry.nu)
        throw InvalidArgument("harmonic table entries need a harmonic label and no spin label");
      out += left_multiply(entry.coeff, harmonic_element(m, entry.k, *mu, m, alg));
      break;
    }
    case SpaceKind::clifford: {
      const auto *mu = std::get_if<MonoLabel>(&entry.mu);
      if (!mu || entry.nu)
        throw InvalidArgument("Clifford table entries need a monogenic label and no spin label");
      out += right_multiply(monogenic_element(m, entry.k, *mu, m, alg), entry.coeff);
      break;
    }
    case SpaceKind::spinor: {
      const auto *mu = std::get_if<MonoLabel>(&entry.mu);
      if (!mu || !entry.nu)
        throw InvalidArgument("spinor table entries need a monogenic label and a spin label");
      auto it = gens.find(*entry.nu);
      if (it == gens.end())
        throw InvalidArgument("unknown spin label '" + entry.nu->signs + "'");
      if (!entry.coeff.is_scalar())
        throw InvalidArgument("spinor Taylor coefficients are complex scalars");
      out += spinor_element(m, entry.k, *mu, it->second) * entry.coeff.scalar_part();
      break;
    }
    }
  }
  return out;
}

/// Checks t_{k,mu}(g) = sum_nu t^nu_{k,mu}(g) v^nu for spinor-valued monogenic g.
inline bool coefficient_relation_check(const CliffPoly &g, const ExpansionContext &ctx) {
  const TaylorTable clifford = taylor_expand(g, SpaceKind::clifford, ctx);
  const TaylorTable spinor = taylor_expand(g, SpaceKind::spinor, ctx);
  const auto gens = spinor_generators(ctx.m, ctx.chirality);
  const int alg = g.algebra_dimension();

  std::map<std::pair<unsigned, MonoLabel>, Multivector> lhs, rhs;
  for (const auto &e : clifford.entries)
    lhs[{e.k, std::get<MonoLabel>(e.mu)}] = e.coeff;
  for (const auto &e : spinor.entries) {
    auto [it, inserted] = rhs.try_emplace({e.k, std::get<MonoLabel>(e.mu)}, Multivector(alg));
    it->second += gens.at(*e.nu) * e.coeff.scalar_part();
  }
  std::erase_if(rhs, [](const auto &kv) { return kv.second.is_zero(); });
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Brute-force dimension oracle.

inline std::vector<ExponentVector> monomials_of_degree(int nvars, unsigned k) {
  std::vector<ExponentVector> out;
  ExponentVector e(nvars, 0);
  auto rec = [&](auto &&self, int pos, unsigned remaining) -> void {
    if (pos == nvars - 1) {
      e[pos] = static_cast<std::uint16_t>(remaining);
      out.push_back(e);
      return;
    }
    for (unsigned v = remaining + 1; v-- > 0;) {
      e[pos] = static_cast<std::uint16_t>(v);
      self(self, pos + 1, remaining - v);
    }
  };
  if (nvars > 0)
    rec(rec, 0, k);
  return out;
}

/// Complex dimension of ker(Laplacian) on P_k(R^m) (harmonic) or of
/// ker(Dirac) on P_k(R^m, C_m) (monogenic), by exact rank computation.
inline std::size_t dimension_oracle(SpaceKind space, int m, unsigned k) {
  if (m < 2)
    throw InvalidArgument("dimension oracle needs m >= 2");
  CoordinateIndex coords;
  std::vector<SparseVector> images;
  const auto monomials = monomials_of_degree(m, k);
  if (space == SpaceKind::harmonic) {
    for (const auto &e : monomials) {
      CliffPoly x(m, 0);
      x.add_term(e, Multivector::scalar(0, 1));
      images.push_back(coords.vectorize(laplacian(x)));
    }
    return monomials.size() - rank_exact(images);
  }
  for (const auto &e : monomials)
    for (BladeMask blade = 0; blade < (BladeMask{1} << m); ++blade) {
      CliffPoly x(m, m);
      x.add_term(e, Multivector::blade(m, blade));
      images.push_back(coords.vectorize(dirac_left(x)));
    }
  return images.size() - rank_exact(images);
}

/// Complex dimension of ker(Dirac) on k-homogeneous polynomials on R^m with
/// values in the half-spinor space spanned by the v^nu.
inline std::size_t spinor_dimension_oracle(int m, unsigned k, Chirality chirality) {
  if (m < 2)
    throw InvalidArgument("dimension oracle needs m >= 2");
  const int alg = spinor_algebra_dimension(m);
  CoordinateIndex coords;
  std::vector<SparseVector> images;
  for (const auto &e : monomials_of_degree(m, k))
    for (const auto &[nu, v] : spinor_generators(m, chirality)) {
      CliffPoly x(m, alg);
      x.add_term(e, v);
      images.push_back(coords.vectorize(dirac_left(x)));
    }
  return images.size() - rank_exact(images);
}

} // namespace gtmono
