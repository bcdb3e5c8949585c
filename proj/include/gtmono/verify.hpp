#pragma once

#include "gtmono/analysis.hpp"
#include "gtmono/bases.hpp"
#include "gtmono/factors.hpp"

#include <string>
#include <vector>

namespace gtmono {

/// Outcome of one named verification: number of identities checked and a
/// message per failed one.
struct CheckReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
  void expect(bool condition, const std::string &what) {
    ++checked;
    if (!condition)
      failures.push_back(what);
  }
};

/// A basis element together with its printable label.
struct LabeledElement {
  unsigned k = 0;
  std::string mu;
  std::string nu;
  CliffPoly poly;
  // Only one of these is meaningful, depending on the space.
  HarmLabel harm;
  MonoLabel mono;
  Multivector generator;
};

inline std::vector<LabeledElement> basis_elements(SpaceKind space, int m, unsigned k,
                                                  Chirality chirality = Chirality::plus) {
  std::vector<LabeledElement> out;
  switch (space) {
  case SpaceKind::harmonic:
    for (const auto &mu : enumerate_harmonic_labels(m, k)) {
      LabeledElement e{k, label_to_string(k, mu), "", harmonic_element(m, k, mu), mu, {}, {}};
      out.push_back(std::move(e));
    }
    break;
  case SpaceKind::clifford:
    for (const auto &mu : enumerate_monogenic_labels(m, k)) {
      LabeledElement e{k, label_to_string(k, mu), "", monogenic_element(m, k, mu), {}, mu, {}};
      out.push_back(std::move(e));
    }
    break;
  case SpaceKind::spinor: {
    const auto gens = spinor_generators(m, chirality);
    for (const auto &mu : enumerate_monogenic_labels(m, k))
      for (const auto &[nu, v] : gens) {
        LabeledElement e{k, label_to_string(k, mu), nu.signs,
                         spinor_element(m, k, mu, v), {}, mu, v};
        out.push_back(std::move(e));
      }
    break;
  }
  }
  return out;
}

namespace detail {

inline std::string describe(SpaceKind space, int m, const LabeledElement &e) {
  std::string s = to_string(space) + " m=" + std::to_string(m) + " " + e.mu;
  if (!e.nu.empty())
    s += " nu=" + e.nu;
  return s;
}

inline CliffPoly chain_of(SpaceKind space, int m, const LabeledElement &e, const CliffPoly &g) {
  switch (space) {
  case SpaceKind::harmonic:
    return harmonic_chain(g, m, e.k, e.harm);
  case SpaceKind::clifford:
    return clifford_chain(g, m, e.k, e.mono);
  case SpaceKind::spinor:
    return spinor_chain(g, m, e.k, e.mono, parse_spin_label(e.nu));
  }
  return g;
}

/// Element with the same label one degree lower.
inline CliffPoly lowered(SpaceKind space, int m, const LabeledElement &e) {
  switch (space) {
  case SpaceKind::harmonic:
    return harmonic_element(m, e.k - 1, e.harm);
  case SpaceKind::clifford:
    return monogenic_element(m, e.k - 1, e.mono);
  case SpaceKind::spinor:
    return spinor_element(m, e.k - 1, e.mono, e.generator);
  }
  return e.poly;
}

inline unsigned top_level(SpaceKind space, int m, const LabeledElement &e) {
  return space == SpaceKind::harmonic ? e.harm.level(m - 1) : e.mono.level(m - 1);
}

} // namespace detail

/// Appell chains and the ladder d_{x_m} e_k = k e_{k-1} for all degrees <= k.
inline CheckReport check_appell(SpaceKind space, int m, unsigned k, Chirality chirality) {
  CheckReport report;
  for (unsigned d = 0; d <= k; ++d) {
    for (const auto &e : basis_elements(space, m, d, chirality)) {
      const CliffPoly reduced = detail::chain_of(space, m, e, e.poly);
      Multivector expected = Multivector::scalar(e.poly.algebra_dimension(),
                                                 GaussianRational(Rational(factorial(d))));
      if (space == SpaceKind::spinor)
        expected = expected * e.generator;
      report.expect(reduced == CliffPoly::constant(m, expected),
                    detail::describe(space, m, e) + ": chain differs from k!");
      const CliffPoly derivative = partial_derivative(e.poly, m);
      if (d > detail::top_level(space, m, e)) {
        report.expect(derivative ==
                          detail::lowered(space, m, e) * GaussianRational(static_cast<long>(d)),
                      detail::describe(space, m, e) + ": ladder step fails");
      } else {
        report.expect(derivative.is_zero(),
                      detail::describe(space, m, e) + ": top derivative should vanish");
      }
    }
  }
  return report;
}

inline CheckReport check_monogenicity(SpaceKind space, int m, unsigned k, Chirality chirality) {
  CheckReport report;
  for (unsigned d = 0; d <= k; ++d)
    for (const auto &e : basis_elements(space, m, d, chirality)) {
      if (space == SpaceKind::harmonic)
        report.expect(laplacian(e.poly).is_zero(),
                      detail::describe(space, m, e) + ": not harmonic");
      else
        report.expect(dirac_left(e.poly).is_zero(),
                      detail::describe(space, m, e) + ": not monogenic");
    }
  return report;
}

/// Harmonic: L2 off-diagonals vanish. Clifford: full multivector L2
/// off-diagonals vanish. Spinor: scalar part of the Fischer pairing vanishes.
inline CheckReport check_orthogonality(SpaceKind space, int m, unsigned k,
                                       Chirality chirality) {
  CheckReport report;
  std::vector<LabeledElement> all;
  for (unsigned d = 0; d <= k; ++d)
    for (auto &e : basis_elements(space, m, d, chirality))
      all.push_back(std::move(e));
  std::size_t scalar_only = 0;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b) {
      if (a == b)
        continue;
      const std::string pair = detail::describe(space, m, all[a]) + " vs " +
                               all[b].mu + (all[b].nu.empty() ? "" : " nu=" + all[b].nu);
      if (space == SpaceKind::spinor) {
        const Multivector g = fischer_inner(all[a].poly, all[b].poly);
        report.expect(g.scalar_part().is_zero(), pair + ": Fischer scalar part nonzero");
        continue;
      }
      const ExactBallValue g = l2_inner(all[a].poly, all[b].poly);
      const bool zero = g.is_zero();
      if (!zero && g.coeff.scalar_part().is_zero())
        ++scalar_only;
      report.expect(zero, pair + ": L2 off-diagonal nonzero");
    }
  if (scalar_only > 0)
    report.notes.push_back(std::to_string(scalar_only) +
                           " off-diagonal entries vanish only in the scalar part");
  return report;
}

/// CK((x_ e_m)^a P) = c X^{(a)}_{m,j} P for basis elements P of degree j on
/// R^{m-1}, a + j <= k, with c = ck_constant. Cases where the tabulated
/// mu_constant gives a different value are reported as notes.
inline CheckReport check_ck(int m, unsigned k) {
  CheckReport report;
  const CliffPoly xe = right_multiply(vector_variable(m - 1, m, m - 1),
                                      Multivector::basis_vector(m, m));
  std::size_t mu_mismatch = 0;
  for (unsigned j = 0; j <= k; ++j) {
    const auto basis = monogenic_basis(m - 1, j, m - 1, m);
    for (unsigned a = 0; a + j <= k; ++a) {
      const FactorSpec spec{m, j, a};
      const CliffPoly x_factor = embedding_factor_X(spec);
      const CliffPoly lift = power(xe, a);
      if (ck_constant(spec) != mu_constant(spec))
        ++mu_mismatch;
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const CliffPoly lhs = ck_extension(lift * basis[b]);
        const CliffPoly rhs = x_factor * basis[b].embed_variables(m) *
                              GaussianRational(ck_constant(spec));
        report.expect(lhs == rhs, "ck m=" + std::to_string(m) + " j=" + std::to_string(j) +
                                      " a=" + std::to_string(a) + " element " +
                                      std::to_string(b) + ": identity fails");
      }
    }
  }
  if (mu_mismatch > 0)
    report.notes.push_back(std::to_string(mu_mismatch) +
                           " (j, a) pairs need (m+2j-2)_a/(j+1)_a times the tabulated mu");
  return report;
}

inline CheckReport check_dimensions(SpaceKind space, int m, unsigned k, Chirality chirality) {
  CheckReport report;
  for (unsigned d = 0; d <= k; ++d) {
    const std::string where = to_string(space) + " m=" + std::to_string(m) +
                              " k=" + std::to_string(d);
    switch (space) {
    case SpaceKind::harmonic:
      report.expect(enumerate_harmonic_labels(m, d).size() ==
                        dimension_oracle(SpaceKind::harmonic, m, d),
                    where + ": label count differs from kernel dimension");
      break;
    case SpaceKind::clifford:
      report.expect(enumerate_monogenic_labels(m, d).size() * (std::size_t{1} << m) ==
                        dimension_oracle(SpaceKind::clifford, m, d),
                    where + ": module rank differs from Dirac kernel");
      break;
    case SpaceKind::spinor:
      report.expect(enumerate_monogenic_labels(m, d).size() *
                            spinor_generators(m, chirality).size() ==
                        spinor_dimension_oracle(m, d, chirality),
                    where + ": spinor count differs from Dirac kernel");
      break;
    }
  }
  return report;
}

/// Clifford coefficients equal the v^nu-weighted spinor coefficients, on
/// every single f^nu and on a fixed dense combination of them.
inline CheckReport check_coefficient_relation(int m, unsigned k, Chirality chirality) {
  CheckReport report;
  const ExpansionContext ctx{m, chirality};
  CliffPoly combination(m, spinor_algebra_dimension(m));
  long index = 0;
  for (unsigned d = 0; d <= k; ++d)
    for (const auto &e : basis_elements(SpaceKind::spinor, m, d, chirality)) {
      report.expect(coefficient_relation_check(e.poly, ctx),
                    detail::describe(SpaceKind::spinor, m, e) + ": relation fails");
      ++index;
      combination += e.poly * GaussianRational(make_rational(index, index + 1),
                                               make_rational(index % 3 - 1, 2));
    }
  report.expect(coefficient_relation_check(combination, ctx),
                "spinor m=" + std::to_string(m) + ": relation fails on combination");
  return report;
}

} // namespace gtmono
