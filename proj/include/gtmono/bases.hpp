#pragma once

#include "gtmono/clifford.hpp"
#include "gtmono/factors.hpp"
#include "gtmono/linalg.hpp"
#include "gtmono/poly.hpp"

#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gtmono {

/// Gelfand-Tsetlin pattern (k_{m-1}, ..., k_3, s k_2) for spherical harmonics.
/// The sign s of the last entry selects the factor (x_1 - s i x_2)^{k_2};
/// +0 and -0 coincide.
struct HarmLabel {
  std::vector<int> chain;

  int k2() const { return std::abs(chain.back()); }
  /// +1 or -1; +1 when k_2 = 0.
  int sign() const { return chain.back() < 0 ? -1 : 1; }
  /// k_r for 2 <= r <= m-1 (m = chain.size() + 2).
  unsigned level(int r) const {
    const int m = static_cast<int>(chain.size()) + 2;
    return r == 2 ? static_cast<unsigned>(k2())
                  : static_cast<unsigned>(chain[m - 1 - r]);
  }
  friend auto operator<=>(const HarmLabel &, const HarmLabel &) = default;
};

/// Pattern (k_{m-1}, ..., k_2) for spherical monogenics.
struct MonoLabel {
  std::vector<unsigned> chain;

  unsigned level(int r) const {
    const int m = static_cast<int>(chain.size()) + 2;
    return chain[m - 1 - r];
  }
  friend auto operator<=>(const MonoLabel &, const MonoLabel &) = default;
};

namespace detail {

inline void check_label_dimension(int m) {
  if (m < 3)
    throw InvalidArgument("Gelfand-Tsetlin labels need m >= 3, got m = " +
                          std::to_string(m));
}

inline void descend(unsigned bound, int remaining, std::vector<unsigned> &prefix,
                    std::vector<std::vector<unsigned>> &out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (unsigned v = bound + 1; v-- > 0;) {
    prefix.push_back(v);
    descend(v, remaining - 1, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<std::vector<unsigned>> weak_chains(int length, unsigned k) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> prefix;
  descend(k, length, prefix, out);
  return out;
}

} // namespace detail

/// Patterns in N^m_k, generated with each entry running downward from its
/// bound and '+' before '-' for the last entry.
inline std::vector<HarmLabel> enumerate_harmonic_labels(int m, unsigned k) {
  detail::check_label_dimension(m);
  std::vector<HarmLabel> out;
  for (const auto &chain : detail::weak_chains(m - 2, k)) {
    HarmLabel label;
    label.chain.assign(chain.begin(), chain.end());
    out.push_back(label);
    if (chain.back() != 0) {
      label.chain.back() = -label.chain.back();
      out.push_back(std::move(label));
    }
  }
  return out;
}

/// Patterns in J^m_k in the same descending order.
inline std::vector<MonoLabel> enumerate_monogenic_labels(int m, unsigned k) {
  detail::check_label_dimension(m);
  std::vector<MonoLabel> out;
  for (auto &chain : detail::weak_chains(m - 2, k))
    out.push_back(MonoLabel{std::move(chain)});
  return out;
}

inline void validate_label(int m, unsigned k, const HarmLabel &mu) {
  detail::check_label_dimension(m);
  if (static_cast<int>(mu.chain.size()) != m - 2)
    throw InvalidArgument("harmonic label for m = " + std::to_string(m) +
                          " needs " + std::to_string(m - 2) + " entries");
  long bound = k;
  for (std::size_t i = 0; i < mu.chain.size(); ++i) {
    long v = i + 1 == mu.chain.size() ? std::abs(mu.chain[i]) : mu.chain[i];
    if (v < 0 || v > bound)
      throw InvalidArgument("harmonic label entries must satisfy k >= k_{m-1} "
                            ">= ... >= |k_2| >= 0");
    bound = v;
  }
}

inline void validate_label(int m, unsigned k, const MonoLabel &mu) {
  detail::check_label_dimension(m);
  if (static_cast<int>(mu.chain.size()) != m - 2)
    throw InvalidArgument("monogenic label for m = " + std::to_string(m) +
                          " needs " + std::to_string(m - 2) + " entries");
  unsigned bound = k;
  for (unsigned v : mu.chain) {
    if (v > bound)
      throw InvalidArgument("monogenic label entries must satisfy k >= "
                            "k_{m-1} >= ... >= k_2 >= 0");
    bound = v;
  }
}

// ---------------------------------------------------------------------------
// Label text forms: "k|k_{m-1},...,k_3,+-k_2" and "k|k_{m-1},...,k_2".

inline std::string label_to_string(unsigned k, const HarmLabel &mu) {
  std::string out = std::to_string(k) + "|";
  for (std::size_t i = 0; i < mu.chain.size(); ++i) {
    if (i)
      out += ",";
    out += std::to_string(mu.chain[i]);
  }
  return out;
}

inline std::string label_to_string(unsigned k, const MonoLabel &mu) {
  std::string out = std::to_string(k) + "|";
  for (std::size_t i = 0; i < mu.chain.size(); ++i) {
    if (i)
      out += ",";
    out += std::to_string(mu.chain[i]);
  }
  return out;
}

namespace detail {

inline std::pair<unsigned, std::vector<long>> split_label(const std::string &text) {
  auto bar = text.find('|');
  if (bar == std::string::npos)
    throw InvalidArgument("label must look like 'k|a,b,...': '" + text + "'");
  auto parse_int = [&](const std::string &s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (s.empty() || used != s.size())
      throw InvalidArgument("malformed label entry '" + s + "' in '" + text + "'");
    return v;
  };
  long k = parse_int(text.substr(0, bar));
  if (k < 0)
    throw InvalidArgument("negative degree in label '" + text + "'");
  std::vector<long> entries;
  std::stringstream rest(text.substr(bar + 1));
  std::string item;
  while (std::getline(rest, item, ','))
    entries.push_back(parse_int(item));
  return {static_cast<unsigned>(k), entries};
}

} // namespace detail

inline std::pair<unsigned, HarmLabel> parse_harmonic_label(const std::string &text,
                                                           int m) {
  auto [k, entries] = detail::split_label(text);
  HarmLabel mu;
  for (long v : entries)
    mu.chain.push_back(static_cast<int>(v));
  validate_label(m, k, mu);
  return {k, mu};
}

inline std::pair<unsigned, MonoLabel> parse_monogenic_label(const std::string &text,
                                                            int m) {
  auto [k, entries] = detail::split_label(text);
  MonoLabel mu;
  for (long v : entries) {
    if (v < 0)
      throw InvalidArgument("monogenic label entries are nonnegative: '" + text + "'");
    mu.chain.push_back(static_cast<unsigned>(v));
  }
  validate_label(m, k, mu);
  return {k, mu};
}

// ---------------------------------------------------------------------------
// Basis elements.

/// (x_1 - s i x_2)^k2, the H_k2(R^2) seed.
inline CliffPoly harmonic_plane_seed(int sign, unsigned k2, int nvars, int alg_dim) {
  CliffPoly seed = CliffPoly::variable(nvars, alg_dim, 1) +
                   CliffPoly::variable(nvars, alg_dim, 2) *
                       GaussianRational(Rational(0), Rational(-sign));
  return power(seed, k2);
}

/// (x_1 - e_12 x_2)^k2, the M_k2(R^2) seed.
inline CliffPoly monogenic_plane_seed(unsigned k2, int nvars, int alg_dim) {
  CliffPoly seed = CliffPoly::variable(nvars, alg_dim, 1) -
                   left_multiply(Multivector::blade(alg_dim, 0b11),
                                 CliffPoly::variable(nvars, alg_dim, 2));
  return power(seed, k2);
}

/// h_{k,mu} = (x_1 - s i x_2)^{k_2} prod_{r=3}^{m} F^{(k_r - k_{r-1})}_{r,k_{r-1}}.
inline CliffPoly harmonic_element(int m, unsigned k, const HarmLabel &mu,
                                  int nvars, int alg_dim) {
  validate_label(m, k, mu);
  CliffPoly out = harmonic_plane_seed(mu.sign(), mu.level(2), nvars, alg_dim);
  for (int r = 3; r <= m; ++r) {
    const unsigned upper = r == m ? k : mu.level(r);
    const unsigned lower = mu.level(r - 1);
    out = out * embedding_factor_F(FactorSpec{r, lower, upper - lower}, nvars, alg_dim);
  }
  return out;
}

inline CliffPoly harmonic_element(int m, unsigned k, const HarmLabel &mu) {
  return harmonic_element(m, k, mu, m, m);
}

/// f_{k,mu} = X^{(k-k_{m-1})}_{m,k_{m-1}} ... X^{(k_3-k_2)}_{3,k_2} (x_1 - e_12 x_2)^{k_2},
/// multiplied in exactly this order.
inline CliffPoly monogenic_element(int m, unsigned k, const MonoLabel &mu,
                                   int nvars, int alg_dim) {
  validate_label(m, k, mu);
  CliffPoly out = CliffPoly::scalar(nvars, alg_dim, 1);
  for (int r = m; r >= 3; --r) {
    const unsigned upper = r == m ? k : mu.level(r);
    const unsigned lower = mu.level(r - 1);
    out = out * embedding_factor_X(FactorSpec{r, lower, upper - lower}, nvars, alg_dim);
  }
  return out * monogenic_plane_seed(mu.level(2), nvars, alg_dim);
}

inline CliffPoly monogenic_element(int m, unsigned k, const MonoLabel &mu) {
  return monogenic_element(m, k, mu, m, m);
}

/// Coefficient algebra for spinor-valued polynomials on R^m: C_{2n}.
inline int spinor_algebra_dimension(int m) { return 2 * spinor_rank(m); }

/// f^nu_{k,mu} = f_{k,mu} v^nu.
inline CliffPoly spinor_element(int m, unsigned k, const MonoLabel &mu,
                                const Multivector &generator) {
  const int alg = spinor_algebra_dimension(m);
  if (generator.dimension() != alg)
    throw DimensionMismatch("spinor generator must live in C_" + std::to_string(alg));
  return right_multiply(monogenic_element(m, k, mu, m, alg), generator);
}

inline CliffPoly spinor_element(int m, unsigned k, const MonoLabel &mu,
                                const SpinLabel &nu, Chirality chirality) {
  auto generators = spinor_generators(m, chirality);
  auto it = generators.find(nu);
  if (it == generators.end())
    throw InvalidArgument("spin label '" + nu.signs + "' is not valid for m = " +
                          std::to_string(m));
  return spinor_element(m, k, mu, it->second);
}

// ---------------------------------------------------------------------------
// Coordinates for exact solves: (monomial, blade) -> dense id.

class CoordinateIndex {
public:
  std::size_t id(const ExponentVector &e, BladeMask mask) {
    auto [it, inserted] = ids_.try_emplace({e, mask}, ids_.size());
    return it->second;
  }
  SparseVector vectorize(const CliffPoly &p) {
    SparseVector out;
    for (const auto &[e, c] : p.terms())
      for (const auto &[mask, z] : c.terms())
        out.emplace(id(e, mask), z);
    return out;
  }

private:
  std::map<std::pair<ExponentVector, BladeMask>, std::size_t> ids_;
};

/// Right-module basis of k-homogeneous monogenics on R^d, d >= 2, with
/// coefficients in C_alg (polynomials in `nvars` >= d variables).
inline std::vector<CliffPoly> monogenic_basis(int d, unsigned k, int nvars, int alg_dim) {
  if (d == 2)
    return {monogenic_plane_seed(k, nvars, alg_dim)};
  std::vector<CliffPoly> out;
  for (const auto &mu : enumerate_monogenic_labels(d, k))
    out.push_back(monogenic_element(d, k, mu, nvars, alg_dim));
  return out;
}

/// Basis of H_k(R^d), d >= 2.
inline std::vector<CliffPoly> harmonic_basis(int d, unsigned k, int nvars, int alg_dim) {
  if (d == 2) {
    std::vector<CliffPoly> out{harmonic_plane_seed(1, k, nvars, alg_dim)};
    if (k > 0)
      out.push_back(harmonic_plane_seed(-1, k, nvars, alg_dim));
    return out;
  }
  std::vector<CliffPoly> out;
  for (const auto &mu : enumerate_harmonic_labels(d, k))
    out.push_back(harmonic_element(d, k, mu, nvars, alg_dim));
  return out;
}

/// Components P_j in H_j(R^{m-1}) with P = sum_j F^{(k-j)}_{m,j} P_j. P must be
/// scalar-valued, harmonic and k-homogeneous on R^m.
inline std::vector<CliffPoly> branch_decompose_harmonic(const CliffPoly &p, unsigned k) {
  const int m = p.nvars();
  detail::check_label_dimension(m);
  if (!p.is_homogeneous(k))
    throw InvalidArgument("input is not " + std::to_string(k) + "-homogeneous");
  if (!is_harmonic(p))
    throw InvalidArgument("input is not harmonic");
  for (const auto &[e, c] : p.terms())
    if (!c.is_scalar())
      throw InvalidArgument("branching expects a scalar-valued harmonic");
  const int alg = p.algebra_dimension();

  CoordinateIndex coords;
  std::vector<SparseVector> columns;
  std::vector<std::pair<unsigned, CliffPoly>> members; // (j, basis element on R^{m-1})
  for (unsigned j = 0; j <= k; ++j) {
    CliffPoly factor = embedding_factor_F(FactorSpec{m, j, k - j}, m, alg);
    for (auto &b : harmonic_basis(m - 1, j, m - 1, alg)) {
      columns.push_back(coords.vectorize(factor * b.embed_variables(m)));
      members.emplace_back(j, std::move(b));
    }
  }
  auto solution = solve_exact(columns, coords.vectorize(p));
  if (!solution)
    throw Error("branching system is inconsistent for a harmonic input");
  std::vector<CliffPoly> parts(k + 1, CliffPoly(m - 1, alg));
  for (std::size_t c = 0; c < members.size(); ++c)
    parts[members[c].first] += members[c].second * (*solution)[c];
  return parts;
}

/// Monogenic M_j on R^{d} (d = nvars) with P = sum_j (x_ e_{d+1})^{k-j} M_j,
/// where x_ = x_1 e_1 + ... + x_d e_d. Coefficients live in C_alg, alg > d.
inline std::vector<std::pair<unsigned, CliffPoly>> fischer_decompose(const CliffPoly &p,
                                                                     unsigned k) {
  const int d = p.nvars();
  const int alg = p.algebra_dimension();
  if (d < 2)
    throw InvalidArgument("Fischer decomposition needs at least two variables");
  if (alg < d + 1)
    throw DimensionMismatch("Fischer decomposition on R^" + std::to_string(d) +
                            " needs coefficients in C_" + std::to_string(d + 1) +
                            " or larger");
  if (!p.is_homogeneous(k))
    throw InvalidArgument("input is not " + std::to_string(k) + "-homogeneous");

  const CliffPoly xe = right_multiply(vector_variable(d, alg, d),
                                      Multivector::basis_vector(alg, d + 1));
  CoordinateIndex coords;
  std::vector<SparseVector> columns;
  struct Member {
    unsigned j;
    std::size_t basis;
    BladeMask blade;
  };
  std::vector<Member> members;
  std::vector<std::vector<CliffPoly>> bases;
  for (unsigned j = 0; j <= k; ++j) {
    bases.push_back(monogenic_basis(d, j, d, alg));
    const CliffPoly lift = power(xe, k - j);
    for (std::size_t b = 0; b < bases.back().size(); ++b) {
      const CliffPoly lifted = lift * bases.back()[b];
      for (BladeMask blade = 0; blade < (BladeMask{1} << alg); ++blade) {
        columns.push_back(
            coords.vectorize(right_multiply(lifted, Multivector::blade(alg, blade))));
        members.push_back({j, b, blade});
      }
    }
  }
  auto solution = solve_exact(columns, coords.vectorize(p));
  if (!solution)
    throw Error("Fischer system is inconsistent for a homogeneous input");
  std::vector<std::pair<unsigned, CliffPoly>> parts;
  for (unsigned j = 0; j <= k; ++j)
    parts.emplace_back(j, CliffPoly(d, alg));
  for (std::size_t c = 0; c < members.size(); ++c) {
    const auto &[j, b, blade] = members[c];
    if ((*solution)[c].is_zero())
      continue;
    parts[j].second += right_multiply(bases[j][b],
                                      Multivector::blade(alg, blade, (*solution)[c]));
  }
  return parts;
}

} // namespace gtmono
