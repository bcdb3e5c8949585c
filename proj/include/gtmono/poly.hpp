#pragma once

#include "gtmono/clifford.hpp"
#include "gtmono/scalars.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gtmono {

/// Exponents of x_1..x_n in a monomial.
using ExponentVector = std::vector<std::uint16_t>;

inline unsigned total_degree(const ExponentVector &e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

/// Graded lexicographic order: lower total degree first, then larger powers
/// of earlier variables first (x1^2 < x1*x2 < x2^2).
struct GradedLexLess {
  bool operator()(const ExponentVector &a, const ExponentVector &b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db)
      return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

/// Polynomial in x_1..x_nvars with coefficients in C_alg. The coefficient
/// algebra may be larger than the variable count (odd-dimensional spinors).
class CliffPoly {
public:
  using TermMap = std::map<ExponentVector, Multivector, GradedLexLess>;

  CliffPoly() = default;
  CliffPoly(int nvars, int alg_dim) : nvars_(nvars), alg_(alg_dim) {
    if (nvars < 0 || alg_dim < 0 || alg_dim > max_algebra_dimension)
      throw InvalidArgument("invalid polynomial dimensions");
  }

  static CliffPoly constant(int nvars, const Multivector &c) {
    CliffPoly p(nvars, c.dimension());
    p.add_term(ExponentVector(nvars, 0), c);
    return p;
  }
  static CliffPoly scalar(int nvars, int alg_dim, GaussianRational c) {
    return constant(nvars, Multivector::scalar(alg_dim, std::move(c)));
  }
  /// x_i, 1-based.
  static CliffPoly variable(int nvars, int alg_dim, int i) {
    if (i < 1 || i > nvars)
      throw InvalidArgument("variable x" + std::to_string(i) + " outside R^" +
                            std::to_string(nvars));
    ExponentVector e(nvars, 0);
    e[i - 1] = 1;
    CliffPoly p(nvars, alg_dim);
    p.add_term(std::move(e), Multivector::scalar(alg_dim, 1));
    return p;
  }

  int nvars() const { return nvars_; }
  int algebra_dimension() const { return alg_; }
  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(ExponentVector e, const Multivector &c) {
    if (static_cast<int>(e.size()) != nvars_)
      throw DimensionMismatch("exponent vector length " +
                              std::to_string(e.size()) + " != " +
                              std::to_string(nvars_));
    if (c.dimension() != alg_)
      throw DimensionMismatch("coefficient in C_" +
                              std::to_string(c.dimension()) +
                              ", polynomial over C_" + std::to_string(alg_));
    if (c.is_zero())
      return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

  Multivector coefficient(const ExponentVector &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Multivector(alg_) : it->second;
  }

  /// -1 for the zero polynomial.
  int degree() const {
    return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.rbegin()->first));
  }
  bool is_homogeneous(unsigned k) const {
    return std::all_of(terms_.begin(), terms_.end(), [k](const auto &t) {
      return total_degree(t.first) == k;
    });
  }
  CliffPoly homogeneous_part(unsigned k) const {
    CliffPoly out(nvars_, alg_);
    for (const auto &[e, c] : terms_)
      if (total_degree(e) == k)
        out.terms_.emplace(e, c);
    return out;
  }

  /// Same polynomial with coefficients viewed in C_alg_dim.
  CliffPoly embed_algebra(int alg_dim) const {
    CliffPoly out(nvars_, alg_dim);
    for (const auto &[e, c] : terms_)
      out.terms_.emplace(e, c.embed(alg_dim));
    return out;
  }
  /// Same polynomial regarded as a function of nvars >= nvars() variables.
  CliffPoly embed_variables(int nvars) const {
    if (nvars < nvars_)
      throw DimensionMismatch("cannot drop variables");
    CliffPoly out(nvars, alg_);
    for (const auto &[e, c] : terms_) {
      ExponentVector wide = e;
      wide.resize(nvars, 0);
      out.terms_.emplace(std::move(wide), c);
    }
    return out;
  }

  CliffPoly operator-() const {
    CliffPoly out = *this;
    for (auto &[e, c] : out.terms_)
      c = -c;
    return out;
  }
  CliffPoly &operator+=(const CliffPoly &o) {
    check_same_shape(o);
    for (const auto &[e, c] : o.terms_)
      add_term(e, c);
    return *this;
  }
  CliffPoly &operator-=(const CliffPoly &o) { return *this += -o; }
  CliffPoly &operator*=(const GaussianRational &s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto &[e, c] : terms_)
      c *= s;
    return *this;
  }

  friend CliffPoly operator+(CliffPoly a, const CliffPoly &b) { return a += b; }
  friend CliffPoly operator-(CliffPoly a, const CliffPoly &b) { return a -= b; }
  friend CliffPoly operator*(CliffPoly a, const GaussianRational &s) { return a *= s; }
  friend CliffPoly operator*(const GaussianRational &s, CliffPoly a) { return a *= s; }
  friend bool operator==(const CliffPoly &a, const CliffPoly &b) {
    return a.nvars_ == b.nvars_ && a.alg_ == b.alg_ && a.terms_ == b.terms_;
  }

  void check_same_shape(const CliffPoly &o) const {
    if (nvars_ != o.nvars_ || alg_ != o.alg_)
      throw DimensionMismatch(
          "polynomial shapes differ: (R^" + std::to_string(nvars_) + ", C_" +
          std::to_string(alg_) + ") vs (R^" + std::to_string(o.nvars_) +
          ", C_" + std::to_string(o.alg_) + ")");
  }

private:
  friend CliffPoly poly_mul(const CliffPoly &, const CliffPoly &);

  int nvars_ = 0;
  int alg_ = 0;
  TermMap terms_;
};

/// Product with p's coefficients on the left of q's.
inline CliffPoly poly_mul(const CliffPoly &p, const CliffPoly &q) {
  p.check_same_shape(q);
  CliffPoly out(p.nvars(), p.algebra_dimension());
  ExponentVector e(p.nvars());
  for (const auto &[ep, cp] : p.terms())
    for (const auto &[eq, cq] : q.terms()) {
      for (int i = 0; i < p.nvars(); ++i)
        e[i] = static_cast<std::uint16_t>(ep[i] + eq[i]);
      out.add_term(e, cp * cq);
    }
  return out;
}

inline CliffPoly operator*(const CliffPoly &p, const CliffPoly &q) {
  return poly_mul(p, q);
}

inline CliffPoly left_multiply(const Multivector &a, const CliffPoly &p) {
  CliffPoly out(p.nvars(), p.algebra_dimension());
  for (const auto &[e, c] : p.terms())
    out.add_term(e, a * c);
  return out;
}

inline CliffPoly right_multiply(const CliffPoly &p, const Multivector &a) {
  CliffPoly out(p.nvars(), p.algebra_dimension());
  for (const auto &[e, c] : p.terms())
    out.add_term(e, c * a);
  return out;
}

inline CliffPoly power(const CliffPoly &p, unsigned k) {
  CliffPoly out = CliffPoly::scalar(p.nvars(), p.algebra_dimension(), 1);
  for (unsigned t = 0; t < k; ++t)
    out = out * p;
  return out;
}

/// Formal derivative with respect to x_axis (1-based).
inline CliffPoly partial_derivative(const CliffPoly &p, int axis) {
  if (axis < 1 || axis > p.nvars())
    throw InvalidArgument("axis x" + std::to_string(axis) + " outside R^" +
                          std::to_string(p.nvars()));
  CliffPoly out(p.nvars(), p.algebra_dimension());
  for (const auto &[e, c] : p.terms()) {
    auto power = e[axis - 1];
    if (power == 0)
      continue;
    ExponentVector d = e;
    --d[axis - 1];
    out.add_term(std::move(d), c * GaussianRational(static_cast<long>(power)));
  }
  return out;
}

/// d_s = (d_1 + s i d_2) / 2 with s = +1 or -1.
inline CliffPoly partial_complex(const CliffPoly &p, int sign) {
  GaussianRational coeff(Rational(0), Rational(sign));
  CliffPoly out = partial_derivative(p, 1) + coeff * partial_derivative(p, 2);
  return out * GaussianRational(make_rational(1, 2));
}

inline CliffPoly partial_plus(const CliffPoly &p) { return partial_complex(p, 1); }
inline CliffPoly partial_minus(const CliffPoly &p) { return partial_complex(p, -1); }

/// d_12 = (d_1 + e_12 d_2) / 2, e_12 acting from the left.
inline CliffPoly partial_12(const CliffPoly &p) {
  auto e12 = Multivector::blade(p.algebra_dimension(), 0b11);
  CliffPoly out = partial_derivative(p, 1) + left_multiply(e12, partial_derivative(p, 2));
  return out * GaussianRational(make_rational(1, 2));
}

enum class DiracVars { full, leading };

/// sum_i e_i d_i p over all variables, or over x_1..x_{n-1} for `leading`.
inline CliffPoly dirac_left(const CliffPoly &p, DiracVars vars = DiracVars::full) {
  const int upto = vars == DiracVars::full ? p.nvars() : p.nvars() - 1;
  if (upto > p.algebra_dimension())
    throw DimensionMismatch("Dirac operator on R^" + std::to_string(upto) +
                            " needs C_m with m >= " + std::to_string(upto));
  CliffPoly out(p.nvars(), p.algebra_dimension());
  for (int i = 1; i <= upto; ++i)
    out += left_multiply(Multivector::basis_vector(p.algebra_dimension(), i),
                         partial_derivative(p, i));
  return out;
}

inline CliffPoly laplacian(const CliffPoly &p) {
  CliffPoly out(p.nvars(), p.algebra_dimension());
  for (int i = 1; i <= p.nvars(); ++i)
    out += partial_derivative(partial_derivative(p, i), i);
  return out;
}

inline bool is_monogenic(const CliffPoly &p) { return dirac_left(p).is_zero(); }
inline bool is_harmonic(const CliffPoly &p) { return laplacian(p).is_zero(); }

/// Cauchy-Kovalevskaya extension exp(x_m e_m D) p of a polynomial p on
/// R^{m-1}, where D is the Dirac operator in x_1..x_{m-1}.
inline CliffPoly ck_extension(const CliffPoly &p) {
  const int m = p.nvars() + 1;
  if (m > p.algebra_dimension())
    throw DimensionMismatch("CK extension to R^" + std::to_string(m) +
                            " needs coefficients in C_" + std::to_string(m) +
                            " or larger");
  CliffPoly lifted = p.embed_variables(m);
  const int alg = p.algebra_dimension();
  CliffPoly step = CliffPoly::variable(m, alg, m);
  step = left_multiply(Multivector::basis_vector(alg, m), step);
  CliffPoly sum = lifted;
  CliffPoly current = lifted;
  const int bound = p.degree() + 1;
  for (int l = 1; l <= bound && !current.is_zero(); ++l) {
    // (x_m e_m D)^l p / l!
    current = step * dirac_left(current, DiracVars::leading);
    current *= GaussianRational(make_rational(1, l));
    sum += current;
  }
  return sum;
}

/// Exact substitution x = point.
inline Multivector evaluate(const CliffPoly &p, std::span<const GaussianRational> point) {
  if (static_cast<int>(point.size()) != p.nvars())
    throw DimensionMismatch("point has " + std::to_string(point.size()) +
                            " coordinates, polynomial has " +
                            std::to_string(p.nvars()) + " variables");
  Multivector out(p.algebra_dimension());
  for (const auto &[e, c] : p.terms()) {
    GaussianRational value = 1;
    for (int i = 0; i < p.nvars(); ++i)
      for (unsigned t = 0; t < e[i]; ++t)
        value *= point[i];
    out += c * value;
  }
  return out;
}

/// Constant term p(0).
inline Multivector constant_term(const CliffPoly &p) {
  return p.coefficient(ExponentVector(p.nvars(), 0));
}

/// x_1 e_1 + ... + x_r e_r inside (R^nvars, C_alg).
inline CliffPoly vector_variable(int nvars, int alg_dim, int r) {
  CliffPoly out(nvars, alg_dim);
  for (int i = 1; i <= r; ++i)
    out += left_multiply(Multivector::basis_vector(alg_dim, i),
                         CliffPoly::variable(nvars, alg_dim, i));
  return out;
}

inline std::string to_string(const CliffPoly &p) {
  if (p.is_zero())
    return "0";
  std::string out;
  for (const auto &[e, c] : p.terms()) {
    if (!out.empty())
      out += " + ";
    out += "(" + to_string(c) + ")";
    for (int i = 0; i < p.nvars(); ++i) {
      if (e[i] == 0)
        continue;
      out += "*x" + std::to_string(i + 1);
      if (e[i] > 1)
        out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

} // namespace gtmono
