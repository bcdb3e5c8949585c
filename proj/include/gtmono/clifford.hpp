#pragma once

#include "gtmono/linalg.hpp"
#include "gtmono/scalars.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gtmono {

/// Blade e_{i_1} ... e_{i_r} with i_1 < ... < i_r, stored as a bit mask
/// (bit i-1 set for e_i). The empty mask is the scalar blade.
using BladeMask = std::uint32_t;

inline constexpr int max_algebra_dimension = 16;

inline BladeMask blade_mask(const std::vector<int> &indices) {
  BladeMask mask = 0;
  int previous = 0;
  for (int i : indices) {
    if (i <= previous || i > max_algebra_dimension)
      throw InvalidArgument("blade indices must be strictly increasing in 1.." +
                            std::to_string(max_algebra_dimension));
    mask |= BladeMask{1} << (i - 1);
    previous = i;
  }
  return mask;
}

inline std::vector<int> blade_indices(BladeMask mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

inline int blade_grade(BladeMask mask) { return std::popcount(mask); }

/// Lexicographic order on the index lists: (), (1), (1,2), (1,2,3), (1,3), (2)...
inline bool blade_lex_less(BladeMask a, BladeMask b) {
  while (a != 0 && b != 0) {
    int ia = std::countr_zero(a), ib = std::countr_zero(b);
    if (ia != ib)
      return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

/// Sign of e_A e_B = sign * e_{A xor B} for e_j^2 = -1.
inline int blade_product_sign(BladeMask a, BladeMask b) {
  int swaps = 0;
  for (BladeMask t = a >> 1; t != 0; t >>= 1)
    swaps += std::popcount(t & b);
  swaps += std::popcount(a & b);
  return (swaps & 1) ? -1 : 1;
}

/// Element of the complex Clifford algebra C_m, sparse and canonical:
/// terms sorted by mask, no zero coefficients.
class Multivector {
public:
  using Term = std::pair<BladeMask, GaussianRational>;

  Multivector() = default;
  explicit Multivector(int dim) : dim_(check_dim(dim)) {}

  static Multivector scalar(int dim, GaussianRational c) {
    return blade(dim, 0, std::move(c));
  }
  static Multivector blade(int dim, BladeMask mask, GaussianRational c = 1) {
    Multivector out(dim);
    if (dim < 32 && (mask >> dim) != 0)
      throw InvalidArgument("blade index exceeds algebra dimension " +
                            std::to_string(dim));
    if (!c.is_zero())
      out.terms_.emplace_back(mask, std::move(c));
    return out;
  }
  /// e_j, 1-based.
  static Multivector basis_vector(int dim, int j) {
    if (j < 1 || j > dim)
      throw InvalidArgument("basis vector e" + std::to_string(j) +
                            " outside C_" + std::to_string(dim));
    return blade(dim, BladeMask{1} << (j - 1));
  }

  int dimension() const { return dim_; }
  const std::vector<Term> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GaussianRational coefficient(BladeMask mask) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), mask,
        [](const Term &t, BladeMask m) { return t.first < m; });
    if (it != terms_.end() && it->first == mask)
      return it->second;
    return {};
  }
  GaussianRational scalar_part() const { return coefficient(0); }
  bool is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
  }

  /// Same element viewed inside C_dim for dim >= dimension().
  Multivector embed(int dim) const {
    if (dim < dim_)
      throw DimensionMismatch("cannot embed C_" + std::to_string(dim_) +
                              " into C_" + std::to_string(dim));
    Multivector out = *this;
    out.dim_ = dim;
    return out;
  }

  Multivector operator-() const {
    Multivector out = *this;
    for (auto &t : out.terms_)
      t.second = -t.second;
    return out;
  }

  Multivector &operator+=(const Multivector &o) { return *this = merge(*this, o, false); }
  Multivector &operator-=(const Multivector &o) { return *this = merge(*this, o, true); }

  Multivector &operator*=(const GaussianRational &c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto &t : terms_)
      t.second *= c;
    return *this;
  }

  friend Multivector operator+(const Multivector &a, const Multivector &b) {
    return merge(a, b, false);
  }
  friend Multivector operator-(const Multivector &a, const Multivector &b) {
    return merge(a, b, true);
  }
  friend Multivector operator*(Multivector a, const GaussianRational &c) {
    return a *= c;
  }
  friend Multivector operator*(const GaussianRational &c, Multivector a) {
    return a *= c;
  }
  friend Multivector operator*(const Multivector &a, const Multivector &b);

  friend bool operator==(const Multivector &a, const Multivector &b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  /// Builds from unsorted terms, combining duplicates and dropping zeros.
  static Multivector from_terms(int dim, std::vector<Term> terms) {
    Multivector out(dim);
    std::sort(terms.begin(), terms.end(),
              [](const Term &x, const Term &y) { return x.first < y.first; });
    for (auto &t : terms) {
      if (dim < 32 && (t.first >> dim) != 0)
        throw InvalidArgument("blade index exceeds algebra dimension " +
                              std::to_string(dim));
      if (!out.terms_.empty() && out.terms_.back().first == t.first)
        out.terms_.back().second += t.second;
      else
        out.terms_.push_back(std::move(t));
    }
    std::erase_if(out.terms_, [](const Term &t) { return t.second.is_zero(); });
    return out;
  }

private:
  static int check_dim(int dim) {
    if (dim < 0 || dim > max_algebra_dimension)
      throw InvalidArgument("algebra dimension out of range: " +
                            std::to_string(dim));
    return dim;
  }

  static Multivector merge(const Multivector &a, const Multivector &b,
                           bool subtract) {
    if (a.dim_ != b.dim_)
      throw DimensionMismatch("multivector dimensions differ: C_" +
                              std::to_string(a.dim_) + " vs C_" +
                              std::to_string(b.dim_));
    Multivector out(a.dim_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() ||
          (ia != a.terms_.end() && ia->first < ib->first)) {
        out.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        out.terms_.emplace_back(ib->first,
                                subtract ? -ib->second : ib->second);
        ++ib;
      } else {
        GaussianRational c =
            subtract ? ia->second - ib->second : ia->second + ib->second;
        if (!c.is_zero())
          out.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    return out;
  }

  int dim_ = 0;
  std::vector<Term> terms_;
};

inline Multivector geometric_product(const Multivector &a, const Multivector &b) {
  if (a.dimension() != b.dimension())
    throw DimensionMismatch("multivector dimensions differ: C_" +
                            std::to_string(a.dimension()) + " vs C_" +
                            std::to_string(b.dimension()));
  std::vector<Multivector::Term> raw;
  raw.reserve(a.terms().size() * b.terms().size());
  for (const auto &[ma, ca] : a.terms())
    for (const auto &[mb, cb] : b.terms()) {
      GaussianRational c = ca * cb;
      if (blade_product_sign(ma, mb) < 0)
        c = -c;
      raw.emplace_back(ma ^ mb, std::move(c));
    }
  return Multivector::from_terms(a.dimension(), std::move(raw));
}

inline Multivector operator*(const Multivector &a, const Multivector &b) {
  return geometric_product(a, b);
}

/// Anti-automorphism with conj(e_j) = -e_j, composed with complex
/// conjugation of the coefficients.
inline Multivector conjugate(const Multivector &a) {
  std::vector<Multivector::Term> out;
  out.reserve(a.terms().size());
  for (const auto &[mask, c] : a.terms()) {
    int r = blade_grade(mask);
    GaussianRational z = c.conj();
    if (((r * (r + 1) / 2) & 1) != 0)
      z = -z;
    out.emplace_back(mask, std::move(z));
  }
  return Multivector::from_terms(a.dimension(), std::move(out));
}

inline std::string to_string(const Multivector &a) {
  if (a.is_zero())
    return "0";
  std::vector<Multivector::Term> sorted = a.terms();
  std::sort(sorted.begin(), sorted.end(), [](const auto &x, const auto &y) {
    return blade_lex_less(x.first, y.first);
  });
  std::string out;
  for (const auto &[mask, c] : sorted) {
    if (!out.empty())
      out += " + ";
    out += to_string(c);
    if (mask != 0) {
      out += "*e";
      for (int i : blade_indices(mask))
        out += std::to_string(i);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spinor realisation inside C_{2n}.

enum class Chirality { plus, minus };

inline char chirality_char(Chirality c) { return c == Chirality::plus ? '+' : '-'; }

/// Sign sequence nu; '+' sorts before '-'.
struct SpinLabel {
  std::string signs;

  friend auto operator<=>(const SpinLabel &, const SpinLabel &) = default;
  bool last_plus() const { return signs.empty() || signs.back() == '+'; }
};

inline SpinLabel parse_spin_label(const std::string &text) {
  for (char c : text)
    if (c != '+' && c != '-')
      throw InvalidArgument("spin label must consist of '+' and '-': '" +
                            text + "'");
  return SpinLabel{text};
}

/// n such that m = 2n or m = 2n - 1.
inline int spinor_rank(int m) { return (m + 1) / 2; }

struct SpinorFrame {
  int n = 0;
  std::vector<Multivector> w;         ///< w_j = (e_{2j-1} + i e_{2j}) / 2
  std::vector<Multivector> w_bar;     ///< (-e_{2j-1} + i e_{2j}) / 2
  std::vector<Multivector> idempotent; ///< I_j = w_bar_j w_j
  Multivector I;                      ///< I_1 ... I_n
  Multivector theta;                  ///< (-i)^n e_1 ... e_{2n}
};

inline SpinorFrame spinor_frame(int n) {
  if (n < 1 || 2 * n > max_algebra_dimension)
    throw InvalidArgument("spinor frame needs 1 <= n <= " +
                          std::to_string(max_algebra_dimension / 2));
  const int dim = 2 * n;
  const GaussianRational half(make_rational(1, 2));
  const GaussianRational i_half(Rational(0), make_rational(1, 2));
  SpinorFrame f;
  f.n = n;
  f.I = Multivector::scalar(dim, 1);
  for (int j = 1; j <= n; ++j) {
    auto odd = Multivector::basis_vector(dim, 2 * j - 1);
    auto even = Multivector::basis_vector(dim, 2 * j);
    f.w.push_back(odd * half + even * i_half);
    f.w_bar.push_back(-(odd * half) + even * i_half);
    f.idempotent.push_back(f.w_bar.back() * f.w.back());
    f.I = f.I * f.idempotent.back();
  }
  GaussianRational phase = 1;
  for (int j = 0; j < n; ++j)
    phase *= GaussianRational(Rational(0), Rational(-1));
  f.theta = Multivector::blade(dim, (BladeMask{1} << dim) - 1, phase);
  return f;
}

inline std::vector<SpinLabel> enumerate_spin_labels(int m) {
  if (m < 3)
    throw InvalidArgument("spin labels need m >= 3");
  const int len = spinor_rank(m) - 1;
  std::vector<SpinLabel> out;
  for (unsigned bits = 0; bits < (1u << len); ++bits) {
    std::string s(len, '+');
    for (int p = 0; p < len; ++p)
      if (bits & (1u << (len - 1 - p)))
        s[p] = '-';
    out.push_back(SpinLabel{s});
  }
  return out;
}

/// Chirality actually realised for dimension m: odd m always uses S^+_{2n}.
inline Chirality effective_chirality(int m, Chirality requested) {
  return (m % 2 == 1) ? Chirality::plus : requested;
}

/// Generators v^nu of the one-dimensional pieces S^nu of S = S^s_{2n}.
/// Reading nu with s prepended, each sign change at position j contributes a
/// left factor w_{n-j+1}; a final '-' adds a further left factor w_1.
inline std::map<SpinLabel, Multivector> spinor_generators(int m,
                                                          Chirality chirality) {
  if (m < 3)
    throw InvalidArgument("spinor generators need m >= 3, got " +
                          std::to_string(m));
  const int n = spinor_rank(m);
  const SpinorFrame frame = spinor_frame(n);
  const char s = chirality_char(effective_chirality(m, chirality));
  std::map<SpinLabel, Multivector> out;
  for (const SpinLabel &nu : enumerate_spin_labels(m)) {
    Multivector v = frame.I;
    char previous = s;
    for (std::size_t j = 1; j <= nu.signs.size(); ++j) {
      if (nu.signs[j - 1] != previous)
        v = frame.w[n - j] * v;
      previous = nu.signs[j - 1];
    }
    if (!nu.last_plus())
      v = frame.w[0] * v;
    out.emplace(nu, std::move(v));
  }
  return out;
}

/// Coordinates of u in the basis {v^nu}; throws when u is outside their span.
inline std::map<SpinLabel, GaussianRational>
spinor_components(const Multivector &u,
                  const std::map<SpinLabel, Multivector> &generators) {
  std::map<SpinLabel, GaussianRational> out;
  if (generators.empty())
    throw InvalidArgument("empty spinor generator set");
  const int dim = generators.begin()->second.dimension();
  if (u.dimension() != dim)
    throw DimensionMismatch("spinor element lives in C_" +
                            std::to_string(u.dimension()) + ", generators in C_" +
                            std::to_string(dim));
  std::vector<SparseVector> columns;
  for (const auto &[nu, v] : generators) {
    SparseVector col;
    for (const auto &[mask, c] : v.terms())
      col.emplace(mask, c);
    columns.push_back(std::move(col));
  }
  SparseVector rhs;
  for (const auto &[mask, c] : u.terms())
    rhs.emplace(mask, c);
  auto solution = solve_exact(columns, rhs);
  if (!solution)
    throw InvalidArgument("element is not in the spinor space");
  std::size_t idx = 0;
  for (const auto &[nu, v] : generators)
    out.emplace(nu, (*solution)[idx++]);
  return out;
}

} // namespace gtmono
