#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace gtmono {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Arbitrary precision rational. gmpxx keeps results canonical (lowest
/// terms, positive denominator) for every arithmetic operation.
using Rational = mpq_class;

/// num/den in canonical form. Two-argument mpq_class construction does not
/// canonicalise on its own.
inline Rational make_rational(long num, long den) {
  if (den == 0)
    throw InvalidArgument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Renders as "num/den"; integers keep the explicit "/1".
inline std::string to_string(const Rational &q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "num/den" or an integer "num"; surrounding whitespace is not
/// tolerated.
inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (s.empty())
      return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size())
      return false;
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    return std::string(s[0] == '+' ? s.substr(1) : s);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text))
      throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
    return Rational(mpz_class(strip_plus(text)));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
  mpz_class d(std::string{den});
  if (d == 0)
    throw InvalidArgument("zero denominator: '" + std::string(text) + "'");
  Rational q(mpz_class(strip_plus(num)), d);
  q.canonicalize();
  return q;
}

/// Exact element of Q[i].
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}
  GaussianRational(Rational re) : re_(std::move(re)) {}
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational &re() const { return re_; }
  const Rational &im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm_squared() const { return re_ * re_ + im_ * im_; }

  GaussianRational inverse() const {
    if (is_zero())
      throw InvalidArgument("division by zero");
    Rational n = norm_squared();
    return {re_ / n, -im_ / n};
  }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational &operator+=(const GaussianRational &o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational &operator-=(const GaussianRational &o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational &operator*=(const GaussianRational &o) {
    if (o.is_real()) {
      re_ *= o.re_;
      im_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  GaussianRational &operator/=(const GaussianRational &o) {
    return *this *= o.inverse();
  }

  friend GaussianRational operator+(GaussianRational a,
                                    const GaussianRational &b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a,
                                    const GaussianRational &b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a,
                                    const GaussianRational &b) {
    return a *= b;
  }
  friend GaussianRational operator/(GaussianRational a,
                                    const GaussianRational &b) {
    return a /= b;
  }
  friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

private:
  Rational re_{0};
  Rational im_{0};
};

inline std::string to_string(const GaussianRational &z) {
  if (z.is_real())
    return to_string(z.re());
  if (sgn(z.re()) == 0)
    return to_string(z.im()) + "*i";
  return "(" + to_string(z.re()) + (sgn(z.im()) < 0 ? " - " : " + ") +
         to_string(Rational(abs(z.im()))) + "*i)";
}

/// Rising factorial (nu)_k = nu (nu+1) ... (nu+k-1).
inline Rational pochhammer(const Rational &nu, unsigned k) {
  Rational result(1);
  for (unsigned t = 0; t < k; ++t)
    result *= nu + t;
  return result;
}

inline Rational factorial(unsigned k) { return pochhammer(Rational(1), k); }

inline Rational binomial(unsigned n, unsigned k) {
  if (k > n)
    return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

inline double to_double(const Rational &q) { return q.get_d(); }

} // namespace gtmono
