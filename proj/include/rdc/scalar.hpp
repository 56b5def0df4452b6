#pragma once

// Exact constants: rational functions of a formal transcendental pi with
// Gaussian-rational coefficients.

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "rdc/errors.hpp"

namespace rdc {

/// a + b*i with a, b arbitrary-precision rationals.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussRational(mpq_class re, mpq_class im = 0);

  static GaussRational i() { return GaussRational(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussRational inverse() const;

  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);
  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string str() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Element of Q(i)(pi). Stored as num/den with gcd(num, den) = 1 and den monic,
/// so equal values have identical representations.
class Scalar {
 public:
  using Poly = std::vector<GaussRational>;  // index = power of pi

  Scalar() = default;
  Scalar(long value);           // NOLINT(google-explicit-constructor)
  Scalar(GaussRational value);  // NOLINT(google-explicit-constructor)

  static Scalar rational(long num, long den);
  static Scalar rational(const mpq_class& q) { return Scalar(GaussRational(q)); }
  static Scalar i() { return Scalar(GaussRational::i()); }
  static Scalar pi();
  /// Builds num/den from arbitrary (un-normalized) coefficient lists.
  static Scalar from_polys(Poly num, Poly den);

  bool is_zero() const { return num_.empty(); }
  bool is_one() const;
  /// True when the value lies in Q(i) (no pi dependence).
  bool is_gauss_rational() const { return den_.size() == 1 && num_.size() <= 1; }
  GaussRational as_gauss_rational() const;

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::optional<Scalar> try_inverse() const;
  Scalar inverse() const;
  Scalar pow(int e) const;
  Scalar conj() const;
  /// Exact square root when the value is r^2 * pi^(2k) with r a positive rational.
  std::optional<Scalar> exact_sqrt() const;

  std::complex<double> to_complex() const;
  std::string str() const;

 private:
  Poly num_{};                  // empty = 0
  Poly den_{GaussRational(1)};  // monic
  void normalize();
};

bool scalar_eq(const Scalar& a, const Scalar& b);

Scalar factorial(int n);

}  // namespace rdc
