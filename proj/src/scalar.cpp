#include "rdc/scalar.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace rdc {

GaussRational::GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) { return *this *= o.inverse(); }

std::string GaussRational::str() const {
  if (is_zero()) return "0";
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "*i";
  }
  if (sgn(re_) == 0) return imag;
  std::string s = "(" + re_.get_str();
  s += (imag[0] == '-') ? imag : "+" + imag;
  return s + ")";
}

namespace {

using Poly = Scalar::Poly;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  trim(r);
  return r;
}

Poly poly_neg(Poly a) {
  for (auto& c : a) c = -c;
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x].is_zero()) continue;
    for (std::size_t y = 0; y < b.size(); ++y) r[x + y] += a[x] * b[y];
  }
  trim(r);
  return r;
}

Poly poly_scale(Poly a, const GaussRational& c) {
  for (auto& x : a) x *= c;
  trim(a);
  return a;
}

// Euclidean division over the field Q(i).
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  if (b.empty()) throw DivisionByZero();
  if (a.size() < b.size()) return {Poly{}, std::move(a)};
  Poly q(a.size() - b.size() + 1);
  GaussRational lead_inv = b.back().inverse();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    GaussRational c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= c * b[k];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {std::move(q), std::move(a)};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = poly_scale(a, a.back().inverse());
  return a;
}

std::size_t low_order(const Poly& p) {
  std::size_t k = 0;
  while (k < p.size() && p[k].is_zero()) ++k;
  return k;
}

bool is_pi_monomial(const Poly& p) {
  for (std::size_t k = 0; k + 1 < p.size(); ++k)
    if (!p[k].is_zero()) return false;
  return !p.empty();
}

std::string poly_str(const Poly& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k].is_zero()) continue;
    std::string c = p[k].str();
    std::string term;
    if (k == 0) {
      term = c;
    } else {
      std::string pw = k == 1 ? "pi" : "pi^" + std::to_string(k);
      if (c == "1") {
        term = pw;
      } else if (c == "-1") {
        term = "-" + pw;
      } else {
        term = c + "*" + pw;
      }
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

Scalar::Scalar(long value) {
  if (value != 0) num_ = {GaussRational(value)};
}

Scalar::Scalar(GaussRational value) {
  if (!value.is_zero()) num_ = {std::move(value)};
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  return Scalar(GaussRational(mpq_class(num, den)));
}

Scalar Scalar::pi() {
  Scalar s;
  s.num_ = {GaussRational(0), GaussRational(1)};
  return s;
}

Scalar Scalar::from_polys(Poly num, Poly den) {
  trim(num);
  trim(den);
  if (den.empty()) throw DivisionByZero();
  Scalar s;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  s.normalize();
  return s;
}

void Scalar::normalize() {
  trim(num_);
  if (num_.empty()) {
    den_ = {GaussRational(1)};
    return;
  }
  std::size_t shift = std::min(low_order(num_), low_order(den_));
  if (shift > 0) {
    num_.erase(num_.begin(), num_.begin() + static_cast<std::ptrdiff_t>(shift));
    den_.erase(den_.begin(), den_.begin() + static_cast<std::ptrdiff_t>(shift));
  }
  // After removing common powers of pi, a pure pi-power denominator is coprime to num.
  if (den_.size() > 1 && !is_pi_monomial(den_)) {
    Poly g = poly_gcd(num_, den_);
    if (g.size() > 1) {
      num_ = poly_divmod(num_, g).first;
      den_ = poly_divmod(den_, g).first;
    }
  }
  if (!(den_.back() == GaussRational(1))) {
    GaussRational inv = den_.back().inverse();
    num_ = poly_scale(num_, inv);
    den_ = poly_scale(den_, inv);
  }
}

bool Scalar::is_one() const { return den_.size() == 1 && num_.size() == 1 && num_[0] == GaussRational(1); }

GaussRational Scalar::as_gauss_rational() const {
  if (!is_gauss_rational()) throw Error("scalar depends on pi: " + str());
  return num_.empty() ? GaussRational(0) : num_[0];
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = poly_neg(std::move(s.num_));
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ = poly_add(num_, o.num_);
  } else {
    num_ = poly_add(poly_mul(num_, o.den_), poly_mul(o.num_, den_));
    den_ = poly_mul(den_, o.den_);
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero() || o.is_zero()) return *this = Scalar();
  num_ = poly_mul(num_, o.num_);
  den_ = poly_mul(den_, o.den_);
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::optional<Scalar> Scalar::try_inverse() const {
  if (is_zero()) return std::nullopt;
  Scalar s;
  s.num_ = den_;
  s.den_ = num_;
  s.normalize();
  return s;
}

Scalar Scalar::inverse() const {
  auto inv = try_inverse();
  if (!inv) throw DivisionByZero();
  return *inv;
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Scalar Scalar::conj() const {
  Scalar s = *this;
  for (auto& c : s.num_) c = c.conj();
  for (auto& c : s.den_) c = c.conj();
  s.normalize();
  return s;
}

std::optional<Scalar> Scalar::exact_sqrt() const {
  if (is_zero()) return Scalar();
  if (!is_pi_monomial(num_) || !is_pi_monomial(den_)) return std::nullopt;
  const GaussRational& c = num_.back();
  if (!c.is_real() || sgn(c.re()) <= 0) return std::nullopt;
  long pi_power = static_cast<long>(num_.size()) - static_cast<long>(den_.size());
  if (pi_power % 2 != 0) return std::nullopt;
  mpz_class n = c.re().get_num();
  mpz_class d = c.re().get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn = sqrt(n);
  mpz_class rd = sqrt(d);
  Scalar root = Scalar::rational(mpq_class(rn, rd));
  return root * Scalar::pi().pow(static_cast<int>(pi_power / 2));
}

std::complex<double> Scalar::to_complex() const {
  auto eval = [](const Poly& p) {
    std::complex<double> acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * std::numbers::pi + it->to_complex();
    return acc;
  };
  return eval(num_) / eval(den_);
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  if (den_.size() == 1) return poly_str(num_);
  if (is_pi_monomial(den_) && num_.size() == 1) {
    return num_[0].str() + "*pi^-" + std::to_string(den_.size() - 1);
  }
  return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

bool scalar_eq(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }

Scalar factorial(int n) {
  mpz_class f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return Scalar::rational(mpq_class(f));
}

}  // namespace rdc
