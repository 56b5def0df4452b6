#pragma once

// Exact exterior calculus on C^n (Wirtinger variables) and R^l.
//
// A coefficient is P * x^(-M) * prod_j Q_j^(e_j/2): a polynomial numerator, a monomial
// denominator and half-integer powers of the designated quadratics. Terms of a Form are keyed
// by exterior monomial and by the parity pattern of the e_j, so that all coefficients sharing a
// key can be brought to one common denominator without radicals.

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rdc/polynomial.hpp"

namespace rdc {

using Complex = std::complex<double>;
using BasisMask = std::uint32_t;  // bit k set = d(variable k) present

class Coefficient {
 public:
  Coefficient() = default;
  explicit Coefficient(Polynomial numerator, Monomial denominator = {},
                       std::array<int, kQuadraticCount> quadratic_halves = {});

  const Polynomial& numerator() const { return numerator_; }
  const Monomial& denominator() const { return denominator_; }
  /// Exponent of each designated quadratic, in halves (value carries Q^(e/2)).
  const std::array<int, kQuadraticCount>& quadratic_halves() const { return quadratic_halves_; }
  int quadratic_halves(Quadratic q) const { return quadratic_halves_[static_cast<int>(q)]; }

  bool is_zero() const { return numerator_.is_zero(); }
  std::uint8_t parity() const;

  Coefficient operator-() const;
  Coefficient& operator*=(const Scalar& c);
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);

  /// Sum of two coefficients with the same parity pattern.
  friend Coefficient add_same_parity(const Coefficient& a, const Coefficient& b, const VariableContext& ctx);

  Coefficient derivative(int var, const VariableContext& ctx) const;
  Coefficient conjugate(const VariableContext& ctx) const;

  std::string str(const VariableContext& ctx) const;

 private:
  Polynomial numerator_;
  Monomial denominator_{};
  std::array<int, kQuadraticCount> quadratic_halves_{};
  void cancel_monomial();
};

struct TermKey {
  BasisMask mask = 0;
  std::uint8_t parity = 0;
  friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

struct Bidegree {
  int p = 0;
  int q = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

class Form {
 public:
  using Terms = std::map<TermKey, Coefficient>;

  Form() = default;
  explicit Form(VariableContext ctx) : ctx_(ctx) {}

  static Form constant(const VariableContext& ctx, const Scalar& c);
  static Form function(const VariableContext& ctx, const Coefficient& c);
  static Form function(const VariableContext& ctx, const Polynomial& p);
  /// The basis 1-form d(variable var).
  static Form differential(const VariableContext& ctx, int var);
  static Form term(const VariableContext& ctx, BasisMask mask, const Coefficient& c);

  const VariableContext& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Bidegree when every term has the same numbers of dz and dzbar (nullopt if mixed or zero).
  std::optional<Bidegree> bidegree() const;
  bool has_bidegree(int p, int q) const;
  /// Total exterior degree when homogeneous (nullopt if mixed or zero).
  std::optional<int> degree() const;
  bool has_degree(int k) const;
  bool is_function() const { return has_degree(0); }

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Scalar& c);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const Scalar& c) { return a *= c; }
  friend Form operator*(const Scalar& c, Form a) { return a *= c; }

  void add_term(BasisMask mask, const Coefficient& c);

  /// Apply f to every coefficient (exterior part untouched).
  template <typename F>
  Form map_coefficients(F&& f) const {
    Form r(ctx_);
    for (const auto& [key, c] : terms_) r.add_term(key.mask, f(c));
    return r;
  }

  std::string str() const;

 private:
  VariableContext ctx_;
  Terms terms_;
};

Form wedge(const Form& a, const Form& b);
Form dbar(const Form& a);
Form del(const Form& a);
/// Exterior derivative in the real variables only.
Form d_real(const Form& a);
/// Full exterior derivative (del + dbar + d_real).
Form d_total(const Form& a);
Form bidegree_component(const Form& a, int p, int q);
/// Multiply every coefficient by a 0-form.
Form multiply(const Form& function, const Form& a);
/// Partial derivative of each coefficient in one variable.
Form coefficient_derivative(const Form& a, int var);
bool form_eq(const Form& a, const Form& b);

/// Substitution of polynomials (in the target context) for the source variables. Differentials
/// follow by d-linearity; designated quadratics are re-expanded and must map to a positive
/// multiple of a target quadratic when they occur with odd exponent.
Form substitute(const Form& a, const VariableContext& target,
                const std::vector<std::optional<Polynomial>>& images);

// ---------------------------------------------------------------------------------------------
// Numeric evaluation

/// Point layout: n complex coordinates followed by l real coordinates (real part used).
using PointView = std::span<const Complex>;

/// Value of a form at a point as (basis monomial, coefficient) pairs.
using ExteriorValue = std::vector<std::pair<BasisMask, Complex>>;

inline constexpr double kDefaultPoleThreshold = 1e-10;

/// Form compiled to floating point for repeated evaluation.
class CompiledForm {
 public:
  CompiledForm() = default;
  explicit CompiledForm(const Form& form, double pole_threshold = kDefaultPoleThreshold);

  const VariableContext& context() const { return ctx_; }
  ExteriorValue evaluate(PointView point) const;
  Complex evaluate(PointView point, std::span<const std::vector<Complex>> frame) const;

 private:
  struct Monom {
    Complex coefficient;
    std::vector<std::pair<int, int>> powers;  // (variable, exponent)
  };
  struct Term {
    BasisMask mask = 0;
    std::vector<Monom> numerator;
    std::vector<std::pair<int, int>> denominator;
    std::array<int, kQuadraticCount> quadratic_halves{};
  };
  VariableContext ctx_;
  std::vector<Term> terms_;
  double pole_threshold_ = kDefaultPoleThreshold;
};

/// Values of the basis 1-forms on a tangent vector.
Complex basis_value(const VariableContext& ctx, int var, PointView vector);
/// Contract an exterior value with a frame (alternating determinant expansion).
Complex contract(const VariableContext& ctx, const ExteriorValue& value,
                 std::span<const std::vector<Complex>> frame);

Complex eval_numeric(const Form& a, PointView point, std::span<const std::vector<Complex>> frame,
                     double pole_threshold = kDefaultPoleThreshold);

int popcount(BasisMask m);
/// Sign of reordering (basis of a)(basis of b) into increasing order; masks must be disjoint.
int wedge_sign(BasisMask a, BasisMask b);

}  // namespace rdc
