#pragma once

// Floating-point forms: anything that can be evaluated at a point. Used for integrands that
// mix symbolic forms with smooth cutoffs, which never enter the exact layer.

#include <functional>
#include <map>

#include "rdc/form.hpp"

namespace rdc {

class NumericForm {
 public:
  using Fn = std::function<ExteriorValue(PointView)>;

  NumericForm() = default;
  NumericForm(VariableContext ctx, int degree, Fn fn) : ctx_(ctx), degree_(degree), fn_(std::move(fn)) {}

  /// Compiles a homogeneous symbolic form (the zero form has any degree; pass it explicitly).
  static NumericForm from(const Form& f, std::optional<int> degree = std::nullopt);
  static NumericForm function(VariableContext ctx, std::function<Complex(PointView)> f);
  static NumericForm zero(VariableContext ctx, int degree);

  const VariableContext& context() const { return ctx_; }
  int degree() const { return degree_; }
  ExteriorValue operator()(PointView point) const { return fn_(point); }

 private:
  VariableContext ctx_;
  int degree_ = 0;
  Fn fn_;
};

NumericForm wedge(const NumericForm& a, const NumericForm& b);
NumericForm operator+(const NumericForm& a, const NumericForm& b);
NumericForm operator-(const NumericForm& a, const NumericForm& b);
NumericForm operator*(Complex c, const NumericForm& a);

/// Adds equal basis monomials together and drops nothing (deterministic mask order).
std::map<BasisMask, Complex> collect(const ExteriorValue& v);

/// dbar of a numeric form at a point by Richardson-extrapolated central differences,
/// d/dzbar_j = (d/dx_j + i d/dy_j) / 2.
std::map<BasisMask, Complex> finite_difference_dbar(const NumericForm& f, PointView point, double h = 1e-3);
/// Real exterior derivative by the same scheme (real variables only).
std::map<BasisMask, Complex> finite_difference_d_real(const NumericForm& f, PointView point, double h = 1e-3);

/// Euclidean norm of the difference of two collected values, and of the first.
double value_distance(const std::map<BasisMask, Complex>& a, const std::map<BasisMask, Complex>& b);
double value_norm(const std::map<BasisMask, Complex>& a);

}  // namespace rdc
