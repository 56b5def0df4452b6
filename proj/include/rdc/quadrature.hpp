#pragma once

// Product quadrature of forms over spheres, tori, balls and shells in C^n, and over real
// spheres in R^l. Pullbacks are obtained by contracting with the chart's tangent frame.

#include <vector>

#include "rdc/numeric.hpp"

namespace rdc {

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule on [a, b].
Rule1D gauss_legendre(int count, double a, double b);
/// Composite Gauss-Legendre with equal panels.
Rule1D composite_gauss_legendre(int count, int panels, double a, double b);
/// Trapezoid rule on a full period [0, 2 pi).
Rule1D periodic_trapezoid(int count);

struct Orientation {
  enum class Kind { UsualComplex, HyperfunctionConvention, Explicit };
  Kind kind = Kind::UsualComplex;
  int sign = 1;  // Explicit only

  static Orientation usual() { return {}; }
  static Orientation hyperfunction() { return {Kind::HyperfunctionConvention, 1}; }
  static Orientation explicit_sign(int s) { return {Kind::Explicit, s < 0 ? -1 : 1}; }
  /// Factor relative to the usual complex orientation.
  int factor(int n) const;
};

/// (-1)^{n(n+1)/2}
int hyperfunction_sign(int n);

struct Cycle {
  enum class Kind { Sphere, Torus, Ball, Shell, NegatedBoundaryOfBall, RealSphere };
  Kind kind = Kind::Sphere;
  int n = 1;                   // complex dimension, or l for RealSphere
  double radius = 1.0;         // sphere / ball / outer shell radius
  double inner_radius = 0.0;   // shell only
  std::vector<double> radii;   // torus (empty: all equal to radius)
  Orientation orientation;
  std::vector<Complex> center;  // translation of the cycle (empty: origin)

  static Cycle sphere(int n, double r = 1.0) { return {Kind::Sphere, n, r, 0.0, {}, {}, {}}; }
  static Cycle torus(int n, double eps = 1.0) { return {Kind::Torus, n, eps, 0.0, {}, {}, {}}; }
  static Cycle ball(int n, double r = 1.0) { return {Kind::Ball, n, r, 0.0, {}, {}, {}}; }
  static Cycle shell(int n, double r0, double r1) { return {Kind::Shell, n, r1, r0, {}, {}, {}}; }
  static Cycle negated_boundary(int n, double r = 1.0) { return {Kind::NegatedBoundaryOfBall, n, r, 0.0, {}, {}, {}}; }
  static Cycle real_sphere(int l, double r = 1.0) { return {Kind::RealSphere, l, r, 0.0, {}, {}, {}}; }

  int dimension() const;
  std::string str() const;
};

struct QuadratureSpec {
  int periodic = 64;      // trapezoid nodes per periodic angle
  int polar = 32;         // Gauss-Legendre nodes per polar angle
  int radial = 32;        // Gauss-Legendre nodes per radial panel
  int radial_panels = 1;
  double tolerance = 1e-8;
  bool richardson = true;  // error estimate from the half-resolution rule

  /// Defaults scaled down for large dimensions where the full product grid is too costly.
  static QuadratureSpec for_dimension(int n);
  QuadratureSpec halved() const;
  void validate() const;
};

struct IntegrationResult {
  Complex value;
  double error_estimate = 0.0;  // |I(N) - I(N/2)| when requested, else 0
};

IntegrationResult integrate(const NumericForm& form, const Cycle& cycle, const QuadratureSpec& spec);
IntegrationResult integrate(const Form& form, const Cycle& cycle, const QuadratureSpec& spec);

/// Orientation sign of the chart used for a cycle (relative to the usual orientation);
/// exposed for tests.
int chart_orientation(const Cycle& cycle, int n, int l);

}  // namespace rdc
