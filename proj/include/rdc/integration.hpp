#pragma once

// Smooth cutoffs and the numeric checks built on them: relative-pair integration,
// the transfer theorem, the Stokes identity behind the duality diagram, globalization of
// two-set cocycles and the partition-of-unity cup product.

#include <cstdint>
#include <vector>

#include "rdc/cech.hpp"
#include "rdc/numeric.hpp"
#include "rdc/quadrature.hpp"
#include "rdc/report.hpp"

namespace rdc {

/// rho_1 = chi(g) with chi = 1 for t <= r0, 0 for t >= r1 (exp(-1/t) splice) and g a real 0-form.
class Cutoff {
 public:
  Cutoff(double r0, double r1, Form g);
  /// g = |z| on C^n.
  static Cutoff radial(int n, double r0, double r1);

  double r0() const { return r0_; }
  double r1() const { return r1_; }
  const Form& g() const { return g_; }

  double profile(double t) const;
  double profile_derivative(double t) const;

  NumericForm rho1() const;
  NumericForm rho0() const;
  NumericForm dbar_rho1() const;

 private:
  double r0_;
  double r1_;
  Form g_;
  NumericForm g_numeric_;
  NumericForm dbar_g_;
};

/// Numeric counterpart of RelativePair (evaluation-only).
struct NumericPair {
  NumericForm xi1;
  NumericForm xi01;
  bool xi1_vanishes = false;
};

NumericPair to_numeric(const RelativePair& x, int degree);

/// int_{R_1} xi_1 + int_{R_01} xi_01 with R_1 the ball of the given radius and R_01 = -dR_1,
/// both in the usual complex orientation.
IntegrationResult integrate_relative_pair(const NumericPair& x, double radius, const QuadratureSpec& spec);
IntegrationResult integrate_relative_pair(const RelativePair& x, double radius, const QuadratureSpec& spec);

struct TransferResult {
  IntegrationResult sphere;  // int_S h beta_n
  IntegrationResult torus;   // (-1)^{n(n-1)/2} int_Gamma (-1)^{n(n-1)/2} h kappa_n
  Complex h0;
  std::vector<CheckRecord> records;
};

TransferResult transfer_check(int n, const Polynomial& h, const QuadratureSpec& spec, double tolerance,
                              double radius = 1.0);

struct StokesResult {
  IntegrationResult annulus;   // int theta ^ eta ^ dbar rho_1 over r0 <= |z| <= r1
  IntegrationResult boundary;  // -int_{R_01} theta ^ eta
  std::vector<CheckRecord> records;
};

/// Requires radius < cutoff.r0() so that rho_1 = 1 on R_1 and supp dbar rho_1 lies in R_0.
StokesResult stokes_pairing_check(const Form& theta, const Form& eta, const Cutoff& cutoff, double radius,
                                  const QuadratureSpec& spec, double tolerance);

struct TwoSetCochain {
  Form xi0;
  Form xi1;
  Form xi01;
};

struct GlobalizeResult {
  NumericForm omega;
  std::vector<CheckRecord> records;
  double max_residual = 0.0;
};

/// omega = rho_0 xi_0 + rho_1 xi_1 - dbar rho_0 ^ xi_01 for a radial cutoff.
GlobalizeResult globalize_two_set(const TwoSetCochain& x, const Cutoff& cutoff, const QuadratureSpec& spec,
                                  int samples = 100, std::uint64_t seed = 1, double tolerance = 1e-6);

/// (xi_1 ^ eta_1, rho_1 xi_01 ^ eta_1 + (-1)^{deg x}(rho_2 xi_1 ^ eta_01 - dbar rho_1 ^ xi_01 ^ eta_01))
/// with rho_2 = 1 - rho_1; deg x is the total degree of x.
NumericPair cup_partition(const RelativePair& x, int deg_x, const RelativePair& y, int deg_y, const Cutoff& rho1);

}  // namespace rdc
