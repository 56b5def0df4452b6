#pragma once

// Hyperfunctions and p-hyperforms on R^n as explicit relative Dolbeault pairs (xi_1, xi_01)
// over {V minus U, V}, with the operations that act on representatives and numeric pairings.

#include <string>

#include "rdc/cech.hpp"
#include "rdc/quadrature.hpp"

namespace rdc {

/// Open subset of R^n the representative is considered on.
struct RealDomain {
  enum class Kind { Full, PuncturedAtOrigin, Ball, PuncturedBall };
  Kind kind = Kind::Full;
  double radius = 0.0;  // Ball / PuncturedBall

  static RealDomain full() { return {}; }
  static RealDomain punctured() { return {Kind::PuncturedAtOrigin, 0.0}; }
  static RealDomain ball(double r) { return {Kind::Ball, r}; }
  static RealDomain punctured_ball(double r) { return {Kind::PuncturedBall, r}; }

  bool contains_origin() const { return kind == Kind::Full || kind == Kind::Ball; }
  /// True when this domain is contained in `outer`.
  bool refines(const RealDomain& outer) const;
  RealDomain intersect(const RealDomain& o) const;
  std::string str() const;
  friend bool operator==(const RealDomain&, const RealDomain&) = default;
};

enum class SupportTag { CompactAtOrigin, General };

class HyperformRep {
 public:
  HyperformRep(int n, int p, Form xi1, Form xi01, SupportTag support, RealDomain domain = RealDomain::full());

  int n() const { return n_; }
  int p() const { return p_; }
  const Form& xi1() const { return xi1_; }
  const Form& xi01() const { return xi01_; }
  SupportTag support() const { return support_; }
  const RealDomain& domain() const { return domain_; }
  RelativePair pair() const { return {xi1_, xi01_}; }

  /// xi_1 = dbar xi_01 and dbar xi_1 = 0.
  bool cocycle() const;

 private:
  int n_;
  int p_;
  Form xi1_;
  Form xi01_;
  SupportTag support_;
  RealDomain domain_;
};

/// Equality of representatives (same forms, degree and tags).
bool rep_eq(const HyperformRep& a, const HyperformRep& b);

HyperformRep delta(int n);
HyperformRep delta_form(int n);
/// (0, -psi_n^{(0,n-1)}) with psi_n(y) evaluated at y = (z - zbar)/(2i).
HyperformRep one_as_hyperfunction(int n);
/// i^n C_n sum_i (-1)^i (z_i - zbar_i) dzbar_1 .. (omit i) .. dzbar_n / |z - zbar|^n
Form one_closed_form(int n);
/// psi_n(y) after the substitution y = (z - zbar)/(2i), all bidegrees.
Form angular_form_complexified(int n);

/// x_i -> z_i, dx_i -> dz_i for polynomial data on R^n.
Form complexify(const Form& real_form);
Polynomial complexify(const Polynomial& p, int n);

HyperformRep embed_analytic(const Form& omega_real);
/// Coboundary witness w with d_hyper(embed(omega)) - embed(d omega) = vartheta(w).
RelativePair embed_d_witness(const Form& omega_real);

/// f is a polynomial on C^n (already complexified).
HyperformRep mult_analytic(const Polynomial& f, const HyperformRep& u);
HyperformRep partial_x(int i, const HyperformRep& u);
HyperformRep d_hyper(const HyperformRep& u);
HyperformRep restrict(const HyperformRep& u, const RealDomain& sub);

/// <u, eta> = s (int_{R_1} xi_1 ^ eta + int_{R_01} xi_01 ^ eta), s = (-1)^{n(n+1)/2}.
IntegrationResult pair(const HyperformRep& u, const Form& eta, const QuadratureSpec& spec, double radius = 1.0);
/// Same pairing over a ball around a point away from the origin (test forms supported there).
IntegrationResult pair_local(const HyperformRep& u, const Form& eta, const std::vector<Complex>& center,
                             double radius, const QuadratureSpec& spec);

}  // namespace rdc
