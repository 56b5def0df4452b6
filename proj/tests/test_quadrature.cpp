#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rdc/integration.hpp"
#include "rdc/kernels.hpp"
#include "rdc/quadrature.hpp"

using namespace rdc;

namespace {

constexpr double kPi = std::numbers::pi;

double apply(const Rule1D& r, double (*f)(double)) {
  double s = 0;
  for (std::size_t k = 0; k < r.nodes.size(); ++k) s += r.weights[k] * f(r.nodes[k]);
  return s;
}

Polynomial var(int v, int power = 1) { return Polynomial::variable(v, power); }

QuadratureSpec small_spec() {
  QuadratureSpec s;
  s.periodic = 16;
  s.polar = 16;
  s.radial = 16;
  return s;
}

}  // namespace

TEST_CASE("Gauss-Legendre is exact to degree 2N-1") {
  const Rule1D r = gauss_legendre(5, 0.0, 1.0);
  CHECK(apply(r, [](double x) { return std::pow(x, 9); }) == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(std::abs(apply(r, [](double x) { return std::pow(x, 10); }) - 1.0 / 11) > 1e-10);
  const Rule1D c = composite_gauss_legendre(3, 4, -1.0, 2.0);
  CHECK(c.nodes.size() == 12);
  CHECK(apply(c, [](double x) { return x * x; }) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("periodic trapezoid is spectrally exact") {
  const Rule1D r = periodic_trapezoid(8);
  CHECK(apply(r, [](double) { return 1.0; }) == doctest::Approx(2 * kPi));
  CHECK(std::abs(apply(r, [](double t) { return std::cos(3 * t); })) < 1e-14);
  CHECK(apply(r, [](double t) { return std::cos(t) * std::cos(t); }) == doctest::Approx(kPi).epsilon(1e-14));
  // Aliasing at the Nyquist mode.
  CHECK(apply(r, [](double t) { return std::cos(8 * t); }) == doctest::Approx(2 * kPi));
}

TEST_CASE("torus integrals of Laurent monomials") {
  // int_Gamma z1^a z2^b kappa_2 = 1 when a = b = 0 and 0 otherwise.
  const VariableContext ctx(2);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      const Form f = wedge(Form::function(ctx, var(ctx.z(1), a) * var(ctx.z(2), b)), cauchy(2));
      const Complex v = integrate(f, Cycle::torus(2, 0.7), small_spec()).value;
      CHECK(std::abs(v - (a == 0 && b == 0 ? 1.0 : 0.0)) < 1e-13);
    }
  // Antiholomorphic factors pick up |z|^2 = eps^2 on the torus.
  const Form g = wedge(Form::function(ctx, var(ctx.z(1)) * var(ctx.zbar(1))), cauchy(2));
  CHECK(std::abs(integrate(g, Cycle::torus(2, 0.5), small_spec()).value - 0.25) < 1e-13);
}

TEST_CASE("torus with unequal radii") {
  Cycle c = Cycle::torus(2);
  c.radii = {0.3, 2.0};
  const VariableContext ctx(2);
  const Form f = wedge(Form::function(ctx, var(ctx.zbar(2)) * var(ctx.z(2))), cauchy(2));
  CHECK(std::abs(integrate(f, c, small_spec()).value - 4.0) < 1e-12);
}

TEST_CASE("Bochner-Martinelli normalization does not depend on the radius") {
  for (double r : {0.25, 1.0, 3.0}) {
    CAPTURE(r);
    CHECK(std::abs(integrate(bochner_martinelli(1), Cycle::sphere(1, r), QuadratureSpec{}).value - 1.0) < 1e-12);
    CHECK(std::abs(integrate(bochner_martinelli(2), Cycle::sphere(2, r), QuadratureSpec{}).value - 1.0) < 1e-10);
  }
}

TEST_CASE("orientation flips the sign") {
  Cycle c = Cycle::sphere(2);
  const Complex usual = integrate(bochner_martinelli(2), c, small_spec()).value;
  c.orientation = Orientation::explicit_sign(-1);
  CHECK(std::abs(integrate(bochner_martinelli(2), c, small_spec()).value + usual) < 1e-14);
  CHECK(hyperfunction_sign(1) == -1);
  CHECK(hyperfunction_sign(2) == -1);
  CHECK(hyperfunction_sign(3) == 1);
  CHECK(Orientation::hyperfunction().factor(2) == -1);
  CHECK(Orientation::usual().factor(3) == 1);
}

TEST_CASE("Stokes on real spheres: int x1 dx2 ^ .. = ball volume") {
  const VariableContext c2 = VariableContext::real(2);
  const Form w2 = wedge(Form::function(c2, var(c2.x(1))), Form::differential(c2, c2.x(2)));
  CHECK(std::abs(integrate(w2, Cycle::real_sphere(2, 1.5), small_spec()).value - kPi * 2.25) < 1e-12);
  const VariableContext c3 = VariableContext::real(3);
  const Form w3 = wedge(wedge(Form::function(c3, var(c3.x(1))), Form::differential(c3, c3.x(2))),
                        Form::differential(c3, c3.x(3)));
  CHECK(std::abs(integrate(w3, Cycle::real_sphere(3, 2.0), small_spec()).value - 4 * kPi * 8 / 3) < 1e-11);
}

TEST_CASE("balls and shells in C^1") {
  // dzbar ^ dz = 2i dx ^ dy.
  const VariableContext ctx(1);
  const Form area = wedge(Form::differential(ctx, ctx.zbar(1)), Form::differential(ctx, ctx.z(1)));
  CHECK(std::abs(integrate(area, Cycle::ball(1, 2.0), small_spec()).value - Complex(0, 2 * kPi * 4)) < 1e-11);
  CHECK(std::abs(integrate(area, Cycle::shell(1, 1.0, 2.0), small_spec()).value - Complex(0, 2 * kPi * 3)) < 1e-11);
  // The negated boundary of the ball carries the opposite orientation of the sphere.
  const Complex s = integrate(bochner_martinelli(1), Cycle::negated_boundary(1), small_spec()).value;
  CHECK(std::abs(s + 1.0) < 1e-13);
}

TEST_CASE("translated cycles") {
  Cycle c = Cycle::sphere(1, 0.5);
  c.center = {Complex(2.0, 0.0)};
  // The pole at 0 lies outside, so the kernel integrates to 0.
  CHECK(std::abs(integrate(bochner_martinelli(1), c, QuadratureSpec{}).value) < 1e-13);
}

TEST_CASE("error estimate from the half-resolution rule") {
  QuadratureSpec s = small_spec();
  s.richardson = true;
  const IntegrationResult r = integrate(bochner_martinelli(2), Cycle::sphere(2), s);
  CHECK(r.error_estimate >= 0.0);
  CHECK(r.error_estimate < 1e-6);
  CHECK(s.halved().periodic == 8);
}

TEST_CASE("invalid specs are rejected") {
  QuadratureSpec s;
  s.periodic = 0;
  CHECK_THROWS(s.validate());
  CHECK_THROWS(integrate(bochner_martinelli(1), Cycle::sphere(1), s));
}

TEST_CASE("cutoff profile") {
  const Cutoff c = Cutoff::radial(1, 0.5, 1.0);
  CHECK(c.profile(0.2) == 1.0);
  CHECK(c.profile(0.5) == 1.0);
  CHECK(c.profile(1.0) == 0.0);
  CHECK(c.profile(3.0) == 0.0);
  double prev = 1.0;
  for (double t = 0.5; t <= 1.0; t += 0.01) {
    CHECK(c.profile(t) <= prev + 1e-15);
    prev = c.profile(t);
    const double h = 1e-6;
    CHECK(c.profile_derivative(t) == doctest::Approx((c.profile(t + h) - c.profile(t - h)) / (2 * h)).epsilon(1e-5));
  }
  const std::vector<Complex> p = {Complex(0.4, 0.5)};
  const auto r1 = collect(c.rho1()(p));
  const auto r0 = collect(c.rho0()(p));
  CHECK(std::abs(r1.at(0) + r0.at(0) - 1.0) < 1e-15);
}

TEST_CASE("transfer at n = 1 for a non-constant h") {
  const VariableContext ctx(1);
  const TransferResult r = transfer_check(1, var(ctx.z(1), 2) + Polynomial(Scalar(3)), QuadratureSpec{}, 1e-10);
  CHECK(std::abs(r.h0 - 3.0) < 1e-15);
  CHECK(std::abs(r.sphere.value - 3.0) < 1e-10);
  CHECK(std::abs(r.torus.value - 3.0) < 1e-10);
  CHECK(all_ok(r.records));
}

TEST_CASE("Stokes identity with a cutoff at n = 1") {
  QuadratureSpec s;
  s.radial_panels = 4;
  const StokesResult r = stokes_pairing_check(bm_zero(1), make_Phi(1), Cutoff::radial(1, 0.5, 1.0), 0.3, s, 1e-8);
  CHECK(std::abs(r.annulus.value - r.boundary.value) < 1e-8);
  // Both sides equal int_{|z| = 0.3} dz / (2 pi i z) = 1.
  CHECK(std::abs(r.boundary.value - 1.0) < 1e-10);
  CHECK_THROWS(stokes_pairing_check(bm_zero(1), make_Phi(1), Cutoff::radial(1, 0.5, 1.0), 0.7, s, 1e-8));
}

TEST_CASE("globalizing a two-set cocycle") {
  const VariableContext ctx(1);
  const Form a = Form::function(ctx, var(ctx.zbar(1), 2));
  const Form b = Form::function(ctx, var(ctx.z(1)) * var(ctx.zbar(1)));
  TwoSetCochain x{dbar(a), dbar(a) + dbar(b), b};
  const GlobalizeResult g = globalize_two_set(x, Cutoff::radial(1, 0.5, 1.0), QuadratureSpec{}, 50, 3);
  CHECK(all_ok(g.records));
  CHECK(g.max_residual < 1e-6);
}
