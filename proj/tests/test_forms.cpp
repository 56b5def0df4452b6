#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rdc/form.hpp"
#include "rdc/kernels.hpp"
#include "rdc/numeric.hpp"

using namespace rdc;

namespace {

Polynomial var(int v, int power = 1) { return Polynomial::variable(v, power); }

std::array<int, kQuadraticCount> halves(Quadratic q, int e) {
  std::array<int, kQuadraticCount> h{};
  h[static_cast<int>(q)] = e;
  return h;
}

bool is_zero_form(const Form& f) { return form_eq(f, Form(f.context())); }

}  // namespace

TEST_CASE("variable layout") {
  const VariableContext ctx(2, 3);
  CHECK(ctx.variable_count() == 7);
  CHECK(ctx.z(2) == 1);
  CHECK(ctx.zbar(1) == 2);
  CHECK(ctx.x(3) == 6);
  CHECK(ctx.conjugate(ctx.z(2)) == ctx.zbar(2));
  CHECK(ctx.conjugate(ctx.x(1)) == ctx.x(1));
  CHECK(ctx.variable_name(ctx.zbar(2)) == "zbar2");
}

TEST_CASE("polynomial arithmetic") {
  const VariableContext ctx(2);
  const Polynomial z1 = var(ctx.z(1)), zb1 = var(ctx.zbar(1)), z2 = var(ctx.z(2));
  const Polynomial s = z1 + zb1;
  CHECK(s.pow(3) == s * s * s);
  CHECK(s.pow(2) == z1 * z1 + Polynomial(Scalar(2)) * z1 * zb1 + zb1 * zb1);
  CHECK((z1 * z2).total_degree() == 2);
  CHECK((z1.pow(3) * z2).derivative(ctx.z(1)) == Polynomial(Scalar(3)) * z1.pow(2) * z2);
  CHECK(z2.derivative(ctx.z(1)).is_zero());
  CHECK((s - s).is_zero());
  CHECK((Polynomial(Scalar(5)) + z1).constant_term() == Scalar(5));
}

TEST_CASE("conjugation swaps z and zbar and conjugates scalars") {
  const VariableContext ctx(1);
  const Polynomial p = var(ctx.z(1)) * Scalar::i() + var(ctx.zbar(1), 2);
  const Polynomial q = var(ctx.zbar(1)) * (-Scalar::i()) + var(ctx.z(1), 2);
  CHECK(p.conjugate(ctx) == q);
  CHECK(p.conjugate(ctx).conjugate(ctx) == p);
}

TEST_CASE("polynomial substitution") {
  const VariableContext ctx(1);
  const Polynomial z = var(ctx.z(1)), zb = var(ctx.zbar(1));
  // z -> z + zbar, zbar -> z - zbar
  const Polynomial p = z * zb;
  CHECK(p.substitute({z + zb, z - zb}) == z * z - zb * zb);
}

TEST_CASE("wedge signs") {
  CHECK(popcount(0b1011) == 3);
  CHECK(wedge_sign(0b01, 0b10) == 1);
  CHECK(wedge_sign(0b10, 0b01) == -1);
  CHECK(wedge_sign(0b100, 0b011) == 1);
  CHECK(wedge_sign(0b010, 0b101) == -1);
}

TEST_CASE("exterior algebra basics") {
  const VariableContext ctx(2);
  const Form dz1 = Form::differential(ctx, ctx.z(1));
  const Form dz2 = Form::differential(ctx, ctx.z(2));
  const Form dzb1 = Form::differential(ctx, ctx.zbar(1));
  CHECK(wedge(dz1, dz1).is_zero());
  CHECK(form_eq(wedge(dz1, dz2), -wedge(dz2, dz1)));
  CHECK(wedge(wedge(dz1, dzb1), dz2).bidegree() == Bidegree{2, 1});
  CHECK_FALSE((dz1 + dzb1).bidegree().has_value());
  CHECK((dz1 + dzb1).degree() == 1);
  CHECK(form_eq(bidegree_component(dz1 + dzb1, 0, 1), dzb1));
}

TEST_CASE("differentials of polynomials") {
  const VariableContext ctx(2);
  const Form f = Form::function(ctx, var(ctx.z(1)) * var(ctx.zbar(2), 2));
  const Form expected_dbar = Form::function(ctx, Polynomial(Scalar(2)) * var(ctx.z(1)) * var(ctx.zbar(2)));
  CHECK(form_eq(dbar(f), wedge(expected_dbar, Form::differential(ctx, ctx.zbar(2)))));
  CHECK(form_eq(del(f), wedge(Form::function(ctx, var(ctx.zbar(2), 2)), Form::differential(ctx, ctx.z(1)))));
  CHECK(form_eq(d_total(f), del(f) + dbar(f)));
}

TEST_CASE("dbar of an inverse power of |z|^2") {
  const VariableContext ctx(2);
  // dbar |z|^{-2} = -|z|^{-4} sum z_i dzbar_i
  const Form f = Form::function(ctx, Coefficient(Polynomial(Scalar(1)), {}, halves(Quadratic::NormZ, -2)));
  Form expected(ctx);
  for (int i = 1; i <= 2; ++i)
    expected += wedge(Form::function(ctx, Coefficient(-var(ctx.z(i)), {}, halves(Quadratic::NormZ, -4))),
                      Form::differential(ctx, ctx.zbar(i)));
  CHECK(is_zero_form(dbar(f) - expected));
}

TEST_CASE("coefficients with half-integer powers add over a common denominator") {
  const VariableContext ctx(1);
  // z zbar / |z|^2 = 1 once the quadratic is expanded.
  const Form a = Form::function(ctx, Coefficient(var(ctx.z(1)) * var(ctx.zbar(1)), {}, halves(Quadratic::NormZ, -2)));
  CHECK(is_zero_form(a - Form::constant(ctx, Scalar(1))));
  // z / z = 1 via the monomial denominator.
  Monomial m{};
  m[ctx.z(1)] = 1;
  const Form b = Form::function(ctx, Coefficient(var(ctx.z(1)), m));
  CHECK(is_zero_form(b - Form::constant(ctx, Scalar(1))));
}

TEST_CASE("real exterior derivative") {
  const VariableContext ctx = VariableContext::real(3);
  const Form w = wedge(Form::function(ctx, var(ctx.x(1))), Form::differential(ctx, ctx.x(2)));
  CHECK(form_eq(d_real(w), wedge(Form::differential(ctx, ctx.x(1)), Form::differential(ctx, ctx.x(2)))));
  CHECK(d_real(d_real(Form::function(ctx, var(ctx.x(1), 3) * var(ctx.x(3))))).is_zero());
}

TEST_CASE("form substitution follows d-linearity") {
  const VariableContext ctx(1);
  const Form dz = Form::differential(ctx, ctx.z(1));
  const Polynomial two_z = var(ctx.z(1)) * Scalar(2);
  const Form s = substitute(wedge(Form::function(ctx, var(ctx.z(1))), dz), ctx, {two_z, var(ctx.zbar(1))});
  CHECK(form_eq(s, wedge(Form::function(ctx, var(ctx.z(1)) * Scalar(4)), dz)));
}

TEST_CASE("numeric evaluation of coefficients") {
  const VariableContext ctx(2);
  const Form f =
      Form::function(ctx, Coefficient(var(ctx.z(1)) * var(ctx.zbar(2)), {}, halves(Quadratic::NormZ, -1)));
  const std::vector<Complex> p = {Complex(0.3, -0.4), Complex(1.2, 0.5)};
  const double norm = std::sqrt(std::norm(p[0]) + std::norm(p[1]));
  const Complex expected = p[0] * std::conj(p[1]) / norm;
  CHECK(std::abs(eval_numeric(f, p, {}) - expected) < 1e-14);
  CompiledForm c(f);
  ExteriorValue v = c.evaluate(p);
  REQUIRE(v.size() == 1);
  CHECK(std::abs(v[0].second - expected) < 1e-14);
}

TEST_CASE("poles are reported instead of evaluated") {
  const VariableContext ctx(1);
  Monomial m{};
  m[ctx.z(1)] = 1;
  const Form f = Form::function(ctx, Coefficient(Polynomial(Scalar(1)), m));
  const std::vector<Complex> origin = {Complex(0, 0)};
  CHECK_THROWS_AS(eval_numeric(f, origin, {}), PoleError);
}

TEST_CASE("beta_1 on the unit circle") {
  // At z = 1 the tangent of the positively oriented circle is i; beta_1 = dz / (2 pi i z).
  const std::vector<Complex> p = {Complex(1, 0)};
  const std::vector<std::vector<Complex>> frame = {{Complex(0, 1)}};
  CHECK(std::abs(eval_numeric(bochner_martinelli(1), p, frame) - 1.0 / (2 * std::numbers::pi)) < 1e-15);
}

TEST_CASE("beta_1 agrees with kappa_1 pointwise") {
  const std::vector<std::vector<Complex>> frame = {{Complex(0.3, 0.7)}};
  for (Complex z : {Complex(0.5, 0.1), Complex(-2, 1), Complex(0, -0.3)}) {
    const std::vector<Complex> p = {z};
    CHECK(std::abs(eval_numeric(bochner_martinelli(1), p, frame) - eval_numeric(cauchy(1), p, frame)) < 1e-14);
  }
}

TEST_CASE("finite-difference dbar of numeric forms") {
  const VariableContext ctx(1);
  // f = zbar^2 z: dbar f = 2 z zbar dzbar.
  const NumericForm f = NumericForm::function(ctx, [](PointView p) { return std::conj(p[0]) * std::conj(p[0]) * p[0]; });
  const std::vector<Complex> p = {Complex(0.4, -0.9)};
  auto fd = finite_difference_dbar(f, p);
  const BasisMask dzb = BasisMask{1} << ctx.zbar(1);
  REQUIRE(fd.count(dzb));
  CHECK(std::abs(fd[dzb] - 2.0 * p[0] * std::conj(p[0])) < 1e-9);
}
