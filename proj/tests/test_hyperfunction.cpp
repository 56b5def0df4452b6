#include <doctest.h>

#include <cmath>

#include "rdc/hyperfunction.hpp"
#include "rdc/kernels.hpp"

using namespace rdc;

namespace {

Polynomial var(int v, int power = 1) { return Polynomial::variable(v, power); }

std::array<int, kQuadraticCount> halves(Quadratic q, int e) {
  std::array<int, kQuadraticCount> h{};
  h[static_cast<int>(q)] = e;
  return h;
}

Scalar inv_two_pi_i() { return (Scalar(2) * Scalar::pi() * Scalar::i()).inverse(); }

Form over_z_power(const VariableContext& ctx, int k, const Scalar& c) {
  Monomial m{};
  m[ctx.z(1)] = static_cast<std::uint8_t>(k);
  return Form::function(ctx, Coefficient(Polynomial(c), m));
}

bool same(const Form& a, const Form& b) { return form_eq(a - b, Form(a.context())); }

Complex pair_h(const HyperformRep& u, const Polynomial& h) {
  const int n = u.n();
  QuadratureSpec s = QuadratureSpec::for_dimension(n);
  return pair(u, wedge(Form::function(VariableContext(n), h), make_Phi(n)), s).value;
}

}  // namespace

TEST_CASE("real domains") {
  CHECK(RealDomain::ball(1).refines(RealDomain::full()));
  CHECK(RealDomain::punctured_ball(1).refines(RealDomain::punctured()));
  CHECK(RealDomain::punctured_ball(1).refines(RealDomain::ball(2)));
  CHECK_FALSE(RealDomain::ball(2).refines(RealDomain::ball(1)));
  CHECK_FALSE(RealDomain::full().refines(RealDomain::punctured()));
  CHECK(RealDomain::ball(1).intersect(RealDomain::punctured()) == RealDomain::punctured_ball(1));
  CHECK_FALSE(RealDomain::punctured().contains_origin());
}

TEST_CASE("delta at n = 1 is (0, 1 / (2 pi i z))") {
  const HyperformRep d = delta(1);
  const VariableContext ctx(1);
  CHECK(d.xi1().is_zero());
  CHECK(same(d.xi01(), over_z_power(ctx, 1, inv_two_pi_i())));
  CHECK(d.cocycle());
  CHECK(d.support() == SupportTag::CompactAtOrigin);
}

TEST_CASE("x1 delta is the constant pair (0, 1 / 2 pi i)") {
  const HyperformRep u = mult_analytic(var(0), delta(1));
  CHECK(same(u.xi01(), Form::constant(VariableContext(1), inv_two_pi_i())));
}

TEST_CASE("d/dx delta at n = 1") {
  const HyperformRep u = partial_x(1, delta(1));
  CHECK(same(u.xi01(), over_z_power(VariableContext(1), 2, -inv_two_pi_i())));
}

TEST_CASE("Leibniz rule for analytic multipliers") {
  const int n = 2;
  const VariableContext ctx(n);
  const Polynomial f = var(ctx.z(1), 2) * var(ctx.z(2)) + Polynomial(Scalar(3));
  const HyperformRep u = delta(n);
  for (int i = 1; i <= n; ++i) {
    const HyperformRep lhs = partial_x(i, mult_analytic(f, u));
    const HyperformRep a = mult_analytic(f.derivative(ctx.z(i)), u);
    const HyperformRep b = mult_analytic(f, partial_x(i, u));
    CHECK(same(lhs.xi01(), a.xi01() + b.xi01()));
  }
  CHECK(rep_eq(partial_x(1, partial_x(2, u)), partial_x(2, partial_x(1, u))));
}

TEST_CASE("pairings with delta") {
  const VariableContext c1(1), c2(2);
  CHECK(std::abs(pair_h(delta(1), Polynomial(Scalar(5))) - 5.0) < 1e-10);
  CHECK(std::abs(pair_h(delta(1), var(c1.z(1), 3) + Polynomial(Scalar(2)) ) - 2.0) < 1e-10);
  CHECK(std::abs(pair_h(delta(2), var(c2.z(1)) * var(c2.z(2)) + Polynomial(Scalar::i()))
                 - Complex(0, 1)) < 1e-9);
  CHECK(std::abs(pair_h(mult_analytic(var(c2.z(2)), delta(2)), Polynomial(Scalar(7)))) < 1e-9);
  // <d/dx delta, h> = -h'(0)
  CHECK(std::abs(pair_h(partial_x(1, delta(1)), var(c1.z(1)) * Scalar(4)) + 4.0) < 1e-10);
}

TEST_CASE("pairing with the delta form") {
  const VariableContext c2(2);
  const Form h = Form::function(c2, Polynomial(Scalar(2)) - var(c2.z(1), 2));
  CHECK(std::abs(pair(delta_form(2), h, QuadratureSpec::for_dimension(2)).value - 2.0) < 1e-9);
  CHECK(delta_form(2).p() == 2);
}

TEST_CASE("the pairing is independent of the ball radius") {
  const VariableContext c1(1);
  const Form eta = wedge(Form::function(c1, var(c1.z(1), 2) + Polynomial(Scalar(3))), make_Phi(1));
  for (double r : {0.5, 1.0, 2.0})
    CHECK(std::abs(pair(delta(1), eta, QuadratureSpec{}, r).value - 3.0) < 1e-10);
}

TEST_CASE("restriction") {
  const HyperformRep d = delta(2);
  CHECK(rep_eq(restrict(d, RealDomain::full()), d));
  const HyperformRep r1 = restrict(restrict(d, RealDomain::ball(2)), RealDomain::ball(1));
  CHECK(rep_eq(r1, restrict(d, RealDomain::ball(1))));
  CHECK(r1.support() == SupportTag::CompactAtOrigin);
  const HyperformRep away = restrict(d, RealDomain::punctured());
  CHECK(away.support() == SupportTag::General);
  CHECK_THROWS_AS(restrict(restrict(d, RealDomain::ball(1)), RealDomain::ball(2)), DomainError);
  CHECK_THROWS_AS(pair(away, make_Phi(2), QuadratureSpec::for_dimension(2)), DomainError);
  // Away from the support the local pairing vanishes.
  const VariableContext ctx(2);
  const Form eta = wedge(Form::function(ctx, var(ctx.z(1)) + Polynomial(Scalar(1))), make_Phi(2));
  QuadratureSpec s = QuadratureSpec::for_dimension(2);
  CHECK(std::abs(pair_local(away, eta, {Complex(0.8, 0), Complex(0.2, 0)}, 0.5, s).value) < 1e-9);
}

TEST_CASE("representative validation") {
  const VariableContext ctx(1);
  CHECK_THROWS(HyperformRep(1, 0, Form::differential(ctx, ctx.z(1)), Form(ctx), SupportTag::General));
  CHECK_THROWS(d_hyper(delta_form(1)));
  CHECK_THROWS(complexify(over_z_power(ctx, 1, Scalar(1))));
}

TEST_CASE("complexification") {
  const VariableContext real = VariableContext::real(2);
  const VariableContext cx(2);
  const Polynomial p = Polynomial::variable(real.x(1), 2) * Polynomial::variable(real.x(2));
  CHECK(complexify(p, 2) == var(cx.z(1), 2) * var(cx.z(2)));
  const Form w = wedge(Form::function(real, p), Form::differential(real, real.x(2)));
  CHECK(same(complexify(w), wedge(Form::function(cx, var(cx.z(1), 2) * var(cx.z(2))), Form::differential(cx, cx.z(2)))));
}

TEST_CASE("1 as a hyperfunction at n = 1 is (0, -y / (2|y|))") {
  const VariableContext ctx(1);
  // y = (z - zbar) / 2i and |y| = |z - zbar| / 2, so y / (2|y|) = (z - zbar) / (2i |z - zbar|).
  const Polynomial num = (var(ctx.z(1)) - var(ctx.zbar(1))) * (Scalar(2) * Scalar::i()).inverse();
  const Form half_sign = Form::function(ctx, Coefficient(num, {}, halves(Quadratic::NormZminusZbar, -1)));
  const HyperformRep one = one_as_hyperfunction(1);
  CHECK(same(one.xi01(), -half_sign));
  CHECK(one.cocycle());
}

TEST_CASE("1 as a hyperfunction at n = 2") {
  // psi_2(y)^{(0,1)} = -(1/2pi) (-(z1 - zbar1) dzbar2 + (z2 - zbar2) dzbar1) / |z - zbar|^2
  const VariableContext ctx(2);
  const Polynomial w1 = var(ctx.z(1)) - var(ctx.zbar(1));
  const Polynomial w2 = var(ctx.z(2)) - var(ctx.zbar(2));
  const auto h = halves(Quadratic::NormZminusZbar, -2);
  const Form expected =
      (wedge(Form::function(ctx, Coefficient(w1, {}, h)), Form::differential(ctx, ctx.zbar(2))) -
       wedge(Form::function(ctx, Coefficient(w2, {}, h)), Form::differential(ctx, ctx.zbar(1)))) *
      (Scalar(2) * Scalar::pi()).inverse();
  CHECK(same(bidegree_component(angular_form_complexified(2), 0, 1), expected));
  CHECK(same(one_closed_form(2), expected));
  CHECK(same(one_as_hyperfunction(2).xi01(), -expected));
}

TEST_CASE("embedding analytic forms commutes with d up to a coboundary") {
  const VariableContext real = VariableContext::real(2);
  const Form omega = Form::function(real, Polynomial::variable(real.x(1), 2) + Polynomial::variable(real.x(2)));
  const HyperformRep lhs = d_hyper(embed_analytic(omega));
  const HyperformRep rhs = embed_analytic(d_real(omega));
  const RelativePair t = vartheta(embed_d_witness(omega));
  CHECK(same(lhs.xi1() - rhs.xi1(), t.xi1));
  CHECK(same(lhs.xi01() - rhs.xi01(), t.xi01));
  // At n = 1 the witness vanishes and the identity is exact.
  const VariableContext r1 = VariableContext::real(1);
  const Form o1 = Form::function(r1, Polynomial::variable(r1.x(1), 3));
  CHECK(rep_eq(d_hyper(embed_analytic(o1)), embed_analytic(d_real(o1))));
  CHECK(embed_d_witness(o1).xi01.is_zero());
}
