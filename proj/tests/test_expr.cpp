#include <doctest.h>

#include "rdc/expr.hpp"
#include "rdc/hyperfunction.hpp"
#include "rdc/kernels.hpp"

using namespace rdc;

namespace {

Polynomial var(int v, int power = 1) { return Polynomial::variable(v, power); }

bool same(const Form& a, const Form& b) { return form_eq(a - b, Form(a.context())); }

}  // namespace

TEST_CASE("parse tree shape") {
  ExprPtr e = parse_expression("1 + 2*z1^3");
  REQUIRE(e->kind == Expr::Kind::Add);
  CHECK(e->children[1]->kind == Expr::Kind::Mul);
  CHECK(e->children[1]->children[1]->kind == Expr::Kind::Caret);
  ExprPtr u = parse_expression("-a - b");
  CHECK(u->kind == Expr::Kind::Sub);
  CHECK(u->children[0]->kind == Expr::Kind::Neg);
  ExprPtr c = parse_expression("chi(3, 0, 1)");
  REQUIRE(c->kind == Expr::Kind::Call);
  CHECK(c->args == std::vector<int>{3, 0, 1});
}

TEST_CASE("polynomials") {
  const VariableContext ctx(2);
  CHECK(parse_polynomial("3 + z1^2", ctx) == Polynomial(Scalar(3)) + var(ctx.z(1), 2));
  CHECK(parse_polynomial("(z1 + zbar2)^2", ctx) == (var(ctx.z(1)) + var(ctx.zbar(2))).pow(2));
  CHECK(parse_polynomial("i*pi*z2", ctx) == var(ctx.z(2)) * (Scalar::i() * Scalar::pi()));
  CHECK(parse_polynomial("0.25*z1", ctx) == var(ctx.z(1)) * Scalar::rational(1, 4));
  CHECK(parse_polynomial("z1/2", ctx) == var(ctx.z(1)) * Scalar::rational(1, 2));
  CHECK(parse_polynomial("010 + 0.050", ctx) == Polynomial(Scalar::rational(201, 20)));
  CHECK(parse_polynomial("2^3", ctx) == Polynomial(Scalar(8)));
  CHECK(parse_polynomial("x1*x2", ctx, {true}) == var(ctx.z(1)) * var(ctx.z(2)));
}

TEST_CASE("forms and wedges") {
  const VariableContext ctx(2);
  const Form dz1 = Form::differential(ctx, ctx.z(1));
  const Form dzb2 = Form::differential(ctx, ctx.zbar(2));
  CHECK(same(parse_form("dz1 ^ dzbar2", ctx), wedge(dz1, dzb2)));
  CHECK(same(parse_form("dzbar2 ^ dz1", ctx), -wedge(dz1, dzb2)));
  CHECK(same(parse_form("z1*dz1", ctx), wedge(Form::function(ctx, var(ctx.z(1))), dz1)));
  CHECK(same(parse_form("dz1/z1", ctx), parse_form("(1/z1)*dz1", ctx)));
  // '^' between 0-forms without an integer exponent is the (commutative) wedge.
  CHECK(same(parse_form("z1 ^ z2", ctx), Form::function(ctx, var(ctx.z(1)) * var(ctx.z(2)))));
}

TEST_CASE("named kernels") {
  CHECK(same(parse_form("beta(2)", VariableContext(2)), bochner_martinelli(2)));
  CHECK(same(parse_form("kappa(3)", VariableContext(3)), cauchy(3)));
  CHECK(same(parse_form("Phi(2)", VariableContext(2)), make_Phi(2)));
  CHECK(same(parse_form("psi(3)", VariableContext::real(3)), angular_form(3)));
  CHECK(same(parse_form("delta(1)", VariableContext(1)), delta(1).xi01()));
  CHECK(same(parse_form("chi(3, 0, 2)", VariableContext(3)), chi(3, 0, MultiIndex(3, {2}))));
  CHECK(same(parse_form("z1 * beta0(2)", VariableContext(2)),
             multiply(Form::function(VariableContext(2), var(0)), bm_zero(2))));
}

TEST_CASE("parse errors carry positions") {
  const VariableContext ctx(2);
  auto pos_of = [&](const std::string& text) -> std::size_t {
    try {
      parse_form(text, ctx);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(pos_of("z1 + ") == 5);
  CHECK(pos_of("z1 * (z2") == 8);
  CHECK(pos_of("z1 $ z2") == 3);
  CHECK(pos_of("z3") == 0);           // dimension mismatch
  CHECK(pos_of("beta(3)") == 0);      // dimension mismatch
  CHECK(pos_of("foo") == 0);
  CHECK(pos_of("1/(z1 + z2)") != std::string::npos);
  CHECK_THROWS_AS(parse_polynomial("dz1", ctx), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/z1", ctx), ParseError);
}
