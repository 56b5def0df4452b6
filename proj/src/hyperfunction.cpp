#include "rdc/hyperfunction.hpp"

#include <cmath>
#include <limits>

#include "rdc/integration.hpp"
#include "rdc/kernels.hpp"

namespace rdc {

namespace {

double outer_radius(const RealDomain& d) {
  return (d.kind == RealDomain::Kind::Ball || d.kind == RealDomain::Kind::PuncturedBall)
             ? d.radius
             : std::numeric_limits<double>::infinity();
}

RealDomain make_domain(bool punctured, double radius) {
  if (std::isinf(radius)) return punctured ? RealDomain::punctured() : RealDomain::full();
  return punctured ? RealDomain::punctured_ball(radius) : RealDomain::ball(radius);
}

void require_same_n(const HyperformRep& u, const Form& f) {
  if (f.context() != VariableContext(u.n())) throw ContextMismatch("form does not live on C^" + std::to_string(u.n()));
}

}  // namespace

bool RealDomain::refines(const RealDomain& outer) const {
  if (outer.contains_origin() == false && contains_origin()) return false;
  return outer_radius(*this) <= outer_radius(outer);
}

RealDomain RealDomain::intersect(const RealDomain& o) const {
  return make_domain(!contains_origin() || !o.contains_origin(), std::min(outer_radius(*this), outer_radius(o)));
}

std::string RealDomain::str() const {
  switch (kind) {
    case Kind::Full: return "R^n";
    case Kind::PuncturedAtOrigin: return "R^n minus 0";
    case Kind::Ball: return "|x| < " + std::to_string(radius);
    case Kind::PuncturedBall: return "0 < |x| < " + std::to_string(radius);
  }
  return "?";
}

HyperformRep::HyperformRep(int n, int p, Form xi1, Form xi01, SupportTag support, RealDomain domain)
    : n_(n), p_(p), xi1_(std::move(xi1)), xi01_(std::move(xi01)), support_(support), domain_(domain) {
  if (n < 1) throw Error("hyperform needs n >= 1");
  if (p < 0 || p > n) throw Error("hyperform degree out of range");
  const VariableContext ctx(n);
  if (xi1_.context() != ctx || xi01_.context() != ctx) throw ContextMismatch("hyperform pieces must live on C^n");
  if (!xi1_.has_bidegree(p, n)) throw Error("xi_1 must have bidegree (p, n)");
  if (!xi01_.has_bidegree(p, n - 1)) throw Error("xi_01 must have bidegree (p, n-1)");
}

bool HyperformRep::cocycle() const { return dbar(xi1_).is_zero() && form_eq(xi1_, dbar(xi01_)); }

bool rep_eq(const HyperformRep& a, const HyperformRep& b) {
  return a.n() == b.n() && a.p() == b.p() && a.support() == b.support() && a.domain() == b.domain() &&
         form_eq(a.xi1(), b.xi1()) && form_eq(a.xi01(), b.xi01());
}

HyperformRep delta(int n) {
  const VariableContext ctx(n);
  Form xi01 = bm_zero(n) * Scalar(-hyperfunction_sign(n));
  return {n, 0, Form(ctx), xi01, SupportTag::CompactAtOrigin};
}

HyperformRep delta_form(int n) {
  const VariableContext ctx(n);
  Form xi01 = bochner_martinelli(n) * Scalar(-hyperfunction_sign(n));
  return {n, n, Form(ctx), xi01, SupportTag::CompactAtOrigin};
}

Form angular_form_complexified(int n) {
  const Form psi = angular_form(n);
  const VariableContext target(n);
  const Scalar half_over_i = (Scalar(2) * Scalar::i()).inverse();
  std::vector<std::optional<Polynomial>> images(psi.context().variable_count());
  for (int i = 1; i <= n; ++i)
    images[psi.context().x(i)] =
        (Polynomial::variable(target.z(i)) - Polynomial::variable(target.zbar(i))) * half_over_i;
  return substitute(psi, target, images);
}

Form one_closed_form(int n) {
  const VariableContext ctx(n);
  Form sum(ctx);
  BasisMask all = 0;
  for (int i = 1; i <= n; ++i) all |= BasisMask{1} << ctx.zbar(i);
  std::array<int, kQuadraticCount> halves{};
  halves[static_cast<int>(Quadratic::NormZminusZbar)] = -n;
  for (int i = 1; i <= n; ++i) {
    Polynomial c = (Polynomial::variable(ctx.z(i)) - Polynomial::variable(ctx.zbar(i))) * Scalar(i % 2 ? -1 : 1);
    sum.add_term(all & ~(BasisMask{1} << ctx.zbar(i)), Coefficient(c, {}, halves));
  }
  return sum * (Scalar::i().pow(n) * angular_constant(n));
}

HyperformRep one_as_hyperfunction(int n) {
  const VariableContext ctx(n);
  return {n, 0, Form(ctx), -bidegree_component(angular_form_complexified(n), 0, n - 1), SupportTag::General};
}

Polynomial complexify(const Polynomial& p, int n) {
  // x_i in R^n and z_i in C^n share the variable index i-1.
  for (int v = n; v < kMaxVariables; ++v)
    if (p.uses_variable(v)) throw DomainError("polynomial uses a variable outside x_1..x_" + std::to_string(n));
  return p;
}

Form complexify(const Form& real_form) {
  const VariableContext& src = real_form.context();
  if (src.n() != 0) throw DomainError("complexify expects a form on R^l");
  const int n = src.l();
  const VariableContext target(n);
  Form out(target);
  for (const auto& [key, c] : real_form.terms()) {
    if (c.denominator() != Monomial{} || c.quadratic_halves() != std::array<int, kQuadraticCount>{})
      throw DomainError("only polynomial forms can be complexified exactly");
    out.add_term(key.mask, Coefficient(complexify(c.numerator(), n)));
  }
  return out;
}

HyperformRep embed_analytic(const Form& omega_real) {
  Form omega = complexify(omega_real);
  const int n = omega.context().n();
  auto deg = omega_real.degree();
  if (!deg && !omega_real.is_zero()) throw Error("embedded form must be homogeneous");
  const int p = deg.value_or(0);
  const HyperformRep one = one_as_hyperfunction(n);
  return {n, p, Form(omega.context()), wedge(one.xi01(), omega), SupportTag::General};
}

RelativePair embed_d_witness(const Form& omega_real) {
  Form omega = complexify(omega_real);
  const int n = omega.context().n();
  if (n < 2) return {Form(omega.context()), Form(omega.context())};
  Form psi11 = bidegree_component(angular_form_complexified(n), 1, n - 2);
  Form w = wedge(psi11, omega) * Scalar(n % 2 ? -1 : 1);
  return {Form(omega.context()), w};
}

HyperformRep mult_analytic(const Polynomial& f, const HyperformRep& u) {
  const Form ff = Form::function(VariableContext(u.n()), complexify(f, u.n()));
  return {u.n(), u.p(), multiply(ff, u.xi1()), multiply(ff, u.xi01()), u.support(), u.domain()};
}

HyperformRep partial_x(int i, const HyperformRep& u) {
  if (i < 1 || i > u.n()) throw Error("partial_x index out of range");
  const int var = VariableContext(u.n()).z(i);
  return {u.n(), u.p(), coefficient_derivative(u.xi1(), var), coefficient_derivative(u.xi01(), var), u.support(),
          u.domain()};
}

HyperformRep d_hyper(const HyperformRep& u) {
  if (u.p() >= u.n()) throw Error("d of an n-hyperform is not defined (p = n)");
  const Scalar s(u.n() % 2 ? -1 : 1);
  return {u.n(), u.p() + 1, del(u.xi1()) * s, -del(u.xi01()) * s, u.support(), u.domain()};
}

HyperformRep restrict(const HyperformRep& u, const RealDomain& sub) {
  if (!sub.refines(u.domain())) throw DomainError(sub.str() + " is not contained in " + u.domain().str());
  SupportTag tag = sub.contains_origin() ? u.support() : SupportTag::General;
  return {u.n(), u.p(), u.xi1(), u.xi01(), tag, sub};
}

IntegrationResult pair(const HyperformRep& u, const Form& eta, const QuadratureSpec& spec, double radius) {
  if (u.support() != SupportTag::CompactAtOrigin)
    throw DomainError("pairing needs a representative with compact support");
  require_same_n(u, eta);
  RelativePair x = cup_relative(u.pair(), eta);
  IntegrationResult r = integrate_relative_pair(x, radius, spec);
  r.value *= static_cast<double>(hyperfunction_sign(u.n()));
  return r;
}

IntegrationResult pair_local(const HyperformRep& u, const Form& eta, const std::vector<Complex>& center,
                             double radius, const QuadratureSpec& spec) {
  require_same_n(u, eta);
  const int n = u.n();
  if (static_cast<int>(center.size()) != n) throw Error("center must have n coordinates");
  RelativePair x = cup_relative(u.pair(), eta);
  Cycle boundary = Cycle::negated_boundary(n, radius);
  boundary.center = center;
  IntegrationResult r = integrate(x.xi01, boundary, spec);
  if (!x.xi1.is_zero()) {
    Cycle ball = Cycle::ball(n, radius);
    ball.center = center;
    IntegrationResult b = integrate(x.xi1, ball, spec);
    r.value += b.value;
    r.error_estimate += b.error_estimate;
  }
  r.value *= static_cast<double>(hyperfunction_sign(n));
  return r;
}

}  // namespace rdc
