#include "rdc/integration.hpp"

#include <cmath>
#include <random>

#include "rdc/kernels.hpp"

namespace rdc {

namespace {

double splice(double s) { return s > 0 ? std::exp(-1.0 / s) : 0.0; }
double splice_derivative(double s) { return s > 0 ? std::exp(-1.0 / s) / (s * s) : 0.0; }

Complex scalar_value(const NumericForm& f, PointView p) {
  Complex v = 0.0;
  for (const auto& [m, c] : f(p)) v += c;
  return v;
}

}  // namespace

Cutoff::Cutoff(double r0, double r1, Form g) : r0_(r0), r1_(r1), g_(std::move(g)) {
  if (!(r0 < r1)) throw Error("cutoff needs r0 < r1");
  if (!g_.is_function()) throw Error("cutoff argument must be a 0-form");
  g_numeric_ = NumericForm::from(g_, 0);
  dbar_g_ = NumericForm::from(dbar(g_), 1);
}

Cutoff Cutoff::radial(int n, double r0, double r1) {
  if (!(0 < r0)) throw Error("radial cutoff needs 0 < r0");
  VariableContext ctx(n);
  std::array<int, kQuadraticCount> halves{};
  halves[static_cast<int>(Quadratic::NormZ)] = 1;
  return Cutoff(r0, r1, Form::function(ctx, Coefficient(Polynomial(Scalar(1)), {}, halves)));
}

double Cutoff::profile(double t) const {
  double a = splice(r1_ - t);
  double b = splice(t - r0_);
  return a / (a + b);
}

double Cutoff::profile_derivative(double t) const {
  double a = splice(r1_ - t);
  double b = splice(t - r0_);
  if (a == 0.0 || b == 0.0) return 0.0;
  double da = -splice_derivative(r1_ - t);
  double db = splice_derivative(t - r0_);
  return (da * b - a * db) / ((a + b) * (a + b));
}

NumericForm Cutoff::rho1() const {
  Cutoff self = *this;
  return NumericForm::function(g_.context(), [self](PointView p) {
    return Complex(self.profile(scalar_value(self.g_numeric_, p).real()));
  });
}

NumericForm Cutoff::rho0() const {
  Cutoff self = *this;
  return NumericForm::function(g_.context(), [self](PointView p) {
    return Complex(1.0 - self.profile(scalar_value(self.g_numeric_, p).real()));
  });
}

NumericForm Cutoff::dbar_rho1() const {
  Cutoff self = *this;
  return NumericForm(g_.context(), 1, [self](PointView p) {
    double d = self.profile_derivative(scalar_value(self.g_numeric_, p).real());
    if (d == 0.0) return ExteriorValue{};
    ExteriorValue v = self.dbar_g_(p);
    for (auto& [m, c] : v) c *= d;
    return v;
  });
}

NumericPair to_numeric(const RelativePair& x, int degree) {
  return {NumericForm::from(x.xi1, degree), NumericForm::from(x.xi01, degree - 1), x.xi1.is_zero()};
}

IntegrationResult integrate_relative_pair(const NumericPair& x, double radius, const QuadratureSpec& spec) {
  const int n = x.xi01.context().n();
  IntegrationResult out = integrate(x.xi01, Cycle::negated_boundary(n, radius), spec);
  if (!x.xi1_vanishes) {
    IntegrationResult ball = integrate(x.xi1, Cycle::ball(n, radius), spec);
    out.value += ball.value;
    out.error_estimate += ball.error_estimate;
  }
  return out;
}

IntegrationResult integrate_relative_pair(const RelativePair& x, double radius, const QuadratureSpec& spec) {
  const int n = x.xi01.context().n();
  return integrate_relative_pair(to_numeric(x, 2 * n), radius, spec);
}

TransferResult transfer_check(int n, const Polynomial& h, const QuadratureSpec& spec, double tolerance,
                              double radius) {
  if (n < 1) throw Error("transfer check needs n >= 1");
  VariableContext ctx(n);
  Form hf = Form::function(ctx, h);
  const int sign = correspondence_sign(n);
  TransferResult r;
  r.h0 = h.constant_term().to_complex();
  r.sphere = integrate(wedge(hf, bochner_martinelli(n)), Cycle::sphere(n, radius), spec);
  Form gamma = wedge(hf, cauchy(n)) * Scalar(sign);
  r.torus = integrate(gamma, Cycle::torus(n, radius), spec);
  r.torus.value *= static_cast<double>(sign);
  r.records.push_back(numeric_record("sphere: int_S h beta_n = h(0)", r.sphere.value, r.h0, tolerance,
                                     r.sphere.error_estimate));
  r.records.push_back(numeric_record("torus: (-1)^{n(n-1)/2} int_Gamma gamma = h(0)", r.torus.value, r.h0, tolerance,
                                     r.torus.error_estimate));
  r.records.push_back(numeric_record("transfer: sphere side = torus side", r.sphere.value, r.torus.value, tolerance,
                                     r.sphere.error_estimate + r.torus.error_estimate));
  return r;
}

StokesResult stokes_pairing_check(const Form& theta, const Form& eta, const Cutoff& cutoff, double radius,
                                  const QuadratureSpec& spec, double tolerance) {
  const int n = theta.context().n();
  if (!(radius > 0 && radius < cutoff.r0()))
    throw DomainError("Stokes check needs 0 < radius < r0 so that rho_1 = 1 on R_1");
  Form te = wedge(theta, eta);
  if (!te.has_degree(2 * n - 1)) throw Error("theta ^ eta must have degree 2n-1");
  StokesResult r;
  QuadratureSpec shell_spec = spec;
  shell_spec.radial_panels = std::max(spec.radial_panels, 4);
  NumericForm integrand = wedge(NumericForm::from(te, 2 * n - 1), cutoff.dbar_rho1());
  r.annulus = integrate(integrand, Cycle::shell(n, cutoff.r0(), cutoff.r1()), shell_spec);
  r.boundary = integrate(te, Cycle::negated_boundary(n, radius), spec);
  r.boundary.value = -r.boundary.value;
  r.records.push_back(numeric_record("int theta^eta^dbar(rho_1) = -int_{R_01} theta^eta", r.annulus.value,
                                     r.boundary.value, tolerance,
                                     r.annulus.error_estimate + r.boundary.error_estimate));
  return r;
}

GlobalizeResult globalize_two_set(const TwoSetCochain& x, const Cutoff& cutoff, const QuadratureSpec& spec,
                                  int samples, std::uint64_t seed, double tolerance) {
  const VariableContext ctx = x.xi1.context();
  const int n = ctx.n();
  std::optional<Bidegree> bd = x.xi1.bidegree();
  if (!bd) bd = x.xi0.bidegree();
  if (!bd && x.xi01.bidegree()) bd = Bidegree{x.xi01.bidegree()->p, x.xi01.bidegree()->q + 1};
  const Bidegree b = bd.value_or(Bidegree{0, 0});
  const int degree = b.p + b.q;

  GlobalizeResult out;
  Cochain c(Covering::two_set(Domain::complement_of("K"), Domain::neighborhood_of("K")), ctx, b.p, b.q);
  c.set({0}, x.xi0);
  c.set({1}, x.xi1);
  c.set({0, 1}, x.xi01);
  Cochain t = vartheta(c);
  if (!t.is_zero()) throw Error("not a cocycle: " + t.str());
  out.records.push_back(exact_record("two-set cocycle condition", true, ""));

  out.omega = wedge(cutoff.rho0(), NumericForm::from(x.xi0, degree)) +
              wedge(cutoff.rho1(), NumericForm::from(x.xi1, degree)) +
              wedge(cutoff.dbar_rho1(), NumericForm::from(x.xi01, degree - 1));

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> radial(0.8 * cutoff.r0(), 1.1 * cutoff.r1());
  NumericForm scale_form = NumericForm::from(x.xi1, degree);
  int done = 0;
  int attempts = 0;
  while (done < samples && attempts < 20 * samples) {
    ++attempts;
    std::vector<Complex> p(ctx.n() + ctx.l(), 0.0);
    double norm = 0.0;
    for (int j = 0; j < n; ++j) {
      p[j] = Complex(normal(rng), normal(rng));
      norm += std::norm(p[j]);
    }
    double r = radial(rng);
    for (int j = 0; j < n; ++j) p[j] *= r / std::sqrt(norm);
    try {
      double residual = value_norm(finite_difference_dbar(out.omega, p));
      double scale = std::max(1.0, value_norm(collect(scale_form(p))));
      out.max_residual = std::max(out.max_residual, residual / scale);
      ++done;
    } catch (const PoleError&) {
    }
  }
  CheckRecord fd = numeric_record("dbar omega = 0 (finite differences, " + std::to_string(done) + " points)",
                                  out.max_residual, 0.0, tolerance);
  if (done < samples) fd.status = Status::Fail;
  out.records.push_back(fd);

  std::optional<Cycle> cycle;
  if (degree == 2 * n - 1) cycle = Cycle::sphere(n, 0.5 * cutoff.r0());
  else if (degree == n) cycle = Cycle::torus(n, 0.5 * cutoff.r0() / std::sqrt(static_cast<double>(n)));
  if (cycle) {
    IntegrationResult a = integrate(out.omega, *cycle, spec);
    IntegrationResult b = integrate(NumericForm::from(x.xi1, degree), *cycle, spec);
    out.records.push_back(
        numeric_record("int omega = int xi_1 on " + cycle->str() + " inside r0", a.value, b.value, 1e-10));
  }
  return out;
}

NumericPair cup_partition(const RelativePair& x, int deg_x, const RelativePair& y, int deg_y, const Cutoff& rho1) {
  const int d = deg_x + deg_y;
  NumericPair out;
  Form top = wedge(x.xi1, y.xi1);
  out.xi1 = NumericForm::from(top, d);
  out.xi1_vanishes = top.is_zero();
  NumericForm a = wedge(rho1.rho1(), NumericForm::from(wedge(x.xi01, y.xi1), d - 1));
  NumericForm b = wedge(rho1.rho0(), NumericForm::from(wedge(x.xi1, y.xi01), d - 1));
  NumericForm c = wedge(rho1.dbar_rho1(), NumericForm::from(wedge(x.xi01, y.xi01), d - 2));
  Complex s = (deg_x % 2) ? -1.0 : 1.0;
  out.xi01 = a + s * (b - c);
  return out;
}

}  // namespace rdc
