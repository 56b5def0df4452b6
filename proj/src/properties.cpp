#include "rdc/properties.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <numeric>

namespace rdc {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Scalar random_scalar(std::mt19937_64& rng) {
  Scalar re = Scalar::rational(uniform(rng, -5, 5), uniform(rng, 1, 3));
  if (uniform(rng, 0, 3) == 0) return re + Scalar::i() * Scalar(uniform(rng, -3, 3));
  return re;
}

std::vector<int> choose(std::mt19937_64& rng, std::vector<int> pool, int k) {
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(k);
  return pool;
}

// Collects trial outcomes for one named identity.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}
  void check(bool ok, const std::function<std::string()>& residual) {
    ++trials_;
    if (!ok && passed_) {
      passed_ = false;
      residual_ = residual();
    }
  }
  void vacuous() { vacuous_ = true; }
  CheckRecord record() const {
    std::string detail = std::to_string(trials_) + " random trials";
    CheckRecord r = exact_record(name_, passed_, passed_ ? "0" : residual_, detail);
    if (passed_ && (vacuous_ || trials_ == 0)) r.status = Status::VacuousPass;
    return r;
  }

 private:
  std::string name_;
  std::string residual_;
  int trials_ = 0;
  bool passed_ = true;
  bool vacuous_ = false;
};

Covering generic_covering(int size) {
  Covering c;
  for (int k = 0; k < size; ++k) c.sets.push_back(Domain::all_space());
  return c;
}

}  // namespace

Polynomial random_polynomial(std::mt19937_64& rng, const VariableContext& ctx, const RandomFormSpec& spec) {
  Polynomial p;
  const int vars = ctx.variable_count();
  const int count = uniform(rng, 1, spec.max_monomials);
  for (int k = 0; k < count; ++k) {
    Monomial m{};
    int degree = uniform(rng, 0, spec.max_degree);
    for (int d = 0; d < degree; ++d) ++m[uniform(rng, 0, vars - 1)];
    p.add_term(m, random_scalar(rng));
  }
  return p;
}

Form random_form(std::mt19937_64& rng, const VariableContext& ctx, int p, int q, const RandomFormSpec& spec) {
  Form out(ctx);
  std::vector<int> hol;
  std::vector<int> anti;
  if (ctx.n() > 0) {
    for (int i = 1; i <= ctx.n(); ++i) {
      hol.push_back(ctx.z(i));
      anti.push_back(ctx.zbar(i));
    }
  } else {
    for (int i = 1; i <= ctx.l(); ++i) hol.push_back(ctx.x(i));
    q = 0;
  }
  if (p < 0 || q < 0 || p > static_cast<int>(hol.size()) || q > static_cast<int>(anti.size())) return out;
  const int terms = uniform(rng, 1, spec.max_terms);
  for (int t = 0; t < terms; ++t) {
    BasisMask mask = 0;
    for (int v : choose(rng, hol, p)) mask |= BasisMask{1} << v;
    for (int v : choose(rng, anti, q)) mask |= BasisMask{1} << v;
    Monomial den{};
    std::array<int, kQuadraticCount> halves{};
    if (spec.denominators && ctx.n() > 0) {
      if (uniform(rng, 0, 1)) den[ctx.z(uniform(rng, 1, ctx.n()))] = static_cast<std::uint8_t>(uniform(rng, 1, 2));
      if (uniform(rng, 0, 1)) halves[static_cast<int>(Quadratic::NormZ)] = -uniform(rng, 1, 4);
    }
    out += Form::term(ctx, mask, Coefficient(random_polynomial(rng, ctx, spec), den, halves));
  }
  return out;
}

Cochain random_cochain(std::mt19937_64& rng, const Covering& covering, const VariableContext& ctx, int p, int q,
                       const RandomFormSpec& spec) {
  Cochain c(covering, ctx, p, q);
  for (int q1 = 0; q1 <= q && q1 < covering.size(); ++q1) {
    for (const Simplex& s : simplices(covering.size(), q1)) {
      bool all_primed = std::all_of(s.begin(), s.end(), [&](int a) { return covering.is_primed(a); });
      if (all_primed || uniform(rng, 0, 3) == 0) continue;
      c.set(s, random_form(rng, ctx, p, q - q1, spec));
    }
  }
  return c;
}

HyperformRep random_hyperform(std::mt19937_64& rng, int n, int p, const RandomFormSpec& spec) {
  const VariableContext ctx(n);
  Form xi01 = random_form(rng, ctx, p, n - 1, spec);
  return {n, p, dbar(xi01), xi01, SupportTag::General};
}

std::vector<CheckRecord> form_property_suite(int n, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  const VariableContext ctx(n);
  RandomFormSpec spec;
  spec.denominators = true;
  Tally dbar2("dbar dbar = 0"), del2("del del = 0"), anti("del dbar + dbar del = 0"),
      graded("a ^ b = (-1)^{deg a deg b} b ^ a"), leibniz("dbar(a ^ b) = dbar a ^ b + (-1)^{deg a} a ^ dbar b"),
      split("sum of bidegree components = a");
  for (int t = 0; t < trials; ++t) {
    const int p = uniform(rng, 0, n), q = uniform(rng, 0, n);
    const int p2 = uniform(rng, 0, n - p), q2 = uniform(rng, 0, n - q);
    Form a = random_form(rng, ctx, p, q, spec);
    Form b = random_form(rng, ctx, p2, q2, spec);
    Form z = dbar(dbar(a));
    dbar2.check(z.is_zero(), [&] { return z.str(); });
    Form z2 = del(del(a));
    del2.check(z2.is_zero(), [&] { return z2.str(); });
    Form z3 = del(dbar(a)) + dbar(del(a));
    anti.check(form_eq(z3, Form(ctx)), [&] { return z3.str(); });
    const int da = p + q, db = p2 + q2;
    Form g = wedge(a, b) - wedge(b, a) * Scalar((da * db) % 2 ? -1 : 1);
    graded.check(form_eq(g, Form(ctx)), [&] { return g.str(); });
    Form l = dbar(wedge(a, b)) - wedge(dbar(a), b) - wedge(a, dbar(b)) * Scalar(da % 2 ? -1 : 1);
    leibniz.check(form_eq(l, Form(ctx)), [&] { return l.str(); });
    Form mixed = a + b;
    Form sum(ctx);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) sum += bidegree_component(mixed, i, j);
    split.check(form_eq(sum, mixed), [&] { return (sum - mixed).str(); });
  }
  return {dbar2.record(), del2.record(), anti.record(), graded.record(), leibniz.record(), split.record()};
}

std::vector<CheckRecord> cech_property_suite(int n, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  const VariableContext ctx(n);
  RandomFormSpec spec;
  spec.max_monomials = 2;
  Tally delta2("cech delta^2 = 0"), theta2("vartheta^2 = 0"), commute("del vartheta = vartheta del"),
      leibniz("vartheta(x u y) = vartheta x u y + (-1)^{p+q} x u vartheta y"), assoc("(x u y) u w = x u (y u w)"),
      unit("x u 1 = x"), relative("relative condition preserved by vartheta, del and cup");
  const Covering coverings[] = {generic_covering(3), n >= 2 ? Covering::coordinate(n) : generic_covering(2)};
  for (int t = 0; t < trials; ++t) {
    const Covering& cov = coverings[t % 2];
    auto random = [&](int max_p, int max_q) {
      int p = uniform(rng, 0, max_p), q = uniform(rng, 0, max_q);
      return random_cochain(rng, cov, ctx, p, q, spec);
    };
    Cochain x = random(std::min(n, 1), 2);
    Cochain d2 = cech_delta(cech_delta(x));
    delta2.check(d2.is_zero(), [&] { return d2.str(); });
    Cochain t2 = vartheta(vartheta(x));
    theta2.check(t2.is_zero(), [&] { return t2.str(); });
    if (x.p() < n) {
      Cochain c = del_total(vartheta(x)) - vartheta(del_total(x));
      commute.check(c.is_zero(), [&] { return c.str(); });
    }
    Cochain y = random(n - x.p(), 1);
    Cochain lhs = vartheta(cup(x, y));
    Cochain rhs = cup(vartheta(x), y);
    Cochain xy = cup(x, vartheta(y));
    if ((x.p() + x.q()) % 2) rhs -= xy;
    else rhs += xy;
    leibniz.check(cochain_eq(lhs, rhs), [&] { return (lhs - rhs).str(); });
    if (x.p() + y.p() < n) {
      Cochain w = random(n - x.p() - y.p(), 1);
      Cochain a1 = cup(cup(x, y), w);
      Cochain a2 = cup(x, cup(y, w));
      assoc.check(cochain_eq(a1, a2), [&] { return (a1 - a2).str(); });
    }
    Cochain one(cov, ctx, 0, 0);
    for (int k = 0; k < cov.size(); ++k) one.set({k}, Form::constant(ctx, Scalar(1)));
    Cochain u = cup(x, one);
    unit.check(cochain_eq(u, x), [&] { return (u - x).str(); });

    Covering rel = Covering::two_set(Domain::complement_of("S"), Domain::neighborhood_of("S"));
    Cochain r = random_cochain(rng, rel, ctx, 0, uniform(rng, 0, 2), spec);
    Cochain s = random_cochain(rng, rel, ctx, uniform(rng, 0, 1), uniform(rng, 0, 1), spec);
    bool ok = check_relative(r) && check_relative(vartheta(r)) && check_relative(del_total(r)) &&
              check_relative(cup(r, s));
    relative.check(ok, [&] { return std::string("relative condition violated"); });
  }
  return {delta2.record(), theta2.record(), commute.record(), leibniz.record(),
          assoc.record(),  unit.record(),   relative.record()};
}

std::vector<CheckRecord> hyperform_property_suite(int n, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  RandomFormSpec spec;
  spec.max_monomials = 2;
  Tally dd("d_hyper d_hyper = 0"), partials("partial_i partial_j = partial_j partial_i"),
      cocycle("cocycle condition preserved by mult, partial, d_hyper");
  for (int t = 0; t < trials; ++t) {
    if (n >= 2) {
      HyperformRep u = random_hyperform(rng, n, uniform(rng, 0, n - 2), spec);
      HyperformRep v = d_hyper(d_hyper(u));
      dd.check(v.xi1().is_zero() && v.xi01().is_zero(), [&] { return v.xi01().str(); });
    }
    HyperformRep u = random_hyperform(rng, n, uniform(rng, 0, n), spec);
    const int i = uniform(rng, 1, n), j = uniform(rng, 1, n);
    HyperformRep a = partial_x(i, partial_x(j, u));
    HyperformRep b = partial_x(j, partial_x(i, u));
    partials.check(rep_eq(a, b), [&] { return (a.xi01() - b.xi01()).str(); });
    Polynomial f = random_polynomial(rng, VariableContext::real(n), spec);
    bool ok = u.cocycle() && mult_analytic(f, u).cocycle() && partial_x(i, u).cocycle() &&
              (u.p() == n || d_hyper(u).cocycle());
    cocycle.check(ok, [&] { return std::string("cocycle condition lost"); });
  }
  if (n < 2) dd.vacuous();
  return {dd.record(), partials.record(), cocycle.record()};
}

CheckRecord dbar_consistency(const std::string& name, const Form& a, int samples, std::uint64_t seed,
                             double tolerance) {
  const VariableContext& ctx = a.context();
  const int n = ctx.n();
  std::optional<int> deg = a.degree();
  NumericForm f = NumericForm::from(a, deg.value_or(0));
  CompiledForm exact(dbar(a));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> radius(0.5, 1.5);
  double worst = 0.0;
  int done = 0;
  for (int attempt = 0; done < samples && attempt < 20 * samples; ++attempt) {
    std::vector<Complex> p(n + ctx.l());
    double norm = 0.0;
    for (int j = 0; j < n; ++j) {
      p[j] = Complex(normal(rng), normal(rng));
      norm += std::norm(p[j]);
    }
    const double r = radius(rng);
    for (int j = 0; j < n; ++j) p[j] *= r / std::sqrt(norm);
    try {
      // Skip points whose finite-difference stencil comes close to a pole.
      std::map<BasisMask, Complex> want = collect(exact.evaluate(p));
      std::map<BasisMask, Complex> got = finite_difference_dbar(f, p);
      double scale = std::max(value_norm(want), value_norm(collect(f(p))));
      double err = scale > 0 ? value_distance(got, want) / scale : value_distance(got, want);
      worst = std::max(worst, err);
      ++done;
    } catch (const PoleError&) {
    }
  }
  CheckRecord rec = numeric_record(name, worst, 0.0, tolerance, std::nullopt,
                                   std::to_string(done) + " random points, max relative error");
  if (done < samples) {
    rec.status = Status::Fail;
    rec.detail = "only " + std::to_string(done) + " off-pole points found";
  }
  return rec;
}

}  // namespace rdc
