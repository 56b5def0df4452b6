#include "rdc/quadrature.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace rdc {

namespace {

constexpr double kPi = std::numbers::pi;

// Cascade summation: blocks of 64 summed directly, then combined as a binary counter.
class PairwiseSum {
 public:
  void add(Complex x) {
    block_ += x;
    if (++count_ < 64) return;
    Complex carry = block_;
    block_ = 0.0;
    count_ = 0;
    for (std::size_t level = 0;; ++level) {
      if (level == levels_.size()) {
        levels_.push_back(carry);
        filled_.push_back(true);
        return;
      }
      if (!filled_[level]) {
        levels_[level] = carry;
        filled_[level] = true;
        return;
      }
      carry += levels_[level];
      filled_[level] = false;
    }
  }
  Complex total() const {
    Complex s = block_;
    for (std::size_t level = 0; level < levels_.size(); ++level)
      if (filled_[level]) s += levels_[level];
    return s;
  }

 private:
  Complex block_ = 0.0;
  int count_ = 0;
  std::vector<Complex> levels_;
  std::vector<bool> filled_;
};

// Hyperspherical map on k angles: v_j = prod_{m<j} sin a_m * cos a_j (j < k+1), v_{k+1} = prod sin a_m.
// Returns values (k+1) and jacobian[angle][component].
void spherical(const double* a, int k, std::vector<double>& v, std::vector<std::vector<double>>& jac) {
  const int dim = k + 1;
  v.assign(dim, 0.0);
  jac.assign(k, std::vector<double>(dim, 0.0));
  for (int j = 0; j < dim; ++j) {
    double prefix = 1.0;
    for (int m = 0; m < j; ++m) prefix *= std::sin(a[m]);
    double tail = j < k ? std::cos(a[j]) : 1.0;
    v[j] = prefix * tail;
    for (int t = 0; t < k; ++t) {
      if (t < j) {
        double d = 1.0;
        for (int m = 0; m < j; ++m) d *= (m == t) ? std::cos(a[m]) : std::sin(a[m]);
        jac[t][j] = d * tail;
      } else if (t == j) {
        jac[t][j] = -prefix * std::sin(a[j]);
      }
    }
  }
}

double real_determinant(std::vector<std::vector<double>> m) {
  const std::size_t k = m.size();
  double det = 1.0;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (m[piv][col] == 0.0) return 0.0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < k; ++r) {
      double f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < k; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

using Frame = std::vector<std::vector<Complex>>;

struct Chart {
  std::vector<Rule1D> rules;
  std::function<void(const std::vector<double>&, std::vector<Complex>&, Frame&)> map;
};

Chart build_chart(const Cycle& cycle, int n, int l, const QuadratureSpec& spec) {
  Chart chart;
  const int slots = n + l;
  const double R = cycle.radius;
  switch (cycle.kind) {
    case Cycle::Kind::Torus: {
      std::vector<double> radii = cycle.radii.empty() ? std::vector<double>(n, R) : cycle.radii;
      if (static_cast<int>(radii.size()) != n) throw Error("torus needs one radius per coordinate");
      for (int j = 0; j < n; ++j) chart.rules.push_back(periodic_trapezoid(spec.periodic));
      chart.map = [n, slots, radii](const std::vector<double>& t, std::vector<Complex>& p, Frame& frame) {
        p.assign(slots, 0.0);
        frame.assign(n, std::vector<Complex>(slots, 0.0));
        for (int j = 0; j < n; ++j) {
          p[j] = std::polar(radii[j], t[j]);
          frame[j][j] = Complex(0.0, 1.0) * p[j];
        }
      };
      return chart;
    }
    case Cycle::Kind::Sphere:
    case Cycle::Kind::NegatedBoundaryOfBall:
    case Cycle::Kind::Ball:
    case Cycle::Kind::Shell: {
      const bool solid = cycle.kind == Cycle::Kind::Ball || cycle.kind == Cycle::Kind::Shell;
      if (solid) {
        double r0 = cycle.kind == Cycle::Kind::Shell ? cycle.inner_radius : 0.0;
        if (!(r0 >= 0.0 && r0 < R)) throw Error("shell needs 0 <= r0 < r1");
        chart.rules.push_back(composite_gauss_legendre(spec.radial, spec.radial_panels, r0, R));
      }
      for (int k = 0; k + 1 < n; ++k) chart.rules.push_back(gauss_legendre(spec.polar, 0.0, kPi / 2));
      for (int j = 0; j < n; ++j) chart.rules.push_back(periodic_trapezoid(spec.periodic));
      chart.map = [n, slots, R, solid](const std::vector<double>& t, std::vector<Complex>& p, Frame& frame) {
        const double r = solid ? t[0] : R;
        const double* theta = t.data() + (solid ? 1 : 0);
        const double* phi = theta + (n - 1);
        std::vector<double> u;
        std::vector<std::vector<double>> jac;
        spherical(theta, n - 1, u, jac);
        p.assign(slots, 0.0);
        frame.clear();
        std::vector<Complex> phase(n);
        for (int j = 0; j < n; ++j) {
          phase[j] = std::polar(1.0, phi[j]);
          p[j] = r * u[j] * phase[j];
        }
        if (solid) {
          std::vector<Complex> radial(slots, 0.0);
          for (int j = 0; j < n; ++j) radial[j] = u[j] * phase[j];
          frame.push_back(std::move(radial));
        }
        for (int k = 0; k + 1 < n; ++k) {
          std::vector<Complex> v(slots, 0.0);
          for (int j = 0; j < n; ++j) v[j] = r * jac[k][j] * phase[j];
          frame.push_back(std::move(v));
        }
        for (int j = 0; j < n; ++j) {
          std::vector<Complex> v(slots, 0.0);
          v[j] = Complex(0.0, 1.0) * p[j];
          frame.push_back(std::move(v));
        }
      };
      return chart;
    }
    case Cycle::Kind::RealSphere: {
      const int dim = cycle.n;
      if (dim < 2) throw Error("real sphere chart needs l >= 2");
      for (int k = 0; k + 2 < dim; ++k) chart.rules.push_back(gauss_legendre(spec.polar, 0.0, kPi));
      chart.rules.push_back(periodic_trapezoid(spec.periodic));
      chart.map = [n, slots, dim, R](const std::vector<double>& t, std::vector<Complex>& p, Frame& frame) {
        std::vector<double> x;
        std::vector<std::vector<double>> jac;
        spherical(t.data(), dim - 1, x, jac);
        p.assign(slots, 0.0);
        for (int i = 0; i < dim; ++i) p[n + i] = R * x[i];
        frame.assign(dim - 1, std::vector<Complex>(slots, 0.0));
        for (int k = 0; k + 1 < dim; ++k)
          for (int i = 0; i < dim; ++i) frame[k][n + i] = R * jac[k][i];
      };
      return chart;
    }
  }
  throw Error("unknown cycle kind");
}

std::vector<double> to_real(const std::vector<Complex>& v, const Cycle& cycle, int n) {
  std::vector<double> out;
  if (cycle.kind == Cycle::Kind::RealSphere) {
    for (int i = 0; i < cycle.n; ++i) out.push_back(v[n + i].real());
  } else {
    for (int j = 0; j < n; ++j) {
      out.push_back(v[j].real());
      out.push_back(v[j].imag());
    }
  }
  return out;
}

}  // namespace

Rule1D gauss_legendre(int count, double a, double b) {
  if (count < 1) throw Error("Gauss-Legendre rule needs at least one node");
  Rule1D rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  for (int i = 0; i < (count + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (count + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= count; ++k) {
        double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = count * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    double half = 0.5 * (b - a), mid = 0.5 * (b + a);
    rule.nodes[i] = mid - half * x;
    rule.nodes[count - 1 - i] = mid + half * x;
    rule.weights[i] = rule.weights[count - 1 - i] = w * half;
  }
  return rule;
}

Rule1D composite_gauss_legendre(int count, int panels, double a, double b) {
  if (panels < 1) throw Error("composite rule needs at least one panel");
  Rule1D rule;
  double h = (b - a) / panels;
  for (int k = 0; k < panels; ++k) {
    Rule1D r = gauss_legendre(count, a + k * h, a + (k + 1) * h);
    rule.nodes.insert(rule.nodes.end(), r.nodes.begin(), r.nodes.end());
    rule.weights.insert(rule.weights.end(), r.weights.begin(), r.weights.end());
  }
  return rule;
}

Rule1D periodic_trapezoid(int count) {
  if (count < 1) throw Error("trapezoid rule needs at least one node");
  Rule1D rule;
  for (int k = 0; k < count; ++k) {
    rule.nodes.push_back(2.0 * kPi * k / count);
    rule.weights.push_back(2.0 * kPi / count);
  }
  return rule;
}

int hyperfunction_sign(int n) { return ((n * (n + 1) / 2) % 2) ? -1 : 1; }

int Orientation::factor(int n) const {
  switch (kind) {
    case Kind::UsualComplex:
      return 1;
    case Kind::HyperfunctionConvention:
      return hyperfunction_sign(n);
    case Kind::Explicit:
      return sign;
  }
  return 1;
}

int Cycle::dimension() const {
  switch (kind) {
    case Kind::Sphere:
    case Kind::NegatedBoundaryOfBall:
      return 2 * n - 1;
    case Kind::Torus:
      return n;
    case Kind::Ball:
    case Kind::Shell:
      return 2 * n;
    case Kind::RealSphere:
      return n - 1;
  }
  return -1;
}

std::string Cycle::str() const {
  switch (kind) {
    case Kind::Sphere:
      return "sphere S^" + std::to_string(2 * n - 1);
    case Kind::Torus:
      return "torus T^" + std::to_string(n);
    case Kind::Ball:
      return "ball B^" + std::to_string(2 * n);
    case Kind::Shell:
      return "shell in C^" + std::to_string(n);
    case Kind::NegatedBoundaryOfBall:
      return "-boundary of ball in C^" + std::to_string(n);
    case Kind::RealSphere:
      return "real sphere S^" + std::to_string(n - 1);
  }
  return "?";
}

QuadratureSpec QuadratureSpec::for_dimension(int n) {
  QuadratureSpec s;
  if (n >= 3) {
    s.periodic = 16;
    s.polar = 16;
    s.radial = 16;
  }
  return s;
}

QuadratureSpec QuadratureSpec::halved() const {
  QuadratureSpec s = *this;
  s.periodic = std::max(2, periodic / 2);
  s.polar = std::max(2, polar / 2);
  s.radial = std::max(2, radial / 2);
  s.richardson = false;
  return s;
}

void QuadratureSpec::validate() const {
  if (periodic < 4 || polar < 4 || radial < 4) throw Error("quadrature node counts must be >= 4");
  if (radial_panels < 1) throw Error("radial panel count must be >= 1");
  if (!(tolerance > 0)) throw Error("quadrature tolerance must be positive");
}

int chart_orientation(const Cycle& cycle, int n, int l) {
  if (cycle.kind == Cycle::Kind::Torus) return 1;
  QuadratureSpec probe;
  probe.periodic = 8;
  probe.polar = 5;
  probe.radial = 5;
  Chart chart = build_chart(cycle, n, l, probe);
  std::vector<double> t;
  for (const Rule1D& r : chart.rules) t.push_back(r.nodes[r.nodes.size() / 2 + (r.nodes.size() > 2 ? 1 : 0)]);
  std::vector<Complex> p;
  Frame frame;
  chart.map(t, p, frame);
  std::vector<std::vector<double>> m;
  bool boundary = cycle.kind == Cycle::Kind::Sphere || cycle.kind == Cycle::Kind::NegatedBoundaryOfBall ||
                  cycle.kind == Cycle::Kind::RealSphere;
  if (boundary) m.push_back(to_real(p, cycle, n));
  for (const auto& v : frame) m.push_back(to_real(v, cycle, n));
  double det = real_determinant(m);
  if (det == 0.0) throw Error("degenerate chart at orientation probe");
  return det > 0 ? 1 : -1;
}

namespace {

Complex integrate_once(const NumericForm& form, const Cycle& cycle, const QuadratureSpec& spec, int sign) {
  const int n = form.context().n();
  const int l = form.context().l();
  Chart chart = build_chart(cycle, n, l, spec);
  const int dims = static_cast<int>(chart.rules.size());
  std::vector<std::size_t> idx(dims, 0);
  std::vector<double> t(dims);
  std::vector<Complex> p;
  Frame frame;
  PairwiseSum sum;
  while (true) {
    double w = 1.0;
    for (int d = 0; d < dims; ++d) {
      t[d] = chart.rules[d].nodes[idx[d]];
      w *= chart.rules[d].weights[idx[d]];
    }
    chart.map(t, p, frame);
    for (std::size_t j = 0; j < cycle.center.size(); ++j) p[j] += cycle.center[j];
    sum.add(w * contract(form.context(), form(p), frame));
    int d = dims - 1;
    while (d >= 0 && ++idx[d] == chart.rules[d].nodes.size()) {
      idx[d] = 0;
      --d;
    }
    if (d < 0) break;
  }
  return static_cast<double>(sign) * sum.total();
}

}  // namespace

IntegrationResult integrate(const NumericForm& form, const Cycle& cycle, const QuadratureSpec& spec) {
  spec.validate();
  const VariableContext& ctx = form.context();
  if (form.degree() != cycle.dimension())
    throw Error("form of degree " + std::to_string(form.degree()) + " cannot be integrated over " + cycle.str());
  if (cycle.kind == Cycle::Kind::RealSphere) {
    if (cycle.n != ctx.l() || cycle.n < 1) throw Error("real sphere dimension does not match context");
  } else if (cycle.n != ctx.n() || cycle.n < 1) {
    throw Error("cycle dimension does not match context");
  }
  if (!(cycle.radius > 0)) throw Error("cycle radius must be positive");
  if (cycle.center.size() > static_cast<std::size_t>(ctx.n() + ctx.l())) throw Error("cycle center has wrong dimension");

  int sign = cycle.orientation.factor(cycle.kind == Cycle::Kind::RealSphere ? 0 : cycle.n);
  if (cycle.kind == Cycle::Kind::NegatedBoundaryOfBall) sign = -sign;

  if (cycle.kind == Cycle::Kind::RealSphere && cycle.n == 1) {
    // S^0 = {+r} - {-r}
    std::vector<Complex> p(ctx.n() + 1, 0.0);
    p[ctx.n()] = cycle.radius;
    Complex plus = contract(ctx, form(p), {});
    p[ctx.n()] = -cycle.radius;
    Complex minus = contract(ctx, form(p), {});
    return {static_cast<double>(sign) * (plus - minus), 0.0};
  }

  sign *= chart_orientation(cycle, ctx.n(), ctx.l());
  IntegrationResult result;
  result.value = integrate_once(form, cycle, spec, sign);
  if (spec.richardson) result.error_estimate = std::abs(result.value - integrate_once(form, cycle, spec.halved(), sign));
  return result;
}

IntegrationResult integrate(const Form& form, const Cycle& cycle, const QuadratureSpec& spec) {
  if (form.is_zero()) return {};
  return integrate(NumericForm::from(form), cycle, spec);
}

}  // namespace rdc
