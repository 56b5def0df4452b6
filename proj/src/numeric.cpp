#include "rdc/numeric.hpp"

#include <cmath>
#include <memory>
#include <vector>

namespace rdc {

NumericForm NumericForm::from(const Form& f, std::optional<int> degree) {
  int deg = 0;
  if (degree) {
    deg = *degree;
    if (!f.has_degree(deg)) throw Error("form does not have the requested degree");
  } else {
    auto d = f.degree();
    if (!d && !f.is_zero()) throw Error("numeric form needs a homogeneous degree");
    deg = d.value_or(0);
  }
  auto compiled = std::make_shared<CompiledForm>(f);
  return NumericForm(f.context(), deg, [compiled](PointView p) { return compiled->evaluate(p); });
}

NumericForm NumericForm::function(VariableContext ctx, std::function<Complex(PointView)> f) {
  return NumericForm(ctx, 0, [f = std::move(f)](PointView p) { return ExteriorValue{{0, f(p)}}; });
}

NumericForm NumericForm::zero(VariableContext ctx, int degree) {
  return NumericForm(ctx, degree, [](PointView) { return ExteriorValue{}; });
}

NumericForm wedge(const NumericForm& a, const NumericForm& b) {
  if (!(a.context() == b.context())) throw ContextMismatch("wedge of numeric forms across contexts");
  return NumericForm(a.context(), a.degree() + b.degree(), [a, b](PointView p) {
    ExteriorValue va = a(p);
    ExteriorValue out;
    if (va.empty()) return out;
    ExteriorValue vb = b(p);
    for (const auto& [ma, ca] : va) {
      if (ca == Complex(0.0)) continue;
      for (const auto& [mb, cb] : vb) {
        if (ma & mb) continue;
        out.emplace_back(ma | mb, static_cast<double>(wedge_sign(ma, mb)) * ca * cb);
      }
    }
    return out;
  });
}

NumericForm operator+(const NumericForm& a, const NumericForm& b) {
  if (!(a.context() == b.context())) throw ContextMismatch("sum of numeric forms across contexts");
  if (a.degree() != b.degree()) throw Error("sum of numeric forms of different degree");
  return NumericForm(a.context(), a.degree(), [a, b](PointView p) {
    ExteriorValue out = a(p);
    ExteriorValue vb = b(p);
    out.insert(out.end(), vb.begin(), vb.end());
    return out;
  });
}

NumericForm operator*(Complex c, const NumericForm& a) {
  return NumericForm(a.context(), a.degree(), [a, c](PointView p) {
    ExteriorValue v = a(p);
    for (auto& [m, x] : v) x *= c;
    return v;
  });
}

NumericForm operator-(const NumericForm& a, const NumericForm& b) { return a + Complex(-1.0) * b; }

std::map<BasisMask, Complex> collect(const ExteriorValue& v) {
  std::map<BasisMask, Complex> out;
  for (const auto& [m, c] : v) out[m] += c;
  return out;
}

namespace {

using Collected = std::map<BasisMask, Complex>;

void axpy(Collected& acc, Complex s, const Collected& x) {
  for (const auto& [m, c] : x) acc[m] += s * c;
}

// Derivative along a direction in point space (Richardson on central differences).
Collected directional(const NumericForm& f, PointView point, int slot, Complex dir, double h) {
  std::vector<Complex> p(point.begin(), point.end());
  auto central = [&](double step) {
    p[slot] = point[slot] + dir * step;
    Collected plus = collect(f(p));
    p[slot] = point[slot] - dir * step;
    Collected minus = collect(f(p));
    p[slot] = point[slot];
    Collected d;
    axpy(d, 1.0 / (2 * step), plus);
    axpy(d, -1.0 / (2 * step), minus);
    return d;
  };
  Collected coarse = central(h);
  Collected fine = central(h / 2);
  Collected out;
  axpy(out, 4.0 / 3.0, fine);
  axpy(out, -1.0 / 3.0, coarse);
  return out;
}

void wedge_left(Collected& out, int var, const Collected& coefficients) {
  BasisMask bit = BasisMask{1} << var;
  for (const auto& [m, c] : coefficients) {
    if (m & bit) continue;
    bool odd = popcount(m & (bit - 1)) & 1;
    out[m | bit] += odd ? -c : c;
  }
}

}  // namespace

std::map<BasisMask, Complex> finite_difference_dbar(const NumericForm& f, PointView point, double h) {
  const VariableContext& ctx = f.context();
  Collected out;
  for (int j = 1; j <= ctx.n(); ++j) {
    Collected dx = directional(f, point, j - 1, Complex(1.0, 0.0), h);
    Collected dy = directional(f, point, j - 1, Complex(0.0, 1.0), h);
    Collected dzbar;
    axpy(dzbar, 0.5, dx);
    axpy(dzbar, Complex(0.0, 0.5), dy);
    wedge_left(out, ctx.zbar(j), dzbar);
  }
  return out;
}

std::map<BasisMask, Complex> finite_difference_d_real(const NumericForm& f, PointView point, double h) {
  const VariableContext& ctx = f.context();
  Collected out;
  for (int i = 1; i <= ctx.l(); ++i) wedge_left(out, ctx.x(i), directional(f, point, ctx.n() + i - 1, 1.0, h));
  return out;
}

double value_distance(const std::map<BasisMask, Complex>& a, const std::map<BasisMask, Complex>& b) {
  double s = 0;
  for (const auto& [m, c] : a) {
    auto it = b.find(m);
    s += std::norm(c - (it == b.end() ? Complex(0.0) : it->second));
  }
  for (const auto& [m, c] : b)
    if (!a.count(m)) s += std::norm(c);
  return std::sqrt(s);
}

double value_norm(const std::map<BasisMask, Complex>& a) {
  double s = 0;
  for (const auto& [m, c] : a) s += std::norm(c);
  return std::sqrt(s);
}

}  // namespace rdc
