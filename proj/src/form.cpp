#include "rdc/form.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace rdc {

int popcount(BasisMask m) { return std::popcount(m); }

int wedge_sign(BasisMask a, BasisMask b) {
  int inversions = 0;
  for (BasisMask rest = b; rest != 0; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    inversions += popcount(a & ~((BasisMask{2} << j) - 1));
  }
  return (inversions & 1) ? -1 : 1;
}

namespace {

int sign_below(BasisMask mask, int var) {
  return (popcount(mask & ((BasisMask{1} << var) - 1)) & 1) ? -1 : 1;
}

std::string half_exponent(int e) {
  if (e % 2 == 0) return std::to_string(e / 2);
  return std::to_string(e) + "/2";
}

std::string monomial_str(const Monomial& m, const VariableContext& ctx) {
  std::string s;
  for (int k = 0; k < ctx.variable_count(); ++k) {
    if (m[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += ctx.variable_name(k);
    if (m[k] > 1) s += "^" + std::to_string(m[k]);
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// Coefficient

Coefficient::Coefficient(Polynomial numerator, Monomial denominator, std::array<int, kQuadraticCount> quadratic_halves)
    : numerator_(std::move(numerator)), denominator_(denominator), quadratic_halves_(quadratic_halves) {
  cancel_monomial();
}

void Coefficient::cancel_monomial() {
  if (numerator_.is_zero()) {
    denominator_ = {};
    quadratic_halves_ = {};
    return;
  }
  std::array<int, kMaxVariables> shift{};
  bool any = false;
  for (int v = 0; v < kMaxVariables; ++v) {
    if (denominator_[v] == 0) continue;
    int k = std::min<int>(numerator_.min_exponent(v), denominator_[v]);
    if (k > 0) {
      shift[v] = -k;
      denominator_[v] = static_cast<std::uint8_t>(denominator_[v] - k);
      any = true;
    }
  }
  if (any) numerator_ = numerator_.shifted(shift);
}

std::uint8_t Coefficient::parity() const {
  std::uint8_t p = 0;
  for (int j = 0; j < kQuadraticCount; ++j)
    if (quadratic_halves_[j] % 2 != 0) p |= static_cast<std::uint8_t>(1u << j);
  return p;
}

Coefficient Coefficient::operator-() const {
  Coefficient c = *this;
  c.numerator_ = -c.numerator_;
  return c;
}

Coefficient& Coefficient::operator*=(const Scalar& c) {
  numerator_ *= c;
  if (numerator_.is_zero()) cancel_monomial();
  return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  std::array<int, kQuadraticCount> q{};
  for (int j = 0; j < kQuadraticCount; ++j) q[j] = a.quadratic_halves_[j] + b.quadratic_halves_[j];
  return Coefficient(a.numerator_ * b.numerator_, monomial_product(a.denominator_, b.denominator_), q);
}

Coefficient add_same_parity(const Coefficient& a, const Coefficient& b, const VariableContext& ctx) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.parity() != b.parity()) throw Error("adding coefficients with different radical parity");
  Monomial den{};
  std::array<int, kQuadraticCount> q{};
  for (int v = 0; v < kMaxVariables; ++v) den[v] = std::max(a.denominator_[v], b.denominator_[v]);
  for (int j = 0; j < kQuadraticCount; ++j) q[j] = std::min(a.quadratic_halves_[j], b.quadratic_halves_[j]);
  auto lift = [&](const Coefficient& c) {
    std::array<int, kMaxVariables> shift{};
    for (int v = 0; v < kMaxVariables; ++v) shift[v] = den[v] - c.denominator_[v];
    Polynomial p = c.numerator_.shifted(shift);
    for (int j = 0; j < kQuadraticCount; ++j) {
      int extra = (c.quadratic_halves_[j] - q[j]) / 2;
      if (extra > 0) p *= ctx.expansion(static_cast<Quadratic>(j)).pow(extra);
    }
    return p;
  };
  return Coefficient(lift(a) + lift(b), den, q);
}

Coefficient Coefficient::derivative(int var, const VariableContext& ctx) const {
  if (is_zero()) return {};
  Coefficient result(numerator_.derivative(var), denominator_, quadratic_halves_);
  if (denominator_[var] > 0) {
    Monomial den = denominator_;
    den[var] = static_cast<std::uint8_t>(den[var] + 1);
    Polynomial p = numerator_ * Scalar(-static_cast<long>(denominator_[var]));
    result = add_same_parity(result, Coefficient(p, den, quadratic_halves_), ctx);
  }
  for (int j = 0; j < kQuadraticCount; ++j) {
    int e = quadratic_halves_[j];
    if (e == 0) continue;
    Polynomial dq = ctx.expansion(static_cast<Quadratic>(j)).derivative(var);
    if (dq.is_zero()) continue;
    auto q = quadratic_halves_;
    q[j] -= 2;
    Polynomial p = numerator_ * dq * Scalar::rational(e, 2);
    result = add_same_parity(result, Coefficient(p, denominator_, q), ctx);
  }
  return result;
}

Coefficient Coefficient::conjugate(const VariableContext& ctx) const {
  Monomial den{};
  for (int v = 0; v < ctx.variable_count(); ++v) den[ctx.conjugate(v)] = denominator_[v];
  return Coefficient(numerator_.conjugate(ctx), den, quadratic_halves_);
}

std::string Coefficient::str(const VariableContext& ctx) const {
  std::string s = "(" + numerator_.str(ctx) + ")";
  std::string den = monomial_str(denominator_, ctx);
  if (!den.empty()) s += "/(" + den + ")";
  for (int j = 0; j < kQuadraticCount; ++j) {
    if (quadratic_halves_[j] == 0) continue;
    s += "*(" + quadratic_name(static_cast<Quadratic>(j)) + ")^(" + half_exponent(quadratic_halves_[j]) + ")";
  }
  return s;
}

// ---------------------------------------------------------------------------------------------
// Form

Form Form::constant(const VariableContext& ctx, const Scalar& c) { return function(ctx, Polynomial(c)); }

Form Form::function(const VariableContext& ctx, const Coefficient& c) { return term(ctx, 0, c); }

Form Form::function(const VariableContext& ctx, const Polynomial& p) { return term(ctx, 0, Coefficient(p)); }

Form Form::differential(const VariableContext& ctx, int var) {
  if (var < 0 || var >= ctx.variable_count()) throw Error("variable index out of range");
  return term(ctx, BasisMask{1} << var, Coefficient(Polynomial(Scalar(1))));
}

Form Form::term(const VariableContext& ctx, BasisMask mask, const Coefficient& c) {
  Form f(ctx);
  f.add_term(mask, c);
  return f;
}

void Form::add_term(BasisMask mask, const Coefficient& c) {
  if (c.is_zero()) return;
  TermKey key{mask, c.parity()};
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second = add_same_parity(it->second, c, ctx_);
  if (it->second.is_zero()) terms_.erase(it);
}

std::optional<Bidegree> Form::bidegree() const {
  std::optional<Bidegree> out;
  BasisMask holo = (BasisMask{1} << ctx_.n()) - 1;
  BasisMask anti = holo << ctx_.n();
  for (const auto& [key, c] : terms_) {
    Bidegree b{popcount(key.mask & holo), popcount(key.mask & anti)};
    if (out && !(*out == b)) return std::nullopt;
    out = b;
  }
  return out;
}

bool Form::has_bidegree(int p, int q) const {
  if (is_zero()) return true;
  auto b = bidegree();
  return b && b->p == p && b->q == q;
}

std::optional<int> Form::degree() const {
  std::optional<int> out;
  for (const auto& [key, c] : terms_) {
    int d = popcount(key.mask);
    if (out && *out != d) return std::nullopt;
    out = d;
  }
  return out;
}

bool Form::has_degree(int k) const {
  if (is_zero()) return true;
  auto d = degree();
  return d && *d == k;
}

Form Form::operator-() const {
  Form f = *this;
  for (auto& [key, c] : f.terms_) c = -c;
  return f;
}

Form& Form::operator+=(const Form& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && ctx_.variable_count() == 0) ctx_ = o.ctx_;
  if (!(ctx_ == o.ctx_)) throw ContextMismatch("adding forms from different variable contexts");
  for (const auto& [key, c] : o.terms_) add_term(key.mask, c);
  return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form& Form::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coef] : terms_) coef *= c;
  return *this;
}

std::string Form::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.str(ctx_);
    std::string basis;
    for (int v = 0; v < ctx_.variable_count(); ++v) {
      if (!(key.mask & (BasisMask{1} << v))) continue;
      if (!basis.empty()) basis += "^";
      basis += ctx_.differential_name(v);
    }
    if (!basis.empty()) out += " " + basis;
  }
  return out;
}

Form wedge(const Form& a, const Form& b) {
  if (!(a.context() == b.context())) throw ContextMismatch("wedge of forms from different variable contexts");
  Form r(a.context());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      if (ka.mask & kb.mask) continue;
      Coefficient c = ca * cb;
      if (wedge_sign(ka.mask, kb.mask) < 0) c = -c;
      r.add_term(ka.mask | kb.mask, c);
    }
  return r;
}

namespace {

// sum over vars v of dv ^ (d/dv) applied termwise
Form apply_d(const Form& a, const std::vector<int>& vars) {
  const VariableContext& ctx = a.context();
  Form r(ctx);
  for (const auto& [key, c] : a.terms())
    for (int v : vars) {
      BasisMask bit = BasisMask{1} << v;
      if (key.mask & bit) continue;
      Coefficient dc = c.derivative(v, ctx);
      if (dc.is_zero()) continue;
      r.add_term(key.mask | bit, sign_below(key.mask, v) < 0 ? -dc : dc);
    }
  return r;
}

std::vector<int> vars_where(const VariableContext& ctx, bool (VariableContext::*pred)(int) const) {
  std::vector<int> out;
  for (int v = 0; v < ctx.variable_count(); ++v)
    if ((ctx.*pred)(v)) out.push_back(v);
  return out;
}

}  // namespace

Form dbar(const Form& a) { return apply_d(a, vars_where(a.context(), &VariableContext::is_antiholomorphic)); }

Form del(const Form& a) { return apply_d(a, vars_where(a.context(), &VariableContext::is_holomorphic)); }

Form d_real(const Form& a) { return apply_d(a, vars_where(a.context(), &VariableContext::is_real)); }

Form d_total(const Form& a) {
  std::vector<int> all(a.context().variable_count());
  for (int v = 0; v < a.context().variable_count(); ++v) all[v] = v;
  return apply_d(a, all);
}

Form bidegree_component(const Form& a, int p, int q) {
  const VariableContext& ctx = a.context();
  BasisMask holo = (BasisMask{1} << ctx.n()) - 1;
  BasisMask anti = holo << ctx.n();
  Form r(ctx);
  for (const auto& [key, c] : a.terms())
    if (popcount(key.mask & holo) == p && popcount(key.mask & anti) == q) r.add_term(key.mask, c);
  return r;
}

Form multiply(const Form& function, const Form& a) {
  if (!function.is_function()) throw Error("multiply expects a 0-form");
  return wedge(function, a);
}

Form coefficient_derivative(const Form& a, int var) {
  return a.map_coefficients([&](const Coefficient& c) { return c.derivative(var, a.context()); });
}

bool form_eq(const Form& a, const Form& b) {
  if (!(a.context() == b.context())) throw ContextMismatch("comparing forms from different variable contexts");
  return (a - b).is_zero();
}

// ---------------------------------------------------------------------------------------------
// Substitution

namespace {

struct QuadraticImage {
  bool matched = false;
  Quadratic target = Quadratic::NormZ;
  Scalar factor;
  Polynomial expanded;
};

std::optional<std::pair<Quadratic, Scalar>> match_quadratic(const Polynomial& s, const VariableContext& target) {
  const auto& [m, c] = *s.terms().begin();
  for (int k = 0; k < kQuadraticCount; ++k) {
    auto q = static_cast<Quadratic>(k);
    if (!target.has_quadratic(q)) continue;
    Polynomial t = target.expansion(q);
    auto it = t.terms().find(m);
    if (it == t.terms().end()) continue;
    Scalar ratio = c / it->second;
    if (t * ratio == s) return std::make_pair(q, ratio);
  }
  return std::nullopt;
}

}  // namespace

Form substitute(const Form& a, const VariableContext& target, const std::vector<std::optional<Polynomial>>& images) {
  const VariableContext& src = a.context();
  if (static_cast<int>(images.size()) != src.variable_count())
    throw Error("substitution must list one entry per source variable");

  std::vector<Polynomial> full(src.variable_count());
  for (int v = 0; v < src.variable_count(); ++v)
    if (images[v]) full[v] = *images[v];
  auto image = [&](int v) -> const Polynomial& {
    if (!images[v]) throw Error("no substitution given for " + src.variable_name(v));
    return *images[v];
  };
  auto subst_poly = [&](const Polynomial& p) {
    for (int v = 0; v < src.variable_count(); ++v)
      if (!images[v] && p.uses_variable(v)) image(v);
    return p.substitute(full);
  };

  std::vector<std::optional<Form>> dimage(src.variable_count());
  auto differential = [&](int v) -> const Form& {
    if (!dimage[v]) dimage[v] = d_total(Form::function(target, image(v)));
    return *dimage[v];
  };

  std::array<std::optional<QuadraticImage>, kQuadraticCount> qimage;
  auto quadratic = [&](int j) -> const QuadraticImage& {
    if (!qimage[j]) {
      QuadraticImage qi;
      qi.expanded = subst_poly(src.expansion(static_cast<Quadratic>(j)));
      if (qi.expanded.is_zero())
        throw DomainError("quadratic " + quadratic_name(static_cast<Quadratic>(j)) + " vanishes identically under substitution");
      if (auto m = match_quadratic(qi.expanded, target)) {
        qi.matched = true;
        qi.target = m->first;
        qi.factor = m->second;
      }
      qimage[j] = std::move(qi);
    }
    return *qimage[j];
  };

  Form result(target);
  for (const auto& [key, c] : a.terms()) {
    Polynomial num = subst_poly(c.numerator());
    Scalar factor(1);
    std::array<int, kMaxVariables> den{};
    std::array<int, kQuadraticCount> halves{};
    for (int v = 0; v < src.variable_count(); ++v) {
      int m = c.denominator()[v];
      if (m == 0) continue;
      const Polynomial& img = image(v);
      if (img.is_zero()) throw DomainError("denominator variable " + src.variable_name(v) + " maps to zero");
      if (img.terms().size() != 1)
        throw DomainError("denominator variable " + src.variable_name(v) + " must map to a monomial");
      const auto& [mono, coef] = *img.terms().begin();
      factor *= coef.pow(-m);
      for (int k = 0; k < kMaxVariables; ++k) den[k] += mono[k] * m;
    }
    for (int j = 0; j < kQuadraticCount; ++j) {
      int e = c.quadratic_halves()[j];
      if (e == 0) continue;
      const QuadraticImage& qi = quadratic(j);
      if (!qi.matched) {
        if (e > 0 && e % 2 == 0) {
          num *= qi.expanded.pow(e / 2);
          continue;
        }
        throw DomainError("quadratic " + quadratic_name(static_cast<Quadratic>(j)) +
                          " does not map to a multiple of a designated quadratic");
      }
      halves[static_cast<int>(qi.target)] += e;
      if (e % 2 == 0) {
        factor *= qi.factor.pow(e / 2);
      } else {
        auto root = qi.factor.exact_sqrt();
        if (!root) throw DomainError("no exact square root of quadratic scale factor " + qi.factor.str());
        factor *= root->pow(e);
      }
    }
    Monomial den_mono{};
    for (int k = 0; k < kMaxVariables; ++k) {
      if (den[k] > 255) throw Error("monomial exponent overflow");
      den_mono[k] = static_cast<std::uint8_t>(den[k]);
    }
    Form piece = Form::function(target, Coefficient(num * factor, den_mono, halves));
    for (BasisMask rest = key.mask; rest != 0 && !piece.is_zero(); rest &= rest - 1)
      piece = wedge(piece, differential(std::countr_zero(rest)));
    result += piece;
  }
  return result;
}

// ---------------------------------------------------------------------------------------------
// Numeric evaluation

namespace {

Complex ipow(Complex x, int e) {
  Complex r = 1.0;
  while (e > 0) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

Complex determinant(std::vector<Complex> m, int k) {
  Complex det = 1.0;
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int r = col + 1; r < k; ++r)
      if (std::abs(m[r * k + col]) > std::abs(m[piv * k + col])) piv = r;
    if (m[piv * k + col] == Complex(0.0)) return 0.0;
    if (piv != col) {
      for (int c = 0; c < k; ++c) std::swap(m[piv * k + c], m[col * k + c]);
      det = -det;
    }
    det *= m[col * k + col];
    for (int r = col + 1; r < k; ++r) {
      Complex f = m[r * k + col] / m[col * k + col];
      for (int c = col; c < k; ++c) m[r * k + c] -= f * m[col * k + c];
    }
  }
  return det;
}

}  // namespace

CompiledForm::CompiledForm(const Form& form, double pole_threshold)
    : ctx_(form.context()), pole_threshold_(pole_threshold) {
  for (const auto& [key, c] : form.terms()) {
    Term t;
    t.mask = key.mask;
    for (const auto& [m, s] : c.numerator().terms()) {
      Monom mon{s.to_complex(), {}};
      for (int v = 0; v < kMaxVariables; ++v)
        if (m[v]) mon.powers.emplace_back(v, m[v]);
      t.numerator.push_back(std::move(mon));
    }
    for (int v = 0; v < kMaxVariables; ++v)
      if (c.denominator()[v]) t.denominator.emplace_back(v, c.denominator()[v]);
    t.quadratic_halves = c.quadratic_halves();
    terms_.push_back(std::move(t));
  }
}

ExteriorValue CompiledForm::evaluate(PointView point) const {
  const int n = ctx_.n();
  const int l = ctx_.l();
  if (static_cast<int>(point.size()) != n + l) throw Error("point has wrong dimension");
  std::array<Complex, kMaxVariables> vals{};
  for (int i = 0; i < n; ++i) {
    vals[i] = point[i];
    vals[n + i] = std::conj(point[i]);
  }
  for (int i = 0; i < l; ++i) vals[2 * n + i] = point[n + i].real();
  std::array<double, kQuadraticCount> qv{};
  for (int i = 0; i < n; ++i) {
    qv[0] += std::norm(point[i]);
    qv[1] += 4.0 * point[i].imag() * point[i].imag();
  }
  for (int i = 0; i < l; ++i) qv[2] += point[n + i].real() * point[n + i].real();

  ExteriorValue out;
  for (const Term& t : terms_) {
    Complex num = 0.0;
    for (const Monom& m : t.numerator) {
      Complex p = m.coefficient;
      for (const auto& [v, e] : m.powers) p *= ipow(vals[v], e);
      num += p;
    }
    Complex den = 1.0;
    for (const auto& [v, e] : t.denominator) {
      if (std::abs(vals[v]) < pole_threshold_) throw PoleError(ctx_.variable_name(v), std::abs(vals[v]));
      den *= ipow(vals[v], e);
    }
    double scale = 1.0;
    for (int j = 0; j < kQuadraticCount; ++j) {
      int e = t.quadratic_halves[j];
      if (e == 0) continue;
      if (e < 0 && qv[j] < pole_threshold_) throw PoleError(quadratic_name(static_cast<Quadratic>(j)), qv[j]);
      scale *= (e % 2 == 0) ? std::pow(qv[j], e / 2) : std::pow(std::sqrt(qv[j]), e);
    }
    Complex value = num / den * scale;
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& p) { return p.first == t.mask; });
    if (it == out.end()) out.emplace_back(t.mask, value);
    else it->second += value;
  }
  return out;
}

Complex CompiledForm::evaluate(PointView point, std::span<const std::vector<Complex>> frame) const {
  return contract(ctx_, evaluate(point), frame);
}

Complex basis_value(const VariableContext& ctx, int var, PointView vector) {
  const int n = ctx.n();
  if (ctx.is_holomorphic(var)) return vector[var];
  if (ctx.is_antiholomorphic(var)) return std::conj(vector[var - n]);
  return vector[var - n].real();  // x_i lives at slot n + (var - 2n)
}

Complex contract(const VariableContext& ctx, const ExteriorValue& value, std::span<const std::vector<Complex>> frame) {
  const int k = static_cast<int>(frame.size());
  Complex total = 0.0;
  std::vector<Complex> m(static_cast<std::size_t>(k * k));
  std::vector<int> vars;
  for (const auto& [mask, coef] : value) {
    if (popcount(mask) != k) throw Error("form degree does not match frame size");
    if (k == 0) {
      total += coef;
      continue;
    }
    vars.clear();
    for (BasisMask rest = mask; rest != 0; rest &= rest - 1) vars.push_back(std::countr_zero(rest));
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) m[a * k + b] = basis_value(ctx, vars[a], frame[b]);
    total += coef * determinant(m, k);
  }
  return total;
}

Complex eval_numeric(const Form& a, PointView point, std::span<const std::vector<Complex>> frame,
                     double pole_threshold) {
  return CompiledForm(a, pole_threshold).evaluate(point, frame);
}

}  // namespace rdc
