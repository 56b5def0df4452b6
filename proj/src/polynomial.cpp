#include "rdc/polynomial.hpp"

#include <algorithm>

namespace rdc {

std::string quadratic_name(Quadratic q) {
  switch (q) {
    case Quadratic::NormZ:
      return "|z|^2";
    case Quadratic::NormZminusZbar:
      return "|z-zbar|^2";
    case Quadratic::NormX:
      return "|x|^2";
  }
  return "?";
}

VariableContext::VariableContext(int n, int l) : n_(n), l_(l) {
  if (n < 0 || l < 0 || 2 * n + l > kMaxVariables)
    throw Error("unsupported variable context (n=" + std::to_string(n) + ", l=" + std::to_string(l) + ")");
}

int VariableContext::conjugate(int var) const {
  if (is_holomorphic(var)) return var + n_;
  if (is_antiholomorphic(var)) return var - n_;
  return var;
}

bool VariableContext::has_quadratic(Quadratic q) const {
  return q == Quadratic::NormX ? l_ > 0 : n_ > 0;
}

Polynomial VariableContext::expansion(Quadratic q) const {
  if (!has_quadratic(q)) throw Error("quadratic " + quadratic_name(q) + " not available in context");
  Polynomial out;
  switch (q) {
    case Quadratic::NormZ:
      for (int i = 1; i <= n_; ++i) out += Polynomial::variable(z(i)) * Polynomial::variable(zbar(i));
      break;
    case Quadratic::NormZminusZbar:
      for (int i = 1; i <= n_; ++i) {
        Polynomial d = Polynomial::variable(z(i)) - Polynomial::variable(zbar(i));
        out -= d * d;
      }
      break;
    case Quadratic::NormX:
      for (int i = 1; i <= l_; ++i) out += Polynomial::variable(x(i), 2);
      break;
  }
  return out;
}

std::string VariableContext::variable_name(int var) const {
  if (is_holomorphic(var)) return "z" + std::to_string(var + 1);
  if (is_antiholomorphic(var)) return "zbar" + std::to_string(var - n_ + 1);
  return "x" + std::to_string(var - 2 * n_ + 1);
}

std::string VariableContext::differential_name(int var) const { return "d" + variable_name(var); }

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial r{};
  for (int k = 0; k < kMaxVariables; ++k) {
    int e = a[k] + b[k];
    if (e > 255) throw Error("monomial exponent overflow");
    r[k] = static_cast<std::uint8_t>(e);
  }
  return r;
}

Polynomial::Polynomial(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(int var, int power) {
  Monomial m{};
  m[var] = static_cast<std::uint8_t>(power);
  return monomial(m);
}

Polynomial Polynomial::monomial(const Monomial& m, const Scalar& c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Scalar Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Scalar() : it->second;
}

int Polynomial::total_degree() const {
  int deg = 0;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (auto e : m) d += e;
    deg = std::max(deg, d);
  }
  return deg;
}

int Polynomial::min_exponent(int var) const {
  if (terms_.empty()) return 0;
  int lo = 255;
  for (const auto& [m, c] : terms_) lo = std::min<int>(lo, m[var]);
  return lo;
}

bool Polynomial::uses_variable(int var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first[var] != 0; });
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_product(ma, mb), ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw Error("negative polynomial power");
  Polynomial result(Scalar(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, c * Scalar(static_cast<long>(m[var])));
  }
  return r;
}

Polynomial Polynomial::shifted(const std::array<int, kMaxVariables>& shift) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    Monomial s{};
    for (int k = 0; k < kMaxVariables; ++k) {
      int e = m[k] + shift[k];
      if (e < 0) throw Error("shift leaves polynomial ring");
      if (e > 255) throw Error("monomial exponent overflow");
      s[k] = static_cast<std::uint8_t>(e);
    }
    r.add_term(s, c);
  }
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    Polynomial t(c);
    for (int k = 0; k < kMaxVariables; ++k) {
      if (m[k] == 0) continue;
      if (k >= static_cast<int>(images.size())) throw Error("missing substitution for variable");
      t *= images[k].pow(m[k]);
    }
    r += t;
  }
  return r;
}

Polynomial Polynomial::conjugate(const VariableContext& ctx) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    Monomial s{};
    for (int k = 0; k < ctx.variable_count(); ++k) s[ctx.conjugate(k)] = m[k];
    r.add_term(s, c.conj());
  }
  return r;
}

std::string Polynomial::str(const VariableContext& ctx) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (int k = 0; k < ctx.variable_count(); ++k) {
      if (m[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx.variable_name(k);
      if (m[k] > 1) mono += "^" + std::to_string(m[k]);
    }
    std::string coef = c.str();
    std::string term;
    if (mono.empty()) {
      term = coef;
    } else if (coef == "1") {
      term = mono;
    } else if (coef == "-1") {
      term = "-" + mono;
    } else {
      term = coef + "*" + mono;
    }
    if (!out.empty()) out += (term[0] == '-') ? " - " + term.substr(1) : " + " + term;
    else out = term;
  }
  return out;
}

}  // namespace rdc
