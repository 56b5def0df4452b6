#include "rdc/kernels.hpp"

#include <algorithm>

namespace rdc {

namespace {

Scalar two_pi_i() { return Scalar(2) * Scalar::pi() * Scalar::i(); }

BasisMask holomorphic_mask(const VariableContext& ctx) {
  BasisMask m = 0;
  for (int i = 1; i <= ctx.n(); ++i) m |= BasisMask{1} << ctx.z(i);
  return m;
}

Form quadratic_power(const VariableContext& ctx, Quadratic q, int halves) {
  std::array<int, kQuadraticCount> h{};
  h[static_cast<int>(q)] = halves;
  return Form::function(ctx, Coefficient(Polynomial(Scalar(1)), {}, h));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

}  // namespace

Scalar bm_constant(int n) {
  require(n >= 1, "C_n needs n >= 1");
  return Scalar(correspondence_sign(n)) * factorial(n - 1) / two_pi_i().pow(n);
}

Scalar angular_constant(int l) {
  require(l >= 1, "C_l needs l >= 1");
  int k = l / 2;
  if (l % 2 == 0) return factorial(k - 1) / (Scalar(2) * Scalar::pi().pow(k));
  return factorial(2 * k) / (Scalar(2).pow(l) * Scalar::pi().pow(k) * factorial(k));
}

int correspondence_sign(int n) { return ((n * (n - 1) / 2) % 2) ? -1 : 1; }

int weil_lemma_sign(int q) { return ((q * (q + 1) / 2) % 2) ? -1 : 1; }

MultiIndex::MultiIndex(int n_, std::vector<int> I_) : n(n_), I(std::move(I_)) {
  require(!I.empty(), "multi-index must be nonempty");
  for (std::size_t k = 0; k < I.size(); ++k) {
    require(I[k] >= 1 && I[k] <= n, "multi-index entry out of range");
    require(k == 0 || I[k - 1] < I[k], "multi-index must be strictly increasing");
  }
}

std::vector<int> MultiIndex::complement() const {
  std::vector<int> out;
  for (int j = 1; j <= n; ++j)
    if (!std::binary_search(I.begin(), I.end(), j)) out.push_back(j);
  return out;
}

int MultiIndex::complement_sum() const {
  int s = 0;
  for (int j : complement()) s += j;
  return s;
}

Form make_Phi(int n) {
  VariableContext ctx(n);
  return Form::term(ctx, holomorphic_mask(ctx), Coefficient(Polynomial(Scalar(1))));
}

Form make_Phi_i(int n, int i) {
  require(i >= 1 && i <= n, "Phi_i index out of range");
  VariableContext ctx(n);
  BasisMask mask = holomorphic_mask(ctx) & ~(BasisMask{1} << ctx.z(i));
  Polynomial c = Polynomial::variable(ctx.z(i)) * Scalar(i % 2 ? 1 : -1);
  return Form::term(ctx, mask, Coefficient(c));
}

Form make_Phibar_i(int n, int i) {
  require(i >= 1 && i <= n, "Phibar_i index out of range");
  VariableContext ctx(n);
  BasisMask mask = (holomorphic_mask(ctx) << n) & ~(BasisMask{1} << ctx.zbar(i));
  Polynomial c = Polynomial::variable(ctx.zbar(i)) * Scalar(i % 2 ? 1 : -1);
  return Form::term(ctx, mask, Coefficient(c));
}

Form make_Phibar(int n, const std::vector<int>& J) {
  VariableContext ctx(n);
  BasisMask all = 0;
  for (std::size_t k = 0; k < J.size(); ++k) {
    require(J[k] >= 1 && J[k] <= n, "index out of range");
    require(k == 0 || J[k - 1] < J[k], "index set must be strictly increasing");
    all |= BasisMask{1} << ctx.zbar(J[k]);
  }
  Form f(ctx);
  for (std::size_t mu = 0; mu < J.size(); ++mu) {
    Polynomial c = Polynomial::variable(ctx.zbar(J[mu])) * Scalar(mu % 2 ? -1 : 1);
    f.add_term(all & ~(BasisMask{1} << ctx.zbar(J[mu])), Coefficient(c));
  }
  return f;
}

Form bm_zero(int n) {
  VariableContext ctx(n);
  Form sum(ctx);
  for (int i = 1; i <= n; ++i) sum += make_Phibar_i(n, i);
  return wedge(quadratic_power(ctx, Quadratic::NormZ, -2 * n), sum) * bm_constant(n);
}

Form bochner_martinelli(int n) {
  Form beta = wedge(bm_zero(n), make_Phi(n));
  require(dbar(beta).is_zero(), "internal: Bochner-Martinelli form is not dbar-closed");
  return beta;
}

Form cauchy_zero(int n) {
  VariableContext ctx(n);
  Monomial den{};
  for (int i = 1; i <= n; ++i) den[ctx.z(i)] = 1;
  return Form::function(ctx, Coefficient(Polynomial(two_pi_i().pow(-n)), den));
}

Form cauchy(int n) { return wedge(cauchy_zero(n), make_Phi(n)); }

Form angular_form(int l) {
  require(l >= 1, "angular form needs l >= 1");
  VariableContext ctx = VariableContext::real(l);
  BasisMask all = (BasisMask{1} << l) - 1;
  Form sum(ctx);
  for (int i = 1; i <= l; ++i) {
    Polynomial c = Polynomial::variable(ctx.x(i)) * Scalar(i % 2 ? 1 : -1);
    sum.add_term(all & ~(BasisMask{1} << ctx.x(i)), Coefficient(c));
  }
  Form psi = wedge(quadratic_power(ctx, Quadratic::NormX, -l), sum) * angular_constant(l);
  require(d_real(psi).is_zero(), "internal: angular form is not closed");
  return psi;
}

Form chi(int n, int p, const MultiIndex& I) {
  require(n >= 2, "chi needs n >= 2");
  require(I.n == n, "multi-index dimension mismatch");
  require(p >= 0 && p <= n - 2, "chi needs 0 <= p <= n-2");
  require(static_cast<int>(I.I.size()) == p + 1, "chi^p needs |I| = p+1");
  const int q = n - p - 2;
  const int twice_eps = 2 * I.complement_sum() + q * (n + p - 1);
  require(twice_eps % 2 == 0, "epsilon_I is not an integer");
  const int eps = twice_eps / 2;
  VariableContext ctx(n);
  Monomial den{};
  for (int i : I.I) den[ctx.z(i)] = 1;
  std::array<int, kQuadraticCount> halves{};
  halves[static_cast<int>(Quadratic::NormZ)] = -2 * (q + 1);
  Form scale = Form::function(ctx, Coefficient(Polynomial(Scalar(1)), den, halves));
  Scalar c = Scalar(eps % 2 ? -1 : 1) * factorial(q) * bm_constant(n) / factorial(n - 1);
  return wedge(wedge(scale, make_Phibar(n, I.complement())), make_Phi(n)) * c;
}

Cochain correspondence_cochain(int n) {
  require(n >= 2, "correspondence cochain needs n >= 2");
  Cochain c(Covering::coordinate(n), VariableContext(n), n, n - 2);
  for (int p = 0; p <= n - 2; ++p)
    for (const Simplex& s : simplices(n, p)) {
      std::vector<int> I;
      for (int a : s) I.push_back(a + 1);
      c.set(s, chi(n, p, MultiIndex(n, I)));
    }
  return c;
}

namespace {

std::string index_str(const std::vector<int>& I) {
  std::string s = "(";
  for (std::size_t k = 0; k < I.size(); ++k) s += (k ? "," : "") + std::to_string(I[k]);
  return s + ")";
}

std::vector<std::vector<int>> index_sets(int n, int size) {
  std::vector<std::vector<int>> out;
  for (const Simplex& s : simplices(n, size - 1)) {
    std::vector<int> I;
    for (int a : s) I.push_back(a + 1);
    out.push_back(I);
  }
  return out;
}

// (cech delta chi^{p-1})_I
Form delta_chi(int n, int p_minus_1, const std::vector<int>& I) {
  Form acc(VariableContext{n});
  for (std::size_t nu = 0; nu < I.size(); ++nu) {
    std::vector<int> face = I;
    face.erase(face.begin() + static_cast<std::ptrdiff_t>(nu));
    Form f = chi(n, p_minus_1, MultiIndex(n, face));
    if (nu % 2) acc -= f;
    else acc += f;
  }
  return acc;
}

}  // namespace

std::vector<CheckRecord> verify_correspondence(int n) {
  require(n >= 1, "verify_correspondence needs n >= 1");
  std::vector<CheckRecord> out;
  if (n == 1) {
    Form r = bochner_martinelli(1) - cauchy(1);
    out.push_back(exact_record("beta_1 = kappa_1", r.is_zero(), r.str()));
    return out;
  }
  const Form beta = bochner_martinelli(n);

  {
    bool ok = true;
    std::string residual, where;
    for (int r = 1; r <= n && ok; ++r) {
      Form res = dbar(chi(n, 0, MultiIndex(n, {r}))) - beta;
      if (!res.is_zero()) {
        ok = false;
        residual = res.str();
        where = "W_" + std::to_string(r);
      }
    }
    out.push_back(exact_record("(i) dbar chi^0 = beta_n on each W_r", ok, residual, where));
  }

  if (n == 2) {
    CheckRecord rec = exact_record("(ii) delta chi^{p-1} + (-1)^p dbar chi^p = 0, 1 <= p <= n-2", true, "");
    rec.status = Status::VacuousPass;
    rec.detail = "no p with 1 <= p <= n-2";
    out.push_back(rec);
  } else {
    bool ok = true;
    std::string residual, where;
    for (int p = 1; p <= n - 2 && ok; ++p)
      for (const auto& I : index_sets(n, p + 1)) {
        Form d = dbar(chi(n, p, MultiIndex(n, I)));
        Form res = delta_chi(n, p - 1, I) + (p % 2 ? -d : d);
        if (!res.is_zero()) {
          ok = false;
          residual = res.str();
          where = "p=" + std::to_string(p) + " simplex " + index_str(I);
          break;
        }
      }
    out.push_back(exact_record("(ii) delta chi^{p-1} + (-1)^p dbar chi^p = 0, 1 <= p <= n-2", ok, residual, where));
  }

  {
    std::vector<int> top(n);
    for (int i = 0; i < n; ++i) top[i] = i + 1;
    Form res = delta_chi(n, n - 2, top) + cauchy(n) * Scalar(correspondence_sign(n));
    out.push_back(exact_record("(iii) delta chi^{n-2} = -(-1)^{n(n-1)/2} kappa_n on (1..n)", res.is_zero(), res.str(),
                               "simplex " + index_str(top)));
  }
  return out;
}

}  // namespace rdc
