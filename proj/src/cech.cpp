#include "rdc/cech.hpp"

#include <algorithm>

namespace rdc {

std::string Domain::str() const {
  switch (kind) {
    case Kind::AllSpace:
      return "AllSpace";
    case Kind::CoordNonzero:
      return "CoordNonzero(" + std::to_string(coordinate) + ")";
    case Kind::ComplementOfOrigin:
      return "ComplementOfOrigin";
    case Kind::ComplementOfClosedSet:
      return "ComplementOfClosedSet(" + tag + ")";
    case Kind::NeighborhoodOf:
      return "NeighborhoodOf(" + tag + ")";
  }
  return "?";
}

Covering Covering::coordinate(int n) {
  Covering c;
  for (int i = 1; i <= n; ++i) c.sets.push_back(Domain::coord_nonzero(i));
  return c;
}

Covering Covering::two_set(Domain v0, Domain v1) {
  Covering c;
  c.sets = {std::move(v0), std::move(v1)};
  c.primed = {true, false};
  return c;
}

std::vector<Simplex> simplices(int covering_size, int k) {
  std::vector<Simplex> out;
  if (k < 0 || k + 1 > covering_size) return out;
  Simplex s(k + 1);
  for (int j = 0; j <= k; ++j) s[j] = j;
  while (true) {
    out.push_back(s);
    int j = k;
    while (j >= 0 && s[j] == covering_size - (k + 1) + j) --j;
    if (j < 0) break;
    ++s[j];
    for (int m = j + 1; m <= k; ++m) s[m] = s[m - 1] + 1;
  }
  return out;
}

namespace {

// Sorts vertices in place; returns the permutation sign, or 0 on a repeated vertex.
int canonicalize(Simplex& s) {
  int sign = 1;
  for (std::size_t a = 1; a < s.size(); ++a)
    for (std::size_t b = a; b > 0 && s[b - 1] > s[b]; --b) {
      std::swap(s[b - 1], s[b]);
      sign = -sign;
    }
  for (std::size_t a = 1; a < s.size(); ++a)
    if (s[a] == s[a - 1]) return 0;
  return sign;
}

}  // namespace

Cochain::Cochain(Covering covering, VariableContext ctx, int p, int q)
    : covering_(std::move(covering)), ctx_(ctx), p_(p), q_(q) {}

Form Cochain::at(const Simplex& vertices) const {
  Simplex s = vertices;
  int sign = canonicalize(s);
  if (sign == 0) return Form(ctx_);
  auto it = pieces_.find(s);
  if (it == pieces_.end()) return Form(ctx_);
  return sign > 0 ? it->second : -it->second;
}

void Cochain::add(const Simplex& vertices, const Form& form) {
  if (form.is_zero()) return;
  if (!(form.context() == ctx_)) throw ContextMismatch("cochain piece from a different variable context");
  Simplex s = vertices;
  if (s.empty()) throw Error("empty simplex");
  for (int v : s)
    if (v < 0 || v >= covering_.size()) throw Error("simplex vertex outside covering");
  int sign = canonicalize(s);
  if (sign == 0) return;
  int q1 = static_cast<int>(s.size()) - 1;
  if (q1 > q_ || !form.has_bidegree(p_, q_ - q1))
    throw Error("cochain piece on Cech degree " + std::to_string(q1) + " must have bidegree (" + std::to_string(p_) +
                "," + std::to_string(q_ - q1) + ")");
  auto [it, inserted] = pieces_.try_emplace(s, sign > 0 ? form : -form);
  if (inserted) return;
  it->second += sign > 0 ? form : -form;
  if (it->second.is_zero()) pieces_.erase(it);
}

void Cochain::set(const Simplex& vertices, const Form& form) {
  Simplex s = vertices;
  if (canonicalize(s) == 0) return;
  pieces_.erase(s);
  add(vertices, form);
}

void Cochain::check_compatible(const Cochain& o) const {
  if (!(covering_ == o.covering_)) throw Error("cochains over different coverings");
  if (!(ctx_ == o.ctx_)) throw ContextMismatch("cochains over different variable contexts");
  if (p_ != o.p_ || q_ != o.q_) throw Error("adding cochains of different degrees");
}

Cochain Cochain::operator-() const {
  Cochain c = *this;
  for (auto& [s, f] : c.pieces_) f = -f;
  return c;
}

Cochain& Cochain::operator+=(const Cochain& o) {
  check_compatible(o);
  for (const auto& [s, f] : o.pieces_) add(s, f);
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) { return *this += -o; }

Cochain& Cochain::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    pieces_.clear();
    return *this;
  }
  for (auto& [s, f] : pieces_) f *= c;
  return *this;
}

std::string Cochain::str() const {
  if (pieces_.empty()) return "0";
  std::string out;
  for (const auto& [s, f] : pieces_) {
    out += "[";
    for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
    out += "] " + f.str() + "\n";
  }
  return out;
}

bool cochain_eq(const Cochain& a, const Cochain& b) { return (a - b).is_zero(); }

Cochain cech_delta(const Cochain& c) {
  Cochain r(c.covering(), c.context(), c.p(), c.q() + 1);
  std::vector<bool> has_degree(c.covering().size() + 1, false);
  for (const auto& [s, f] : c.pieces()) has_degree[s.size() - 1] = true;
  for (int k = 0; k + 1 < c.covering().size(); ++k) {
    if (!has_degree[k]) continue;
    for (const Simplex& s : simplices(c.covering().size(), k + 1)) {
      Form acc(c.context());
      for (std::size_t nu = 0; nu < s.size(); ++nu) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(nu));
        Form f = c.at(face);
        if (nu % 2) acc -= f;
        else acc += f;
      }
      r.add(s, acc);
    }
  }
  return r;
}

Cochain dbar_signed(const Cochain& c) {
  Cochain r(c.covering(), c.context(), c.p(), c.q() + 1);
  for (const auto& [s, f] : c.pieces()) {
    Form d = dbar(f);
    r.add(s, (s.size() - 1) % 2 ? -d : d);
  }
  return r;
}

Cochain vartheta(const Cochain& c) { return cech_delta(c) + dbar_signed(c); }

Cochain del_total(const Cochain& c) {
  Cochain r(c.covering(), c.context(), c.p() + 1, c.q());
  for (const auto& [s, f] : c.pieces()) {
    int q1 = static_cast<int>(s.size()) - 1;
    Form d = del(f);
    r.add(s, (c.q() - q1) % 2 ? -d : d);
  }
  return r;
}

Cochain cup(const Cochain& x, const Cochain& y) {
  if (!(x.covering() == y.covering())) throw Error("cup product of cochains over different coverings");
  if (!(x.context() == y.context())) throw ContextMismatch("cup product across variable contexts");
  Cochain r(x.covering(), x.context(), x.p() + y.p(), x.q() + y.q());
  const int size = x.covering().size();
  std::vector<bool> xd(size + 1, false), yd(size + 1, false);
  for (const auto& [s, f] : x.pieces()) xd[s.size() - 1] = true;
  for (const auto& [s, f] : y.pieces()) yd[s.size() - 1] = true;
  const int deg_x = x.p() + x.q();
  for (int rr = 0; rr < size && rr <= x.q() + y.q(); ++rr) {
    bool any = false;
    for (int nu = 0; nu <= rr; ++nu) any = any || (xd[nu] && yd[rr - nu]);
    if (!any) continue;
    for (const Simplex& s : simplices(size, rr)) {
      Form acc(x.context());
      for (int nu = 0; nu <= rr; ++nu) {
        if (!xd[nu] || !yd[rr - nu]) continue;
        Form a = x.at(Simplex(s.begin(), s.begin() + nu + 1));
        if (a.is_zero()) continue;
        Form b = y.at(Simplex(s.begin() + nu, s.end()));
        if (b.is_zero()) continue;
        Form w = wedge(a, b);
        if (((deg_x - nu) * (rr - nu)) % 2) acc -= w;
        else acc += w;
      }
      r.add(s, acc);
    }
  }
  return r;
}

bool is_cocycle(const Cochain& c) { return vartheta(c).is_zero(); }

bool check_relative(const Cochain& c) {
  for (const auto& [s, f] : c.pieces())
    if (std::all_of(s.begin(), s.end(), [&](int a) { return c.covering().is_primed(a); })) return false;
  return true;
}

std::string domain_status_name(DomainStatus s) {
  switch (s) {
    case DomainStatus::Verified:
      return "verified";
    case DomainStatus::Violated:
      return "violated";
    case DomainStatus::Unverifiable:
      return "unverifiable";
  }
  return "?";
}

namespace {

enum class License { Yes, No, Unknown };

// A pole is a denominator variable (var >= 0) or a negative quadratic power (var = -1 - quadratic).
License licenses(const Domain& d, const VariableContext& ctx, int pole) {
  bool is_var = pole >= 0;
  Quadratic quad = is_var ? Quadratic::NormZ : static_cast<Quadratic>(-1 - pole);
  switch (d.kind) {
    case Domain::Kind::AllSpace:
    case Domain::Kind::NeighborhoodOf:
      return License::No;
    case Domain::Kind::CoordNonzero:
      if (is_var) {
        if (d.coordinate < 1 || d.coordinate > ctx.n()) return License::No;
        return (pole == ctx.z(d.coordinate) || pole == ctx.zbar(d.coordinate)) ? License::Yes : License::No;
      }
      return quad == Quadratic::NormZ ? License::Yes : License::No;
    case Domain::Kind::ComplementOfOrigin:
      if (is_var) return License::No;
      return (quad == Quadratic::NormZ || quad == Quadratic::NormX) ? License::Yes : License::No;
    case Domain::Kind::ComplementOfClosedSet:
      if (d.tag == "R^n") {
        if (is_var) return License::No;
        return (quad == Quadratic::NormZminusZbar || quad == Quadratic::NormZ) ? License::Yes : License::No;
      }
      if (d.tag == "0" || d.tag == "origin") {
        if (is_var) return License::No;
        return (quad == Quadratic::NormZ || quad == Quadratic::NormX) ? License::Yes : License::No;
      }
      return License::Unknown;
  }
  return License::Unknown;
}

std::string pole_name(const VariableContext& ctx, int pole) {
  return pole >= 0 ? ctx.variable_name(pole) : quadratic_name(static_cast<Quadratic>(-1 - pole));
}

}  // namespace

DomainReport domain_check(const Form& f, const std::vector<Domain>& domains) {
  const VariableContext& ctx = f.context();
  std::vector<int> poles;
  for (const auto& [key, c] : f.terms()) {
    for (int v = 0; v < ctx.variable_count(); ++v)
      if (c.denominator()[v] > 0) poles.push_back(v);
    for (int j = 0; j < kQuadraticCount; ++j)
      if (c.quadratic_halves()[j] < 0) poles.push_back(-1 - j);
  }
  std::sort(poles.begin(), poles.end());
  poles.erase(std::unique(poles.begin(), poles.end()), poles.end());
  DomainReport report;
  for (int pole : poles) {
    bool yes = false;
    bool unknown = false;
    for (const Domain& d : domains) {
      License l = licenses(d, ctx, pole);
      yes = yes || l == License::Yes;
      unknown = unknown || l == License::Unknown;
    }
    if (yes) continue;
    if (unknown) {
      if (report.status == DomainStatus::Verified) {
        report.status = DomainStatus::Unverifiable;
        report.detail = "pole of " + pole_name(ctx, pole) + " on an unrecognized domain";
      }
      continue;
    }
    report.status = DomainStatus::Violated;
    report.detail = "pole of " + pole_name(ctx, pole) + " not licensed";
    return report;
  }
  return report;
}

DomainReport domain_check(const Cochain& c) {
  DomainReport overall;
  for (const auto& [s, f] : c.pieces()) {
    std::vector<Domain> domains;
    for (int a : s) domains.push_back(c.covering().sets[a]);
    DomainReport r = domain_check(f, domains);
    if (r.status == DomainStatus::Verified) continue;
    std::string where = "simplex (";
    for (std::size_t k = 0; k < s.size(); ++k) where += (k ? "," : "") + std::to_string(s[k]);
    r.detail = where + "): " + r.detail;
    if (r.status == DomainStatus::Violated) return r;
    if (overall.status == DomainStatus::Verified) overall = r;
  }
  return overall;
}

RelativePair vartheta(const RelativePair& x) { return {dbar(x.xi1), x.xi1 - dbar(x.xi01)}; }

RelativePair del_total(const RelativePair& x, int q) {
  Form a = del(x.xi1);
  Form b = -del(x.xi01);
  if (q % 2) return {-a, -b};
  return {a, b};
}

RelativePair cup_relative(const RelativePair& x, const Form& eta1) {
  return {wedge(x.xi1, eta1), wedge(x.xi01, eta1)};
}

bool is_cocycle(const RelativePair& x) {
  RelativePair t = vartheta(x);
  return t.xi1.is_zero() && t.xi01.is_zero();
}

Cochain to_cochain(const RelativePair& x, const Covering& two_set, int p, int q) {
  if (two_set.size() != 2) throw Error("relative pair needs a two-set covering");
  VariableContext ctx = x.xi1.is_zero() ? x.xi01.context() : x.xi1.context();
  Cochain c(two_set, ctx, p, q);
  c.set({1}, x.xi1);
  c.set({0, 1}, x.xi01);
  return c;
}

RelativePair to_relative_pair(const Cochain& c) {
  if (c.covering().size() != 2) throw Error("relative pair needs a two-set covering");
  if (!c.at({0}).is_zero()) throw Error("cochain is not relative to V_0");
  return {c.at({1}), c.at({0, 1})};
}

}  // namespace rdc
