#include "rdc/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rdc/expr.hpp"
#include "rdc/hyperfunction.hpp"
#include "rdc/integration.hpp"
#include "rdc/kernels.hpp"
#include "rdc/properties.hpp"

namespace rdc::cli {

namespace {

using json = nlohmann::ordered_json;

// Tolerances used by `report --all` and as command defaults.
constexpr double kTolNormalization = 1e-8;
constexpr double kTolNormalizationN3 = 1e-4;
constexpr double kTolTorus = 1e-12;
constexpr double kTolTransfer = 1e-7;
constexpr double kTolPairing = 1e-7;
constexpr double kTolStokes = 1e-5;
constexpr double kTolConsistency = 1e-6;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_complex(Complex z) {
  std::string s = format_double(z.real());
  if (z.imag() != 0.0) s += (z.imag() < 0 ? " - " : " + ") + format_double(std::abs(z.imag())) + "i";
  return s;
}

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

class Runner {
 public:
  explicit Runner(Report& report) : report_(report) {}

  void step(const std::string& label, const std::function<std::vector<CheckRecord>()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::vector<CheckRecord> records;
    try {
      records = body();
    } catch (const std::exception& e) {
      CheckRecord r = exact_record("error", false, "", e.what());
      records.push_back(r);
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (CheckRecord& r : records) {
      if (!label.empty()) r.name = label + ": " + r.name;
      report_.records.push_back({r, dt});
    }
  }

 private:
  Report& report_;
};

Polynomial parse_h(const std::string& text, int n) {
  return parse_polynomial(text, VariableContext(n), ElaborateOptions{true});
}

Form polynomial_form(int n, const Polynomial& h) { return Form::function(VariableContext(n), h); }

// ---------------------------------------------------------------------------------------------
// Suites

void correspondence_suite(Runner& run, int n) {
  run.step("correspondence n=" + std::to_string(n), [n] { return verify_correspondence(n); });
}

void normalization_suite(Runner& run, const Config& cfg, int n) {
  run.step("normalization n=" + std::to_string(n), [&, n] {
    QuadratureSpec spec = cfg.spec(n);
    IntegrationResult b = integrate(bochner_martinelli(n), Cycle::sphere(n, cfg.radius), spec);
    IntegrationResult k = integrate(cauchy(n), Cycle::torus(n, cfg.radius), spec);
    return std::vector<CheckRecord>{
        numeric_record("int_S beta_n = 1", b.value, 1.0, n <= 2 ? kTolNormalization : kTolNormalizationN3,
                       b.error_estimate),
        numeric_record("int_Gamma kappa_n = 1", k.value, 1.0, kTolTorus, k.error_estimate)};
  });
}

void angular_suite(Runner& run, const Config& cfg, int l) {
  run.step("angular form l=" + std::to_string(l), [&, l] {
    std::vector<CheckRecord> out;
    Form psi = angular_form(l);
    Form d = d_real(psi);
    out.push_back(exact_record("d psi_l = 0", d.is_zero(), d.str()));
    if (l >= 2) {
      QuadratureSpec fallback;
      if (l >= 5) {
        fallback.periodic = 32;
        fallback.polar = 16;
      }
      IntegrationResult r = integrate(psi, Cycle::real_sphere(l, cfg.radius), cfg.spec_or(fallback));
      out.push_back(numeric_record("int_{S^{l-1}} psi_l = 1", r.value, 1.0, kTolNormalization, r.error_estimate));
    }
    return out;
  });
}

void transfer_suite(Runner& run, const Config& cfg, int n, const std::string& h_text, double tol) {
  run.step("transfer n=" + std::to_string(n) + " h=" + h_text, [&, n, tol] {
    return transfer_check(n, parse_h(h_text, n), cfg.spec(n), tol, cfg.radius).records;
  });
}

void residue_suite(Runner& run, const Config& cfg, int n, const std::string& h_text, double tol) {
  run.step("residue n=" + std::to_string(n) + " h=" + h_text, [&, n, tol] {
    Polynomial h = parse_h(h_text, n);
    IntegrationResult r = integrate(wedge(polynomial_form(n, h), cauchy(n)), Cycle::torus(n, cfg.radius), cfg.spec(n));
    return std::vector<CheckRecord>{
        numeric_record("int_Gamma h kappa_n = h(0)", r.value, h.constant_term().to_complex(), tol, r.error_estimate)};
  });
}

std::vector<CheckRecord> one_checks(int n) {
  std::vector<CheckRecord> out;
  HyperformRep one = one_as_hyperfunction(n);
  out.push_back(exact_record("(0,-psi^{(0,n-1)}) is a cocycle", one.cocycle(), ""));
  Form diff = bidegree_component(angular_form_complexified(n), 0, n - 1) - one_closed_form(n);
  out.push_back(exact_record("psi_n^{(0,n-1)} = i^n C_n sum (-1)^i (z_i - zbar_i) dzbar.. / |z - zbar|^n",
                             form_eq(diff, Form(VariableContext(n))), diff.str()));
  if (n == 1) {
    // 1/2 y/|y| with y = (z - zbar)/(2i) and |y| = |z - zbar|/2.
    const VariableContext ctx(1);
    std::array<int, kQuadraticCount> halves{};
    halves[static_cast<int>(Quadratic::NormZminusZbar)] = -1;
    Polynomial y = (Polynomial::variable(ctx.z(1)) - Polynomial::variable(ctx.zbar(1))) *
                   (Scalar(2) * Scalar::i()).inverse();
    Form expected = Form::function(ctx, Coefficient(y, {}, halves));
    Form r = -one.xi01() - expected;
    out.push_back(exact_record("psi_1^{(0,0)} = 1/2 y/|y|", form_eq(r, Form(ctx)), r.str()));
  }
  if (n >= 2) {
    VariableContext real = VariableContext::real(n);
    HyperformRep u = embed_analytic(Form::constant(real, Scalar(1)));
    HyperformRep du = d_hyper(u);
    RelativePair w = embed_d_witness(Form::constant(real, Scalar(1)));
    RelativePair tw = vartheta(w);
    Form r1 = du.xi1() - tw.xi1;
    Form r01 = du.xi01() - tw.xi01;
    bool ok = form_eq(r1, Form(du.xi1().context())) && form_eq(r01, Form(du.xi01().context()));
    out.push_back(exact_record("d(1) = vartheta(0, (-1)^n psi^{(1,n-2)})", ok, r01.str(),
                               "d(1) vanishes in cohomology; the representative is a coboundary"));
  } else {
    HyperformRep du = d_hyper(one);
    out.push_back(exact_record("d(1) = 0", du.xi01().is_zero() && du.xi1().is_zero(), du.xi01().str()));
  }
  return out;
}

void pair_suite(Runner& run, const Config& cfg, const std::string& dist, int n, const std::string& h_text,
                double tol) {
  run.step("pair " + dist + " n=" + std::to_string(n) + " h=" + h_text, [&, n, tol] {
    std::vector<CheckRecord> out;
    Polynomial h = parse_h(h_text, n);
    const Complex h0 = h.constant_term().to_complex();
    Form hf = polynomial_form(n, h);
    if (dist == "delta") {
      IntegrationResult r = pair(delta(n), wedge(hf, make_Phi(n)), cfg.spec(n), cfg.radius);
      out.push_back(numeric_record("<delta, h Phi> = h(0)", r.value, h0, tol, r.error_estimate));
    } else if (dist == "delta-form") {
      IntegrationResult r = pair(delta_form(n), hf, cfg.spec(n), cfg.radius);
      out.push_back(numeric_record("<delta-form, h> = h(0)", r.value, h0, tol, r.error_estimate));
    } else {
      out = one_checks(n);
      for (CheckRecord& r : out)
        r.detail += (r.detail.empty() ? "" : "; ") +
                    std::string("1 has non-compact support, so only symbolic checks apply");
    }
    return out;
  });
}

std::vector<CheckRecord> stokes_checks(const Config& cfg, int n) {
  const VariableContext ctx(n);
  QuadratureSpec fallback;
  fallback.periodic = n == 1 ? 64 : 16;
  fallback.polar = 8;
  fallback.radial = 16;
  QuadratureSpec spec = cfg.spec_or(fallback);
  spec.radial_panels = 4;
  const Cutoff cutoff = Cutoff::radial(n, 0.5, 1.0);
  const double radius = cfg.radius < 0.5 ? cfg.radius : 0.3;
  const double tol = cfg.tol(kTolStokes);
  std::vector<CheckRecord> out;
  for (CheckRecord& r : stokes_pairing_check(bm_zero(n), make_Phi(n), cutoff, radius, spec, tol).records) {
    r.name = "theta = beta_n^0, eta = Phi: " + r.name;
    out.push_back(r);
  }
  // Pole-free theta: both sides vanish.
  Form theta = Form::function(ctx, Polynomial(Scalar(1)) + Polynomial::variable(ctx.z(1)));
  for (int i = 1; i < n; ++i) theta = wedge(theta, Form::differential(ctx, ctx.zbar(i)));
  for (CheckRecord& r : stokes_pairing_check(theta, make_Phi(n), cutoff, radius, spec, tol).records) {
    r.name = "pole-free theta: " + r.name;
    if (r.value && std::abs(*r.value) > tol) r.status = Status::Fail;
    out.push_back(r);
  }
  return out;
}

void stokes_suite(Runner& run, const Config& cfg, int n) {
  run.step("stokes n=" + std::to_string(n), [&, n] { return stokes_checks(cfg, n); });
}

void property_suite(Runner& run, int n, std::uint64_t seed) {
  const std::string label = "properties n=" + std::to_string(n);
  run.step(label, [=] { return form_property_suite(n, seed); });
  run.step(label, [=] { return cech_property_suite(n, seed); });
  run.step(label, [=] { return hyperform_property_suite(n, seed); });
}

void consistency_suite(Runner& run, std::uint64_t seed) {
  run.step("dbar vs finite differences", [seed] {
    std::vector<CheckRecord> out;
    std::mt19937_64 rng(seed);
    RandomFormSpec spec;
    spec.denominators = true;
    std::vector<std::pair<std::string, Form>> forms = {
        {"beta_2", bochner_martinelli(2)},
        {"beta_3", bochner_martinelli(3)},
        {"beta_2^0", bm_zero(2)},
        {"chi^0_(1), n=2", chi(2, 0, MultiIndex(2, {1}))},
        {"chi^0_(1), n=3", chi(3, 0, MultiIndex(3, {1}))},
        {"psi_2(y)", angular_form_complexified(2)},
        {"random (1,1)-form, n=2", random_form(rng, VariableContext(2), 1, 1, spec)},
        {"random (0,1)-form, n=3", random_form(rng, VariableContext(3), 0, 1, spec)},
    };
    for (auto& [name, f] : forms) out.push_back(dbar_consistency(name, f, 100, seed, kTolConsistency));
    return out;
  });
}

void extras_suite(Runner& run, const Config& cfg) {
  run.step("partial derivative of delta n=1", [&] {
    std::vector<CheckRecord> out;
    const VariableContext ctx(1);
    const Polynomial x = Polynomial::variable(ctx.z(1));
    const std::pair<Polynomial, double> cases[] = {{Polynomial(Scalar(1)), 0.0}, {x, -1.0}, {x * x, 0.0}};
    for (const auto& [h, expected] : cases) {
      IntegrationResult r = pair(partial_x(1, delta(1)), wedge(polynomial_form(1, h), make_Phi(1)), cfg.spec(1));
      out.push_back(numeric_record("<d/dx delta, h> = -h'(0), h = " + h.str(ctx), r.value, expected, kTolPairing,
                                   r.error_estimate));
    }
    return out;
  });
  run.step("restriction n=2", [&] {
    std::vector<CheckRecord> out;
    HyperformRep d = restrict(delta(2), RealDomain::punctured());
    out.push_back(exact_record("support tag cleared away from 0", d.support() == SupportTag::General, ""));
    const VariableContext ctx(2);
    Form eta = wedge(Form::function(ctx, Polynomial(Scalar(3)) + Polynomial::variable(ctx.z(1)).pow(2)), make_Phi(2));
    IntegrationResult r = pair_local(d, eta, {Complex(0.8, 0), Complex(0.2, 0)}, 0.5, cfg.spec(2));
    out.push_back(numeric_record("pairing near a = (0.8, 0.2) vanishes", r.value, 0.0, kTolPairing, r.error_estimate));
    return out;
  });
  run.step("globalization n=2", [&] {
    const VariableContext ctx(2);
    auto P = [&](int v) { return Polynomial::variable(v); };
    Form a = Form::function(ctx, P(ctx.zbar(1)) * P(ctx.z(2)).pow(2));
    Form b = Form::function(ctx, P(ctx.z(1)) * P(ctx.zbar(2)) + P(ctx.zbar(1)).pow(2));
    TwoSetCochain x{dbar(a), dbar(a) + dbar(b), b};
    return globalize_two_set(x, Cutoff::radial(2, 0.5, 1.0), cfg.spec(2), 100, cfg.seed).records;
  });
  run.step("cup product by partition of unity n=2", [&] {
    const VariableContext ctx(2);
    auto P = [&](int v) { return Polynomial::variable(v); };
    const Scalar inv = (Scalar(2) * Scalar::pi() * Scalar::i()).inverse();
    Monomial z1{}, z2{};
    z1[ctx.z(1)] = 1;
    z2[ctx.z(2)] = 1;
    Polynomial h = Polynomial(Scalar(3)) + P(ctx.z(1)).pow(2);
    RelativePair x{Form(ctx), Form::function(ctx, Coefficient(Polynomial(Scalar(-1)), z1)) * inv};
    RelativePair y{Form(ctx), wedge(Form::function(ctx, Coefficient(h * Scalar(-1), z2)), make_Phi(2)) * inv};
    std::array<int, kQuadraticCount> halves{};
    halves[static_cast<int>(Quadratic::NormZ)] = -2;
    Form g = Form::function(ctx, Coefficient(P(ctx.z(2)) * P(ctx.zbar(2)), {}, halves));
    QuadratureSpec spec;
    spec.periodic = 16;
    spec.polar = 128;
    std::vector<Complex> values;
    std::vector<double> estimates;
    for (auto [r0, r1] : {std::pair{0.2, 0.8}, std::pair{0.1, 0.9}}) {
      IntegrationResult r = integrate_relative_pair(cup_partition(x, 1, y, 3, Cutoff(r0, r1, g)), 1.0, spec);
      values.push_back(r.value * static_cast<double>(hyperfunction_sign(2)));
      estimates.push_back(r.error_estimate);
    }
    return std::vector<CheckRecord>{
        numeric_record("two partitions agree", values[0], values[1], 1e-6, estimates[0] + estimates[1]),
        numeric_record("value = h(0) with h = 3 + z1^2", values[1], 3.0, 1e-6, estimates[1])};
  });
}

void report_all(Runner& run, const Config& cfg) {
  for (int n = 1; n <= 3; ++n) correspondence_suite(run, n);
  for (int n = 1; n <= 3; ++n) normalization_suite(run, cfg, n);
  for (int l = 1; l <= 5; ++l) angular_suite(run, cfg, l);
  for (int n = 1; n <= 2; ++n)
    for (const char* h : {"1", "z1", n == 2 ? "z1*z2" : "z1^2", "3 + z1^2"}) transfer_suite(run, cfg, n, h, kTolTransfer);
  for (int n = 1; n <= 2; ++n) {
    const std::vector<std::string> hs = n == 1 ? std::vector<std::string>{"1", "5", "3 + x1^2", "x1^3 - 2*x1^4 + 7"}
                                               : std::vector<std::string>{"1", "5", "x1*x2", "3 + x1^2",
                                                                          "2 - x1*x2^3 + x1^4 + i*x2^2"};
    for (const std::string& h : hs) {
      pair_suite(run, cfg, "delta", n, h, kTolPairing);
      pair_suite(run, cfg, "delta-form", n, h, kTolPairing);
    }
    for (int i = 1; i <= n; ++i)
      for (const std::string& h : hs)
        run.step("pair x" + std::to_string(i) + "*delta n=" + std::to_string(n) + " h=" + h, [&, i, n] {
          Polynomial hp = parse_h(h, n);
          IntegrationResult r = pair(mult_analytic(Polynomial::variable(i - 1), delta(n)),
                                     wedge(polynomial_form(n, hp), make_Phi(n)), cfg.spec(n), cfg.radius);
          return std::vector<CheckRecord>{
              numeric_record("<x_i delta, h Phi> = 0", r.value, 0.0, kTolPairing, r.error_estimate)};
        });
  }
  for (int n = 1; n <= 3; ++n) property_suite(run, n, cfg.seed);
  for (int n = 1; n <= 2; ++n) run.step("one as hyperfunction n=" + std::to_string(n), [n] { return one_checks(n); });
  for (int n = 1; n <= 2; ++n) stokes_suite(run, cfg, n);
  consistency_suite(run, cfg.seed);
  extras_suite(run, cfg);
}

Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw CLI::ValidationError("--config", e.what());
  }
  Config c;
  if (j.contains("nodes")) c.nodes = j["nodes"].get<int>();
  if (j.contains("polar")) c.polar = j["polar"].get<int>();
  if (j.contains("radial")) c.radial = j["radial"].get<int>();
  if (j.contains("tolerance")) c.tolerance = j["tolerance"].get<double>();
  if (j.contains("radius")) c.radius = j["radius"].get<double>();
  if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  return c;
}

struct Flags {
  int nodes = 0;
  double tol = 0;
  double radius = 0;
  std::uint64_t seed = 0;
  std::string config;
  std::string out;
  bool json = false;
  bool timing = false;
  std::vector<CLI::Option*> options;
};

void add_common(CLI::App* app, Flags& f) {
  f.options.push_back(app->add_option("--nodes", f.nodes, "Nodes per periodic angle (polar and radial get half)")
                          ->check(CLI::Range(8, 4096)));
  f.options.push_back(app->add_option("--tol", f.tol, "Tolerance for numeric checks")->check(CLI::PositiveNumber));
  f.options.push_back(app->add_option("--radius", f.radius, "Radius of spheres, tori and balls")
                          ->check(CLI::PositiveNumber));
  f.options.push_back(app->add_option("--seed", f.seed, "Seed for randomized suites"));
  f.options.push_back(app->add_option("--config", f.config, "JSON config file (nodes, polar, radial, tolerance, radius, seed)"));
  f.options.push_back(app->add_option("--out", f.out, "Also write the JSON report to this file"));
  app->add_flag("--json", f.json, "Machine-readable output only");
  app->add_flag("--timing", f.timing, "Include runtimes in the report");
}

Config resolve(const Flags& f, const CLI::App& app) {
  Config c = f.config.empty() ? Config{} : load_config_file(f.config);
  if (app.count("--nodes")) c.nodes = f.nodes;
  if (app.count("--tol")) c.tolerance = f.tol;
  if (app.count("--radius")) c.radius = f.radius;
  if (app.count("--seed")) c.seed = f.seed;
  c.json = f.json;
  c.timing = f.timing;
  return c;
}

}  // namespace

QuadratureSpec Config::spec(int n) const { return spec_or(QuadratureSpec::for_dimension(n)); }

QuadratureSpec Config::spec_or(const QuadratureSpec& fallback) const {
  QuadratureSpec s = fallback;
  if (nodes) {
    s.periodic = *nodes;
    s.polar = std::max(4, *nodes / 2);
    s.radial = std::max(4, *nodes / 2);
  }
  if (polar) s.polar = *polar;
  if (radial) s.radial = *radial;
  s.validate();
  return s;
}

bool Report::ok() const {
  for (const TimedRecord& r : records)
    if (!status_ok(r.record.status)) return false;
  return true;
}

std::string Report::json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["command"] = command;
  j["arguments"] = arguments;
  ordered_json cfg;
  QuadratureSpec s = config.spec_or(QuadratureSpec{});
  cfg["nodes_periodic"] = s.periodic;
  cfg["nodes_polar"] = s.polar;
  cfg["nodes_radial"] = s.radial;
  cfg["nodes_explicit"] = config.nodes.has_value() || config.polar.has_value() || config.radial.has_value();
  cfg["tolerance"] = config.tolerance ? ordered_json(*config.tolerance) : ordered_json("per-check default");
  cfg["radius"] = config.radius;
  cfg["seed"] = config.seed;
  j["config"] = cfg;
  ordered_json recs = ordered_json::array();
  int counts[4] = {0, 0, 0, 0};
  for (const TimedRecord& tr : records) {
    const CheckRecord& r = tr.record;
    ++counts[static_cast<int>(r.status)];
    ordered_json o;
    o["name"] = r.name;
    o["status"] = status_name(r.status);
    o["kind"] = r.exact ? "exact" : "numeric";
    if (r.exact) o["residual"] = r.residual;
    if (r.value) o["value"] = complex_json(*r.value);
    if (r.expected) o["expected"] = complex_json(*r.expected);
    if (r.error) o["error"] = *r.error;
    if (r.error_estimate) o["error_estimate"] = *r.error_estimate;
    if (r.tolerance) o["tolerance"] = *r.tolerance;
    if (!r.detail.empty()) o["detail"] = r.detail;
    if (config.timing) o["runtime_s"] = tr.runtime;
    recs.push_back(o);
  }
  j["records"] = recs;
  j["summary"] = ordered_json{{"total", records.size()},
                              {"pass", counts[static_cast<int>(Status::Pass)]},
                              {"vacuous_pass", counts[static_cast<int>(Status::VacuousPass)]},
                              {"fail", counts[static_cast<int>(Status::Fail)]},
                              {"unverifiable", counts[static_cast<int>(Status::Unverifiable)]}};
  j["status"] = ok() ? "pass" : "fail";
  return j.dump(2);
}

std::string Report::summary() const {
  std::ostringstream s;
  s << command << "\n";
  int failed = 0;
  for (const TimedRecord& tr : records) {
    const CheckRecord& r = tr.record;
    std::string status = status_name(r.status);
    s << "  " << status << std::string(14 - std::min<std::size_t>(13, status.size()), ' ') << r.name;
    if (r.value) {
      s << "\n" << std::string(16, ' ') << "value " << format_complex(*r.value);
      if (r.error_estimate) s << " +- " << format_double(*r.error_estimate);
      if (r.expected) s << ", expected " << format_complex(*r.expected);
      if (r.error) s << ", |error| " << format_double(*r.error);
      if (r.tolerance) s << ", tol " << format_double(*r.tolerance);
    }
    if (r.exact && r.status == Status::Fail && !r.residual.empty())
      s << "\n" << std::string(16, ' ') << "residual " << r.residual;
    if (!r.detail.empty()) s << "\n" << std::string(16, ' ') << r.detail;
    if (config.timing) s << "\n" << std::string(16, ' ') << format_double(tr.runtime) << " s";
    s << "\n";
    if (!status_ok(r.status)) ++failed;
  }
  s << records.size() << " checks, " << failed << " failed\n";
  return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit relative Dolbeault cohomology: exact identities and numeric pairings", "rdc"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Flags flags;

  int n = 1;
  std::string h = "1";
  std::string form_text;
  std::string cycle = "sphere";
  std::string expect;
  std::string dist = "delta";
  bool all = false;

  CLI::App* verify = app.add_subcommand("verify", "Exact verification suites");
  verify->require_subcommand(1);
  CLI::App* corr = verify->add_subcommand("correspondence", "Bochner-Martinelli / Cauchy correspondence");
  corr->add_option("--n", n, "Dimension")->required()->check(CLI::Range(1, 4));
  CLI::App* props = verify->add_subcommand("cech-properties", "Randomized exact identities");
  props->add_option("--n", n, "Dimension")->required()->check(CLI::Range(1, 3));

  CLI::App* integ = app.add_subcommand("integrate", "Integrate a form over a cycle");
  integ->add_option("--cycle", cycle, "sphere, torus, ball or real-sphere")
      ->check(CLI::IsMember({"sphere", "torus", "ball", "real-sphere"}));
  integ->add_option("--n", n, "Complex dimension (real dimension for real-sphere)")->required()->check(CLI::Range(1, 5));
  integ->add_option("--form", form_text, "Form expression")->required();
  integ->add_option("--expect", expect, "Expected value (constant expression)");

  CLI::App* residue = app.add_subcommand("residue", "int_Gamma h kappa_n against h(0)");
  residue->add_option("--n", n, "Dimension")->required()->check(CLI::Range(1, 3));
  residue->add_option("--h", h, "Polynomial");

  CLI::App* pairing = app.add_subcommand("pair", "Pair a hyperfunction with analytic data");
  pairing->add_option("--dist", dist, "delta, delta-form or one")->check(CLI::IsMember({"delta", "delta-form", "one"}));
  pairing->add_option("--n", n, "Dimension")->required()->check(CLI::Range(1, 3));
  pairing->add_option("--h", h, "Polynomial");

  CLI::App* transfer = app.add_subcommand("transfer", "Sphere and torus sides of the transfer theorem");
  transfer->add_option("--n", n, "Dimension")->required()->check(CLI::Range(1, 3));
  transfer->add_option("--h", h, "Polynomial");

  CLI::App* stokes = app.add_subcommand("stokes", "Stokes identity with a smooth cutoff");
  stokes->add_option("--n", n, "Dimension")->required()->check(CLI::Range(1, 3));

  CLI::App* report = app.add_subcommand("report", "Run every suite");
  report->add_flag("--all", all, "Run every suite")->required();

  CLI::App* leaves[] = {corr, props, integ, residue, pairing, transfer, stokes, report};
  for (CLI::App* leaf : leaves) add_common(leaf, flags);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  CLI::App* leaf = nullptr;
  Config cfg;
  try {
    app.parse(reversed);
    for (CLI::App* l : leaves)
      if (l->parsed()) leaf = l;
    cfg = resolve(flags, *leaf);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Report rep;
  rep.command = (leaf->get_parent() == verify ? "verify " : "") + leaf->get_name();
  rep.arguments = args;
  rep.config = cfg;
  Runner runner(rep);

  if (leaf == corr) {
    correspondence_suite(runner, n);
  } else if (leaf == props) {
    property_suite(runner, n, cfg.seed);
  } else if (leaf == integ) {
    runner.step("integrate", [&] {
      const VariableContext ctx = cycle == "real-sphere" ? VariableContext::real(n) : VariableContext(n);
      Form f = parse_form(form_text, ctx);
      Cycle c = cycle == "sphere"        ? Cycle::sphere(n, cfg.radius)
                : cycle == "torus"       ? Cycle::torus(n, cfg.radius)
                : cycle == "ball"        ? Cycle::ball(n, cfg.radius)
                                         : Cycle::real_sphere(n, cfg.radius);
      IntegrationResult r = integrate(f, c, cycle == "real-sphere" ? cfg.spec_or(QuadratureSpec{}) : cfg.spec(n));
      const double tol = cfg.tol(kTolNormalization);
      if (!expect.empty()) {
        Form e = parse_form(expect, ctx);
        if (!e.is_function() || e.terms().size() > 1) throw Error("--expect must be a constant");
        Complex want = e.is_zero() ? Complex(0.0) : e.terms().begin()->second.numerator().constant_term().to_complex();
        return std::vector<CheckRecord>{numeric_record("int_" + c.str() + " form = expected", r.value, want, tol,
                                                       r.error_estimate)};
      }
      CheckRecord rec = numeric_record("int_" + c.str() + " form", r.value, r.value, tol, r.error_estimate,
                                       "no expected value; status reflects the node-halving error estimate");
      rec.expected.reset();
      rec.error.reset();
      rec.status = r.error_estimate <= tol ? Status::Pass : Status::Fail;
      return std::vector<CheckRecord>{rec};
    });
  } else if (leaf == residue) {
    residue_suite(runner, cfg, n, h, cfg.tol(kTolNormalization));
  } else if (leaf == pairing) {
    pair_suite(runner, cfg, dist, n, h, cfg.tol(kTolPairing));
  } else if (leaf == transfer) {
    transfer_suite(runner, cfg, n, h, cfg.tol(kTolTransfer));
  } else if (leaf == stokes) {
    stokes_suite(runner, cfg, n);
  } else if (leaf == report) {
    report_all(runner, cfg);
  }

  const std::string text = rep.json();
  if (!flags.out.empty()) {
    std::ofstream f(flags.out);
    f << text << "\n";
    if (!f) err << "cannot write " << flags.out << "\n";
  }
  if (!cfg.json) out << rep.summary() << "\n";
  out << text << "\n";
  return rep.ok() ? 0 : 1;
}

}  // namespace rdc::cli
