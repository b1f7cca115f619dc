#include "ellipsurf/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ellipsurf/appell.hpp"
#include "ellipsurf/errors.hpp"
#include "ellipsurf/hyperfn.hpp"
#include "ellipsurf/oracle.hpp"
#include "ellipsurf/surface.hpp"
#include "json.hpp"

namespace ellipsurf {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr double kDefaultTol = 1e-12;

// Raised for flag combinations that CLI11 accepts but the command cannot use.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double tolerance_from_env() {
  const char* env = std::getenv("ELLIPSURF_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTol;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !std::isfinite(v) || !(v > 0.0)) {
    throw UsageError(std::string("ELLIPSURF_TOL must be a positive number, got '") + env + "'");
  }
  return v;
}

struct Record {
  std::string command;
  Json inputs = Json::object();
  double value = 0.0;
  double err_estimate = 0.0;
  std::string formula;
  bool converged = true;
  double elapsed = 0.0;
  Json extra = Json::object();

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["value"] = value;
    j["err_estimate"] = err_estimate;
    j["formula"] = formula;
    j["converged"] = converged;
    j["elapsed_ms"] = elapsed;
    for (const auto& [key, v] : extra.items()) j[key] = v;
    return j;
  }
};

void write_text(const Record& r, std::ostream& out) {
  out << "command: " << r.command << '\n';
  out << "inputs: " << r.inputs.dump() << '\n';
  out << "value: " << format_real(r.value) << '\n';
  out << "err_estimate: " << format_real(r.err_estimate) << '\n';
  out << "formula: " << r.formula << '\n';
  out << "converged: " << (r.converged ? "true" : "false") << '\n';
  out << "elapsed_ms: " << format_real(r.elapsed) << '\n';
  for (const auto& [key, v] : r.extra.items()) out << key << ": " << v.dump() << '\n';
}

void emit(const Record& r, const std::string& format, std::ostream& out) {
  if (format == "text") {
    write_text(r, out);
  } else {
    out << r.to_json().dump() << '\n';
  }
}

Json series_json(const SeriesValue& s) {
  Json j;
  j["terms_used"] = s.terms_used;
  j["abs_err_estimate"] = s.abs_err_estimate;
  j["converged"] = s.converged;
  return j;
}

// ---------------------------------------------------------------- area

struct AreaOptions {
  std::string shape;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  std::string axis = "z";
  double tol = kDefaultTol;
  std::size_t max_terms = EvalConfig{}.max_terms;
  std::string format = "json";
  CLI::Option* a_opt = nullptr;
  CLI::Option* b_opt = nullptr;
  CLI::Option* c_opt = nullptr;
  CLI::Option* axis_opt = nullptr;
  CLI::Option* tol_opt = nullptr;
};

void require_axes(const AreaOptions& o, bool a, bool b, bool c) {
  const auto check = [&](CLI::Option* opt, bool wanted, const char* name) {
    const bool given = opt->count() > 0;
    if (wanted && !given) throw UsageError("--shape " + o.shape + " requires --" + name);
    if (!wanted && given) throw UsageError("--shape " + o.shape + " does not take --" + name);
  };
  check(o.a_opt, a, "a");
  check(o.b_opt, b, "b");
  check(o.c_opt, c, "c");
  if (o.shape != "hemiellipsoid" && o.axis_opt->count() > 0) {
    throw UsageError("--axis applies to --shape hemiellipsoid only");
  }
}

SymmetryAxis parse_axis(const std::string& s) {
  if (s == "x") return SymmetryAxis::X;
  if (s == "y") return SymmetryAxis::Y;
  return SymmetryAxis::Z;
}

int run_area(const AreaOptions& o, std::ostream& out) {
  const auto start = Clock::now();
  EvalConfig cfg;
  cfg.rel_tol = o.tol_opt->count() > 0 ? o.tol : tolerance_from_env();
  cfg.max_terms = o.max_terms;

  Record rec;
  rec.command = "area";
  rec.inputs["shape"] = o.shape;

  AreaResult result;
  if (o.shape == "sphere") {
    require_axes(o, true, false, false);
    rec.inputs["a"] = o.a;
    result = sphere_area(o.a);
  } else if (o.shape == "oblate") {
    require_axes(o, true, false, true);
    rec.inputs["a"] = o.a;
    rec.inputs["c"] = o.c;
    result = oblate_spheroid_area(o.a, o.c);
  } else if (o.shape == "prolate") {
    require_axes(o, true, true, false);
    rec.inputs["a"] = o.a;
    rec.inputs["b"] = o.b;
    result = prolate_spheroid_area(o.a, o.b);
  } else {
    require_axes(o, true, true, true);
    rec.inputs["a"] = o.a;
    rec.inputs["b"] = o.b;
    rec.inputs["c"] = o.c;
    const SemiAxes axes(o.a, o.b, o.c);
    if (o.shape == "ellipsoid") {
      result = ellipsoid_area(axes, cfg);
    } else {
      rec.inputs["axis"] = o.axis;
      result = hemiellipsoid_area(axes, parse_axis(o.axis), cfg);
    }
  }
  rec.inputs["tol"] = cfg.rel_tol;
  rec.inputs["max_terms"] = cfg.max_terms;

  rec.value = result.area;
  rec.err_estimate = result.err_estimate;
  rec.formula = std::string(to_string(result.formula));
  rec.converged = result.diagnostics.converged;

  Json diag = series_json(result.diagnostics);
  diag["branch"] = std::string(to_string(result.branch));
  Json validity = Json::array();
  for (const DomainCheck& d : result.validity) {
    validity.push_back({{"condition", d.condition}, {"value", d.value}, {"satisfied", d.satisfied}});
  }
  diag["validity"] = validity;
  rec.extra["diagnostics"] = diag;
  rec.elapsed = elapsed_ms(start);

  emit(rec, o.format, out);
  return rec.converged ? kExitOk : kExitNotConverged;
}

// ---------------------------------------------------------------- eval

struct EvalOptions {
  std::string fn;
  std::vector<double> params;
  double tol = kDefaultTol;
  std::size_t max_terms = EvalConfig{}.max_terms;
  std::string format = "json";
  CLI::Option* tol_opt = nullptr;
};

void require_arity(const EvalOptions& o, std::size_t n, const char* names) {
  if (o.params.size() != n) {
    throw UsageError("--fn " + o.fn + " takes " + std::to_string(n) + " positional parameters (" +
                     names + "), got " + std::to_string(o.params.size()));
  }
}

int run_eval(const EvalOptions& o, std::ostream& out) {
  const auto start = Clock::now();
  EvalConfig cfg;
  cfg.rel_tol = o.tol_opt->count() > 0 ? o.tol : tolerance_from_env();
  cfg.max_terms = o.max_terms;

  Record rec;
  rec.command = "eval";
  rec.inputs["fn"] = o.fn;
  const auto& p = o.params;
  const auto name_params = [&](std::initializer_list<const char*> names) {
    std::size_t i = 0;
    for (const char* n : names) rec.inputs[n] = p[i++];
  };

  SeriesValue sv;
  bool elementary = false;
  if (o.fn == "2f1") {
    require_arity(o, 4, "a b c z");
    name_params({"a", "b", "c", "z"});
    sv = gauss_2f1({p[0], p[1], p[2], p[3]}, cfg);
    rec.formula = p[3] < -1.0 ? "gauss-2f1-continued" : "gauss-2f1-series";
  } else if (o.fn == "f1") {
    require_arity(o, 6, "a b c d x y");
    name_params({"a", "b", "c", "d", "x", "y"});
    const AppellF1Params fp{p[0], p[1], p[2], p[3], p[4], p[5]};
    rec.extra["convergence_class"] = std::string(to_string(classify(fp)));
    sv = f1(fp, cfg);
    rec.formula = "appell-f1";
  } else if (o.fn == "g2222") {
    require_arity(o, 5, "a1 a2 b1 b2 z");
    name_params({"a1", "a2", "b1", "b2", "z"});
    sv = meijer_g2222(p[0], p[1], p[2], p[3], p[4], cfg);
    rec.formula = "meijer-g2222-via-2f1";
  } else if (o.fn == "theta-integral") {
    require_arity(o, 3, "beta lambda s");
    name_params({"beta", "lambda", "s"});
    sv = theta_integral_closed({p[0], p[1], p[2]}, cfg);
    rec.formula = "angular-integral-2f1";
  } else {
    require_arity(o, 1, "s");
    name_params({"s"});
    sv.value = radial_integral_closed(p[0]);
    sv.converged = true;
    elementary = true;
    rec.formula = "radial-integral-gamma";
  }
  rec.inputs["tol"] = cfg.rel_tol;
  rec.inputs["max_terms"] = cfg.max_terms;

  rec.value = sv.value;
  rec.err_estimate = sv.abs_err_estimate;
  rec.converged = sv.converged;
  if (!elementary) rec.extra["diagnostics"] = series_json(sv);
  rec.elapsed = elapsed_ms(start);

  emit(rec, o.format, out);
  return rec.converged ? kExitOk : kExitNotConverged;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string suite = "all";
  std::size_t samples = 10;
  std::uint64_t seed = 1;
  double tol = kDefaultTol;
  CLI::Option* tol_opt = nullptr;
};

double rel_diff(double x, double ref) { return std::abs(x - ref) / std::max(std::abs(ref), 1e-300); }

class Verifier {
 public:
  Verifier(const VerifyOptions& o, EvalConfig cfg, std::ostream& out)
      : cfg_(cfg), rng_(o.seed), out_(out), suite_(o.suite) {}

  // One record per check; `discrepancy` is compared against `tolerance`.
  void report(const std::string& suite, const std::string& check, Json inputs, double value,
              double reference, double discrepancy, double tolerance, const char* metric,
              const std::string& formula, double err_estimate, bool converged,
              Clock::time_point start) {
    const bool pass = std::isfinite(discrepancy) && discrepancy <= tolerance;
    Record rec;
    rec.command = "verify";
    rec.inputs = std::move(inputs);
    rec.value = value;
    rec.err_estimate = err_estimate;
    rec.formula = formula;
    rec.converged = converged;
    rec.extra["suite"] = suite;
    rec.extra["check"] = check;
    rec.extra["reference"] = reference;
    rec.extra["discrepancy"] = discrepancy;
    rec.extra["metric"] = metric;
    rec.extra["tolerance"] = tolerance;
    rec.extra["pass"] = pass;
    rec.elapsed = elapsed_ms(start);
    out_ << rec.to_json().dump() << '\n';
    ++checks_;
    if (pass) ++passed_;
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  void theorems123(std::size_t samples) {
    const QuadratureSpec spec;
    for (std::size_t i = 0; i < samples; ++i) {
      const double u = uniform(0.2, 5.0);
      const double v = uniform(0.2, 5.0);
      const double s = uniform(-0.9, 0.9);
      angular_check("angular-integral-beta-major", {std::max(u, v), std::min(u, v), s}, spec);
      angular_check("angular-integral-lambda-major", {std::min(u, v), std::max(u, v), s}, spec);

      const auto start = Clock::now();
      const double r = uniform(-0.9, 0.9);
      const QuadResult q = quad_radial_integral(r, spec);
      const double closed = radial_integral_closed(r);
      const double diff = std::abs(q.value - closed);
      report("theorems123", "radial-integral", Json{{"s", r}}, closed, q.value, diff,
             std::max(1e-8, q.err_bound), "absolute", "radial-integral-gamma", q.err_bound,
             q.converged, start);
    }
  }

  void hemi_equivalence(std::size_t samples) {
    for (std::size_t i = 0; i < samples; ++i) {
      const auto start = Clock::now();
      const double r1 = uniform(1.0, 10.0);
      const double r2 = uniform(1.0, 10.0);
      const SemiAxes axes(std::max(r1, r2), std::min(r1, r2), 1.0);
      const AreaResult z = hemiellipsoid_area_z(axes, cfg_);
      const AreaResult y = hemiellipsoid_area_y(axes, cfg_);
      const AreaResult x = hemiellipsoid_area_x(axes, cfg_);
      const double worst =
          std::max({rel_diff(y.area, z.area), rel_diff(x.area, z.area), rel_diff(x.area, y.area)});
      Json inputs{{"a", axes.a()}, {"b", axes.b()}, {"c", axes.c()}};
      inputs["x_branch"] = std::string(to_string(x.branch));
      const bool conv = z.diagnostics.converged && y.diagnostics.converged && x.diagnostics.converged;
      report("hemi-equivalence", "hemi-formulas-agree", inputs, z.area, x.area, worst, 1e-8,
             "relative", std::string(to_string(z.formula)), z.err_estimate, conv, start);
    }
  }

  void spheroid_limits(std::size_t samples) {
    constexpr double kOffset = 1e-4;
    constexpr double kTol = 1e-9;
    for (std::size_t i = 0; i < samples; ++i) {
      const double ratio = uniform(1.1, 10.0);

      // Ellipsoid with two equal axes against the spheroid series forms.
      limit_point("oblate-from-ellipsoid", {{"a", ratio}, {"c", 1.0}},
                  ellipsoid_area(SemiAxes(ratio, ratio, 1.0), cfg_),
                  oblate_spheroid_area_series(ratio, 1.0, cfg_), kTol);
      limit_point("prolate-from-ellipsoid", {{"a", ratio}, {"b", 1.0}},
                  ellipsoid_area(SemiAxes(ratio, 1.0, 1.0), cfg_),
                  prolate_spheroid_area_series(ratio, 1.0, cfg_), kTol);

      // Approach along a line and extrapolate the offset to zero.
      const double a = ratio;
      limit_chain("oblate-limit-b-to-a", {{"a", a}, {"c", 1.0}, {"offset", kOffset}},
                  [&](double d) { return ellipsoid_area(SemiAxes(a, a * (1.0 - d), 1.0), cfg_).area; },
                  oblate_spheroid_area(a, 1.0), kOffset, kTol);
      limit_chain("prolate-limit-c-to-b", {{"a", a}, {"b", 1.0}, {"offset", kOffset}},
                  [&](double d) { return ellipsoid_area(SemiAxes(a, 1.0, 1.0 - d), cfg_).area; },
                  prolate_spheroid_area(a, 1.0), kOffset, kTol);
      limit_chain("sphere-limit-all-to-a", {{"a", a}, {"offset", kOffset}},
                  [&](double d) {
                    return ellipsoid_area(SemiAxes(a, a * (1.0 - d), a * (1.0 - 2.0 * d)), cfg_).area;
                  },
                  sphere_area(a), kOffset, kTol);
      limit_chain("oblate-to-sphere", {{"a", a}, {"offset", kOffset}},
                  [&](double d) { return oblate_spheroid_area(a, a * (1.0 - d)).area; },
                  sphere_area(a), kOffset, kTol);
      limit_chain("prolate-to-sphere", {{"b", a}, {"offset", kOffset}},
                  [&](double d) { return prolate_spheroid_area(a * (1.0 + d), a).area; },
                  sphere_area(a), kOffset, kTol);
    }
  }

  std::size_t checks() const { return checks_; }
  std::size_t passed() const { return passed_; }

 private:
  void angular_check(const char* check, const ThetaIntegralParams& p, const QuadratureSpec& spec) {
    const auto start = Clock::now();
    const QuadResult q = quad_theta_integral(p, spec);
    const SeriesValue closed = theta_integral_closed(p, cfg_);
    const double diff = std::abs(q.value - closed.value);
    report("theorems123", check, Json{{"beta", p.beta}, {"lambda", p.lambda}, {"s", p.s}}, closed.value,
           q.value, diff, std::max(1e-8, q.err_bound + closed.abs_err_estimate), "absolute",
           "angular-integral-2f1", closed.abs_err_estimate, closed.converged && q.converged, start);
  }

  void limit_point(const char* check, Json inputs, const AreaResult& at_limit, const AreaResult& limit,
                   double tol) {
    const auto start = Clock::now();
    report("spheroid-limits", check, std::move(inputs), at_limit.area, limit.area,
           rel_diff(at_limit.area, limit.area), tol, "relative", std::string(to_string(limit.formula)),
           at_limit.err_estimate, at_limit.diagnostics.converged && limit.diagnostics.converged, start);
  }

  // Cubic Richardson extrapolation 3 S(d) - 3 S(2d) + S(3d) removes the
  // first- and second-order terms of the offset.
  void limit_chain(const char* check, Json inputs, const std::function<double(double)>& area_at,
                   const AreaResult& limit, double offset, double tol) {
    const auto start = Clock::now();
    const double extrapolated = 3.0 * area_at(offset) - 3.0 * area_at(2.0 * offset) + area_at(3.0 * offset);
    report("spheroid-limits", check, std::move(inputs), extrapolated, limit.area,
           rel_diff(extrapolated, limit.area), tol, "relative", std::string(to_string(limit.formula)),
           limit.err_estimate, true, start);
  }

  EvalConfig cfg_;
  std::mt19937_64 rng_;
  std::ostream& out_;
  std::string suite_;
  std::size_t checks_ = 0;
  std::size_t passed_ = 0;
};

int run_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  EvalConfig cfg;
  cfg.rel_tol = o.tol_opt->count() > 0 ? o.tol : tolerance_from_env();
  Verifier v(o, cfg, out);
  const bool all = o.suite == "all";
  if (all || o.suite == "theorems123") v.theorems123(o.samples);
  if (all || o.suite == "hemi-equivalence") v.hemi_equivalence(o.samples);
  if (all || o.suite == "spheroid-limits") v.spheroid_limits(o.samples);
  err << "verify: " << v.passed() << "/" << v.checks() << " checks passed\n";
  return v.passed() == v.checks() ? kExitOk : kExitNotConverged;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curved surface areas of ellipsoids from hypergeometric closed forms", "ellipsurf"};
  app.require_subcommand(1, 1);

  AreaOptions area;
  CLI::App* area_cmd = app.add_subcommand("area", "Curved surface area of a shape");
  area_cmd->add_option("--shape", area.shape, "Shape to measure")
      ->required()
      ->check(CLI::IsMember({"hemiellipsoid", "ellipsoid", "oblate", "prolate", "sphere"}));
  area.a_opt = area_cmd->add_option("--a", area.a, "First semi-axis (polar axis of a prolate spheroid)");
  area.b_opt = area_cmd->add_option("--b", area.b, "Second semi-axis (equatorial radius of a prolate spheroid)");
  area.c_opt = area_cmd->add_option("--c", area.c, "Third semi-axis (polar axis of an oblate spheroid)");
  area.axis_opt = area_cmd->add_option("--axis", area.axis, "Symmetry axis of the hemiellipsoid")
                      ->check(CLI::IsMember({"x", "y", "z"}));
  area.tol_opt = area_cmd->add_option("--tol", area.tol, "Relative series tolerance")->check(CLI::PositiveNumber);
  area_cmd->add_option("--max-terms", area.max_terms, "Series term cap")->check(CLI::PositiveNumber);
  area_cmd->add_option("--format", area.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  EvalOptions eval;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a special function");
  eval_cmd->add_option("--fn", eval.fn, "Function to evaluate")
      ->required()
      ->check(CLI::IsMember({"2f1", "f1", "g2222", "theta-integral", "radial-integral"}));
  eval_cmd->add_option("params", eval.params, "Function parameters")->required();
  eval.tol_opt = eval_cmd->add_option("--tol", eval.tol, "Relative series tolerance")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--max-terms", eval.max_terms, "Series term cap")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--format", eval.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Cross-check closed forms against independent evaluations");
  verify_cmd->add_option("--suite", verify.suite, "Suite to run")
      ->check(CLI::IsMember({"theorems123", "hemi-equivalence", "spheroid-limits", "all"}));
  verify_cmd->add_option("--samples", verify.samples, "Random samples per suite")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify.seed, "Seed of the sample generator");
  verify.tol_opt =
      verify_cmd->add_option("--tol", verify.tol, "Relative series tolerance")->check(CLI::PositiveNumber);

  // CLI11 consumes a vector from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "Run with --help for usage.\n";
    return kExitInputError;
  }

  try {
    if (area_cmd->parsed()) return run_area(area, out);
    if (eval_cmd->parsed()) return run_eval(eval, out);
    return run_verify(verify, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << "Run with --help for usage.\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << e.kind() << " (" << e.module() << "): " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace ellipsurf
