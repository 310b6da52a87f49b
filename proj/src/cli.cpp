#include "sstar/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sstar/bounds.hpp"
#include "sstar/errors.hpp"
#include "sstar/extremal.hpp"
#include "sstar/format.hpp"
#include "sstar/generator.hpp"
#include "sstar/membership.hpp"
#include "sstar/series_json.hpp"
#include "sstar/verify.hpp"

namespace sstar {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv };

struct RunConfig {
  double alpha1 = 1.0;
  double alpha2 = 1.0;
  std::size_t order = 64;
  std::size_t n_max = 32;
  std::vector<double> r_list;
  std::vector<double> radii;
  std::size_t angles = 720;
  Format format = Format::csv;
  std::string out_path;
  std::uint64_t seed = kDefaultSeed;

  ClassParams params() const {
    try {
      return make_params(alpha1, alpha2);
    } catch (const ParamOutOfRange& e) {
      throw UsageError(e.what());
    }
  }

  void check_order() const {
    if (order > kDefaultMaxOrder) {
      throw UsageError("--order " + std::to_string(order) + " exceeds the cap " + std::to_string(kDefaultMaxOrder));
    }
  }
};

// Round-trips a value through its 12-significant-digit text form so JSON
// output carries the same precision as CSV.
double round12(double v) {
  if (!std::isfinite(v)) return v;
  const std::string s = format_number(v);
  double out = v;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

json num(double v) { return round12(v); }

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    const auto* begin = item.data();
    const auto* end = item.data() + item.size();
    const auto res = std::from_chars(begin, end, v);
    if (item.empty() || res.ec != std::errc() || res.ptr != end) {
      throw UsageError(std::string(flag) + ": cannot parse '" + item + "'");
    }
    values.push_back(v);
  }
  return values;
}

class Emitter {
 public:
  Emitter(const RunConfig& cfg, std::ostream& fallback) {
    if (!cfg.out_path.empty()) {
      file_.open(cfg.out_path);
      if (!file_) throw UsageError("cannot open --out " + cfg.out_path);
    }
    os_ = cfg.out_path.empty() ? &fallback : &file_;
    os_->imbue(std::locale::classic());
  }
  std::ostream& os() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--alpha1", cfg.alpha1, "left opening, in (0, 1]");
  cmd->add_option("--alpha2", cfg.alpha2, "right opening, in (0, 1]");
  cmd->add_option("--out", cfg.out_path, "write output to PATH instead of stdout");
}

void add_format(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "json or csv")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::json}, {"csv", Format::csv}}));
}

// --- lambda ----------------------------------------------------------------

int cmd_lambda(const RunConfig& cfg, std::ostream& out) {
  const ClassParams params = cfg.params();
  if (cfg.n_max < 1 || cfg.n_max > kDefaultMaxOrder) throw UsageError("--n-max must lie in [1, 256]");
  const auto lambda = lambda_coeffs(params, cfg.n_max);
  Emitter em(cfg, out);
  if (cfg.format == Format::csv) {
    em.os() << "n,re,im,abs,residual_2f1\n";
  }
  json rows = json::array();
  for (std::size_t n = 1; n <= cfg.n_max; ++n) {
    const cplx l = lambda[n - 1];
    const double residual = std::abs(l - lambda_via_2f1(params, n));
    if (cfg.format == Format::csv) {
      em.os() << n << ',' << format_number(l.real()) << ',' << format_number(l.imag()) << ','
              << format_number(std::abs(l)) << ',' << format_number(residual) << '\n';
    } else {
      rows.push_back({{"n", n}, {"re", num(l.real())}, {"im", num(l.imag())}, {"abs", num(std::abs(l))},
                      {"residual_2f1", num(residual)}});
    }
  }
  if (cfg.format == Format::json) {
    em.os() << json{{"alpha1", cfg.alpha1}, {"alpha2", cfg.alpha2}, {"lambda", rows}}.dump(2) << '\n';
  }
  return kExitOk;
}

// --- bounds ----------------------------------------------------------------

// Tables print 12 significant digits, so G~ is summed well past the library
// default before it is exponentiated.
const GTildeOptions kPrintedGTilde{1e-13, 2048};

int cmd_bounds(const RunConfig& cfg, const std::string& which, std::ostream& out, std::ostream& err) {
  const ClassParams params = cfg.params();
  BoundTable table;
  if (which == "re" || which == "growth") {
    if (cfg.r_list.empty()) throw UsageError("bounds " + which + " needs --r or --r-list");
    table = which == "re" ? re_table(params, cfg.r_list) : growth_table(params, cfg.r_list, kPrintedGTilde);
  } else if (which == "gamma") {
    table = gamma_table(params, cfg.n_max);
  } else {
    table = coeff_table(params, cfg.n_max);
  }
  for (const auto& e : table.entries) {
    if (!e.warning.empty()) err << "warning: row " << format_number(e.key) << ": " << e.warning << '\n';
  }
  Emitter em(cfg, out);
  if (cfg.format == Format::csv) {
    em.os() << table_to_csv(table);
  } else {
    json j = table_to_json(table);
    for (auto& row : j["entries"]) {
      for (const char* key : {"value", "value_upper"}) {
        if (row.contains(key) && row[key].is_number()) row[key] = num(row[key].get<double>());
      }
    }
    em.os() << j.dump(2) << '\n';
  }
  return kExitOk;
}

// --- check -----------------------------------------------------------------

AnalyticEvaluator resolve_function(const std::string& spec, const ClassParams& params, std::size_t order) {
  if (spec == "identity") return identity_evaluator();
  if (spec == "koebe") return koebe_evaluator();
  if (spec == "extremal") return extremal_evaluator(params);
  if (spec.rfind("koebe-beta:", 0) == 0) {
    const std::string text = spec.substr(11);
    double beta = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), beta);
    if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
      throw UsageError("cannot parse beta in '" + spec + "'");
    }
    try {
      return koebe_beta_evaluator(beta);
    } catch (const ParamOutOfRange& e) {
      throw UsageError(e.what());
    }
  }
  if (spec.rfind("series:", 0) == 0) {
    try {
      TruncatedSeries s = read_series_file(spec.substr(7), std::max(order, kDefaultMaxOrder));
      // the argument condition is only meaningful for f(0) = 0, f'(0) = 1
      const NormalizedFunction f(std::move(s), spec);
      return series_evaluator(f.series());
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("unknown builtin '" + spec + "' (identity, koebe, koebe-beta:B, extremal, series:PATH)");
}

int cmd_check(const RunConfig& cfg, const std::string& builtin, const std::string& series_path,
              double slack, bool convexity, std::ostream& out, std::ostream& err) {
  const ClassParams params = cfg.params();
  std::string spec = builtin;
  if (!series_path.empty()) {
    if (!builtin.empty()) throw UsageError("give either --builtin or --series, not both");
    spec = "series:" + series_path;
  }
  if (spec.empty()) throw UsageError("check needs --builtin or --series");
  const AnalyticEvaluator f = resolve_function(spec, params, cfg.order);

  SampleGrid grid = default_grid();
  if (!cfg.radii.empty()) grid.radii = cfg.radii;
  grid.angles_per_radius = cfg.angles;
  try {
    grid.validate();
  } catch (const InvalidGrid& e) {
    throw UsageError(e.what());
  }
  MembershipOptions opts;
  opts.arg_slack = slack;

  ArgWindowReport report;
  try {
    report = convexity ? check_convexity_condition(f, params, grid, opts) : check_membership(f, params, grid, opts);
  } catch (const RadiusOutOfRange& e) {
    throw UsageError(e.what());
  } catch (const Error& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitFailure;
  }
  Emitter em(cfg, out);
  json j = report_to_json(report);
  j["function"] = spec;
  j["alpha1"] = cfg.alpha1;
  j["alpha2"] = cfg.alpha2;
  j["condition"] = convexity ? "convexity" : "starlike";
  em.os() << j.dump(2) << '\n';
  return report.passed ? kExitOk : kExitFailure;
}

// --- extremal --------------------------------------------------------------

int cmd_extremal(const RunConfig& cfg, std::ostream& out) {
  const ClassParams params = cfg.params();
  cfg.check_order();
  if (cfg.order < 1) throw UsageError("--order must be >= 1");
  const NormalizedFunction f = extremal_series(params, cfg.order);
  // gamma_n needs a_{n+1}; one extra degree fills the last row
  const auto gamma = log_coeffs(extremal_series(params, cfg.order + 1), cfg.order);

  Emitter em(cfg, out);
  if (cfg.format == Format::csv) em.os() << "n,a_re,a_im,gamma_re,gamma_im,gamma_abs,gamma_bound\n";
  json rows = json::array();
  for (std::size_t n = 1; n <= cfg.order; ++n) {
    const cplx a = f.series()[n];
    const cplx g = gamma[n - 1];
    const double bound = gamma_bound(params, n);
    if (cfg.format == Format::csv) {
      em.os() << n << ',' << format_number(a.real()) << ',' << format_number(a.imag()) << ','
              << format_number(g.real()) << ',' << format_number(g.imag()) << ',' << format_number(std::abs(g))
              << ',' << format_number(bound) << '\n';
    } else {
      rows.push_back({{"n", n}, {"a_re", num(a.real())}, {"a_im", num(a.imag())}, {"gamma_re", num(g.real())},
                      {"gamma_im", num(g.imag())}, {"gamma_abs", num(std::abs(g))}, {"gamma_bound", num(bound)}});
    }
  }
  if (cfg.format == Format::json) {
    em.os() << json{{"label", f.label()}, {"alpha1", cfg.alpha1}, {"alpha2", cfg.alpha2}, {"rows", rows}}.dump(2)
            << '\n';
  }
  return kExitOk;
}

// --- plotdata --------------------------------------------------------------

struct PlotPoint {
  std::string curve;
  double param;
  cplx w;
};

int cmd_plotdata(const RunConfig& cfg, const std::string& what, double ray_length, std::size_t points,
                 std::ostream& out, std::ostream& err) {
  const ClassParams params = cfg.params();
  if (points < 2) throw UsageError("--points must be >= 2");
  if (cfg.angles < 1) throw UsageError("--angles must be >= 1");
  std::vector<PlotPoint> pts;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(cfg.angles);

  if (what == "omega-boundary") {
    const double lo = -std::numbers::pi * params.alpha1 / 2.0;
    const double hi = std::numbers::pi * params.alpha2 / 2.0;
    for (std::size_t k = 0; k < points; ++k) {
      const double t = ray_length * static_cast<double>(k) / static_cast<double>(points - 1);
      pts.push_back({"ray_lower", t, std::polar(t, lo)});
    }
    for (std::size_t k = 0; k < points; ++k) {
      const double t = ray_length * static_cast<double>(k) / static_cast<double>(points - 1);
      pts.push_back({"ray_upper", t, std::polar(t, hi)});
    }
  } else if (what == "g-image") {
    const double r = cfg.r_list.empty() ? 0.5 : cfg.r_list.front();
    if (!(r > 0.0 && r < 1.0)) throw UsageError("g-image needs 0 < r < 1");
    for (std::size_t j = 0; j < cfg.angles; ++j) {
      const double phi = step * static_cast<double>(j);
      pts.push_back({"g_image", phi, g_eval(params, std::polar(r, phi))});
    }
  } else {
    const std::vector<double> radii = cfg.r_list.empty() ? std::vector<double>{0.5} : cfg.r_list;
    for (double r : radii) {
      GrowthBounds g{};
      try {
        g = growth_bounds(params, r, kPrintedGTilde);
      } catch (const Error& e) {
        err << "warning: r = " << format_number(r) << ": " << e.what() << '\n';
        continue;
      }
      for (std::size_t j = 0; j < cfg.angles; ++j) {
        pts.push_back({"growth_lower_r=" + format_number(r), step * static_cast<double>(j),
                       std::polar(g.lower, step * static_cast<double>(j))});
      }
      for (std::size_t j = 0; j < cfg.angles; ++j) {
        pts.push_back({"growth_upper_r=" + format_number(r), step * static_cast<double>(j),
                       std::polar(g.upper, step * static_cast<double>(j))});
      }
    }
  }

  Emitter em(cfg, out);
  if (cfg.format == Format::csv) {
    em.os() << "curve,param,x,y\n";
    for (const auto& p : pts) {
      em.os() << p.curve << ',' << format_number(p.param) << ',' << format_number(p.w.real()) << ','
              << format_number(p.w.imag()) << '\n';
    }
  } else {
    json arr = json::array();
    for (const auto& p : pts) {
      arr.push_back({{"curve", p.curve}, {"param", num(p.param)}, {"x", num(p.w.real())}, {"y", num(p.w.imag())}});
    }
    em.os() << json{{"what", what}, {"alpha1", cfg.alpha1}, {"alpha2", cfg.alpha2}, {"points", arr}}.dump(2)
            << '\n';
  }
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, const std::vector<std::string>& suites, std::ostream& out, std::ostream& err) {
  std::vector<VerifyReport> reports;
  try {
    reports = run_suites(suites.empty() ? std::vector<std::string>{"all"} : suites, cfg.seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool all = true;
  for (const auto& r : reports) {
    err << "suite " << r.suite << ": " << r.cases_run << " cases, " << r.failures.size() << " failures, "
        << format_number(r.wall_seconds) << " s\n";
    all = all && r.passed();
  }
  Emitter em(cfg, out);
  em.os() << verify_to_json(reports, false).dump(2) << '\n';
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-sided strongly starlike class toolkit", "sstar"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* lambda = app.add_subcommand("lambda", "Taylor coefficients lambda_n of the generator");
  add_common(lambda, cfg);
  add_format(lambda, cfg);
  lambda->add_option("--n-max", cfg.n_max, "largest n");

  std::string which;
  std::string r_single, r_list;
  auto* bounds = app.add_subcommand("bounds", "Bound tables: re, growth, gamma, coeff");
  add_common(bounds, cfg);
  add_format(bounds, cfg);
  bounds->add_option("which", which, "re | growth | gamma | coeff")
      ->required()
      ->check(CLI::IsMember({"re", "growth", "gamma", "coeff"}));
  bounds->add_option("--n-max", cfg.n_max, "largest index");
  bounds->add_option("--r", r_single, "a single radius");
  bounds->add_option("--r-list", r_list, "comma-separated radii");

  std::string builtin, series_path, radii_text;
  double slack = 1e-9;
  bool convexity = false;
  auto* check = app.add_subcommand("check", "Sample the argument condition on the disc");
  add_common(check, cfg);
  check->add_option("--builtin", builtin, "identity | koebe | koebe-beta:B | extremal | series:PATH");
  check->add_option("--series", series_path, "series file (JSON array of [re, im])");
  check->add_option("--radii", radii_text, "comma-separated sample radii");
  check->add_option("--angles", cfg.angles, "samples per radius");
  check->add_option("--order", cfg.order, "series order cap for series files");
  check->add_option("--slack", slack, "window slack in radians");
  check->add_flag("--convexity", convexity, "test 1 + z f''/f' on the convexity sub-disc instead");

  auto* extremal = app.add_subcommand("extremal", "Coefficients of z exp G~(z) with log coefficients");
  add_common(extremal, cfg);
  add_format(extremal, cfg);
  extremal->add_option("--order", cfg.order, "series order");

  std::string what;
  double ray_length = 3.0;
  std::size_t points = 101;
  auto* plot = app.add_subcommand("plotdata", "Point lists for plotting");
  add_common(plot, cfg);
  add_format(plot, cfg);
  plot->add_option("what", what, "omega-boundary | g-image | growth-annulus")
      ->required()
      ->check(CLI::IsMember({"omega-boundary", "g-image", "growth-annulus"}));
  plot->add_option("--r", r_single, "radius");
  plot->add_option("--r-list", r_list, "comma-separated radii");
  plot->add_option("--angles", cfg.angles, "points per circle");
  plot->add_option("--points", points, "points per sector ray");
  plot->add_option("--ray-length", ray_length, "length of the sector rays");

  std::vector<std::string> suites;
  auto* verify = app.add_subcommand("verify", "Run the seeded invariant suites");
  verify->add_option("suites", suites, "series | generator | membership | bounds | extremal | all");
  verify->add_option("--seed", cfg.seed, "random seed");
  verify->add_option("--out", cfg.out_path, "write output to PATH instead of stdout");

  try {
    // CLI11 consumes a reversed argument vector without the program name
    std::vector<std::string> rest;
    for (std::size_t i = args.size(); i-- > 1;) rest.push_back(args[i]);
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (!r_single.empty()) cfg.r_list = parse_list(r_single, "--r");
    if (!r_list.empty()) {
      const auto more = parse_list(r_list, "--r-list");
      cfg.r_list.insert(cfg.r_list.end(), more.begin(), more.end());
    }
    if (!radii_text.empty()) cfg.radii = parse_list(radii_text, "--radii");

    if (*lambda) return cmd_lambda(cfg, out);
    if (*bounds) return cmd_bounds(cfg, which, out, err);
    if (*check) return cmd_check(cfg, builtin, series_path, slack, convexity, out, err);
    if (*extremal) return cmd_extremal(cfg, out);
    if (*plot) return cmd_plotdata(cfg, what, ray_length, points, out, err);
    if (*verify) return cmd_verify(cfg, suites, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace sstar
