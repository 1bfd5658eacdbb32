#include "orthopath/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <numbers>

#include "orthopath/dyadic.hpp"
#include "orthopath/experiments.hpp"
#include "orthopath/io.hpp"
#include "orthopath/lognorm.hpp"
#include "orthopath/variation.hpp"

namespace orthopath {

namespace {

using nlohmann::ordered_json;

// Bare output filenames resolve against ORTHOPATH_OUT_DIR when it is set.
std::string resolve_out(const std::string& name) {
  if (name.empty() || name.find('/') != std::string::npos) return name;
  if (const char* dir = std::getenv("ORTHOPATH_OUT_DIR")) {
    return std::string(dir) + "/" + name;
  }
  return name;
}

ordered_json interval_json(IntervalZ i) { return ordered_json{{"a", i.a}, {"b", i.b}}; }

ordered_json dyadic_json(const DyadicInterval& i) {
  return ordered_json{{"lo", i.lo()}, {"hi", i.hi()}, {"level", i.level}};
}

struct PvarArgs {
  std::string input;
  double p = 2.0;
  std::int64_t from = 0, to = -1;
  std::string emit = "json";
};

struct AreaArgs {
  std::string input;
  std::int64_t from = 0, to = -1;
  std::string emit = "json";
};

int cmd_pvar(const PvarArgs& a, std::ostream& out) {
  const LatticePath path = load_path_csv(a.input);
  const IntervalZ window{a.from, a.to < 0 ? path.length() : a.to};
  const VariationResult res = p_var_exact(path, a.p, window);
  if (a.emit == "csv") {
    out << "power_sum,norm,partition\n"
        << format_double(res.power_sum) << ',' << format_double(res.norm) << ",\"";
    for (std::size_t i = 0; i < res.partition.size(); ++i) {
      out << (i ? " " : "") << res.partition[i];
    }
    out << "\"\n";
  } else {
    ordered_json doc{{"schema", "orthopath-pvar-v1"},
                     {"p", a.p},
                     {"interval", interval_json(window)},
                     {"power_sum", res.power_sum},
                     {"norm", res.norm},
                     {"partition", res.partition}};
    out << doc.dump() << '\n';
  }
  return 0;
}

int cmd_area(const AreaArgs& a, std::ostream& out) {
  const LatticePath path = load_path_csv(a.input);
  const IntervalZ window{a.from, a.to < 0 ? path.length() : a.to};
  check_interval(path, window);
  const AreaTable table = build_area_table(path);
  const int d = path.dim();
  const auto entry = table.at(window.a, window.b);
  const double rough = rough_norm_sq(path, table, window);
  ordered_json matrix = ordered_json::array();
  for (int r = 0; r < d; ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < d; ++c) row.push_back(entry[r * d + c]);
    matrix.push_back(std::move(row));
  }
  if (a.emit == "csv") {
    out << "from,to,rough_norm_sq,area\n"
        << window.a << ',' << window.b << ',' << format_double(rough) << ",\""
        << matrix.dump() << "\"\n";
  } else {
    ordered_json doc{{"schema", "orthopath-area-v1"},
                     {"interval", interval_json(window)},
                     {"area", matrix},
                     {"rough_norm_sq", rough}};
    out << doc.dump() << '\n';
  }
  return 0;
}

int cmd_dyadic(std::int64_t a, std::int64_t b, const std::string& op,
               std::ostream& out) {
  const IntervalZ j = make_interval(a, b);
  ordered_json doc{{"schema", "orthopath-dyadic-v1"},
                   {"interval", interval_json(j)},
                   {"op", op}};
  if (op == "peaked") {
    const PeakedDecomposition dec = decompose_peaked(j);
    doc["peak"] = dec.peak;
    doc["pieces"] = ordered_json::array();
    for (const auto& piece : dec.pieces) doc["pieces"].push_back(dyadic_json(piece));
  } else if (op == "greedy") {
    doc["pieces"] = ordered_json::array();
    for (const auto& piece : greedy_decompose(j)) doc["pieces"].push_back(dyadic_json(piece));
  } else if (op == "bisect") {
    const Bisection cut = bisect(j);
    doc["j1"] = interval_json(cut.j1);
    doc["j2"] = interval_json(cut.j2);
    doc["i1"] = dyadic_json(cut.i1);
    doc["i2"] = dyadic_json(cut.i2);
  } else if (op == "bsets") {
    const auto all = b_set(j);
    doc["size"] = all.size();
    doc["by_level"] = ordered_json::array();
    for (int level = 0; (std::int64_t{1} << level) <= j.length(); ++level) {
      doc["by_level"].push_back(b_set_level(j, level).size());
    }
  } else {
    throw CLI::ValidationError("--op must be peaked|greedy|bisect|bsets");
  }
  out << doc.dump() << '\n';
  return 0;
}

struct SeriesArgs {
  std::string make;
  int n_max = 8;
  int n_start = 4;
  std::string coeffs;
  double theta = std::numbers::pi / 2;
  std::int64_t degree = -1;
  std::string out_file;
};

int cmd_series(const SeriesArgs& a, std::ostream& out) {
  const std::string dest = resolve_out(a.out_file);
  ordered_json doc{{"schema", "orthopath-series-v1"}};
  if (a.make == "finite2var") {
    const CoefficientSeq c = finite_2var_coefficients(a.n_max);
    save_coeffs_csv(c, dest);
    doc["kind"] = "coefficients";
    doc["count"] = c.size();
  } else if (a.make == "weyl") {
    // Built-in multiplier table w(2^n) = (log2 n)^3, the r(n) = log2 n case.
    std::vector<double> w(a.n_max + 2, 0.0);
    for (int n = 2; n <= a.n_max + 1; ++n) w[n] = std::pow(std::log2(n), 3.0);
    const CoefficientSeq c = weyl_multiplier_coefficients(w, a.n_start, a.n_max);
    save_coeffs_csv(c, dest);
    doc["kind"] = "coefficients";
    doc["count"] = c.size();
  } else if (a.make == "blowup") {
    const LatticePath path = area_blowup_grid_path(a.n_max);
    save_path_csv(path, dest);
    doc["kind"] = "path";
    doc["count"] = path.length() + 1;
  } else if (a.make == "realize") {
    const CoefficientSeq c = load_coeffs_csv(a.coeffs);
    const std::int64_t degree = a.degree < 0 ? c.size() - 1 : a.degree;
    const LatticePath path = partial_sum_path(FourierSystem{}, c, a.theta, degree);
    save_path_csv(path, dest);
    doc["kind"] = "path";
    doc["count"] = path.length() + 1;
  } else {
    throw CLI::ValidationError("--make must be finite2var|weyl|blowup|realize");
  }
  doc["out"] = dest;
  out << doc.dump() << '\n';
  return 0;
}

struct NormArgs {
  std::string coeffs;
  double s = 0.5;
  std::string method = "spectral";
  std::int64_t panels = 2048;
  double band = 1e-4;
};

int cmd_norm(const NormArgs& a, std::ostream& out) {
  const CoefficientSeq c = load_coeffs_csv(a.coeffs);
  QuadratureSpec q;
  q.panels = a.panels;
  q.band = a.band;
  const double spectral = big_l_norm_spectral(c, a.s, q);
  const double direct = big_l_norm_quadrature(c, a.s, q);
  ordered_json doc{{"schema", "orthopath-norm-v1"},
                   {"s", a.s},
                   {"method", a.method},
                   {"l_norm", l_norm(c, a.s)},
                   {"spectral", spectral},
                   {"direct", direct},
                   {"gap", std::abs(spectral - direct)},
                   {"value", a.method == "direct" ? direct : spectral}};
  out << doc.dump() << '\n';
  return 0;
}

struct ExpArgs {
  std::string name;
  std::string config_file;
  std::string out_file;
  std::string emit = "json";
  std::uint64_t seed = 1;
  std::int64_t trials = -1;
  int m = -1;
  int n_max = -1;
  double theta = -1.0;
  std::int64_t theta_grid = -1;
  std::int64_t samples = -1;
  int threads = -1;
  // set in run_cli from ->count()
  bool seed_set = false;
};

int cmd_exp(const ExpArgs& a, std::ostream& out, std::ostream& err) {
  nlohmann::json config = nlohmann::json::object();
  if (!a.config_file.empty()) {
    std::ifstream in(a.config_file);
    if (!in) throw std::runtime_error("cannot read config " + a.config_file);
    config = nlohmann::json::parse(in);
  }
  if (a.seed_set) config["seed"] = a.seed;
  if (a.trials >= 0) config["trials"] = a.trials;
  if (a.m >= 0) config["m"] = a.m;
  if (a.theta >= 0.0) config["theta"] = a.theta;
  if (a.theta_grid >= 0) config["theta_grid"] = a.theta_grid;
  if (a.samples >= 0) config["samples"] = a.samples;
  if (a.threads >= 0) config["threads"] = a.threads;
  if (a.n_max >= 0) {
    if (a.name == "area_blowup" || a.name == "sobolev_equiv") {
      config["n_hi"] = a.n_max;
    } else {
      config["n_max"] = a.n_max;
    }
  }

  bool all_pass = true;
  if (a.name == "example_local") {
    // One report per block.
    nlohmann::json base = config;
    const int n_min = base.value("n_min", 6);
    const int n_max = base.value("n_max", 12);
    base.erase("n_min");
    base.erase("n_max");
    for (int n = n_min; n <= n_max; ++n) {
      nlohmann::json block = base;
      block["n_min"] = n;
      block["n_max"] = n;
      const ExperimentReport report = run_experiment(a.name, block);
      all_pass = all_pass && report.pass;
      out << report_json(report).dump() << '\n';
    }
    if (!a.out_file.empty()) err << "per-block runs do not write --out files\n";
    return all_pass ? 0 : 1;
  }

  const ExperimentReport report = run_experiment(a.name, config);
  all_pass = report.pass;
  out << report_json(report).dump() << '\n';
  err << "runtime_ms " << report.runtime_ms << '\n';
  if (!a.out_file.empty()) {
    write_report(report, a.emit == "csv" ? ReportFormat::kCsv : ReportFormat::kJson,
                 resolve_out(a.out_file));
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact p-variation, Levy areas and log-Sobolev norms of "
               "partial-sum processes"};
  app.set_version_flag("--version", "orthopath 0.1.0");
  app.require_subcommand(1);

  PvarArgs pvar;
  auto* pvar_cmd = app.add_subcommand("pvar", "exact p-variation of a CSV path");
  pvar_cmd->add_option("--input", pvar.input, "path CSV, one knot per row")->required();
  pvar_cmd->add_option("--p", pvar.p, "variation exponent, >= 1");
  pvar_cmd->add_option("--from", pvar.from, "window start knot");
  pvar_cmd->add_option("--to", pvar.to, "window end knot (default N)");
  pvar_cmd->add_option("--emit", pvar.emit, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  AreaArgs area;
  auto* area_cmd = app.add_subcommand("area", "Levy area and rough norm of a CSV path");
  area_cmd->add_option("--input", area.input)->required();
  area_cmd->add_option("--from", area.from);
  area_cmd->add_option("--to", area.to);
  area_cmd->add_option("--emit", area.emit)->check(CLI::IsMember({"json", "csv"}));

  std::int64_t dy_a = 0, dy_b = 0;
  std::string dy_op = "peaked";
  auto* dy_cmd = app.add_subcommand("dyadic", "dyadic interval decompositions");
  dy_cmd->add_option("--a", dy_a)->required();
  dy_cmd->add_option("--b", dy_b)->required();
  dy_cmd->add_option("--op", dy_op, "peaked|greedy|bisect|bsets");

  SeriesArgs series;
  auto* series_cmd = app.add_subcommand("series", "coefficient constructors and realizations");
  series_cmd->add_option("--make", series.make, "finite2var|weyl|blowup|realize")->required();
  series_cmd->add_option("--n-max", series.n_max);
  series_cmd->add_option("--n-start", series.n_start);
  series_cmd->add_option("--coeffs", series.coeffs, "input coefficients for realize");
  series_cmd->add_option("--theta", series.theta);
  series_cmd->add_option("--degree", series.degree);
  series_cmd->add_option("--out", series.out_file)->required();

  NormArgs norm;
  auto* norm_cmd = app.add_subcommand("norm", "log-Sobolev norms of a coefficient file");
  norm_cmd->set_help_flag("--help", "print help");  // frees -h for the band flag
  norm_cmd->add_option("--coeffs", norm.coeffs)->required();
  norm_cmd->add_option("--s", norm.s);
  norm_cmd->add_option("--method", norm.method)->check(CLI::IsMember({"spectral", "direct"}));
  norm_cmd->add_option("--M", norm.panels, "midpoint panels per axis");
  norm_cmd->add_option("--h", norm.band, "excluded diagonal band half-width");

  ExpArgs exp;
  auto* exp_cmd = app.add_subcommand("exp", "replayable numerical experiments");
  exp_cmd->add_option("name", exp.name, "experiment name")->required();
  auto* seed_opt = exp_cmd->add_option("--seed", exp.seed);
  exp_cmd->add_option("--trials", exp.trials);
  exp_cmd->add_option("--m", exp.m);
  exp_cmd->add_option("--n-max", exp.n_max);
  exp_cmd->add_option("--theta", exp.theta);
  exp_cmd->add_option("--theta-grid", exp.theta_grid);
  exp_cmd->add_option("--samples", exp.samples);
  exp_cmd->add_option("--threads", exp.threads);
  exp_cmd->add_option("--config", exp.config_file, "JSON config file");
  exp_cmd->add_option("--out", exp.out_file, "report file (see ORTHOPATH_OUT_DIR)");
  exp_cmd->add_option("--emit", exp.emit)->check(CLI::IsMember({"json", "csv"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (pvar_cmd->parsed()) return cmd_pvar(pvar, out);
    if (area_cmd->parsed()) return cmd_area(area, out);
    if (dy_cmd->parsed()) return cmd_dyadic(dy_a, dy_b, dy_op, out);
    if (series_cmd->parsed()) return cmd_series(series, out);
    if (norm_cmd->parsed()) return cmd_norm(norm, out);
    if (exp_cmd->parsed()) {
      exp.seed_set = seed_opt->count() > 0;
      return cmd_exp(exp, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace orthopath
