#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "hritz/errors.hpp"
#include "hritz/numerov.hpp"
#include "hritz/quadrature.hpp"
#include "hritz/spectral.hpp"
#include "hritz/variational.hpp"

namespace hritz::cli {

using json = nlohmann::ordered_json;

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  if (std::abs(value) < 1e-3)
    std::snprintf(buf, sizeof buf, "%.11e", value);
  else
    std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

constexpr double kOracleThreshold = 1e-10;
constexpr std::size_t kOracleMaxDim = 64;
constexpr double kParityTolerance = 1e-10;

// A configuration that parsed but makes no sense; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rounded to the printed precision so that JSON and CSV agree.
double rounded(double v) { return std::stod(format_number(v)); }

json number_array(const std::vector<double>& values) {
  json arr = json::array();
  for (double v : values) arr.push_back(rounded(v));
  return arr;
}

struct RawOptions {
  std::string potential = "harmonic";
  double omega = 1.0;
  double lambda = 1.0;
  std::vector<double> coeffs;
  double hbar = 1.0;
  double mass = 1.0;
  std::string alpha;
  std::size_t dim = 0;
  std::string dims;
  std::vector<double> alpha_grid;
  std::vector<double> alpha_bracket;
  std::size_t levels = 0;
  std::string format = "csv";
  std::string output;
  long long seed = 0;
  std::string exact = "auto";
  bool inject_violation = false;
  std::string band4 = "corrected";
};

struct ProblemConfig {
  PotentialSpec potential;
  PhysicalConstants constants;
  std::optional<double> alpha;
  bool exact_diagonal = false;
  std::optional<std::size_t> dim;
  std::vector<std::size_t> dims;
  std::vector<double> alpha_grid;
  std::optional<std::pair<double, double>> alpha_bracket;
  bool json_output = false;
  std::string output_path;
};

PotentialSpec make_potential(const RawOptions& o) {
  if (o.potential == "harmonic") return PotentialSpec::harmonic(o.omega);
  if (o.potential == "quartic") return PotentialSpec::quartic(o.lambda);
  if (o.potential == "polynomial") return PotentialSpec::even_polynomial(o.coeffs);
  throw UsageError("unknown potential '" + o.potential + "'");
}

// "2,4,8" or "start:stop:step" (inclusive).
std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  if (text.empty()) return dims;
  auto to_size = [&](const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw UsageError("invalid --dims entry '" + s + "'");
    }
    if (pos != s.size() || v <= 0) throw UsageError("invalid --dims entry '" + s + "'");
    return static_cast<std::size_t>(v);
  };
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() < 2 || parts.size() > 3) throw UsageError("--dims range must be start:stop[:step]");
    const auto start = to_size(parts[0]);
    const auto stop = to_size(parts[1]);
    const auto step = parts.size() == 3 ? to_size(parts[2]) : std::size_t{1};
    for (std::size_t n = start; n <= stop; n += step) dims.push_back(n);
  } else {
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');) dims.push_back(to_size(p));
  }
  for (std::size_t k = 1; k < dims.size(); ++k)
    if (dims[k] <= dims[k - 1]) throw UsageError("--dims must be strictly ascending");
  if (dims.empty()) throw UsageError("--dims is empty");
  return dims;
}

ProblemConfig make_config(const RawOptions& o) {
  ProblemConfig cfg{make_potential(o), {o.hbar, o.mass}};
  if (!(o.hbar > 0.0) || !(o.mass > 0.0)) throw UsageError("--hbar and --mass must be positive");
  if (o.alpha == "exact-diagonal") {
    if (cfg.potential.kind() != PotentialKind::harmonic)
      throw UsageError("--alpha exact-diagonal requires the harmonic potential");
    cfg.exact_diagonal = true;
    cfg.alpha = exact_diagonal_alpha(cfg.constants, cfg.potential.omega());
  } else if (!o.alpha.empty()) {
    std::size_t pos = 0;
    double a = 0.0;
    try {
      a = std::stod(o.alpha, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != o.alpha.size() || !(a > 0.0) || !std::isfinite(a))
      throw UsageError("--alpha must be a positive number or 'exact-diagonal'");
    cfg.alpha = a;
  }
  if (o.dim > 0) cfg.dim = o.dim;
  cfg.dims = parse_dims(o.dims);
  cfg.alpha_grid = o.alpha_grid;
  if (!o.alpha_bracket.empty()) {
    if (o.alpha_bracket.size() != 2) throw UsageError("--alpha-bracket takes lo,hi");
    cfg.alpha_bracket = std::make_pair(o.alpha_bracket[0], o.alpha_bracket[1]);
  }
  if (o.format != "csv" && o.format != "json") throw UsageError("--format must be csv or json");
  cfg.json_output = o.format == "json";
  cfg.output_path = o.output;
  return cfg;
}

json potential_json(const PotentialSpec& p) {
  json j;
  switch (p.kind()) {
    case PotentialKind::harmonic:
      j["kind"] = "harmonic";
      j["omega"] = p.omega();
      break;
    case PotentialKind::quartic:
      j["kind"] = "quartic";
      j["lambda"] = p.lambda();
      break;
    case PotentialKind::even_polynomial:
      j["kind"] = "polynomial";
      j["coeffs"] = p.coeffs();
      break;
  }
  return j;
}

json config_json(const ProblemConfig& cfg) {
  json j;
  j["potential"] = potential_json(cfg.potential);
  j["hbar"] = cfg.constants.hbar;
  j["mass"] = cfg.constants.mass;
  if (cfg.exact_diagonal)
    j["alpha"] = "exact-diagonal";
  else if (cfg.alpha)
    j["alpha"] = *cfg.alpha;
  if (cfg.dim) j["dim"] = *cfg.dim;
  if (!cfg.dims.empty()) j["dims"] = cfg.dims;
  if (!cfg.alpha_grid.empty()) j["alpha_grid"] = cfg.alpha_grid;
  if (cfg.alpha_bracket) j["alpha_bracket"] = {cfg.alpha_bracket->first, cfg.alpha_bracket->second};
  return j;
}

json check_json(const std::string& name, bool pass, const std::string& detail) {
  return json{{"name", name}, {"pass", pass}, {"detail", detail}};
}

json make_report(const std::string& command, const ProblemConfig& cfg) {
  json r;
  r["command"] = command;
  r["config"] = config_json(cfg);
  r["results"] = json::object();
  r["checks"] = json::array();
  return r;
}

class Emitter {
 public:
  Emitter(const ProblemConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  void write(const std::string& text) {
    if (cfg_.output_path.empty() || cfg_.output_path == "-") {
      out_ << text;
      return;
    }
    std::ofstream file(cfg_.output_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + cfg_.output_path + "'");
    file << text;
  }

  void write_json(const json& report) { write(report.dump(2) + "\n"); }

 private:
  const ProblemConfig& cfg_;
  std::ostream& out_;
};

double require_alpha(const ProblemConfig& cfg) {
  if (!cfg.alpha) throw UsageError("--alpha is required");
  return *cfg.alpha;
}

std::size_t require_dim(const ProblemConfig& cfg) {
  if (!cfg.dim) throw UsageError("--dim is required");
  return *cfg.dim;
}

int cmd_solve(const ProblemConfig& cfg, std::ostream& out) {
  const double alpha = require_alpha(cfg);
  const std::size_t dim = require_dim(cfg);
  const BasisSpec spec(alpha, cfg.constants);
  const auto spectrum = eigh(hamiltonian_matrix(spec, cfg.potential, dim));

  struct Row {
    double energy;
    Parity parity;
    std::size_t nodes;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < dim; ++i) {
    const auto coeffs = spectrum.eigenvector(i);
    const auto grid = node_grid(spec, cfg.potential, spectrum.eigenvalues[i]);
    const auto samples = reconstruct(spec, coeffs, grid);
    rows.push_back({spectrum.eigenvalues[i], parity_classify(coeffs, kParityTolerance),
                    samples.node_count});
  }

  Emitter emit(cfg, out);
  if (cfg.json_output) {
    auto report = make_report("solve", cfg);
    report["results"]["alpha"] = alpha;
    json arr = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i)
      arr.push_back({{"index", i},
                     {"eigenvalue", rounded(rows[i].energy)},
                     {"parity", parity_symbol(rows[i].parity)},
                     {"node_count", rows[i].nodes}});
    report["results"]["rows"] = arr;
    const double limit = 1e-10 * (1.0 + std::abs(spectrum.eigenvalues.back()));
    report["checks"].push_back(check_json("eigensolver_residual", spectrum.residual_norm <= limit,
                                          "max residual " + format_number(spectrum.residual_norm)));
    emit.write_json(report);
  } else {
    std::ostringstream os;
    os << "index,eigenvalue,parity,node_count\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
      os << i << ',' << format_number(rows[i].energy) << ',' << parity_symbol(rows[i].parity)
         << ',' << rows[i].nodes << '\n';
    emit.write(os.str());
  }
  return kExitOk;
}

std::vector<double> exact_levels(const ProblemConfig& cfg, const std::string& mode,
                                 const ConvergenceTable& table, std::string& source) {
  std::string m = mode;
  if (m == "auto") m = cfg.potential.kind() == PotentialKind::harmonic ? "analytic" : "none";
  source = m;
  if (m == "none") return {};
  const std::size_t levels = table.dims.back();
  if (m == "analytic") {
    if (cfg.potential.kind() != PotentialKind::harmonic)
      throw UsageError("--exact analytic is only available for the harmonic potential");
    const double hw = cfg.constants.hbar * cfg.potential.omega();
    std::vector<double> e(levels);
    for (std::size_t i = 0; i < levels; ++i) e[i] = hw * (static_cast<double>(i) + 0.5);
    return e;
  }
  if (m == "numerov") {
    double cap = table.spectra.back().back();
    cap += 1e-6 * (1.0 + std::abs(cap));
    ShootingConfig tmpl;
    auto e = spectrum_below(cfg.potential, cfg.constants, tmpl, cap);
    if (e.size() > levels) e.resize(levels);
    return e;
  }
  throw UsageError("--exact must be auto, none, analytic or numerov");
}

int cmd_verify_mhu(const ProblemConfig& cfg, const RawOptions& raw, std::ostream& out,
                   std::ostream& err) {
  const double alpha = require_alpha(cfg);
  if (cfg.dims.empty()) throw UsageError("--dims is required");
  auto table = convergence_table(cfg.potential, cfg.constants, alpha, cfg.dims);

  std::string source;
  const auto exact = exact_levels(cfg, raw.exact, table, source);

  if (raw.inject_violation) {
    // Negative control. With exact levels, push the ground level of the
    // largest truncation below E_0; without, push the smallest truncation's
    // ground level below that of the next one, which breaks monotonicity.
    if (!exact.empty()) {
      auto& last = table.spectra.back();
      last.front() = std::min(last.front(), exact.front()) - 1e-3 * (1.0 + std::abs(exact.front()));
    } else if (table.spectra.size() > 1) {
      const double next = table.spectra[1].front();
      auto& first = table.spectra.front();
      first.front() = std::min(first.front(), next) - 1e-3 * (1.0 + std::abs(next));
    }
  }

  std::optional<std::span<const double>> exact_span;
  if (!exact.empty()) exact_span = std::span<const double>(exact);
  const auto report = check_mhu(table, exact_span);

  auto first_violation = [&](MhuCheck check) -> std::string {
    for (const auto& v : report.violations)
      if (v.check == check)
        return "i=" + std::to_string(v.level) + " n=" + std::to_string(v.dim) + " vs " +
               std::to_string(v.reference) + " slack=" + format_number(v.slack);
    return "ok";
  };

  Emitter emit(cfg, out);
  if (cfg.json_output) {
    auto j = make_report("verify-mhu", cfg);
    j["results"]["alpha"] = alpha;
    j["results"]["dims"] = table.dims;
    json spectra = json::array();
    for (const auto& s : table.spectra) spectra.push_back(number_array(s));
    j["results"]["spectra"] = spectra;
    j["results"]["exact_source"] = source;
    if (!exact.empty()) j["results"]["exact"] = number_array(exact);
    json viol = json::array();
    for (const auto& v : report.violations)
      viol.push_back({{"check", to_string(v.check)},
                      {"i", v.level},
                      {"n", v.dim},
                      {"reference", v.reference},
                      {"slack", rounded(v.slack)}});
    j["results"]["violations"] = viol;
    j["checks"].push_back(check_json("monotonicity", report.monotonicity,
                                     first_violation(MhuCheck::monotonicity)));
    j["checks"].push_back(check_json("interlacing", report.interlacing,
                                     first_violation(MhuCheck::interlacing)));
    if (report.upper_bound)
      j["checks"].push_back(check_json("upper_bound", *report.upper_bound,
                                       first_violation(MhuCheck::upper_bound)));
    emit.write_json(j);
  } else {
    std::ostringstream os;
    os << "check,pass,detail\n";
    os << "monotonicity," << (report.monotonicity ? "true" : "false") << ','
       << first_violation(MhuCheck::monotonicity) << '\n';
    os << "interlacing," << (report.interlacing ? "true" : "false") << ','
       << first_violation(MhuCheck::interlacing) << '\n';
    if (report.upper_bound)
      os << "upper_bound," << (*report.upper_bound ? "true" : "false") << ','
         << first_violation(MhuCheck::upper_bound) << '\n';
    emit.write(os.str());
  }

  if (!report.pass()) {
    for (const auto& v : report.violations)
      err << "violation: " << to_string(v.check) << " i=" << v.level << " n=" << v.dim
          << " reference=" << v.reference << " slack=" << format_number(v.slack) << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_scan_alpha(const ProblemConfig& cfg, const RawOptions& raw, std::ostream& out,
                   std::ostream& err) {
  const std::size_t dim = require_dim(cfg);
  const bool grid_mode = !cfg.alpha_grid.empty();
  if (grid_mode == cfg.alpha_bracket.has_value())
    throw UsageError("give exactly one of --alpha-grid and --alpha-bracket");

  Emitter emit(cfg, out);
  if (grid_mode) {
    const auto scan = scan_alpha(cfg.potential, cfg.constants, dim, cfg.alpha_grid);
    const std::size_t levels = raw.levels == 0 ? dim : std::min(raw.levels, dim);
    if (cfg.json_output) {
      auto j = make_report("scan-alpha", cfg);
      j["results"]["alphas"] = number_array(scan.alphas);
      json energies = json::array();
      for (const auto& e : scan.energies)
        energies.push_back(number_array(std::vector<double>(e.begin(), e.begin() + levels)));
      j["results"]["energies"] = energies;
      j["results"]["argmin_alpha"] = rounded(scan.argmin_alpha);
      const bool interior =
          scan.argmin_alpha != scan.alphas.front() && scan.argmin_alpha != scan.alphas.back();
      j["checks"].push_back(check_json("argmin_interior", interior,
                                       interior ? "ok" : "minimum on grid edge"));
      emit.write_json(j);
    } else {
      std::ostringstream os;
      os << "alpha";
      for (std::size_t i = 0; i < levels; ++i) os << ",eps_" << i;
      os << '\n';
      for (std::size_t k = 0; k < scan.alphas.size(); ++k) {
        os << format_number(scan.alphas[k]);
        for (std::size_t i = 0; i < levels; ++i) os << ',' << format_number(scan.energies[k][i]);
        os << '\n';
      }
      os << "# argmin_alpha=" << format_number(scan.argmin_alpha) << '\n';
      emit.write(os.str());
    }
    return kExitOk;
  }

  const auto [lo, hi] = *cfg.alpha_bracket;
  if (!(lo > 0.0) || !(hi > lo)) throw UsageError("--alpha-bracket must satisfy 0 < lo < hi");
  const auto best = minimize_alpha(cfg.potential, cfg.constants, dim, lo, hi);
  if (best.boundary) err << "warning: minimum found on the bracket boundary\n";
  if (cfg.json_output) {
    auto j = make_report("scan-alpha", cfg);
    j["results"]["alpha_star"] = rounded(best.alpha_star);
    j["results"]["energy"] = rounded(best.energy);
    j["results"]["boundary"] = best.boundary;
    j["results"]["warning"] = best.boundary ? json("boundary solution") : json(nullptr);
    j["checks"].push_back(check_json("interior_minimum", !best.boundary,
                                     best.boundary ? "boundary solution" : "ok"));
    emit.write_json(j);
  } else {
    std::ostringstream os;
    os << "alpha_star,energy,boundary\n"
       << format_number(best.alpha_star) << ',' << format_number(best.energy) << ','
       << (best.boundary ? "true" : "false") << '\n';
    emit.write(os.str());
  }
  return kExitOk;
}

int cmd_oracle_compare(const ProblemConfig& cfg, const RawOptions& raw, std::ostream& out,
                       std::ostream& err) {
  const double alpha = require_alpha(cfg);
  const std::size_t dim = require_dim(cfg);
  if (dim > kOracleMaxDim)
    throw UsageError("oracle-compare supports --dim up to " + std::to_string(kOracleMaxDim));
  QuarticBand4 band4 = QuarticBand4::corrected;
  if (raw.band4 == "printed")
    band4 = QuarticBand4::printed;
  else if (raw.band4 != "corrected")
    throw UsageError("--quartic-band4 must be corrected or printed");

  const auto cmp = compare_with_oracle(BasisSpec(alpha, cfg.constants), cfg.potential, dim, band4);
  const bool pass = cmp.max_discrepancy <= kOracleThreshold;

  Emitter emit(cfg, out);
  if (cfg.json_output) {
    auto j = make_report("oracle-compare", cfg);
    j["results"]["max_discrepancy"] = rounded(cmp.max_discrepancy);
    j["results"]["worst_r"] = cmp.worst_r;
    j["results"]["worst_s"] = cmp.worst_s;
    j["results"]["analytic"] = rounded(cmp.analytic_value);
    j["results"]["oracle"] = rounded(cmp.oracle_value);
    j["results"]["threshold"] = kOracleThreshold;
    j["checks"].push_back(check_json("oracle_agreement", pass,
                                     "max |analytic - oracle| = " +
                                         format_number(cmp.max_discrepancy) + " at (" +
                                         std::to_string(cmp.worst_r) + ", " +
                                         std::to_string(cmp.worst_s) + ")"));
    emit.write_json(j);
  } else {
    std::ostringstream os;
    os << "max_discrepancy,worst_r,worst_s,analytic,oracle,pass\n"
       << format_number(cmp.max_discrepancy) << ',' << cmp.worst_r << ',' << cmp.worst_s << ','
       << format_number(cmp.analytic_value) << ',' << format_number(cmp.oracle_value) << ','
       << (pass ? "true" : "false") << '\n';
    emit.write(os.str());
  }
  if (!pass) {
    err << "oracle discrepancy " << format_number(cmp.max_discrepancy) << " at (r, s) = ("
        << cmp.worst_r << ", " << cmp.worst_s << ")\n";
    return kExitFailure;
  }
  return kExitOk;
}

void add_problem_options(CLI::App* sub, RawOptions& o) {
  sub->add_option("--potential", o.potential, "harmonic, quartic or polynomial")
      ->check(CLI::IsMember({"harmonic", "quartic", "polynomial"}));
  sub->add_option("--omega", o.omega, "harmonic angular frequency");
  sub->add_option("--lambda", o.lambda, "quartic coupling");
  sub->add_option("--coeffs", o.coeffs, "polynomial coefficients c_k of x^(2k)")->delimiter(',');
  sub->add_option("--hbar", o.hbar, "reduced Planck constant");
  sub->add_option("--mass", o.mass, "particle mass");
  sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output", o.output, "output file (default: standard output)");
  sub->add_option("--seed", o.seed, "reserved; no stochastic components");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hermite-Gaussian Ritz solver for one-dimensional Hamiltonians", "hritz"};
  app.require_subcommand(1, 1);
  RawOptions o;

  auto* solve = app.add_subcommand("solve", "diagonalize H at one alpha and dimension");
  add_problem_options(solve, o);
  solve->add_option("--alpha", o.alpha, "basis width or 'exact-diagonal'")->required();
  solve->add_option("--dim", o.dim, "basis dimension")->required();

  auto* mhu = app.add_subcommand("verify-mhu", "check eigenvalue bounds and interlacing");
  add_problem_options(mhu, o);
  mhu->add_option("--alpha", o.alpha, "basis width or 'exact-diagonal'")->required();
  mhu->add_option("--dims", o.dims, "truncations: a,b,c or start:stop[:step]")->required();
  mhu->add_option("--exact", o.exact, "reference levels: auto, none, analytic, numerov")
      ->check(CLI::IsMember({"auto", "none", "analytic", "numerov"}));
  mhu->add_flag("--inject-violation", o.inject_violation, "test hook: corrupt one eigenvalue")
      ->group("");

  auto* scan = app.add_subcommand("scan-alpha", "scan or minimize the ground level over alpha");
  add_problem_options(scan, o);
  scan->add_option("--dim", o.dim, "basis dimension")->required();
  scan->add_option("--alpha-grid", o.alpha_grid, "ascending alphas")->delimiter(',');
  scan->add_option("--alpha-bracket", o.alpha_bracket, "lo,hi for golden-section search")
      ->delimiter(',');
  scan->add_option("--levels", o.levels, "eigenvalue columns to print (default: all)");

  auto* oracle = app.add_subcommand("oracle-compare", "analytic matrices versus quadrature");
  add_problem_options(oracle, o);
  oracle->add_option("--alpha", o.alpha, "basis width or 'exact-diagonal'")->required();
  oracle->add_option("--dim", o.dim, "basis dimension (<= 64)")->required();
  oracle->add_option("--quartic-band4", o.band4, "test hook: corrected or printed")->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const auto cfg = make_config(o);
    if (solve->parsed()) return cmd_solve(cfg, out);
    if (mhu->parsed()) return cmd_verify_mhu(cfg, o, out, err);
    if (scan->parsed()) return cmd_scan_alpha(cfg, o, out, err);
    if (oracle->parsed()) return cmd_oracle_compare(cfg, o, out, err);
    err << "error: no command\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace hritz::cli
