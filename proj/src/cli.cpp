#include "skewlab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "skewlab/errors.hpp"
#include "skewlab/io.hpp"

namespace skewlab {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

double to_double(const std::string& s) {
  try {
    std::size_t used = 0;
    const double x = std::stod(s, &used);
    if (used != s.size()) throw DomainError("");
    return x;
  } catch (const std::exception&) {
    throw DomainError("not a number: '" + s + "'");
  }
}

std::size_t to_size(const std::string& s) {
  std::size_t x = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || end != s.data() + s.size()) throw DomainError("not an integer: '" + s + "'");
  return x;
}

/// "2,3,4" or ranges such as "2-8".
std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  for (const std::string& item : split(text, ',')) {
    if (const auto dash = item.find('-'); dash != std::string::npos) {
      const std::size_t lo = to_size(item.substr(0, dash));
      const std::size_t hi = to_size(item.substr(dash + 1));
      if (hi < lo) throw DomainError("empty dimension range '" + item + "'");
      for (std::size_t d = lo; d <= hi; ++d) dims.push_back(d);
    } else {
      dims.push_back(to_size(item));
    }
  }
  if (dims.empty()) throw DomainError("no dimensions given");
  if (std::find(dims.begin(), dims.end(), 0) != dims.end()) throw DomainError("dimensions must be >= 1");
  return dims;
}

/// "0,0.25,0.5" or "lo:hi:n" (n evenly spaced points, endpoints included).
std::vector<double> parse_grid(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw DomainError("grid range must look like lo:hi:n");
    const double lo = to_double(parts[0]);
    const double hi = to_double(parts[1]);
    const std::size_t n = to_size(parts[2]);
    if (n < 1) throw DomainError("grid needs at least one point");
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i)
      grid[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return grid;
  }
  std::vector<double> grid;
  for (const std::string& item : split(text, ',')) grid.push_back(to_double(item));
  if (grid.empty()) throw DomainError("empty grid");
  return grid;
}

struct ComputeArgs {
  std::string state;
  std::string obs;
  double alpha = 0.5;
  double beta = 0.5;
  double floor = kDefaultEigenFloor;
  int max_sweeps = 100;
  std::string out;
};

struct VerifyArgs {
  std::string ineq;
  std::string dims = "2,3,4";
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  std::string region = "asserted";
  double floor = 1e-6;
  double tol = kHoldsTol;
  unsigned threads = 1;
  std::string out;
};

struct HuntArgs {
  std::string ineq;
  std::size_t dim = 2;
  std::size_t trials = 100000;
  std::uint64_t seed = 0;
  std::string region = "asserted";
  double floor = 1e-6;
  double tol = kHoldsTol;
  std::string out;
};

struct SweepArgs {
  std::string alpha_grid = "0:2:9";
  std::string beta_grid = "0:2:9";
  std::string dims = "2";
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  double floor = 1e-6;
  double tol = kHoldsTol;
  bool fixture = false;
  unsigned threads = 1;
  std::string out;
};

struct ScalarArgs {
  std::size_t points = 200;
  std::size_t samples = 400;
  std::size_t weight_samples = 10000;
  std::uint64_t seed = 0;
  std::string out;
};

int do_compute(const ComputeArgs& a, std::ostream& out) {
  const SkewParams params(a.alpha, a.beta);
  JacobiOptions jacobi;
  jacobi.max_sweeps = a.max_sweeps;
  const DensityMatrix rho =
      validate_density(io::load_matrix(a.state), params.needs_invertible() ? a.floor : 0.0, jacobi);
  const Observable h(io::load_matrix(a.obs));
  io::write_output(io::report_to_json(report(rho, h, params)) + '\n', a.out, out);
  return kExitOk;
}

int do_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  TrialConfig cfg;
  cfg.target = parse_target(a.ineq);
  cfg.dims = parse_dims(a.dims);
  cfg.trials_per_dim = a.trials;
  cfg.seed = a.seed;
  cfg.region = parse_param_region(a.region);
  cfg.eigen_floor = a.floor;
  cfg.tol = a.tol;
  cfg.threads = a.threads;
  const TrialAggregate agg = run_trials(cfg);
  io::write_output(io::aggregate_to_json(agg) + '\n', a.out, out);
  if (agg.violations > 0) {
    err << a.ineq << ": " << agg.violations << " of " << agg.trials
        << " trials violated; worst trial dumped under \"worst\"\n";
    return kExitViolation;
  }
  return kExitOk;
}

int do_hunt(const HuntArgs& a, std::ostream& out) {
  HuntConfig cfg;
  cfg.target = parse_target(a.ineq);
  cfg.dim = a.dim;
  cfg.max_trials = a.trials;
  cfg.seed = a.seed;
  cfg.region = parse_param_region(a.region);
  cfg.eigen_floor = a.floor;
  cfg.tol = a.tol;
  const auto witness = hunt(cfg);
  io::write_output(witness ? io::trial_record_to_json(*witness) + '\n' : std::string("none\n"), a.out, out);
  return witness ? kExitViolation : kExitOk;
}

int do_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  SweepConfig cfg;
  cfg.alpha_grid = parse_grid(a.alpha_grid);
  cfg.beta_grid = parse_grid(a.beta_grid);
  cfg.dims = parse_dims(a.dims);
  cfg.trials_per_cell = a.trials;
  cfg.seed = a.seed;
  cfg.eigen_floor = a.floor;
  cfg.tol = a.tol;
  cfg.include_fixture = a.fixture;
  cfg.threads = a.threads;
  const auto rows = sweep(cfg);
  io::write_output(io::sweep_to_csv(rows), a.out, out);
  std::size_t asserted_violations = 0;
  for (const SweepRow& r : rows)
    if (r.region != Region::Gap) asserted_violations += r.violations;
  if (asserted_violations > 0) {
    err << "sweep: " << asserted_violations << " violations in asserted cells\n";
    return kExitViolation;
  }
  return kExitOk;
}

int do_scalar(const ScalarArgs& a, std::ostream& out) {
  ScalarSuiteConfig cfg;
  cfg.grid_points = a.points;
  cfg.param_samples = a.samples;
  cfg.weight_samples = a.weight_samples;
  cfg.seed = a.seed;
  const auto rows = run_scalar_suite(cfg);
  io::write_output(io::scalar_suite_to_json(rows) + '\n', a.out, out);
  const bool clean = std::all_of(rows.begin(), rows.end(), [](const ScalarSummary& r) { return r.violations == 0; });
  return clean ? kExitOk : kExitViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skew-information calculator and uncertainty-relation verifier", "skewlab"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  auto* compute = app.add_subcommand("compute", "Print the V/I/J/U report for one state and observable");
  compute->add_option("--state", compute_args.state, "density matrix JSON file")->required();
  compute->add_option("--obs", compute_args.obs, "observable JSON file")->required();
  compute->add_option("--alpha", compute_args.alpha, "alpha >= 0")->required();
  compute->add_option("--beta", compute_args.beta, "beta >= 0")->required();
  compute->add_option("--floor", compute_args.floor, "eigen-floor demanded when alpha + beta > 1")
      ->capture_default_str();
  compute->add_option("--max-sweeps", compute_args.max_sweeps, "Jacobi sweep cap for the state's eigensolver")
      ->capture_default_str();
  compute->add_option("--out", compute_args.out, "output file (default: standard output)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run randomized trials of one inequality");
  verify->add_option("--ineq", verify_args.ineq,
                     "heisenberg | schrodinger | luo | thm21 | thm31 | wy-naive | chain")
      ->required();
  verify->add_option("--dims", verify_args.dims, "dimensions, e.g. 2,3,4 or 2-8")->capture_default_str();
  verify->add_option("--trials", verify_args.trials, "trials per dimension")->capture_default_str();
  verify->add_option("--seed", verify_args.seed)->capture_default_str();
  verify->add_option("--region", verify_args.region, "(alpha, beta) region for thm31: asserted | gap | any")
      ->capture_default_str();
  verify->add_option("--floor", verify_args.floor, "eigen-floor of sampled states")->capture_default_str();
  verify->add_option("--tol", verify_args.tol, "holds tolerance (relative)")->capture_default_str();
  verify->add_option("--threads", verify_args.threads)->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--out", verify_args.out, "output file (default: standard output)");

  HuntArgs hunt_args;
  auto* hunt_cmd = app.add_subcommand("hunt", "Search for a counterexample; prints a witness or \"none\"");
  hunt_cmd->add_option("--ineq", hunt_args.ineq, "inequality name, as for verify")->required();
  hunt_cmd->add_option("--dim", hunt_args.dim)->capture_default_str()->check(CLI::PositiveNumber);
  hunt_cmd->add_option("--trials", hunt_args.trials, "maximum random trials")->capture_default_str();
  hunt_cmd->add_option("--seed", hunt_args.seed)->capture_default_str();
  hunt_cmd->add_option("--region", hunt_args.region, "asserted | gap | any")->capture_default_str();
  hunt_cmd->add_option("--floor", hunt_args.floor)->capture_default_str();
  hunt_cmd->add_option("--tol", hunt_args.tol)->capture_default_str();
  hunt_cmd->add_option("--out", hunt_args.out);

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Map the two-parameter relation over an (alpha, beta) grid as CSV");
  sweep_cmd->add_option("--alpha-grid", sweep_args.alpha_grid, "comma list or lo:hi:n")->capture_default_str();
  sweep_cmd->add_option("--beta-grid", sweep_args.beta_grid, "comma list or lo:hi:n")->capture_default_str();
  sweep_cmd->add_option("--dims", sweep_args.dims)->capture_default_str();
  sweep_cmd->add_option("--trials", sweep_args.trials, "random draws per dimension and cell")->capture_default_str();
  sweep_cmd->add_option("--seed", sweep_args.seed)->capture_default_str();
  sweep_cmd->add_option("--floor", sweep_args.floor)->capture_default_str();
  sweep_cmd->add_option("--tol", sweep_args.tol)->capture_default_str();
  sweep_cmd->add_flag("--fixture", sweep_args.fixture, "add the qubit fixture diag(3/4,1/4), sigma_x, sigma_y");
  sweep_cmd->add_option("--threads", sweep_args.threads)->capture_default_str()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", sweep_args.out, "CSV file (default: standard output)");

  ScalarArgs scalar_args;
  auto* scalar = app.add_subcommand("scalar", "Check the scalar inequalities and identity on grids");
  scalar->add_option("--points", scalar_args.points, "log-spaced t values")->capture_default_str();
  scalar->add_option("--samples", scalar_args.samples, "(alpha, beta) draws")->capture_default_str();
  scalar->add_option("--weight-samples", scalar_args.weight_samples)->capture_default_str();
  scalar->add_option("--seed", scalar_args.seed)->capture_default_str();
  scalar->add_option("--out", scalar_args.out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) return do_compute(compute_args, out);
    if (*verify) return do_verify(verify_args, out, err);
    if (*hunt_cmd) return do_hunt(hunt_args, out);
    if (*sweep_cmd) return do_sweep(sweep_args, out, err);
    if (*scalar) return do_scalar(scalar_args, out);
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace skewlab
