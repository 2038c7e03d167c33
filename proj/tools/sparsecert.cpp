// sparsecert: bound tables, recovery sweeps and verification suites as CSV.
//
// Exit codes: 0 all checks passed, 1 usage or I/O error, 2 a verification failed.
//
//   sparsecert bounds-table --k-max 50 --out fig1.csv
//   sparsecert recovery-sweep --ensemble tight_frame --m 20 --n 24 --k 2 --trials 1000 --certify
//   sparsecert verify --suite lemma_a2 --seed 7
//
// --config <file> reads key=value lines (# comments allowed); each key is the
// long flag name of the subcommand. Flags given on the command line win.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sparsecert/error.hpp"
#include "sparsecert/experiments.hpp"

namespace sc = sparsecert;

namespace {

struct Common {
  std::uint64_t seed = 0;
  std::string out;
  std::string config;
};

struct SweepOpts {
  std::string algorithm = "omp";
  std::string ensemble = "gaussian";
  std::string noise = "none";
  double epsilon = 0.01;
  double perturbation = 0.0;
  long m = 20, n = 24, k = 2;
  std::uint64_t trials = 100;
  bool certify = false;
  double threshold_factor = 1.05;
  double min_magnitude = 1.0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "base seed (trial t uses seed + t)");
  cmd->add_option("--out", c.out, "output CSV path (stdout when omitted)");
  cmd->add_option("--config", c.config, "key=value file; command-line flags override it");
}

void add_sweep(CLI::App* cmd, SweepOpts& o, bool noisy) {
  cmd->add_option("--algorithm", o.algorithm)->check(CLI::IsMember({"omp", "sp"}));
  cmd->add_option("--ensemble", o.ensemble)->check(CLI::IsMember({"gaussian", "tight_frame", "orthonormal"}));
  cmd->add_option("--perturbation", o.perturbation, "tight_frame: Gaussian perturbation scale");
  cmd->add_option("--m", o.m)->check(CLI::PositiveNumber);
  cmd->add_option("--n", o.n)->check(CLI::PositiveNumber);
  cmd->add_option("--k", o.k)->check(CLI::PositiveNumber);
  cmd->add_option("--trials", o.trials);
  cmd->add_option("--noise", o.noise)->check(CLI::IsMember({"none", "l2", "linf"}));
  cmd->add_option("--epsilon", o.epsilon)->check(CLI::NonNegativeNumber);
  if (noisy) {
    cmd->add_option("--threshold-factor", o.threshold_factor, "certified trials draw |x_i| >= factor * threshold");
    cmd->add_option("--min-magnitude", o.min_magnitude, "|x_i| floor on uncertified trials");
  } else {
    cmd->add_flag("--certify", o.certify, "compute the exact RIC of every trial");
  }
}

/// Pulls the --config path out of argv (either "--config p" or "--config=p").
std::string find_config(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) return argv[i + 1];
    if (a.rfind("--config=", 0) == 0) return a.substr(9);
  }
  return {};
}

std::vector<std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sc::Error(sc::ErrorCode::IoError, "cannot read config '" + path + "'");
  std::vector<std::string> flags;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") + 1 - first);
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw sc::Error(sc::ErrorCode::IoError, "config line without '=': " + line);
    std::string key = line.substr(0, eq);
    key.erase(key.find_last_not_of(" \t") + 1);
    std::string value = line.substr(eq + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    flags.push_back("--" + key + "=" + value);
  }
  return flags;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sc::Error(sc::ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw sc::Error(sc::ErrorCode::IoError, "failed writing '" + path + "'");
}

sc::SweepConfig to_config(const SweepOpts& o, const Common& c) {
  sc::SweepConfig cfg;
  cfg.algorithm = o.algorithm == "sp" ? sc::Algorithm::Sp : sc::Algorithm::Omp;
  cfg.ensemble = o.ensemble == "tight_frame"   ? sc::Ensemble::TightFrame
                 : o.ensemble == "orthonormal" ? sc::Ensemble::Orthonormal
                                               : sc::Ensemble::Gaussian;
  cfg.perturbation = o.perturbation;
  cfg.m = o.m;
  cfg.n = o.n;
  cfg.k = o.k;
  cfg.trials = o.trials;
  cfg.seed_base = c.seed;
  cfg.certify = o.certify;
  if (o.noise == "l2") cfg.noise = sc::NoiseSpec::l2_ball(o.epsilon);
  if (o.noise == "linf") cfg.noise = sc::NoiseSpec::linf_correlation(o.epsilon);
  cfg.threshold_factor = o.threshold_factor;
  cfg.min_magnitude = o.min_magnitude;
  return cfg;
}

sc::RunManifest manifest_for(const CLI::App* cmd, const Common& c) {
  sc::RunManifest m;
  m.command = cmd->get_name();
  m.seed_base = c.seed;
  for (const CLI::Option* opt : cmd->get_options()) {
    const std::string name = opt->get_single_name();
    if (name.empty() || name == "help" || name == "out" || name == "config" || name == "seed") continue;
    std::string value = opt->get_default_str();
    if (!opt->results().empty()) value = opt->results().back();
    if (opt->get_expected_min() == 0 && opt->results().empty()) value = "false";
    m.parameters.emplace_back(name, value);
  }
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse recovery certification toolkit"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast)->always_capture_default();
  app.set_version_flag("--version", std::string(SPARSECERT_VERSION));

  Common common;
  long k_min = 1, k_max = 20;
  double d_min = 0.01, d_max = 0.99, d_step = 0.01;
  double c_min = 0.001, c_max = 0.3, c_step = 0.001;
  SweepOpts sweep, noisy;
  noisy.noise = "l2";
  std::string suite;

  auto* bounds = app.add_subcommand("bounds-table", "sufficient RIC bounds on delta_{K+1} for K-step OMP");
  bounds->add_option("--k-min", k_min)->check(CLI::PositiveNumber);
  bounds->add_option("--k-max", k_max)->check(CLI::PositiveNumber);

  auto* eff = app.add_subcommand("effective-ric", "RIC estimates of the interference-cancelled operator");
  eff->add_option("--delta-min", d_min);
  eff->add_option("--delta-max", d_max);
  eff->add_option("--step", d_step);

  auto* spc = app.add_subcommand("sp-constants", "Subspace Pursuit constants over a delta grid");
  spc->add_option("--delta-min", c_min);
  spc->add_option("--delta-max", c_max);
  spc->add_option("--step", c_step);

  auto* rec = app.add_subcommand("recovery-sweep", "Monte Carlo OMP / SP recovery trials");
  add_sweep(rec, sweep, false);

  auto* nsw = app.add_subcommand("noisy-sweep", "certified noisy trials with magnitudes above the threshold");
  add_sweep(nsw, noisy, true);

  auto* ver = app.add_subcommand("verify", "run a numeric verification suite");
  ver->add_option("--suite,suite", suite)->required()->check(CLI::IsMember(sc::verify_suite_names()));

  for (auto* cmd : {bounds, eff, spc, rec, nsw, ver}) add_common(cmd, common);

  std::vector<std::string> args(argv, argv + argc);
  try {
    const std::string config = find_config(argc, argv);
    if (!config.empty()) {
      // Config flags go right after the subcommand name so later user flags win.
      std::size_t at = 1;
      while (at < args.size() && args[at].rfind("-", 0) == 0) ++at;
      if (at < args.size()) {
        const auto flags = read_config(config);
        args.insert(args.begin() + static_cast<std::ptrdiff_t>(at) + 1, flags.begin(), flags.end());
      }
    }
  } catch (const sc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  std::vector<char*> cargs;
  for (auto& a : args) cargs.push_back(a.data());
  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    std::ostringstream csv;
    int status = 0;
    if (bounds->parsed()) {
      manifest_for(bounds, common).write(csv);
      sc::write_bounds_table(csv, k_min, k_max);
    } else if (eff->parsed()) {
      manifest_for(eff, common).write(csv);
      sc::write_effective_ric_table(csv, d_min, d_max, d_step);
    } else if (spc->parsed()) {
      manifest_for(spc, common).write(csv);
      sc::write_sp_constants_table(csv, c_min, c_max, c_step);
    } else if (rec->parsed() || nsw->parsed()) {
      const bool is_noisy = nsw->parsed();
      sc::SweepConfig cfg = to_config(is_noisy ? noisy : sweep, common);
      if (is_noisy) {
        cfg.certify = true;
        if (cfg.noise.model == sc::NoiseModel::None) {
          std::cerr << "error: noisy-sweep needs --noise l2 or linf\n";
          return 1;
        }
      }
      const sc::SweepSummary s = sc::run_recovery_sweep(cfg);
      manifest_for(is_noisy ? nsw : rec, common).write(csv);
      sc::write_sweep_csv(csv, s);
      std::cerr << "trials " << s.rows.size() << ", successes " << s.successes << ", certified " << s.certified
                << ", certified failures " << s.certified_failures << '\n';
      if (s.certified_failures > 0) status = 2;
    } else if (ver->parsed()) {
      const auto rows = sc::run_verify_suite(suite, common.seed);
      manifest_for(ver, common).write(csv);
      sc::write_checks_csv(csv, suite, rows);
      std::size_t failed = 0;
      for (const auto& r : rows) failed += r.pass ? 0 : 1;
      std::cerr << suite << ": " << rows.size() << " checks, " << failed << " failed\n";
      if (failed > 0) status = 2;
    }
    emit(common.out, csv.str());
    return status;
  } catch (const sc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
