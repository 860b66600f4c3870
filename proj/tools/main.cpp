#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "netperf/bounds.hpp"
#include "netperf/cyclic.hpp"
#include "netperf/lyapunov.hpp"
#include "netperf/matrix_io.hpp"
#include "netperf/montecarlo.hpp"
#include "netperf/spectra.hpp"
#include "netperf/sweep.hpp"
#include "netperf/types.hpp"

namespace {

constexpr int kExitStability = 2;
constexpr int kExitInput = 3;
constexpr int kExitNumeric = 4;

// Dense eigenchecks above this size are skipped; the closed-form spectrum
// (identical decay) or the secant criterion carries the verdict instead.
constexpr int kEigenCap = 2048;

using netperf::LinearSystem;
using netperf::Matrix;
using netperf::Vector;

struct SimFlags {
  double dt = 1e-3;
  double horizon = 200.0;
  double burn_in = -1.0;  // negative: derive from the slowest time constant
  int ensembles = 64;
  std::uint64_t seed = 12345;
};

void add_sim_flags(CLI::App* cmd, SimFlags& flags) {
  cmd->add_option("--dt", flags.dt, "Integration step")->capture_default_str();
  cmd->add_option("--horizon", flags.horizon, "Total simulated time")->capture_default_str();
  cmd->add_option("--burn-in", flags.burn_in,
                  "Discarded transient (default: ten slowest time constants)");
  cmd->add_option("--ensembles", flags.ensembles, "Independent trajectories")->capture_default_str();
  cmd->add_option("--seed", flags.seed, "RNG seed")->capture_default_str();
}

netperf::montecarlo::SimulationConfig make_config(const SimFlags& flags, const Matrix& a) {
  netperf::montecarlo::SimulationConfig cfg;
  cfg.dt = flags.dt;
  cfg.horizon = flags.horizon;
  cfg.burn_in = flags.burn_in >= 0.0 ? flags.burn_in : netperf::montecarlo::suggested_burn_in(a);
  cfg.ensembles = flags.ensembles;
  cfg.seed = flags.seed;
  return cfg;
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw netperf::InvalidInput("cannot open file: " + path);
    in = &file;
  }
  nlohmann::json j;
  try {
    *in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw netperf::InvalidInput(std::string("bad JSON: ") + e.what());
  }
  return j;
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_analyze(const std::string& matrix_path, const std::string& weight_path, bool json_input) {
  const Matrix a = netperf::io::read_matrix_file(matrix_path, json_input);
  const Matrix q = netperf::io::read_matrix_file(weight_path, json_input);
  const LinearSystem sys(a, q);
  emit(netperf::bounds::to_json(netperf::bounds::analyze(sys)));
  return 0;
}

int cmd_cyclic(const std::string& params_path, const std::string& output, bool simulate,
               const SimFlags& sim_flags, int exact_cap) {
  if (!output.empty() && output != "last") {
    throw netperf::InvalidInput("--output accepts only \"last\"");
  }
  const auto params = netperf::cyclic::params_from_json(load_json(params_path));
  const auto derived = netperf::cyclic::derive(params);
  const Matrix a = netperf::cyclic::build_state_matrix(params);
  const int n = params.n;

  // Numeric verdict is authoritative; the secant criterion is the analytic
  // companion (exact only for identical decay rates).
  nlohmann::json hurwitz = nullptr;
  if (n <= kEigenCap) {
    hurwitz = netperf::spectra::is_hurwitz(a);
  } else if (derived.identical_a) {
    double worst = -1.0;
    for (const auto& lambda : netperf::cyclic::closed_form_eigenvalues(params)) {
      worst = std::max(worst, lambda.real());
    }
    hurwitz = worst < 0.0;
  }

  nlohmann::json report{
      {"n", n},
      {"frak_a", derived.frak_a},
      {"frak_c", derived.frak_c},
      {"gamma", derived.gamma},
      {"beta", derived.beta},
      {"regime", std::string(netperf::cyclic::regime_name(derived.regime))},
      {"secant_stable", derived.secant_stable},
      {"hurwitz", hurwitz},
      {"identical_a", derived.identical_a},
      {"identical_c", derived.identical_c},
      {"closed_form_lower_bound", nullptr},
      {"exact", nullptr},
  };

  const bool stable = hurwitz.is_boolean() ? hurwitz.get<bool>() : derived.secant_stable;
  if (!stable) {
    emit(report);
    std::cerr << "error: cyclic network is unstable (secant: " << (derived.secant_stable ? "stable" : "unstable")
              << ", numeric: " << (hurwitz.is_boolean() ? (hurwitz.get<bool>() ? "stable" : "unstable") : "skipped")
              << ")\n";
    return kExitStability;
  }

  if (derived.identical_a) {
    report["closed_form_lower_bound"] = netperf::cyclic::closed_form_lower_bound(params);
  }
  if (n <= exact_cap) {
    const LinearSystem sys(a, Matrix::Identity(n, n));
    report["exact"] = netperf::lyapunov::performance_measure(sys);
  }
  if (output == "last") {
    report["output_dispersion_bound"] =
        (derived.identical_a && derived.identical_c)
            ? nlohmann::json(netperf::cyclic::output_dispersion_bound(params))
            : nlohmann::json(nullptr);
    if (n <= exact_cap) {
      Vector last_row = Vector::Zero(n);
      last_row(n - 1) = 1.0;
      const LinearSystem sys(a, Matrix::Identity(n, n));
      report["output_dispersion"] = netperf::lyapunov::restricted_dispersion(sys, last_row);
    } else {
      report["output_dispersion"] = nullptr;
    }
  }
  if (simulate) {
    const LinearSystem sys(a, Matrix::Identity(n, n));
    report["simulation"] =
        netperf::montecarlo::to_json(netperf::montecarlo::simulate_dispersion(sys, make_config(sim_flags, a)));
  }
  emit(report);
  return 0;
}

int cmd_sweep(const std::string& regime_name, double beta, double frak_c,
              const std::vector<int>& n_list, int exact_cap, const std::string& out_path) {
  netperf::sweep::SweepSpec spec;
  spec.regime = netperf::cyclic::regime_from_name(regime_name);
  spec.beta = beta;
  spec.frak_c = frak_c;
  spec.n_list = n_list;
  spec.exact_cap = exact_cap;

  const std::string csv = netperf::sweep::to_csv(netperf::sweep::run(spec));
  if (out_path == "-") {
    std::fwrite(csv.data(), 1, csv.size(), stdout);
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw netperf::InvalidInput("cannot open output file: " + out_path);
  file.write(csv.data(), static_cast<std::streamsize>(csv.size()));
  return 0;
}

int cmd_simulate(const std::string& matrix_path, const std::string& weight_path, bool json_input,
                 const SimFlags& sim_flags) {
  const Matrix a = netperf::io::read_matrix_file(matrix_path, json_input);
  const Matrix q = netperf::io::read_matrix_file(weight_path, json_input);
  const LinearSystem sys(a, q);
  emit(netperf::montecarlo::to_json(
      netperf::montecarlo::simulate_dispersion(sys, make_config(sim_flags, a))));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady-state noise amplification certificates for stable linear dynamical networks"};
  app.require_subcommand(1);

  std::string matrix_path, weight_path;
  bool json_input = false;
  CLI::App* analyze = app.add_subcommand("analyze", "Exact measure plus spectral sandwich bounds");
  analyze->add_option("matrix", matrix_path, "State matrix file (text; '-' for stdin)")->required();
  analyze->add_option("weight", weight_path, "Output weight file (symmetric PSD)")->required();
  analyze->add_flag("--json-input", json_input, "Read matrices as JSON instead of text");

  std::string params_path, cyclic_output;
  bool cyclic_simulate = false;
  SimFlags cyclic_sim;
  int cyclic_exact_cap = netperf::sweep::kDefaultExactCap;
  CLI::App* cyclic = app.add_subcommand("cyclic", "Cyclic-network study: stability, closed forms, exact value");
  cyclic->add_option("params", params_path, "Params JSON file ('-' for stdin)")->required();
  cyclic->add_option("--output", cyclic_output, "Restrict the output: \"last\" adds the single-output bound");
  cyclic->add_option("--exact-cap", cyclic_exact_cap, "Largest n for exact Lyapunov solves")->capture_default_str();
  cyclic->add_flag("--simulate", cyclic_simulate, "Add a stochastic estimate of the dispersion");
  add_sim_flags(cyclic, cyclic_sim);

  std::string sweep_regime, sweep_out;
  double sweep_beta = 0.0, sweep_frak_c = 1.0;
  std::vector<int> sweep_n_list;
  int sweep_exact_cap = netperf::sweep::kDefaultExactCap;
  CLI::App* sweep = app.add_subcommand("sweep", "Size-scaling experiment at fixed beta; writes CSV");
  sweep->add_option("--regime", sweep_regime, "sub, unit or super")->required();
  sweep->add_option("--beta", sweep_beta, "Fixed shape parameter")->capture_default_str();
  sweep->add_option("--frak-c", sweep_frak_c, "Coupling gain")->capture_default_str();
  sweep->add_option("--n-list", sweep_n_list, "Ascending network sizes")->required()->delimiter(',');
  sweep->add_option("--exact-cap", sweep_exact_cap, "Largest n for exact Lyapunov solves")->capture_default_str();
  sweep->add_option("--out", sweep_out, "CSV path ('-' for stdout)")->required();

  std::string sim_matrix_path, sim_weight_path;
  bool sim_json_input = false;
  SimFlags sim_flags;
  CLI::App* simulate = app.add_subcommand("simulate", "Stochastic dispersion estimate for a general system");
  simulate->add_option("matrix", sim_matrix_path, "State matrix file (text; '-' for stdin)")->required();
  simulate->add_option("weight", sim_weight_path, "Output weight file (symmetric PSD)")->required();
  simulate->add_flag("--json-input", sim_json_input, "Read matrices as JSON instead of text");
  add_sim_flags(simulate, sim_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(matrix_path, weight_path, json_input);
    if (cyclic->parsed())
      return cmd_cyclic(params_path, cyclic_output, cyclic_simulate, cyclic_sim, cyclic_exact_cap);
    if (sweep->parsed())
      return cmd_sweep(sweep_regime, sweep_beta, sweep_frak_c, sweep_n_list, sweep_exact_cap, sweep_out);
    if (simulate->parsed()) return cmd_simulate(sim_matrix_path, sim_weight_path, sim_json_input, sim_flags);
  } catch (const netperf::NotHurwitz& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStability;
  } catch (const netperf::Unstable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStability;
  } catch (const netperf::HeterogeneousDecay& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const netperf::HeterogeneousParams& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const netperf::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const netperf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return 0;
}
