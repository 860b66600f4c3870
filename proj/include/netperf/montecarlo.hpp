#pragma once

#include <cstdint>

#include <json.hpp>

#include "netperf/types.hpp"

namespace netperf::montecarlo {

/// Euler-Maruyama step must satisfy dt < kStepNormCap / ||A||_F.
inline constexpr double kStepNormCap = 0.1;

/// A trajectory whose state norm exceeds this aborts with Diverged.
inline constexpr double kDivergenceNorm = 1e12;

struct SimulationConfig {
  double dt = 1e-3;        ///< integration step
  double horizon = 200.0;  ///< total simulated time
  double burn_in = 0.0;    ///< discarded transient, < horizon
  int ensembles = 64;      ///< independent trajectories
  std::uint64_t seed = 0;  ///< deterministic stream
};

struct DispersionEstimate {
  double mean = 0.0;       ///< time-and-ensemble average of x^T Q x after burn-in
  double std_error = 0.0;  ///< standard error across ensemble means
  std::int64_t samples = 0;
};

/// Euler-Maruyama estimate of the steady-state dispersion:
///   x_{k+1} = x_k + dt A x_k + sqrt(dt) w_k,  w_k ~ N(0, I),  x_0 = 0.
/// Ensemble e draws from std::mt19937_64 seeded with SplitMix64 over
/// (seed, e), so the result is bit-reproducible for a fixed seed and
/// independent of how ensembles are scheduled across threads.
DispersionEstimate simulate_dispersion(const LinearSystem& sys, const SimulationConfig& cfg);

/// Ten slowest time constants: 10 / |max Re lambda(A)|. Requires Hurwitz A.
double suggested_burn_in(const Matrix& a);

/// {"mean", "stderr", "samples"}
nlohmann::json to_json(const DispersionEstimate& estimate);

}  // namespace netperf::montecarlo
