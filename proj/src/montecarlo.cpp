#include "netperf/montecarlo.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "netperf/spectra.hpp"
#include "parallel.hpp"

namespace netperf::montecarlo {
namespace {

// SplitMix64 finalizer; the documented substream convention is
// mt19937_64(mix(mix(seed) ^ golden * (ensemble_index + 1))).
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, int ensemble_index) {
  const std::uint64_t golden = 0x9E3779B97F4A7C15ULL;
  return mix64(mix64(seed) ^ (golden * (static_cast<std::uint64_t>(ensemble_index) + 1)));
}

void validate(const LinearSystem& sys, const SimulationConfig& cfg) {
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) throw InvalidInput("dt must be positive and finite");
  if (!(cfg.horizon > 0.0) || !std::isfinite(cfg.horizon)) throw InvalidInput("horizon must be positive and finite");
  if (!(cfg.burn_in >= 0.0) || cfg.burn_in >= cfg.horizon) {
    throw InvalidInput("burn_in must lie in [0, horizon)");
  }
  if (cfg.ensembles < 1) throw InvalidInput("ensembles must be a positive integer");
  const double cap = kStepNormCap / sys.A.norm();
  if (cfg.dt >= cap) {
    std::ostringstream msg;
    msg << "dt = " << cfg.dt << " too large relative to the dynamics; need dt < " << cap;
    throw StepTooLarge(msg.str());
  }
}

}  // namespace

DispersionEstimate simulate_dispersion(const LinearSystem& sys, const SimulationConfig& cfg) {
  validate(sys, cfg);
  spectra::require_hurwitz(sys.A);

  const auto total_steps = static_cast<std::int64_t>(std::llround(cfg.horizon / cfg.dt));
  const auto burn_steps = static_cast<std::int64_t>(std::llround(cfg.burn_in / cfg.dt));
  if (burn_steps >= total_steps) throw InvalidInput("burn_in leaves no post-transient samples");
  const std::int64_t kept_steps = total_steps - burn_steps;

  const int n = sys.dim();
  const double sqrt_dt = std::sqrt(cfg.dt);
  const double divergence_sq = kDivergenceNorm * kDivergenceNorm;

  std::vector<double> ensemble_means(cfg.ensembles, 0.0);
  detail::parallel_for(cfg.ensembles, [&](int e) {
    std::mt19937_64 rng(substream_seed(cfg.seed, e));
    std::normal_distribution<double> gauss(0.0, 1.0);

    Vector x = Vector::Zero(n);
    Vector drift(n);
    Vector noise(n);
    double acc = 0.0;
    for (std::int64_t k = 1; k <= total_steps; ++k) {
      drift.noalias() = sys.A * x;
      for (int i = 0; i < n; ++i) noise(i) = gauss(rng);
      x += cfg.dt * drift + sqrt_dt * noise;
      if (x.squaredNorm() > divergence_sq) {
        throw Diverged("simulated state norm exceeded 1e12; reduce dt or check stability");
      }
      if (k > burn_steps) acc += x.dot(sys.Q * x);
    }
    ensemble_means[e] = acc / static_cast<double>(kept_steps);
  });

  DispersionEstimate estimate;
  double sum = 0.0;
  for (double m : ensemble_means) sum += m;
  estimate.mean = sum / cfg.ensembles;
  if (cfg.ensembles > 1) {
    double sq = 0.0;
    for (double m : ensemble_means) sq += (m - estimate.mean) * (m - estimate.mean);
    estimate.std_error = std::sqrt(sq / (static_cast<double>(cfg.ensembles - 1) * cfg.ensembles));
  }
  estimate.samples = kept_steps * cfg.ensembles;
  return estimate;
}

double suggested_burn_in(const Matrix& a) {
  spectra::require_hurwitz(a);
  return 10.0 / std::abs(spectra::spectral_abscissa(a));
}

nlohmann::json to_json(const DispersionEstimate& estimate) {
  return nlohmann::json{
      {"mean", estimate.mean}, {"stderr", estimate.std_error}, {"samples", estimate.samples}};
}

}  // namespace netperf::montecarlo
