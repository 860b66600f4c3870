#pragma once

#include <optional>

#include <json.hpp>

#include "netperf/spectra.hpp"
#include "netperf/types.hpp"

namespace netperf::bounds {

/// Weight-eigenvalue spread below this (relative) level counts as "all
/// eigenvalues identical" for the tightness diagnosis. One decade looser
/// than the normality tolerance, one tighter than the equality check, so
/// the diagnostics never flip-flop across layers.
inline constexpr double kWeightSpreadTol = 1e-9;

/// Relative tolerance at which the exact value and the lower bound are
/// expected to coincide when the tightness conditions hold.
inline constexpr double kEqualityTol = 1e-6;

struct PerformanceReport {
  double exact = 0.0;
  double lower_bound = 0.0;
  std::optional<double> upper_bound;  ///< absent when the symmetric part of A is not Hurwitz
  bool lower_is_tight = false;        ///< A normal and Q with identical eigenvalues
  double normality_residual = 0.0;
  double q_eigen_spread = 0.0;  ///< lambda_max(Q) - lambda_min(Q)
};

/// -sum_i lambda_min(Q) / (2 Re{lambda_i(A)}). Requires a Hurwitz spectrum.
double lower_bound(const spectra::SpectralSummary& summary);

/// -sum_i lambda_i(Q) / (2 lambda_i(A_s)) with both spectra ascending, so
/// lambda_min(Q) pairs with the most negative eigenvalue of A_s. Requires
/// the symmetric part itself to be Hurwitz, which a Hurwitz A does not
/// imply; throws SymmetricPartNotStable otherwise.
double upper_bound(const spectra::SpectralSummary& summary);

/// Exact value -sum_i q / (2 lambda_i(A_s)) for normal A and Q = q I.
/// Throws NotNormal / UnequalWeights when those preconditions fail.
double normal_case_exact(const spectra::SpectralSummary& summary, double q);

/// Full pipeline: exact measure via the Lyapunov solve plus both spectral
/// bounds and the tightness diagnosis.
PerformanceReport analyze(const LinearSystem& sys);

/// {"exact", "lower_bound", "upper_bound" (number or null), "lower_is_tight",
///  "normality_residual", "q_eigen_spread"}
nlohmann::json to_json(const PerformanceReport& report);

}  // namespace netperf::bounds
