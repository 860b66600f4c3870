#include "netperf/bounds.hpp"

#include <cmath>
#include <sstream>

#include "netperf/lyapunov.hpp"

namespace netperf::bounds {
namespace {

void require_hurwitz_summary(const spectra::SpectralSummary& summary) {
  if (!summary.is_hurwitz) {
    throw NotHurwitz("spectral bounds need a Hurwitz state matrix");
  }
}

}  // namespace

double lower_bound(const spectra::SpectralSummary& summary) {
  require_hurwitz_summary(summary);
  const double q_min = summary.eigenvalues_Q(0);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < summary.eigenvalues_A.size(); ++i) {
    sum += q_min / (2.0 * summary.eigenvalues_A(i).real());
  }
  return -sum;
}

double upper_bound(const spectra::SpectralSummary& summary) {
  const Vector& sym_eigs = summary.eigenvalues_As;
  const Eigen::Index n = sym_eigs.size();
  const double scale = std::max({1.0, std::abs(sym_eigs(0)), std::abs(sym_eigs(n - 1))});
  if (sym_eigs(n - 1) >= -spectra::kHurwitzMargin * scale) {
    std::ostringstream msg;
    msg << "symmetric part of A is not Hurwitz (max eigenvalue " << sym_eigs(n - 1)
        << "); the upper bound is undefined";
    throw SymmetricPartNotStable(msg.str());
  }
  // Ascending against ascending: lambda_min(Q) divides by the most negative
  // eigenvalue of A_s, lambda_max(Q) by the least negative.
  double sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    sum += summary.eigenvalues_Q(i) / (2.0 * sym_eigs(i));
  }
  return -sum;
}

double normal_case_exact(const spectra::SpectralSummary& summary, double q) {
  if (!(q > 0.0) || !std::isfinite(q)) throw InvalidInput("weight level q must be positive and finite");
  require_hurwitz_summary(summary);
  if (!summary.is_normal) {
    std::ostringstream msg;
    msg << "A is not normal (residual " << summary.normality_residual << ")";
    throw NotNormal(msg.str());
  }
  const double weight_tol = kWeightSpreadTol * std::max(1.0, q);
  for (Eigen::Index i = 0; i < summary.eigenvalues_Q.size(); ++i) {
    if (std::abs(summary.eigenvalues_Q(i) - q) > weight_tol) {
      throw UnequalWeights("Q does not equal q * I within tolerance");
    }
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < summary.eigenvalues_As.size(); ++i) {
    sum += q / (2.0 * summary.eigenvalues_As(i));
  }
  return -sum;
}

PerformanceReport analyze(const LinearSystem& sys) {
  const spectra::SpectralSummary summary = spectra::spectral_summary(sys.A, sys.Q);
  if (!summary.is_hurwitz) spectra::require_hurwitz(sys.A);  // throws with the offending eigenvalue

  PerformanceReport report;
  report.exact = lyapunov::solve_lyapunov(sys).trace;
  report.lower_bound = lower_bound(summary);
  try {
    report.upper_bound = upper_bound(summary);
  } catch (const SymmetricPartNotStable&) {
    report.upper_bound.reset();  // the lower bound and exact value stay valid
  }
  report.normality_residual = summary.normality_residual;
  const double q_max = summary.eigenvalues_Q(summary.eigenvalues_Q.size() - 1);
  report.q_eigen_spread = q_max - summary.eigenvalues_Q(0);
  report.lower_is_tight =
      summary.is_normal && report.q_eigen_spread <= kWeightSpreadTol * std::max(1.0, q_max);
  return report;
}

nlohmann::json to_json(const PerformanceReport& report) {
  nlohmann::json j;
  j["exact"] = report.exact;
  j["lower_bound"] = report.lower_bound;
  if (report.upper_bound) {
    j["upper_bound"] = *report.upper_bound;
  } else {
    j["upper_bound"] = nullptr;
  }
  j["lower_is_tight"] = report.lower_is_tight;
  j["normality_residual"] = report.normality_residual;
  j["q_eigen_spread"] = report.q_eigen_spread;
  return j;
}

}  // namespace netperf::bounds
