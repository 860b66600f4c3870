#pragma once

#include "netperf/types.hpp"

namespace netperf::spectra {

/// Relative tolerance shared by the normality test and the weight-matrix
/// symmetry/definiteness checks. Kept conservative because normality gates
/// the bound-equality diagnosis downstream.
inline constexpr double kDefaultTol = 1e-10;

/// Hurwitz verdicts require max_i Re{lambda_i(A)} < -kHurwitzMargin * max(1, ||A||_F),
/// so marginally stable numerics are never certified.
inline constexpr double kHurwitzMargin = 1e-9;

/// Eigenstructure report consumed by the bound evaluators.
struct SpectralSummary {
  ComplexVector eigenvalues_A;  ///< spectrum of A, sorted by (Re, Im)
  Vector eigenvalues_As;        ///< spectrum of (A^T + A)/2, ascending
  Vector eigenvalues_Q;         ///< spectrum of Q, ascending, noise-level negatives clamped to 0
  bool is_hurwitz = false;
  bool is_normal = false;
  double normality_residual = 0.0;  ///< ||A^T A - A A^T||_F / max(1, ||A||_F^2)
};

/// (A^T + A)/2 with symmetry enforced entry-by-entry.
Matrix symmetric_part(const Matrix& a);

/// True iff ||A^T A - A A^T||_F <= tol * max(1, ||A||_F^2).
bool is_normal(const Matrix& a, double tol = kDefaultTol);

/// ||A^T A - A A^T||_F / max(1, ||A||_F^2).
double normality_residual(const Matrix& a);

/// Spectrum of a, sorted by (Re, Im) so downstream output is reproducible.
ComplexVector eigenvalues(const Matrix& a);

/// max_i Re{lambda_i(A)}.
double spectral_abscissa(const Matrix& a);

bool is_hurwitz(const Matrix& a);

/// Throws NotHurwitz naming the offending eigenvalue.
void require_hurwitz(const Matrix& a);

/// Throws NotSymmetric / IndefiniteWeight when q fails its checks.
void check_weight_matrix(const Matrix& q, double tol = kDefaultTol);

SpectralSummary spectral_summary(const Matrix& a, const Matrix& q, double tol = kDefaultTol);

}  // namespace netperf::spectra
