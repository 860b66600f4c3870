#pragma once

#include "netperf/types.hpp"

namespace netperf::lyapunov {

/// Dimension cap for the vectorized oracle, which builds an n^2 x n^2 dense
/// system.
inline constexpr int kOracleMaxDim = 64;

/// Relative residual every returned solution is expected to meet in double
/// precision up to n = 200.
inline constexpr double kResidualTol = 1e-10;

struct LyapunovSolution {
  Matrix P;               ///< symmetric PSD Gramian
  double trace = 0.0;     ///< Tr(P) = rho_ss(A;Q)
  double residual = 0.0;  ///< ||P A + A^T P + Q||_F / max(1, ||Q||_F)
};

/// Solves the observability-orientation equation P A + A^T P + Q = 0 by a
/// Schur reduction of A followed by one triangular solve per column.
LyapunovSolution solve_lyapunov(const LinearSystem& sys);

/// Same equation through dense LU on the vectorized operator
/// (I (x) A^T + A^T (x) I) vec(P) = -vec(Q). Independent of the Schur path;
/// this is the cross-check route. Requires dim <= kOracleMaxDim.
LyapunovSolution kron_oracle_solve(const LinearSystem& sys);

/// rho_ss(A;Q) = Tr(P), the steady-state value of E[x^T Q x] under
/// unit-intensity white noise.
double performance_measure(const LinearSystem& sys);

/// Steady-state dispersion of the scalar output c_row . x. Solves the
/// controllability-orientation equation A P + P A^T + I = 0 and returns
/// c P c^T. The forcing is the identity noise covariance; sys.Q plays no
/// role here.
double restricted_dispersion(const LinearSystem& sys, const Vector& c_row);

}  // namespace netperf::lyapunov
