#pragma once

#include <Eigen/Dense>

#include "netperf/errors.hpp"

namespace netperf {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

/// Throws InvalidInput unless m is square with finite entries.
void require_square_finite(const Matrix& m, const char* name);

/// State matrix A plus output weight Q = C^T C of a noise-driven linear
/// system x' = A x + xi, y = C x. Validates on construction: both square,
/// finite and of equal dimension; Q symmetric positive semidefinite within
/// the spectra tolerances.
struct LinearSystem {
  Matrix A;
  Matrix Q;

  LinearSystem(Matrix state, Matrix weight);

  int dim() const { return static_cast<int>(A.rows()); }
};

}  // namespace netperf
