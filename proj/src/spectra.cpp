#include "netperf/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace netperf {

void require_square_finite(const Matrix& m, const char* name) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    std::ostringstream msg;
    msg << name << " must be a nonempty square matrix, got " << m.rows() << "x" << m.cols();
    throw InvalidInput(msg.str());
  }
  if (!m.allFinite()) {
    throw InvalidInput(std::string(name) + " contains a non-finite entry");
  }
}

LinearSystem::LinearSystem(Matrix state, Matrix weight) : A(std::move(state)), Q(std::move(weight)) {
  require_square_finite(A, "A");
  require_square_finite(Q, "Q");
  if (A.rows() != Q.rows()) {
    std::ostringstream msg;
    msg << "A and Q must share one dimension, got " << A.rows() << " and " << Q.rows();
    throw InvalidInput(msg.str());
  }
  spectra::check_weight_matrix(Q);
}

}  // namespace netperf

namespace netperf::spectra {

Matrix symmetric_part(const Matrix& a) {
  require_square_finite(a, "A");
  const Eigen::Index n = a.rows();
  Matrix s(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    s(i, i) = a(i, i);
    for (Eigen::Index j = 0; j < i; ++j) {
      const double v = 0.5 * (a(i, j) + a(j, i));
      s(i, j) = v;
      s(j, i) = v;
    }
  }
  return s;
}

double normality_residual(const Matrix& a) {
  require_square_finite(a, "A");
  const double commutator = (a.transpose() * a - a * a.transpose()).norm();
  return commutator / std::max(1.0, a.squaredNorm());
}

bool is_normal(const Matrix& a, double tol) {
  return normality_residual(a) <= tol;
}

ComplexVector eigenvalues(const Matrix& a) {
  require_square_finite(a, "A");
  Eigen::EigenSolver<Matrix> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw SolverDegenerate("eigenvalue iteration did not converge");
  }
  ComplexVector values = solver.eigenvalues();
  std::sort(values.begin(), values.end(), [](const auto& l, const auto& r) {
    if (l.real() != r.real()) return l.real() < r.real();
    return l.imag() < r.imag();
  });
  return values;
}

double spectral_abscissa(const Matrix& a) {
  const ComplexVector values = eigenvalues(a);
  double worst = values(0).real();
  for (Eigen::Index i = 1; i < values.size(); ++i) worst = std::max(worst, values(i).real());
  return worst;
}

namespace {

double hurwitz_threshold(const Matrix& a) {
  return -kHurwitzMargin * std::max(1.0, a.norm());
}

}  // namespace

bool is_hurwitz(const Matrix& a) {
  return spectral_abscissa(a) < hurwitz_threshold(a);
}

void require_hurwitz(const Matrix& a) {
  const ComplexVector values = eigenvalues(a);
  Eigen::Index worst = 0;
  for (Eigen::Index i = 1; i < values.size(); ++i) {
    if (values(i).real() > values(worst).real()) worst = i;
  }
  if (values(worst).real() < hurwitz_threshold(a)) return;
  std::ostringstream msg;
  msg << "state matrix is not Hurwitz: eigenvalue " << values(worst).real();
  if (values(worst).imag() != 0.0) msg << (values(worst).imag() > 0 ? "+" : "-") << std::abs(values(worst).imag()) << "i";
  msg << " is not inside the stability margin";
  throw NotHurwitz(msg.str());
}

void check_weight_matrix(const Matrix& q, double tol) {
  require_square_finite(q, "Q");
  const double scale = q.norm();
  if ((q - q.transpose()).norm() > tol * scale) {
    throw NotSymmetric("weight matrix Q is not symmetric within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetric_part(q), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw SolverDegenerate("symmetric eigenvalue iteration did not converge for Q");
  }
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -tol * scale) {
    std::ostringstream msg;
    msg << "weight matrix Q is indefinite: minimum eigenvalue " << min_eig;
    throw IndefiniteWeight(msg.str());
  }
}

SpectralSummary spectral_summary(const Matrix& a, const Matrix& q, double tol) {
  require_square_finite(a, "A");
  if (a.rows() != q.rows()) {
    throw InvalidInput("A and Q must share one dimension");
  }
  check_weight_matrix(q, tol);

  SpectralSummary summary;
  summary.eigenvalues_A = eigenvalues(a);

  Eigen::SelfAdjointEigenSolver<Matrix> sym_solver(symmetric_part(a), Eigen::EigenvaluesOnly);
  if (sym_solver.info() != Eigen::Success) {
    throw SolverDegenerate("symmetric eigenvalue iteration did not converge for A_s");
  }
  summary.eigenvalues_As = sym_solver.eigenvalues();  // ascending

  Eigen::SelfAdjointEigenSolver<Matrix> weight_solver(symmetric_part(q), Eigen::EigenvaluesOnly);
  summary.eigenvalues_Q = weight_solver.eigenvalues();
  // Q = C^T C is a Gram matrix; eigenvalues in the negative noise band are
  // numerical zero and would otherwise corrupt lambda_min(Q) downstream.
  for (Eigen::Index i = 0; i < summary.eigenvalues_Q.size(); ++i) {
    if (summary.eigenvalues_Q(i) < 0.0) summary.eigenvalues_Q(i) = 0.0;
  }

  double worst = summary.eigenvalues_A(0).real();
  for (Eigen::Index i = 1; i < summary.eigenvalues_A.size(); ++i) {
    worst = std::max(worst, summary.eigenvalues_A(i).real());
  }
  summary.is_hurwitz = worst < hurwitz_threshold(a);
  summary.normality_residual = normality_residual(a);
  summary.is_normal = summary.normality_residual <= tol;
  return summary;
}

}  // namespace netperf::spectra
