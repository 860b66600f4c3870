#include "netperf/lyapunov.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <sstream>

#include "netperf/spectra.hpp"

namespace netperf::lyapunov {
namespace {

double relative_residual(const Matrix& a, const Matrix& q, const Matrix& p) {
  return (p * a + a.transpose() * p + q).norm() / std::max(1.0, q.norm());
}

// P A + A^T P + Q = 0 via complex Schur A = U T U^H:
//   T^H Y + Y T + F = 0 with Y = U^H P U, F = U^H Q U,
// solved one column at a time,
//   (T^H + t_kk I) y_k = -f_k - sum_{j<k} t_jk y_j,
// a lower-triangular system whose diagonal conj(lambda_i) + lambda_k stays
// away from zero for any Hurwitz spectrum.
Matrix solve_schur(const Matrix& a, const Matrix& q) {
  const Eigen::Index n = a.rows();
  Eigen::ComplexSchur<Matrix> schur(a, /*computeU=*/true);
  if (schur.info() != Eigen::Success) {
    throw SolverDegenerate("Schur iteration did not converge");
  }
  const Eigen::MatrixXcd& t = schur.matrixT();
  const Eigen::MatrixXcd& u = schur.matrixU();

  const Eigen::MatrixXcd f = u.adjoint() * q * u;
  Eigen::MatrixXcd y(n, n);
  Eigen::MatrixXcd lhs = t.adjoint();
  const double degeneracy_floor = 1e-14 * std::max(1.0, a.norm());

  for (Eigen::Index k = 0; k < n; ++k) {
    const std::complex<double> shift = t(k, k);
    lhs.diagonal().array() += shift;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (std::abs(lhs(i, i)) < degeneracy_floor) {
        throw SolverDegenerate(
            "Lyapunov operator is numerically singular: an eigenvalue pair of A sums to ~0");
      }
    }
    Eigen::VectorXcd rhs = -f.col(k);
    if (k > 0) rhs.noalias() -= y.leftCols(k) * t.col(k).head(k);
    y.col(k) = lhs.triangularView<Eigen::Lower>().solve(rhs);
    lhs.diagonal().array() -= shift;
  }

  Matrix p = (u * y * u.adjoint()).real();
  return 0.5 * (p + p.transpose());
}

// Dense LU on (I (x) A^T + A^T (x) I) vec(P) = -vec(Q); vec is column-major.
Matrix solve_kron(const Matrix& a, const Matrix& q) {
  const Eigen::Index n = a.rows();
  const Eigen::Index nn = n * n;
  const Matrix at = a.transpose();

  Matrix op = Matrix::Zero(nn, nn);
  for (Eigen::Index bi = 0; bi < n; ++bi) {
    for (Eigen::Index bj = 0; bj < n; ++bj) {
      op.block(bi * n, bj * n, n, n).diagonal().setConstant(at(bi, bj));  // A^T (x) I
    }
    op.block(bi * n, bi * n, n, n) += at;  // I (x) A^T
  }

  const Eigen::Map<const Eigen::VectorXd> vec_q(q.data(), nn);
  Eigen::PartialPivLU<Matrix> lu(op);
  const Eigen::VectorXd vec_p = lu.solve(-vec_q);
  if (!vec_p.allFinite()) {
    throw SolverDegenerate("vectorized Lyapunov system is numerically singular");
  }
  Matrix p = Eigen::Map<const Matrix>(vec_p.data(), n, n);
  return 0.5 * (p + p.transpose());
}

LyapunovSolution package(const Matrix& a, const Matrix& q, Matrix p) {
  LyapunovSolution solution;
  solution.residual = relative_residual(a, q, p);
  if (!std::isfinite(solution.residual) || solution.residual > 1e-6) {
    std::ostringstream msg;
    msg << "Lyapunov solve left residual " << solution.residual
        << "; an eigenvalue pair of A is too close to the imaginary axis";
    throw SolverDegenerate(msg.str());
  }
  solution.trace = p.trace();
  solution.P = std::move(p);
  return solution;
}

}  // namespace

LyapunovSolution solve_lyapunov(const LinearSystem& sys) {
  spectra::require_hurwitz(sys.A);
  return package(sys.A, sys.Q, solve_schur(sys.A, sys.Q));
}

LyapunovSolution kron_oracle_solve(const LinearSystem& sys) {
  if (sys.dim() > kOracleMaxDim) {
    std::ostringstream msg;
    msg << "vectorized oracle caps at n = " << kOracleMaxDim << ", got " << sys.dim();
    throw DimensionTooLarge(msg.str());
  }
  spectra::require_hurwitz(sys.A);
  return package(sys.A, sys.Q, solve_kron(sys.A, sys.Q));
}

double performance_measure(const LinearSystem& sys) {
  return solve_lyapunov(sys).trace;
}

double restricted_dispersion(const LinearSystem& sys, const Vector& c_row) {
  if (c_row.size() != sys.dim()) {
    std::ostringstream msg;
    msg << "output row has length " << c_row.size() << ", expected " << sys.dim();
    throw InvalidInput(msg.str());
  }
  if (!c_row.allFinite()) throw InvalidInput("output row contains a non-finite entry");
  spectra::require_hurwitz(sys.A);
  // A P + P A^T + I = 0 is the observability form in A^T.
  const Matrix identity = Matrix::Identity(sys.dim(), sys.dim());
  const Matrix p = solve_schur(sys.A.transpose(), identity);
  return c_row.dot(p * c_row);
}

}  // namespace netperf::lyapunov
