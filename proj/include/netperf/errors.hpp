#pragma once

#include <stdexcept>

namespace netperf {

/// Base class of every error this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: wrong shape, non-finite entries, bad schema or flags.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Weight matrix is not symmetric within tolerance.
class NotSymmetric : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Weight matrix has an eigenvalue below the negative tolerance band.
class IndefiniteWeight : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// State matrix has an eigenvalue at or right of the stability margin.
class NotHurwitz : public Error {
 public:
  using Error::Error;
};

/// The linear system behind a solve is numerically singular, which signals
/// an eigenvalue pair with lambda_i + lambda_j ~ 0 (near-marginal stability).
class SolverDegenerate : public Error {
 public:
  using Error::Error;
};

/// Input dimension exceeds a hard cap (the vectorized oracle builds an
/// n^2 x n^2 dense system).
class DimensionTooLarge : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// The symmetric part of A has a nonnegative eigenvalue; the spectral upper
/// bound is undefined there even though A itself may be Hurwitz.
class SymmetricPartNotStable : public Error {
 public:
  using Error::Error;
};

/// A is not normal within tolerance.
class NotNormal : public Error {
 public:
  using Error::Error;
};

/// Weight eigenvalues are not all equal within tolerance.
class UnequalWeights : public Error {
 public:
  using Error::Error;
};

/// Cyclic-network self-decay rates a_i differ; the closed forms need
/// identical rates.
class HeterogeneousDecay : public Error {
 public:
  using Error::Error;
};

/// Cyclic-network parameters are not identical across subsystems.
class HeterogeneousParams : public Error {
 public:
  using Error::Error;
};

/// Cyclic network fails the secant stability condition.
class Unstable : public Error {
 public:
  using Error::Error;
};

/// Integration step too large relative to the dynamics.
class StepTooLarge : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A simulated trajectory left the trust region (norm > 1e12).
class Diverged : public Error {
 public:
  using Error::Error;
};

}  // namespace netperf
