#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netperf/cyclic.hpp"

namespace netperf::sweep {

inline constexpr int kDefaultExactCap = 256;

/// One row of a size-scaling experiment.
struct SweepRecord {
  int n = 0;
  double beta = 0.0;
  double gamma = 0.0;
  double frak_a = 0.0;
  double frak_c = 0.0;
  double lower_bound = 0.0;
  std::optional<double> exact;  ///< absent above the exact-solve cap
  double approximation = 0.0;
  double h2_norm = 0.0;  ///< sqrt(lower_bound), the plotted quantity
};

/// Shape parameter beta is held fixed while n varies; gamma is
/// reconstructed per n as cos(beta/n), 1, or cosh(beta/n) depending on the
/// regime, and frak_a = gamma * frak_c. Sweeping raw gamma instead would
/// silently change beta with n and break the quadratic-scaling experiment.
struct SweepSpec {
  double beta = 0.0;
  cyclic::Regime regime = cyclic::Regime::Unit;
  double frak_c = 1.0;
  std::vector<int> n_list;  ///< ascending
  int exact_cap = kDefaultExactCap;
};

/// Rows are computed in parallel across n (NETPERF_THREADS overrides the
/// worker count) and returned in input order. Throws InvalidInput on an
/// inconsistent regime/beta combination, e.g. beta > 0 with the unit regime.
std::vector<SweepRecord> run(const SweepSpec& spec);

/// Deterministic bytes: header `n,beta,gamma,frak_a,frak_c,lower_bound,
/// exact,approximation,h2_norm`, 17 significant digits, '.' decimal
/// separator, '\n' line endings, empty field for a missing exact value.
std::string to_csv(const std::vector<SweepRecord>& records);

}  // namespace netperf::sweep
