#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "netperf/types.hpp"

namespace netperf::cyclic {

/// |gamma - 1| at or below this routes to the gamma = 1 formulas, whose
/// tan/beta and tanh/beta neighbours are ill-conditioned as beta -> 0.
inline constexpr double kRegimeTieTol = 1e-12;

/// Relative spread above which a parameter list counts as heterogeneous.
inline constexpr double kIdenticalTol = 1e-12;

enum class Regime { SubUnit, Unit, SuperUnit };

std::string_view regime_name(Regime regime);  // "sub" / "unit" / "super"
Regime regime_from_name(std::string_view name);

/// Ring of n first-order subsystems x_i' = -a_i x_i + u_i + xi_i with gains
/// c_i, the last output feeding back negatively into the first.
struct CyclicNetworkParams {
  int n = 0;
  std::vector<double> a;  ///< self-decay rates, strictly positive
  std::vector<double> c;  ///< coupling gains, strictly positive

  CyclicNetworkParams(int size, std::vector<double> decay, std::vector<double> gain);

  /// n identical subsystems with a_i = frak_a, c_i = frak_c.
  static CyclicNetworkParams identical(int size, double frak_a, double frak_c);
};

struct CyclicDerived {
  double frak_a = 0.0;  ///< geometric mean of a_i
  double frak_c = 0.0;  ///< geometric mean of c_i
  double gamma = 0.0;   ///< frak_a / frak_c
  double beta = 0.0;    ///< n * arccos(gamma) for gamma <= 1, n * arcosh(gamma) above
  Regime regime = Regime::Unit;
  bool secant_stable = false;  ///< gamma > cos(pi/n)
  bool identical_a = false;
  bool identical_c = false;
};

/// n x n state matrix: diagonal -a_i, subdiagonal c_1..c_{n-1}, corner
/// entry (1, n) = -c_n.
Matrix build_state_matrix(const CyclicNetworkParams& params);

CyclicDerived derive(const CyclicNetworkParams& params);

/// lambda_k = -frak_a + frak_c e^{i(pi/n + 2 pi k/n)}, k = 0..n-1. Valid for
/// identical decay rates (heterogeneous gains enter only through frak_c).
std::vector<std::complex<double>> closed_form_eigenvalues(const CyclicNetworkParams& params);

/// The three-regime closed form of the Q = I lower bound:
///   gamma < 1:  n tan(beta/2) / (2 frak_c sin(beta/n))
///   gamma = 1:  n^2 / (4 frak_c)
///   gamma > 1:  n tanh(beta/2) / (2 frak_c sinh(beta/n))
/// Requires identical decay rates and the secant stability condition; the
/// value diverges at the stability boundary, where Unstable fires first.
double closed_form_lower_bound(const CyclicNetworkParams& params);

/// Large-n approximation of the lower bound at fixed beta:
///   gamma < 1:  (tan(beta/2) / (2 frak_c beta)) n^2
///   gamma = 1:  n^2 / (4 frak_c)
///   gamma > 1:  (tanh(beta/2) / (2 frak_c beta)) n^2
/// beta = 0 is routed to the gamma = 1 expression, the limit of both sides.
double asymptotic_approximation(int n, double beta, double frak_c, Regime regime);

/// 1 / (2 (frak_a - frak_c cos(pi/n))), the dispersion cap of the last
/// subsystem's output. Requires identical decay rates and gains.
double output_dispersion_bound(const CyclicNetworkParams& params);

/// gamma > cos(pi/n). Exact stability test when the a_i are identical;
/// otherwise an analytic indicator to be reported next to the numeric
/// Hurwitz verdict, which stays authoritative.
bool secant_criterion(const CyclicNetworkParams& params);

/// Accepts {"n": int, "a": [..], "c": [..]} or the identical-subsystem
/// shorthand {"n": int, "frak_a": x, "frak_c": y}.
CyclicNetworkParams params_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const CyclicNetworkParams& params);

}  // namespace netperf::cyclic
