#include "netperf/cyclic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace netperf::cyclic {
namespace {

void check_rates(const std::vector<double>& values, int n, const char* name) {
  if (static_cast<int>(values.size()) != n) {
    std::ostringstream msg;
    msg << name << " must have length n = " << n << ", got " << values.size();
    throw InvalidInput(msg.str());
  }
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw InvalidInput(std::string(name) + " entries must be strictly positive and finite");
    }
  }
}

// exp(mean(log v_i)): identical to the n-th root of the product but immune
// to overflow/underflow for large n.
double geometric_mean(const std::vector<double>& values) {
  double log_sum = 0.0;
  for (double v : values) log_sum += std::log(v);
  return std::exp(log_sum / static_cast<double>(values.size()));
}

bool all_identical(const std::vector<double>& values) {
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return (*hi - *lo) <= kIdenticalTol * *hi;
}

}  // namespace

std::string_view regime_name(Regime regime) {
  switch (regime) {
    case Regime::SubUnit: return "sub";
    case Regime::Unit: return "unit";
    case Regime::SuperUnit: return "super";
  }
  return "unit";
}

Regime regime_from_name(std::string_view name) {
  if (name == "sub") return Regime::SubUnit;
  if (name == "unit") return Regime::Unit;
  if (name == "super") return Regime::SuperUnit;
  throw InvalidInput("regime must be one of sub, unit, super");
}

CyclicNetworkParams::CyclicNetworkParams(int size, std::vector<double> decay, std::vector<double> gain)
    : n(size), a(std::move(decay)), c(std::move(gain)) {
  if (n < 2) throw InvalidInput("cyclic network needs n >= 2 subsystems");
  check_rates(a, n, "a");
  check_rates(c, n, "c");
}

CyclicNetworkParams CyclicNetworkParams::identical(int size, double frak_a, double frak_c) {
  if (size < 2) throw InvalidInput("cyclic network needs n >= 2 subsystems");
  return CyclicNetworkParams(size, std::vector<double>(size, frak_a), std::vector<double>(size, frak_c));
}

Matrix build_state_matrix(const CyclicNetworkParams& params) {
  const int n = params.n;
  Matrix a = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = -params.a[i];
  for (int i = 0; i + 1 < n; ++i) a(i + 1, i) = params.c[i];
  a(0, n - 1) = -params.c[n - 1];
  return a;
}

CyclicDerived derive(const CyclicNetworkParams& params) {
  CyclicDerived d;
  d.frak_a = geometric_mean(params.a);
  d.frak_c = geometric_mean(params.c);
  d.gamma = d.frak_a / d.frak_c;
  d.identical_a = all_identical(params.a);
  d.identical_c = all_identical(params.c);

  if (std::abs(d.gamma - 1.0) <= kRegimeTieTol) {
    d.regime = Regime::Unit;
    d.beta = 0.0;
  } else if (d.gamma < 1.0) {
    d.regime = Regime::SubUnit;
    d.beta = static_cast<double>(params.n) * std::acos(d.gamma);
  } else {
    d.regime = Regime::SuperUnit;
    d.beta = static_cast<double>(params.n) * std::acosh(d.gamma);
  }
  d.secant_stable = d.gamma > std::cos(std::numbers::pi / params.n);
  return d;
}

std::vector<std::complex<double>> closed_form_eigenvalues(const CyclicNetworkParams& params) {
  const CyclicDerived d = derive(params);
  if (!d.identical_a) {
    throw HeterogeneousDecay("closed-form spectrum needs identical decay rates a_1 = ... = a_n");
  }
  const double step = 2.0 * std::numbers::pi / params.n;
  const double offset = std::numbers::pi / params.n;
  std::vector<std::complex<double>> values;
  values.reserve(params.n);
  for (int k = 0; k < params.n; ++k) {
    const double angle = offset + step * k;
    values.emplace_back(-d.frak_a + d.frak_c * std::cos(angle), d.frak_c * std::sin(angle));
  }
  return values;
}

double closed_form_lower_bound(const CyclicNetworkParams& params) {
  const CyclicDerived d = derive(params);
  if (!d.identical_a) {
    throw HeterogeneousDecay("closed-form bound needs identical decay rates a_1 = ... = a_n");
  }
  if (!d.secant_stable) {
    std::ostringstream msg;
    msg << "network is unstable: gamma = " << d.gamma << " <= cos(pi/n) = "
        << std::cos(std::numbers::pi / params.n);
    throw Unstable(msg.str());
  }
  const double n = static_cast<double>(params.n);
  switch (d.regime) {
    case Regime::SubUnit:
      return n * std::tan(d.beta / 2.0) / (2.0 * d.frak_c * std::sin(d.beta / n));
    case Regime::Unit:
      return n * n / (4.0 * d.frak_c);
    case Regime::SuperUnit:
      return n * std::tanh(d.beta / 2.0) / (2.0 * d.frak_c * std::sinh(d.beta / n));
  }
  throw Error("unreachable regime");
}

double asymptotic_approximation(int n, double beta, double frak_c, Regime regime) {
  if (n < 2) throw InvalidInput("cyclic network needs n >= 2 subsystems");
  if (!(frak_c > 0.0) || !std::isfinite(frak_c)) throw InvalidInput("frak_c must be positive and finite");
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw InvalidInput("beta must be nonnegative and finite");
  const double nn = static_cast<double>(n) * static_cast<double>(n);
  if (beta == 0.0 || regime == Regime::Unit) {
    return nn / (4.0 * frak_c);  // limit of both branches as beta -> 0
  }
  switch (regime) {
    case Regime::SubUnit:
      if (beta >= std::numbers::pi) {
        throw InvalidInput("sub-unit regime needs beta < pi (stability boundary)");
      }
      return std::tan(beta / 2.0) / (2.0 * frak_c * beta) * nn;
    case Regime::SuperUnit:
      return std::tanh(beta / 2.0) / (2.0 * frak_c * beta) * nn;
    case Regime::Unit:
      break;
  }
  throw Error("unreachable regime");
}

double output_dispersion_bound(const CyclicNetworkParams& params) {
  const CyclicDerived d = derive(params);
  if (!d.identical_a || !d.identical_c) {
    throw HeterogeneousParams("single-output bound needs identical subsystems (a and c)");
  }
  if (!d.secant_stable) {
    throw Unstable("network is unstable: gamma <= cos(pi/n)");
  }
  return 1.0 / (2.0 * (d.frak_a - d.frak_c * std::cos(std::numbers::pi / params.n)));
}

bool secant_criterion(const CyclicNetworkParams& params) {
  return derive(params).secant_stable;
}

CyclicNetworkParams params_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("cyclic params must be a JSON object");
  if (!j.contains("n") || !j.at("n").is_number_integer()) {
    throw InvalidInput("cyclic params need an integer field \"n\"");
  }
  const int n = j.at("n").get<int>();

  const bool has_lists = j.contains("a") || j.contains("c");
  const bool has_shorthand = j.contains("frak_a") || j.contains("frak_c");
  if (has_lists == has_shorthand) {
    throw InvalidInput("cyclic params need either \"a\"/\"c\" arrays or \"frak_a\"/\"frak_c\" scalars");
  }

  try {
    if (has_shorthand) {
      const double frak_a = j.at("frak_a").get<double>();
      const double frak_c = j.at("frak_c").get<double>();
      return CyclicNetworkParams::identical(n, frak_a, frak_c);
    }
    auto a = j.at("a").get<std::vector<double>>();
    auto c = j.at("c").get<std::vector<double>>();
    return CyclicNetworkParams(n, std::move(a), std::move(c));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad cyclic params: ") + e.what());
  }
}

nlohmann::json params_to_json(const CyclicNetworkParams& params) {
  return nlohmann::json{{"n", params.n}, {"a", params.a}, {"c", params.c}};
}

}  // namespace netperf::cyclic
