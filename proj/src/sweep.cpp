#include "netperf/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "netperf/lyapunov.hpp"
#include "parallel.hpp"

namespace netperf::sweep {
namespace {

void validate(const SweepSpec& spec) {
  if (!(spec.frak_c > 0.0) || !std::isfinite(spec.frak_c)) {
    throw InvalidInput("frak_c must be positive and finite");
  }
  if (spec.exact_cap < 0) throw InvalidInput("exact cap must be nonnegative");
  if (spec.n_list.empty()) throw InvalidInput("n list must not be empty");
  int previous = 1;
  for (int n : spec.n_list) {
    if (n < 2) throw InvalidInput("every n must be at least 2");
    if (n <= previous) throw InvalidInput("n list must be strictly ascending");
    previous = n;
  }
  if (!std::isfinite(spec.beta) || spec.beta < 0.0) {
    throw InvalidInput("beta must be nonnegative and finite");
  }
  switch (spec.regime) {
    case cyclic::Regime::Unit:
      if (spec.beta != 0.0) throw InvalidInput("inconsistent regime/beta: unit regime needs beta = 0");
      break;
    case cyclic::Regime::SubUnit:
      if (spec.beta <= 0.0 || spec.beta >= std::numbers::pi) {
        throw InvalidInput("inconsistent regime/beta: sub regime needs 0 < beta < pi");
      }
      break;
    case cyclic::Regime::SuperUnit:
      if (spec.beta <= 0.0) throw InvalidInput("inconsistent regime/beta: super regime needs beta > 0");
      break;
  }
}

double gamma_for(const SweepSpec& spec, int n) {
  switch (spec.regime) {
    case cyclic::Regime::SubUnit: return std::cos(spec.beta / n);
    case cyclic::Regime::Unit: return 1.0;
    case cyclic::Regime::SuperUnit: return std::cosh(spec.beta / n);
  }
  return 1.0;
}

std::string format17(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

}  // namespace

std::vector<SweepRecord> run(const SweepSpec& spec) {
  validate(spec);
  std::vector<SweepRecord> records(spec.n_list.size());
  detail::parallel_for(static_cast<int>(spec.n_list.size()), [&](int i) {
    const int n = spec.n_list[i];
    SweepRecord& record = records[i];
    record.n = n;
    record.beta = spec.beta;
    record.gamma = gamma_for(spec, n);
    record.frak_c = spec.frak_c;
    record.frak_a = record.gamma * spec.frak_c;

    const auto params = cyclic::CyclicNetworkParams::identical(n, record.frak_a, record.frak_c);
    record.lower_bound = cyclic::closed_form_lower_bound(params);
    record.approximation = cyclic::asymptotic_approximation(n, spec.beta, spec.frak_c, spec.regime);
    record.h2_norm = std::sqrt(record.lower_bound);
    if (n <= spec.exact_cap) {
      const LinearSystem sys(cyclic::build_state_matrix(params), Matrix::Identity(n, n));
      record.exact = lyapunov::performance_measure(sys);
    }
  });
  return records;
}

std::string to_csv(const std::vector<SweepRecord>& records) {
  std::string out = "n,beta,gamma,frak_a,frak_c,lower_bound,exact,approximation,h2_norm\n";
  for (const SweepRecord& r : records) {
    out += std::to_string(r.n);
    out += ',';
    out += format17(r.beta);
    out += ',';
    out += format17(r.gamma);
    out += ',';
    out += format17(r.frak_a);
    out += ',';
    out += format17(r.frak_c);
    out += ',';
    out += format17(r.lower_bound);
    out += ',';
    if (r.exact) out += format17(*r.exact);
    out += ',';
    out += format17(r.approximation);
    out += ',';
    out += format17(r.h2_norm);
    out += '\n';
  }
  return out;
}

}  // namespace netperf::sweep
