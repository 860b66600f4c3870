#include <doctest.h>

#include <cmath>

#include "netperf/bounds.hpp"
#include "netperf/cyclic.hpp"
#include "netperf/lyapunov.hpp"
#include "support.hpp"

using namespace netperf;
using testsupport::random_normal_stable;
using testsupport::random_psd;
using testsupport::random_stable;

namespace {

spectra::SpectralSummary summarize(const Matrix& a, const Matrix& q) {
  return spectra::spectral_summary(a, q);
}

}  // namespace

TEST_SUITE_BEGIN("bounds");

TEST_CASE("A = -I, Q = I collapses bounds and exact value to n/2") {
  const int n = 2;
  const LinearSystem sys(-Matrix::Identity(n, n), Matrix::Identity(n, n));
  const auto report = bounds::analyze(sys);
  CHECK(report.exact == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.lower_bound == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(report.upper_bound.has_value());
  CHECK(*report.upper_bound == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.lower_is_tight);
}

TEST_CASE("cyclic n=4 identical network: everything equals 4") {
  const auto params = cyclic::CyclicNetworkParams::identical(4, 1.0, 1.0);
  const LinearSystem sys(cyclic::build_state_matrix(params), Matrix::Identity(4, 4));
  const auto report = bounds::analyze(sys);
  CHECK(report.exact == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(report.lower_bound == doctest::Approx(4.0).epsilon(1e-9));
  REQUIRE(report.upper_bound.has_value());
  CHECK(*report.upper_bound == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(report.lower_is_tight);
}

TEST_CASE("non-normal triangular A: loose lower bound, unstable symmetric part") {
  Matrix a(2, 2);
  a << -1, 5, 0, -1;
  const LinearSystem sys(a, Matrix::Identity(2, 2));
  const auto summary = summarize(a, sys.Q);

  // hand solve: P = [[1/2, 5/4], [5/4, 27/4]], Tr(P) = 29/4
  CHECK(bounds::lower_bound(summary) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lyapunov::performance_measure(sys) == doctest::Approx(7.25).epsilon(1e-10));

  // eig(A_s) = -1 +- 2.5, so the symmetric part is not Hurwitz
  CHECK_THROWS_AS(bounds::upper_bound(summary), SymmetricPartNotStable);

  const auto report = bounds::analyze(sys);
  CHECK_FALSE(report.upper_bound.has_value());
  CHECK(report.lower_bound < report.exact);
  CHECK_FALSE(report.lower_is_tight);
}

TEST_CASE("heterogeneous-gain cyclic network keeps a strict gap") {
  const cyclic::CyclicNetworkParams params(3, {1.0, 1.0, 1.0}, {1.0, 2.0, 0.5});
  const LinearSystem sys(cyclic::build_state_matrix(params), Matrix::Identity(3, 3));
  const auto report = bounds::analyze(sys);
  CHECK(report.exact - report.lower_bound > 1e-9);
  CHECK_FALSE(report.lower_is_tight);
}

TEST_CASE("normal-case exact value") {
  SUBCASE("A = -I, q = 1") {
    const auto summary = summarize(-Matrix::Identity(3, 3), Matrix::Identity(3, 3));
    CHECK(bounds::normal_case_exact(summary, 1.0) == doctest::Approx(1.5).epsilon(1e-12));
  }
  SUBCASE("skew minus identity, q = 2: A_s = -I so the value is n") {
    const int n = 4;
    std::mt19937_64 rng(64);
    const Matrix raw = testsupport::random_matrix(n, rng);
    const Matrix skew = 0.5 * (raw - raw.transpose());
    const Matrix a = skew - Matrix::Identity(n, n);
    const auto summary = summarize(a, 2.0 * Matrix::Identity(n, n));
    REQUIRE(summary.is_normal);
    CHECK(bounds::normal_case_exact(summary, 2.0) == doctest::Approx(static_cast<double>(n)).epsilon(1e-10));
  }
  SUBCASE("cyclic n=6 identical network agrees with the closed-form bound") {
    const auto params = cyclic::CyclicNetworkParams::identical(6, 2.0, 1.0);
    const auto summary = summarize(cyclic::build_state_matrix(params), Matrix::Identity(6, 6));
    const double via_normal_case = bounds::normal_case_exact(summary, 1.0);
    const double via_closed_form = cyclic::closed_form_lower_bound(params);
    CHECK(via_normal_case == doctest::Approx(via_closed_form).epsilon(1e-10));
  }
  SUBCASE("preconditions are enforced") {
    Matrix a(2, 2);
    a << -1, 5, 0, -1;
    CHECK_THROWS_AS(bounds::normal_case_exact(summarize(a, Matrix::Identity(2, 2)), 1.0), NotNormal);

    Matrix q(2, 2);
    q << 1, 0, 0, 2;
    CHECK_THROWS_AS(bounds::normal_case_exact(summarize(-Matrix::Identity(2, 2), q), 1.0), UnequalWeights);
  }
}

TEST_CASE("sandwich property over random stable systems with Hurwitz symmetric part") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const LinearSystem sys(random_stable(n, rng), random_psd(n, rng));
    const auto report = bounds::analyze(sys);
    REQUIRE(report.upper_bound.has_value());
    const double slack = 1e-8 * std::max(1.0, report.exact);
    CHECK(report.lower_bound <= report.exact + slack);
    CHECK(report.exact <= *report.upper_bound + slack);
  }
}

TEST_CASE("equality characterization") {
  std::mt19937_64 rng(512);
  SUBCASE("normal A with Q = qI is tight") {
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 7);
      std::uniform_real_distribution<double> qdist(0.5, 3.0);
      const double q = qdist(rng);
      const LinearSystem sys(random_normal_stable(n, rng), q * Matrix::Identity(n, n));
      const auto report = bounds::analyze(sys);
      CHECK(report.lower_is_tight);
      CHECK(std::abs(report.exact - report.lower_bound) <= 1e-6 * std::max(1.0, report.exact));
    }
  }
  SUBCASE("clearly non-normal A with Q = qI stays strictly above the bound") {
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 7);
      Matrix a = random_stable(n, rng);
      while (spectra::normality_residual(a) < 1e-3) a = random_stable(n, rng);
      const LinearSystem sys(a, Matrix::Identity(n, n));
      const auto report = bounds::analyze(sys);
      CHECK(report.exact - report.lower_bound > 1e-9);
    }
  }
  SUBCASE("normal A with spread-out Q eigenvalues stays strictly above the bound") {
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const Matrix v = testsupport::random_orthogonal(n, rng);
      Vector diag(n);
      std::uniform_real_distribution<double> qdist(0.5, 3.0);
      for (int i = 0; i < n; ++i) diag(i) = qdist(rng);
      diag(0) = 0.25;
      diag(n - 1) = 4.0;  // force a visible spread
      const Matrix q = spectra::symmetric_part(v * diag.asDiagonal() * v.transpose());
      const LinearSystem sys(random_normal_stable(n, rng), q);
      const auto report = bounds::analyze(sys);
      CHECK(report.exact - report.lower_bound > 1e-9);
      CHECK_FALSE(report.lower_is_tight);
    }
  }
}

TEST_CASE("bounds and exact value scale linearly in the weight") {
  std::mt19937_64 rng(8080);
  const int n = 5;
  const Matrix a = random_stable(n, rng);
  const Matrix q = random_psd(n, rng);
  const double factor = 3.5;
  const auto base = bounds::analyze(LinearSystem(a, q));
  const auto scaled = bounds::analyze(LinearSystem(a, factor * q));
  CHECK(scaled.exact == doctest::Approx(factor * base.exact).epsilon(1e-10));
  CHECK(scaled.lower_bound == doctest::Approx(factor * base.lower_bound).epsilon(1e-10));
  REQUIRE(base.upper_bound.has_value());
  REQUIRE(scaled.upper_bound.has_value());
  CHECK(*scaled.upper_bound == doctest::Approx(factor * *base.upper_bound).epsilon(1e-10));
}

TEST_CASE("normal-case exact value matches both the upper bound and the measure") {
  std::mt19937_64 rng(9001);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Matrix a = random_normal_stable(n, rng);
    const auto summary = summarize(a, Matrix::Identity(n, n));
    const double exact = lyapunov::performance_measure(LinearSystem(a, Matrix::Identity(n, n)));
    const double normal_case = bounds::normal_case_exact(summary, 1.0);
    const double upper = bounds::upper_bound(summary);
    CHECK(normal_case == doctest::Approx(upper).epsilon(1e-10));
    CHECK(normal_case == doctest::Approx(exact).epsilon(1e-8));
  }
}

TEST_CASE("JSON report shape, including the null upper bound") {
  Matrix a(2, 2);
  a << -1, 5, 0, -1;
  const auto report = bounds::analyze(LinearSystem(a, Matrix::Identity(2, 2)));
  const nlohmann::json j = bounds::to_json(report);
  CHECK(j.at("exact").is_number());
  CHECK(j.at("lower_bound").is_number());
  CHECK(j.at("upper_bound").is_null());
  CHECK(j.at("lower_is_tight").is_boolean());
  CHECK(j.at("normality_residual").is_number());
  CHECK(j.at("q_eigen_spread").is_number());

  const auto tight = bounds::analyze(LinearSystem(-Matrix::Identity(2, 2), Matrix::Identity(2, 2)));
  CHECK(bounds::to_json(tight).at("upper_bound").get<double>() == doctest::Approx(1.0));
}

TEST_SUITE_END();
