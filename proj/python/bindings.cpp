#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "netperf/bounds.hpp"
#include "netperf/cyclic.hpp"
#include "netperf/lyapunov.hpp"
#include "netperf/montecarlo.hpp"
#include "netperf/spectra.hpp"
#include "netperf/sweep.hpp"
#include "netperf/types.hpp"

namespace py = pybind11;

using netperf::LinearSystem;
using netperf::Matrix;
using netperf::Vector;

namespace {

netperf::cyclic::CyclicNetworkParams make_params(std::vector<double> a, std::vector<double> c) {
  const int n = static_cast<int>(a.size());
  return netperf::cyclic::CyclicNetworkParams(n, std::move(a), std::move(c));
}

py::dict summary_dict(const netperf::spectra::SpectralSummary& s) {
  py::dict d;
  d["eigenvalues_A"] = s.eigenvalues_A;
  d["eigenvalues_As"] = s.eigenvalues_As;
  d["eigenvalues_Q"] = s.eigenvalues_Q;
  d["is_hurwitz"] = s.is_hurwitz;
  d["is_normal"] = s.is_normal;
  d["normality_residual"] = s.normality_residual;
  return d;
}

py::dict solution_dict(const netperf::lyapunov::LyapunovSolution& s) {
  py::dict d;
  d["P"] = s.P;
  d["trace"] = s.trace;
  d["residual"] = s.residual;
  return d;
}

py::dict report_dict(const netperf::bounds::PerformanceReport& r) {
  py::dict d;
  d["exact"] = r.exact;
  d["lower_bound"] = r.lower_bound;
  d["upper_bound"] = r.upper_bound ? py::cast(*r.upper_bound) : py::none();
  d["lower_is_tight"] = r.lower_is_tight;
  d["normality_residual"] = r.normality_residual;
  d["q_eigen_spread"] = r.q_eigen_spread;
  return d;
}

py::dict estimate_dict(const netperf::montecarlo::DispersionEstimate& e) {
  py::dict d;
  d["mean"] = e.mean;
  d["stderr"] = e.std_error;
  d["samples"] = e.samples;
  return d;
}

py::dict record_dict(const netperf::sweep::SweepRecord& r) {
  py::dict d;
  d["n"] = r.n;
  d["beta"] = r.beta;
  d["gamma"] = r.gamma;
  d["frak_a"] = r.frak_a;
  d["frak_c"] = r.frak_c;
  d["lower_bound"] = r.lower_bound;
  d["exact"] = r.exact ? py::cast(*r.exact) : py::none();
  d["approximation"] = r.approximation;
  d["h2_norm"] = r.h2_norm;
  return d;
}

}  // namespace

PYBIND11_MODULE(_netperf, m) {
  m.doc() = "Steady-state noise amplification analysis of stable linear dynamical networks";

  py::register_exception<netperf::NotHurwitz>(m, "NotHurwitzError");
  py::register_exception<netperf::Unstable>(m, "UnstableError");
  static py::exception<netperf::Error> base_error(m, "NetperfError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const netperf::NotHurwitz&) {
      throw;  // handled by the registered exception above
    } catch (const netperf::Unstable&) {
      throw;
    } catch (const netperf::InvalidInput& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const netperf::Error& e) {
      PyErr_SetString(base_error.ptr(), e.what());
    }
  });

  m.def("symmetric_part", &netperf::spectra::symmetric_part, py::arg("A"),
        "(A^T + A)/2 with exact symmetry");
  m.def("is_normal", &netperf::spectra::is_normal, py::arg("A"),
        py::arg("tol") = netperf::spectra::kDefaultTol);
  m.def("is_hurwitz", &netperf::spectra::is_hurwitz, py::arg("A"));
  m.def(
      "spectral_summary",
      [](const Matrix& a, const Matrix& q, double tol) {
        return summary_dict(netperf::spectra::spectral_summary(a, q, tol));
      },
      py::arg("A"), py::arg("Q"), py::arg("tol") = netperf::spectra::kDefaultTol);

  m.def(
      "solve_lyapunov",
      [](const Matrix& a, const Matrix& q) {
        return solution_dict(netperf::lyapunov::solve_lyapunov(LinearSystem(a, q)));
      },
      py::arg("A"), py::arg("Q"), "Solve P A + A^T P + Q = 0");
  m.def(
      "kron_oracle_solve",
      [](const Matrix& a, const Matrix& q) {
        return solution_dict(netperf::lyapunov::kron_oracle_solve(LinearSystem(a, q)));
      },
      py::arg("A"), py::arg("Q"), "Vectorized LU cross-check of solve_lyapunov (n <= 64)");
  m.def(
      "performance_measure",
      [](const Matrix& a, const Matrix& q) {
        return netperf::lyapunov::performance_measure(LinearSystem(a, q));
      },
      py::arg("A"), py::arg("Q"), "Tr(P): steady-state value of E[x^T Q x]");
  m.def(
      "restricted_dispersion",
      [](const Matrix& a, const Vector& c_row) {
        const LinearSystem sys(a, Matrix::Identity(a.rows(), a.cols()));
        return netperf::lyapunov::restricted_dispersion(sys, c_row);
      },
      py::arg("A"), py::arg("c_row"), "Steady-state dispersion of the scalar output c_row . x");

  m.def(
      "analyze",
      [](const Matrix& a, const Matrix& q) {
        return report_dict(netperf::bounds::analyze(LinearSystem(a, q)));
      },
      py::arg("A"), py::arg("Q"), "Exact measure plus the spectral sandwich bounds");

  m.def(
      "build_state_matrix",
      [](std::vector<double> a, std::vector<double> c) {
        return netperf::cyclic::build_state_matrix(make_params(std::move(a), std::move(c)));
      },
      py::arg("a"), py::arg("c"));
  m.def(
      "cyclic_derive",
      [](std::vector<double> a, std::vector<double> c) {
        const auto d = netperf::cyclic::derive(make_params(std::move(a), std::move(c)));
        py::dict out;
        out["frak_a"] = d.frak_a;
        out["frak_c"] = d.frak_c;
        out["gamma"] = d.gamma;
        out["beta"] = d.beta;
        out["regime"] = std::string(netperf::cyclic::regime_name(d.regime));
        out["secant_stable"] = d.secant_stable;
        out["identical_a"] = d.identical_a;
        out["identical_c"] = d.identical_c;
        return out;
      },
      py::arg("a"), py::arg("c"));
  m.def(
      "closed_form_eigenvalues",
      [](std::vector<double> a, std::vector<double> c) {
        return netperf::cyclic::closed_form_eigenvalues(make_params(std::move(a), std::move(c)));
      },
      py::arg("a"), py::arg("c"));
  m.def(
      "closed_form_lower_bound",
      [](std::vector<double> a, std::vector<double> c) {
        return netperf::cyclic::closed_form_lower_bound(make_params(std::move(a), std::move(c)));
      },
      py::arg("a"), py::arg("c"));
  m.def(
      "asymptotic_approximation",
      [](int n, double beta, double frak_c, const std::string& regime) {
        return netperf::cyclic::asymptotic_approximation(n, beta, frak_c,
                                                         netperf::cyclic::regime_from_name(regime));
      },
      py::arg("n"), py::arg("beta"), py::arg("frak_c"), py::arg("regime"));
  m.def(
      "output_dispersion_bound",
      [](std::vector<double> a, std::vector<double> c) {
        return netperf::cyclic::output_dispersion_bound(make_params(std::move(a), std::move(c)));
      },
      py::arg("a"), py::arg("c"));
  m.def(
      "secant_criterion",
      [](std::vector<double> a, std::vector<double> c) {
        return netperf::cyclic::secant_criterion(make_params(std::move(a), std::move(c)));
      },
      py::arg("a"), py::arg("c"));

  m.def(
      "simulate_dispersion",
      [](const Matrix& a, const Matrix& q, double dt, double horizon, double burn_in, int ensembles,
         std::uint64_t seed) {
        netperf::montecarlo::SimulationConfig cfg;
        cfg.dt = dt;
        cfg.horizon = horizon;
        cfg.burn_in = burn_in;
        cfg.ensembles = ensembles;
        cfg.seed = seed;
        return estimate_dict(netperf::montecarlo::simulate_dispersion(LinearSystem(a, q), cfg));
      },
      py::arg("A"), py::arg("Q"), py::arg("dt") = 1e-3, py::arg("horizon") = 200.0,
      py::arg("burn_in") = 0.0, py::arg("ensembles") = 64, py::arg("seed") = 0,
      "Euler-Maruyama estimate of the steady-state dispersion");

  m.def(
      "sweep",
      [](const std::string& regime, double beta, double frak_c, std::vector<int> n_list, int exact_cap) {
        netperf::sweep::SweepSpec spec;
        spec.regime = netperf::cyclic::regime_from_name(regime);
        spec.beta = beta;
        spec.frak_c = frak_c;
        spec.n_list = std::move(n_list);
        spec.exact_cap = exact_cap;
        py::list out;
        for (const auto& record : netperf::sweep::run(spec)) out.append(record_dict(record));
        return out;
      },
      py::arg("regime"), py::arg("beta"), py::arg("frak_c"), py::arg("n_list"),
      py::arg("exact_cap") = netperf::sweep::kDefaultExactCap,
      "Size-scaling records at fixed beta");
}
