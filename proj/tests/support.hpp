#pragma once

// Deterministic generators and process helpers shared by the unit and
// acceptance suites. Everything here is test-side machinery: the random
// stable systems come from the shift recipe, not from the library itself.

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "netperf/spectra.hpp"
#include "netperf/types.hpp"

namespace testsupport {

using netperf::Matrix;
using netperf::Vector;

inline Matrix random_matrix(int n, std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

// Shift recipe: A = N - (max eig(N_s) + delta) I with delta in [0.1, 2].
// Both A and its symmetric part are Hurwitz by construction.
inline Matrix random_stable(int n, std::mt19937_64& rng) {
  const Matrix raw = random_matrix(n, rng);
  std::uniform_real_distribution<double> delta(0.1, 2.0);
  Eigen::SelfAdjointEigenSolver<Matrix> sym(netperf::spectra::symmetric_part(raw));
  return raw - (sym.eigenvalues().maxCoeff() + delta(rng)) * Matrix::Identity(n, n);
}

inline Matrix random_psd(int n, std::mt19937_64& rng) {
  const Matrix m = random_matrix(n, rng);
  return m.transpose() * m;
}

inline Matrix random_orthogonal(int n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Matrix> qr(random_matrix(n, rng));
  return qr.householderQ() * Matrix::Identity(n, n);
}

// V B V^T with orthogonal V and B block diagonal out of 1x1 negatives and
// 2x2 rotation blocks [[al, be], [-be, al]], al < 0: normal and Hurwitz.
inline Matrix random_normal_stable(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> real_part(-2.0, -0.2);
  std::uniform_real_distribution<double> imag_part(0.2, 2.0);
  std::bernoulli_distribution use_block(0.5);
  Matrix b = Matrix::Zero(n, n);
  int i = 0;
  while (i < n) {
    if (i + 1 < n && use_block(rng)) {
      const double al = real_part(rng);
      const double be = imag_part(rng);
      b(i, i) = al;
      b(i, i + 1) = be;
      b(i + 1, i) = -be;
      b(i + 1, i + 1) = al;
      i += 2;
    } else {
      b(i, i) = real_part(rng);
      ++i;
    }
  }
  const Matrix v = random_orthogonal(n, rng);
  return v * b * v.transpose();
}

// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const auto m = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

inline std::string temp_path(const std::string& tag) {
  static int counter = 0;
  std::ostringstream path;
  path << "netperf_test_" << ::getpid() << "_" << counter++ << "_" << tag;
  return (std::filesystem::temp_directory_path() / path.str()).string();
}

// Runs the CLI named by the NETPERF_CLI environment variable.
inline CliResult run_cli(const std::string& args, const std::string& stdin_data = "") {
  const char* bin = std::getenv("NETPERF_CLI");
  if (bin == nullptr) throw std::runtime_error("NETPERF_CLI is not set");

  const std::string out_path = temp_path("out");
  const std::string err_path = temp_path("err");
  std::string command = std::string("\"") + bin + "\" " + args;
  if (!stdin_data.empty()) {
    const std::string in_path = temp_path("in");
    write_file(in_path, stdin_data);
    command += " < " + in_path;
  }
  command += " > " + out_path + " 2> " + err_path;

  const int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = read_file(out_path);
  result.err = read_file(err_path);
  return result;
}

inline std::string data_path(const std::string& name) {
  const char* dir = std::getenv("NETPERF_TEST_DATA");
  if (dir == nullptr) throw std::runtime_error("NETPERF_TEST_DATA is not set");
  return std::string(dir) + "/" + name;
}

}  // namespace testsupport
