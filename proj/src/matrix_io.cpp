#include "netperf/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace netperf::io {
namespace {

constexpr int kMaxDim = 100000;

}  // namespace

Matrix read_matrix_text(std::istream& in) {
  long long n = 0;
  if (!(in >> n) || n < 1 || n > kMaxDim) {
    throw InvalidInput("matrix file must start with the dimension n on its first line");
  }
  Matrix m(n, n);
  for (long long i = 0; i < n; ++i) {
    for (long long j = 0; j < n; ++j) {
      double value = 0.0;
      if (!(in >> value)) {
        std::ostringstream msg;
        msg << "matrix file ended early or has a bad token at row " << i + 1 << ", column " << j + 1;
        throw InvalidInput(msg.str());
      }
      if (!std::isfinite(value)) {
        throw InvalidInput("matrix entries must be finite");
      }
      m(i, j) = value;
    }
  }
  return m;
}

Matrix read_matrix_json(const nlohmann::json& j) {
  const nlohmann::json* rows = nullptr;
  if (j.is_array()) {
    rows = &j;
  } else if (j.is_object() && j.contains("entries")) {
    rows = &j.at("entries");
    if (j.contains("n") && (!j.at("n").is_number_integer() ||
                            j.at("n").get<long long>() != static_cast<long long>(rows->size()))) {
      throw InvalidInput("matrix JSON: field \"n\" disagrees with the number of rows");
    }
  } else {
    throw InvalidInput("matrix JSON must be an array of rows or {\"n\", \"entries\"}");
  }
  const auto n = static_cast<Eigen::Index>(rows->size());
  if (n < 1 || n > kMaxDim) throw InvalidInput("matrix JSON has no rows");
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const nlohmann::json& row = (*rows)[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw InvalidInput("matrix JSON rows must all have length n");
    }
    for (Eigen::Index k = 0; k < n; ++k) {
      if (!row[k].is_number()) throw InvalidInput("matrix JSON entries must be numbers");
      const double value = row[k].get<double>();
      if (!std::isfinite(value)) throw InvalidInput("matrix entries must be finite");
      m(i, k) = value;
    }
  }
  return m;
}

Matrix read_matrix_file(const std::string& path, bool as_json) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw InvalidInput("cannot open matrix file: " + path);
    in = &file;
  }
  if (as_json) {
    nlohmann::json j;
    try {
      *in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("bad matrix JSON: ") + e.what());
    }
    return read_matrix_json(j);
  }
  return read_matrix_text(*in);
}

void write_matrix_text(std::ostream& out, const Matrix& m) {
  require_square_finite(m, "matrix");
  out << m.rows() << "\n";
  char buffer[64];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buffer, sizeof buffer, "%.17g", m(i, j));
      out << (j ? " " : "") << buffer;
    }
    out << "\n";
  }
}

}  // namespace netperf::io
