// src/analysis.cpp

// Copyright 2026  ttsprep authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "ttsprep/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>
#include <boost/math/distributions/students_t.hpp>

namespace ttsprep {

namespace {

constexpr double kAsymmetryTolerance = 1e-9;

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) {
    // Trim surrounding whitespace.
    const auto first = cell.find_first_not_of(" \t\r");
    const auto last = cell.find_last_not_of(" \t\r");
    cells.push_back(first == std::string::npos
                        ? std::string()
                        : cell.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}


// Fills the blank triangle from the filled one and zeroes the diagonal;
// both triangles present must agree within tolerance.
void complete_by_antisymmetry(CmosMatrix& m) {
  const int n = static_cast<int>(m.systems.size());
  for (int i = 0; i < n; ++i) {
    m.scores[i][i] = 0.0;
    for (int j = i + 1; j < n; ++j) {
      const double upper = m.scores[i][j];
      const double lower = m.scores[j][i];
      const bool has_upper = !std::isnan(upper);
      const bool has_lower = !std::isnan(lower);
      if (has_upper && has_lower) {
        if (std::abs(upper + lower) > kAsymmetryTolerance) {
          throw Error("cmos csv: pair " + m.systems[i] + "/" + m.systems[j] +
                      " breaks antisymmetry");
        }
      } else if (has_upper) {
        m.scores[j][i] = -upper;
      } else if (has_lower) {
        m.scores[i][j] = -lower;
      } else {
        throw Error("cmos csv: missing pair " + m.systems[i] + "/" +
                    m.systems[j]);
      }
    }
  }
}

}  // namespace

int CmosMatrix::index_of(const std::string& system) const {
  const auto it = std::find(systems.begin(), systems.end(), system);
  return it == systems.end() ? -1
                             : static_cast<int>(it - systems.begin());
}

std::pair<double, double> one_sample_ttest(const std::vector<double>& ratings,
                                           double mu0) {
  const std::size_t n = ratings.size();
  if (n < 2) throw Error("one_sample_ttest: need at least 2 ratings");
  const double mean =
      std::accumulate(ratings.begin(), ratings.end(), 0.0) / n;
  double ss = 0.0;
  for (double r : ratings) ss += (r - mean) * (r - mean);
  const double sample_var = ss / (n - 1);
  if (sample_var <= 0.0) throw Error("one_sample_ttest: zero variance");

  const double t = (mean - mu0) / std::sqrt(sample_var / n);
  const boost::math::students_t dist(static_cast<double>(n - 1));
  const double p = 2.0 * boost::math::cdf(dist, -std::abs(t));
  return {t, p};
}

MdsResult mds_1d(const CmosMatrix& matrix, const std::string& reference) {
  const int n = static_cast<int>(matrix.systems.size());
  if (n < 2) throw Error("mds_1d: need at least 2 systems");
  const int ref = matrix.index_of(reference);
  if (ref < 0) throw Error("mds_1d: unknown reference system: " + reference);

  // Non-negative dissimilarities: preference magnitude.
  Eigen::MatrixXd d2(n, n);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        d2(i, j) = 0.0;
        continue;
      }
      const double s = matrix.scores[i][j];
      if (std::isnan(s)) {
        throw Error("mds_1d: missing pair " + matrix.systems[i] + "/" +
                    matrix.systems[j]);
      }
      d2(i, j) = s * s;
      total += std::abs(s);
    }
  }
  if (total == 0.0) throw Error("mds_1d: degenerate all-zero matrix");

  // Torgerson double centering: B = -1/2 J D^2 J.
  const Eigen::MatrixXd centering =
      Eigen::MatrixXd::Identity(n, n) -
      Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  const Eigen::MatrixXd b = -0.5 * centering * d2 * centering;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
  if (solver.info() != Eigen::Success) {
    throw Error("mds_1d: eigendecomposition failed");
  }
  // Eigenvalues come back ascending; the last one is the leading axis.
  const double lambda = solver.eigenvalues()(n - 1);
  if (lambda <= 0.0) throw Error("mds_1d: no positive eigenvalue");
  Eigen::VectorXd coords =
      solver.eigenvectors().col(n - 1) * std::sqrt(lambda);

  // Orientation is arbitrary up to sign; put the reference on top.
  int argmax = 0;
  coords.maxCoeff(&argmax);
  if (argmax != ref) {
    Eigen::VectorXd flipped = -coords;
    int argmax_flipped = 0;
    flipped.maxCoeff(&argmax_flipped);
    if (argmax_flipped == ref || flipped(ref) > coords(ref)) {
      coords = flipped;
    }
  }

  MdsResult result;
  result.coordinates.assign(coords.data(), coords.data() + n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (coords(a) != coords(b)) return coords(a) < coords(b);
    return matrix.systems[a] < matrix.systems[b];
  });
  for (int idx : order) result.ordering.push_back(matrix.systems[idx]);
  return result;
}

CmosMatrix load_cmos(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open cmos csv: " + path.string());

  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(split_csv_row(line));
  }
  if (rows.size() < 2) throw Error("cmos csv: need header plus data rows");

  CmosMatrix m;
  // Header: optional corner label, then system names.
  const auto& header = rows[0];
  for (std::size_t c = 1; c < header.size(); ++c) {
    if (!header[c].empty()) m.systems.push_back(header[c]);
  }
  const int n = static_cast<int>(m.systems.size());
  if (n < 2) throw Error("cmos csv: fewer than two systems");
  if (static_cast<int>(rows.size()) - 1 != n) {
    throw Error("cmos csv: expected " + std::to_string(n) + " data rows");
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  m.scores.assign(n, std::vector<double>(n, nan));
  for (int r = 0; r < n; ++r) {
    const auto& row = rows[r + 1];
    if (row.empty() || row[0] != m.systems[r]) {
      throw Error("cmos csv: row " + std::to_string(r + 2) +
                  " must start with system name " + m.systems[r]);
    }
    for (int c = 0; c < n; ++c) {
      const std::size_t cell = c + 1;
      if (cell >= row.size() || row[cell].empty()) continue;
      try {
        m.scores[r][c] = std::stod(row[cell]);
      } catch (const std::exception&) {
        throw Error("cmos csv: bad number '" + row[cell] + "' at row " +
                    std::to_string(r + 2));
      }
    }
  }

  // Complete by antisymmetry; verify agreement when both halves exist.
  complete_by_antisymmetry(m);
  return m;
}

void save_cmos(const CmosMatrix& matrix, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write cmos csv: " + path.string());
  for (const std::string& name : matrix.systems) out << ',' << name;
  out << '\n';
  const int n = static_cast<int>(matrix.systems.size());
  char buf[64];
  for (int i = 0; i < n; ++i) {
    out << matrix.systems[i];
    for (int j = 0; j < n; ++j) {
      out << ',';
      if (i == j || std::isnan(matrix.scores[i][j])) continue;
      std::snprintf(buf, sizeof(buf), "%.12g", matrix.scores[i][j]);
      out << buf;
    }
    out << '\n';
  }
  if (!out) throw Error("write failed: " + path.string());
}


}  // namespace ttsprep
