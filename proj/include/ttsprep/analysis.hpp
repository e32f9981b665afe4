// include/ttsprep/analysis.hpp

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

#ifndef TTSPREP_ANALYSIS_HPP_
#define TTSPREP_ANALYSIS_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "ttsprep/types.hpp"

namespace ttsprep {

/// Pairwise comparative-quality scores among systems. scores[a][b] is the
/// mean CMOS of system a against system b on a -2..+2 scale; positive
/// means a is better. The matrix is kept antisymmetric
/// (scores[b][a] == -scores[a][b]) with a zero diagonal.
struct CmosMatrix {
  std::vector<std::string> systems;
  std::vector<std::vector<double>> scores;

  int index_of(const std::string& system) const;  // -1 when absent
};

/// One-dimensional embedding of the systems.
struct MdsResult {
  std::vector<double> coordinates;     // parallel to the input systems
  std::vector<std::string> ordering;   // systems sorted by coordinate
};

/// One-sample two-sided t-test: t = (mean - mu0) / (s / sqrt(n)) with the
/// sample (n-1) standard deviation, p from Student's t with n-1 degrees
/// of freedom. Needs at least two ratings and nonzero variance.
std::pair<double, double> one_sample_ttest(const std::vector<double>& ratings,
                                           double mu0);

/// Projects the pairwise quality matrix to one dimension with classical
/// (Torgerson) multidimensional scaling over the non-negative
/// dissimilarities d(a,b) = |scores[a][b]|: double-center -0.5 * J D^2 J,
/// take the leading eigenvector scaled by the root of its eigenvalue.
/// The sign is chosen so the reference system gets the maximum
/// coordinate. Throws Error on an unknown reference, a missing pair, or
/// an all-zero matrix.
MdsResult mds_1d(const CmosMatrix& matrix, const std::string& reference);

/// Reads a CMOS CSV: header row of system names, one row per system,
/// blank cells allowed where the transposed cell is filled (completed by
/// antisymmetry). Throws Error when both triangles are given but
/// disagree beyond 1e-9, when a pair is missing entirely, or when fewer
/// than two systems are present.
CmosMatrix load_cmos(const std::filesystem::path& path);

/// Writes the completed matrix in the same CSV layout load_cmos reads.
void save_cmos(const CmosMatrix& matrix, const std::filesystem::path& path);

}  // namespace ttsprep

#endif  // TTSPREP_ANALYSIS_HPP_
