// tests/test_analysis.cpp

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

#include <doctest.h>

#include <cmath>

#include "testutil.hpp"
#include "ttsprep/analysis.hpp"

using namespace ttsprep;

namespace {

// The published pairwise table: row system compared against each later
// system, upper triangle only.
CmosMatrix table2() {
  CmosMatrix m;
  m.systems = {"Baseline", "Punc", "US", "Punc&US", "NAT"};
  const double nan = std::numeric_limits<double>::quiet_NaN();
  m.scores.assign(5, std::vector<double>(5, nan));
  const double upper[5][5] = {{0, -0.81, -0.31, -1.03, -1.16},
                              {0, 0, 0.72, -0.28, -0.75},
                              {0, 0, 0, -0.56, -0.97},
                              {0, 0, 0, 0, -0.53},
                              {0, 0, 0, 0, 0}};
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      if (j > i) {
        m.scores[i][j] = upper[i][j];
        m.scores[j][i] = -upper[i][j];
      } else if (i == j) {
        m.scores[i][j] = 0.0;
      }
    }
  }
  return m;
}

std::string table2_csv() {
  return ",Baseline,Punc,US,Punc&US,NAT\n"
         "Baseline,,-0.81,-0.31,-1.03,-1.16\n"
         "Punc,,,0.72,-0.28,-0.75\n"
         "US,,,,-0.56,-0.97\n"
         "Punc&US,,,,,-0.53\n"
         "NAT,,,,,\n";
}

}  // namespace

TEST_CASE("one_sample_ttest") {
  SUBCASE("mean equal to mu0 gives t = 0, p = 1") {
    const auto [t, p] = one_sample_ttest({1.0, -1.0, 1.0, -1.0}, 0.0);
    CHECK(t == doctest::Approx(0.0).scale(1.0));
    CHECK(p == doctest::Approx(1.0));
  }

  SUBCASE("strong preference is significant") {
    // Frozen against an independent t-distribution computation:
    // t = 6, two-sided p = 2.024993e-4 with 9 degrees of freedom.
    const auto [t, p] =
        one_sample_ttest({1, 1, 1, 0, 1, 1, 0, 1, 1, 1}, 0.0);
    CHECK(t == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(p == doctest::Approx(2.024993e-4).epsilon(1e-6));
    CHECK(p < 0.05);
  }

  SUBCASE("two ratings give the closed-form Cauchy tail") {
    const auto [t, p] = one_sample_ttest({0.0, 2.0}, 0.0);
    CHECK(t == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p == doctest::Approx(0.5).epsilon(1e-12));
  }

  SUBCASE("degenerate inputs are errors") {
    CHECK_THROWS_AS(one_sample_ttest({1.0}, 0.0), Error);
    CHECK_THROWS_AS(one_sample_ttest({2.0, 2.0, 2.0}, 0.0), Error);
  }

  SUBCASE("negating ratings about mu0 negates t and preserves p") {
    const std::vector<double> ratings = {0.3, 1.2, -0.4, 0.9, 2.0, 0.1};
    const auto [t1, p1] = one_sample_ttest(ratings, 0.0);
    std::vector<double> negated;
    for (double r : ratings) negated.push_back(-r);
    const auto [t2, p2] = one_sample_ttest(negated, 0.0);
    CHECK(t2 == doctest::Approx(-t1).epsilon(1e-12));
    CHECK(p2 == doctest::Approx(p1).epsilon(1e-12));
  }
}

TEST_CASE("mds_1d") {
  SUBCASE("published matrix reproduces the published ordering") {
    const auto result = mds_1d(table2(), "NAT");
    CHECK(result.ordering ==
          std::vector<std::string>{"Baseline", "US", "Punc", "Punc&US",
                                   "NAT"});
    // Reference orientation: NAT carries the maximum coordinate.
    const auto& coords = result.coordinates;
    for (double c : coords) CHECK(coords[4] >= c);
  }

  SUBCASE("two systems embed symmetrically about zero") {
    CmosMatrix m;
    m.systems = {"A", "B"};
    m.scores = {{0.0, -1.0}, {1.0, 0.0}};
    const auto result = mds_1d(m, "B");
    CHECK(result.coordinates[0] ==
          doctest::Approx(-result.coordinates[1]).epsilon(1e-9));
    CHECK(result.coordinates[1] > 0.0);
    CHECK(std::abs(result.coordinates[1] - 0.5) < 1e-9);
  }

  SUBCASE("collinear dissimilarities are recovered exactly") {
    // Points on a line at 0, 1, 3 -> pairwise distances 1, 2, 3.
    CmosMatrix m;
    m.systems = {"P0", "P1", "P3"};
    m.scores = {{0.0, 1.0, 3.0}, {-1.0, 0.0, 2.0}, {-3.0, -2.0, 0.0}};
    const auto result = mds_1d(m, "P3");
    const auto& c = result.coordinates;
    CHECK(std::abs(c[1] - c[0]) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(c[2] - c[1]) == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(std::abs(c[2] - c[0]) == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(result.ordering == std::vector<std::string>{"P0", "P1", "P3"});
  }

  SUBCASE("ordering is invariant under uniform scaling") {
    auto m = table2();
    const auto base = mds_1d(m, "NAT").ordering;
    for (auto& row : m.scores) {
      for (double& v : row) v *= 7.5;
    }
    CHECK(mds_1d(m, "NAT").ordering == base);
  }

  SUBCASE("errors: unknown reference, missing pair, all-zero matrix") {
    auto m = table2();
    CHECK_THROWS_AS(mds_1d(m, "nope"), Error);
    m.scores[1][2] = m.scores[2][1] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(mds_1d(m, "NAT"), Error);
    CmosMatrix zero;
    zero.systems = {"A", "B"};
    zero.scores = {{0.0, 0.0}, {0.0, 0.0}};
    CHECK_THROWS_AS(mds_1d(zero, "A"), Error);
  }
}

TEST_CASE("load_cmos") {
  testutil::TempDir dir("cmos");
  const auto path = dir.path() / "t.csv";

  SUBCASE("published table parses into a 5-system matrix") {
    testutil::write_text(path, table2_csv());
    const auto m = load_cmos(path);
    REQUIRE(m.systems.size() == 5);
    CHECK(m.systems[0] == "Baseline");
    CHECK(m.scores[0][1] == -0.81);
    CHECK(m.scores[1][0] == 0.81);  // completed by antisymmetry
    CHECK(m.scores[3][4] == -0.53);
    CHECK(m.index_of("NAT") == 4);
    // The completed matrix feeds MDS directly.
    CHECK(mds_1d(m, "NAT").ordering ==
          std::vector<std::string>{"Baseline", "US", "Punc", "Punc&US",
                                   "NAT"});
  }

  SUBCASE("single system is an error") {
    testutil::write_text(path, ",A\nA,\n");
    CHECK_THROWS_AS(load_cmos(path), Error);
  }

  SUBCASE("both triangles must agree") {
    testutil::write_text(path, ",A,B\nA,,0.5\nB,-0.4,\n");
    CHECK_THROWS_AS(load_cmos(path), Error);
    testutil::write_text(path, ",A,B\nA,,0.5\nB,-0.5,\n");
    CHECK_NOTHROW(load_cmos(path));
  }

  SUBCASE("missing pair is an error") {
    testutil::write_text(path, ",A,B,C\nA,,0.5,\nB,,,\nC,,,\n");
    CHECK_THROWS_AS(load_cmos(path), Error);
  }

  SUBCASE("save and reload round trips the completed matrix") {
    testutil::write_text(path, table2_csv());
    const auto m = load_cmos(path);
    const auto saved = dir.path() / "saved.csv";
    save_cmos(m, saved);
    const auto reloaded = load_cmos(saved);
    CHECK(reloaded.systems == m.systems);
    for (std::size_t i = 0; i < m.systems.size(); ++i) {
      for (std::size_t j = 0; j < m.systems.size(); ++j) {
        CHECK(reloaded.scores[i][j] == m.scores[i][j]);
      }
    }
  }
}
