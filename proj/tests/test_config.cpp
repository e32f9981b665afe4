// tests/test_config.cpp

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

#include "testutil.hpp"
#include "ttsprep/config.hpp"

using namespace ttsprep;

TEST_CASE("config defaults pin the published thresholds") {
  const PipelineConfig cfg;
  CHECK(cfg.target_sample_rate_hz == 16000);
  CHECK(cfg.punctuation.boundaries_s ==
        std::array<double, 4>{0.12, 0.15, 0.21, 0.27});
  CHECK(cfg.selection.reject_fraction == 0.05);
  CHECK(cfg.selection.max_wer == 0.10);
  CHECK(cfg.anchor_min_len == 3);
  CHECK(cfg.min_gap_s == 0.05);
  // And they all appear in the serialized document.
  const std::string dump = config_to_json(cfg);
  for (const char* needle :
       {"0.12", "0.15", "0.21", "0.27", "0.05", "0.1", "16000"}) {
    CHECK(dump.find(needle) != std::string::npos);
  }
}

TEST_CASE("config round trip is lossless") {
  PipelineConfig cfg;
  cfg.target_sample_rate_hz = 22050;
  cfg.denoise.dd_alpha = 0.9;
  cfg.vad.hangover_s = 0.25;
  cfg.f0.f_max_hz = 500.0;
  cfg.min_gap_s = 0.04;
  cfg.selection.max_wer = 0.2;
  cfg.punctuation.markers = {"#1", "#2", "#3", "#4"};
  cfg.textnorm.abbreviation_map["tp"] = {"thành", "phố"};
  cfg.anchor_min_len = 5;
  cfg.trust_substituted_timestamps = false;

  const std::string once = config_to_json(cfg);
  const PipelineConfig reloaded = config_from_json(once);
  CHECK(config_to_json(reloaded) == once);
  CHECK(reloaded.target_sample_rate_hz == 22050);
  CHECK(reloaded.punctuation.markers[0] == "#1");
  CHECK(reloaded.textnorm.abbreviation_map.at("tp") ==
        std::vector<std::string>{"thành", "phố"});
  CHECK_FALSE(reloaded.trust_substituted_timestamps);
}

TEST_CASE("config rejects unknown keys") {
  CHECK_THROWS_WITH_AS(config_from_json("{\"target_sample_rate\": 8000}"),
                       "config: unknown key 'target_sample_rate'", Error);
  CHECK_THROWS_AS(config_from_json("{\"vad\": {\"hangover\": 0.1}}"), Error);
}

TEST_CASE("config rejects invalid values") {
  CHECK_THROWS_AS(config_from_json("{\"target_sample_rate_hz\": -1}"), Error);
  CHECK_THROWS_AS(config_from_json("not json"), Error);
  CHECK_THROWS_AS(
      config_from_json(
          "{\"punctuation\": {\"boundaries_s\": [0.2, 0.15, 0.21, 0.27]}}"),
      Error);
  CHECK_THROWS_AS(
      config_from_json(
          "{\"punctuation\": {\"markers\": [\"a\", \"a\", \"b\", \"c\"]}}"),
      Error);
  CHECK_THROWS_AS(config_from_json("{\"selection\": {\"reject_fraction\": 1.0}}"),
                  Error);
}

TEST_CASE("load_config reads a file and missing keys keep defaults") {
  testutil::TempDir dir("config");
  const auto path = dir.path() / "cfg.json";
  testutil::write_text(path, "{\"min_gap_s\": 0.08}\n");
  const PipelineConfig cfg = load_config(path);
  CHECK(cfg.min_gap_s == 0.08);
  CHECK(cfg.target_sample_rate_hz == 16000);  // untouched default
  CHECK_THROWS_AS(load_config(dir.path() / "absent.json"), Error);
}
