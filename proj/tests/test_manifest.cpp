// tests/test_manifest.cpp

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

#include <random>

#include "testutil.hpp"
#include "ttsprep/manifest.hpp"

using namespace ttsprep;

TEST_CASE("load_manifest on an empty file yields no records") {
  testutil::TempDir dir("manifest");
  const auto path = dir.path() / "m.tsv";
  testutil::write_text(path, "");
  CHECK(load_manifest(path).empty());
  testutil::write_text(path, "\n\n");
  CHECK(load_manifest(path).empty());
}

TEST_CASE("load_manifest passes fields through") {
  testutil::TempDir dir("manifest");
  const auto path = dir.path() / "m.tsv";
  testutil::write_text(path, "u1\ta.wav\txin chào\n");
  const auto records = load_manifest(path);
  REQUIRE(records.size() == 1);
  CHECK(records[0].id == "u1");
  CHECK(records[0].audio_path == "a.wav");
  CHECK(records[0].raw_text == "xin chào");
  CHECK(records[0].verdict.kept());
  CHECK(records[0].verdict.reasons.empty());
}

TEST_CASE("load_manifest rejects duplicate ids naming the id") {
  testutil::TempDir dir("manifest");
  const auto path = dir.path() / "m.tsv";
  testutil::write_text(path, "u1\ta.wav\tmột\nu1\tb.wav\thai\n");
  CHECK_THROWS_WITH_AS(load_manifest(path), "duplicate utterance id: u1",
                       Error);
}

TEST_CASE("load_manifest reports the line number of a malformed line") {
  testutil::TempDir dir("manifest");
  const auto path = dir.path() / "m.tsv";
  testutil::write_text(path, "u1\ta.wav\tmột\nbroken line\n");
  try {
    load_manifest(path);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("save_manifest writes kept records sorted by id") {
  testutil::TempDir dir("manifest");
  const auto path = dir.path() / "out.tsv";

  SUBCASE("empty list gives an empty file") {
    save_manifest({}, path, false);
    CHECK(testutil::read_bytes(path).empty());
  }

  SUBCASE("kept_only filters rejected records") {
    UtteranceRecord kept;
    kept.id = "b";
    kept.audio_path = "b.wav";
    kept.raw_text = "hai";
    UtteranceRecord rejected;
    rejected.id = "a";
    rejected.audio_path = "a.wav";
    rejected.raw_text = "một";
    rejected.verdict.reasons.insert(RejectReason::kWerFilter);
    save_manifest({kept, rejected}, path, true);
    CHECK(testutil::read_bytes(path) == "b\tb.wav\thai\n");
    save_manifest({kept, rejected}, path, false);
    CHECK(testutil::read_bytes(path) == "a\ta.wav\tmột\nb\tb.wav\thai\n");
  }
}

TEST_CASE("manifest round trip preserves id, path and text") {
  testutil::TempDir dir("manifest");
  const auto path = dir.path() / "rt.tsv";
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> len(0, 12);
  std::uniform_int_distribution<int> letter('a', 'z');

  std::vector<UtteranceRecord> records;
  for (int i = 0; i < 50; ++i) {
    UtteranceRecord rec;
    rec.id = "u" + std::to_string(i);
    rec.audio_path = "dir/" + std::to_string(rng()) + ".wav";
    std::string text;
    const int words = len(rng);
    for (int w = 0; w < words; ++w) {
      if (w) text += ' ';
      for (int c = 0, n = 1 + len(rng) % 5; c < n; ++c) {
        text += static_cast<char>(letter(rng));
      }
    }
    rec.raw_text = text;
    records.push_back(rec);
  }

  save_manifest(records, path, false);
  const auto reloaded = load_manifest(path);
  REQUIRE(reloaded.size() == records.size());

  std::sort(records.begin(), records.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(reloaded[i].id == records[i].id);
    CHECK(reloaded[i].audio_path == records[i].audio_path);
    CHECK(reloaded[i].raw_text == records[i].raw_text);
  }
}
