// tests/test_pipeline.cpp

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

#include <fstream>

#include "testutil.hpp"
#include "ttsprep/manifest.hpp"
#include "ttsprep/pipeline.hpp"

using namespace ttsprep;

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("run_pipeline on the synthetic fixture") {
  testutil::TempDir dir("pipe");
  const auto fx = testutil::build_fixture(
      dir.path(), testutil::default_fixture_utterances());
  const auto out_dir = dir.path() / "out";

  PipelineOptions opts;
  opts.manifest_path = fx.manifest;
  opts.ctm_path = fx.ctm;
  opts.out_dir = out_dir;
  opts.jobs = 2;
  const int kept = run_pipeline(opts);
  CHECK(kept == 3);

  // Markers land exactly where the fixture put >= 0.12 s pauses.
  const auto lines = read_lines(out_dir / "manifest_kept.tsv");
  REQUIRE(lines.size() == 3);
  CHECK(lines[0].find("xin chào <p4> các bạn") != std::string::npos);
  CHECK(lines[1].find("hôm <p1> nay trời <p3> đẹp") != std::string::npos);
  CHECK(lines[2].find("một <p2> hai ba") != std::string::npos);

  // All artifacts exist; denoised audio was not requested.
  CHECK(std::filesystem::exists(out_dir / "metrics.csv"));
  CHECK(std::filesystem::exists(out_dir / "summary.json"));
  CHECK(std::filesystem::exists(out_dir / "state.json"));
  CHECK_FALSE(std::filesystem::exists(out_dir / "denoised"));

  const auto csv = read_lines(out_dir / "metrics.csv");
  REQUIRE(csv.size() == 4);  // header + 3 rows
  CHECK(csv[0] ==
        "id,wer,articulation,std_syl_dur,non_fluency,std_f0,avg_syl_dur,"
        "p_signal,max_internal_silence");
  // The fixture aligns perfectly, so wer is 0 for every utterance.
  for (std::size_t i = 1; i < csv.size(); ++i) {
    CHECK(csv[i].find(",0,") != std::string::npos);
  }

  // The state reloads and reports every stage complete.
  const PipelineState state = load_state(out_dir / "state.json");
  CHECK(state.completed_stages.count("punctuate") == 1);
  CHECK(state.items.size() == 3);
}

TEST_CASE("run_pipeline with --write-denoised keeps the audio") {
  testutil::TempDir dir("pipe_keep");
  const auto fx = testutil::build_fixture(
      dir.path(), {{"solo", {"xin", "chào"}, {0.20}, 0.25, 0.5}});
  PipelineOptions opts;
  opts.manifest_path = fx.manifest;
  opts.ctm_path = fx.ctm;
  opts.out_dir = dir.path() / "out";
  opts.write_denoised = true;
  run_pipeline(opts);
  CHECK(std::filesystem::exists(opts.out_dir / "denoised" / "solo.wav"));
}

TEST_CASE("run_pipeline survives a missing CTM entry") {
  testutil::TempDir dir("pipe_missing");
  const auto fx =
      testutil::build_fixture(dir.path(), testutil::default_fixture_utterances(),
                              /*skip_last_in_ctm=*/true);
  PipelineOptions opts;
  opts.manifest_path = fx.manifest;
  opts.ctm_path = fx.ctm;
  opts.out_dir = dir.path() / "out";
  const int kept = run_pipeline(opts);
  CHECK(kept == 2);

  PipelineState state = load_state(opts.out_dir / "state.json");
  const PipelineItem* bad = state.find("utt3");
  REQUIRE(bad != nullptr);
  CHECK_FALSE(bad->record.verdict.kept());
  CHECK(bad->record.verdict.reasons.count(RejectReason::kProcessingFailure) ==
        1);
  CHECK(bad->record.verdict.diagnostic.find("CTM") != std::string::npos);
  // The healthy utterances still made it through.
  CHECK(read_lines(opts.out_dir / "manifest_kept.tsv").size() == 2);
}

TEST_CASE("run_pipeline with an empty manifest succeeds with empty outputs") {
  testutil::TempDir dir("pipe_empty");
  testutil::write_text(dir.path() / "empty.tsv", "");
  testutil::write_text(dir.path() / "empty.ctm", "");
  PipelineOptions opts;
  opts.manifest_path = dir.path() / "empty.tsv";
  opts.ctm_path = dir.path() / "empty.ctm";
  opts.out_dir = dir.path() / "out";
  CHECK(run_pipeline(opts) == 0);
  CHECK(read_lines(opts.out_dir / "manifest_kept.tsv").empty());
  CHECK(read_lines(opts.out_dir / "metrics.csv").size() == 1);  // header
}

TEST_CASE("stages enforce their prerequisites by name") {
  testutil::TempDir dir("stage_order");
  const auto fx = testutil::build_fixture(
      dir.path(), {{"u1", {"một", "hai"}, {0.20}, 0.25, 0.5}});
  PipelineState state = make_state(load_manifest(fx.manifest), {});
  StageOptions opts;
  opts.out_dir = dir.path() / "out";
  opts.ctm_path = fx.ctm;

  try {
    run_stage(state, "metrics", opts);
    FAIL("expected error");
  } catch (const Error& e) {
    const std::string what = e.what();
    CHECK(what.find("metrics") != std::string::npos);
    CHECK(what.find("denoise") != std::string::npos);
  }

  CHECK_THROWS_AS(run_stage(state, "vad", opts), Error);
  CHECK_THROWS_AS(run_stage(state, "no_such_stage", opts), Error);

  // The declared order satisfies every prerequisite.
  for (const std::string& stage : stage_names()) {
    CHECK_NOTHROW(run_stage(state, stage, opts));
  }
  CHECK(state.items[0].record.metrics.has_value());
}

TEST_CASE("staged runs equal the one-shot pipeline byte for byte") {
  testutil::TempDir dir("stage_vs_run");
  const auto fx = testutil::build_fixture(
      dir.path(), testutil::default_fixture_utterances());

  PipelineOptions opts;
  opts.manifest_path = fx.manifest;
  opts.ctm_path = fx.ctm;
  opts.out_dir = dir.path() / "oneshot";
  opts.jobs = 2;
  opts.write_denoised = true;
  run_pipeline(opts);

  const auto staged_dir = dir.path() / "staged";
  PipelineState state = make_state(load_manifest(fx.manifest), {});
  StageOptions stage_opts;
  stage_opts.out_dir = staged_dir;
  stage_opts.ctm_path = fx.ctm;
  stage_opts.jobs = 1;
  for (const std::string& stage : stage_names()) {
    run_stage(state, stage, stage_opts);
  }
  save_state(state, staged_dir / "state.json");

  for (const char* name :
       {"metrics.csv", "summary.json", "manifest_kept.tsv", "state.json"}) {
    CHECK(testutil::read_bytes(opts.out_dir / name) ==
          testutil::read_bytes(staged_dir / name));
  }
  CHECK(testutil::read_bytes(opts.out_dir / "denoised" / "utt1.wav") ==
        testutil::read_bytes(staged_dir / "denoised" / "utt1.wav"));
}

TEST_CASE("pipeline state round trips through disk") {
  testutil::TempDir dir("state_rt");
  const auto fx = testutil::build_fixture(
      dir.path(), {{"u1", {"một", "hai"}, {0.20}, 0.25, 0.5}});
  PipelineState state = make_state(load_manifest(fx.manifest), {});
  StageOptions opts;
  opts.out_dir = dir.path() / "out";
  opts.ctm_path = fx.ctm;
  for (const std::string& stage : stage_names()) run_stage(state, stage, opts);

  const auto path = dir.path() / "out" / "state.json";
  save_state(state, path);
  const PipelineState reloaded = load_state(path);
  CHECK(reloaded.completed_stages == state.completed_stages);
  REQUIRE(reloaded.items.size() == state.items.size());
  const auto& a = state.items[0].record;
  const auto& b = reloaded.items[0].record;
  CHECK(a.id == b.id);
  CHECK(a.norm_tokens == b.norm_tokens);
  CHECK(a.wer == b.wer);
  CHECK(a.metrics->articulation == b.metrics->articulation);
  CHECK(a.punct_tokens == b.punct_tokens);
  CHECK(state.items[0].segments.segments.size() ==
        reloaded.items[0].segments.segments.size());

  // A second save of the reloaded state is byte-identical.
  const auto again = dir.path() / "again.json";
  save_state(reloaded, again);
  CHECK(testutil::read_bytes(path) == testutil::read_bytes(again));
}
