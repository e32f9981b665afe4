// include/ttsprep/pipeline.hpp

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

#ifndef TTSPREP_PIPELINE_HPP_
#define TTSPREP_PIPELINE_HPP_

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ttsprep/align.hpp"
#include "ttsprep/config.hpp"
#include "ttsprep/types.hpp"
#include "ttsprep/vad.hpp"

namespace ttsprep {

/// Per-utterance pipeline state beyond the corpus record itself.
struct PipelineItem {
  UtteranceRecord record;
  dsp::SegmentList segments;
  std::string denoised_rel_path;  // under the output dir; empty until set
};

/// Everything a stage needs: the records, per-utterance extras, the
/// config, and which stages have completed. Persisted as state.json in
/// the output directory so stages can run independently and resume.
struct PipelineState {
  PipelineConfig config;
  std::vector<PipelineItem> items;
  std::set<std::string> completed_stages;

  PipelineItem* find(const std::string& id);
};

PipelineState make_state(const std::vector<UtteranceRecord>& records,
                         const PipelineConfig& config);
void save_state(const PipelineState& state, const std::filesystem::path& path);
PipelineState load_state(const std::filesystem::path& path);

/// Stage names accepted by run_stage, in pipeline order.
const std::vector<std::string>& stage_names();

struct StageOptions {
  std::filesystem::path out_dir;
  std::filesystem::path ctm_path;  // align only
  int jobs = 0;                    // 0 = all hardware threads
};

/// Runs one named stage in place, checking its prerequisites first; a
/// missing prerequisite throws an Error naming the stage to run. Failures
/// on individual utterances reject the utterance with a diagnostic and
/// continue. Utterances are processed in parallel and merged by id, so
/// outputs do not depend on the job count.
void run_stage(PipelineState& state, const std::string& stage,
               const StageOptions& opts);

struct PipelineOptions {
  std::filesystem::path manifest_path;
  std::filesystem::path ctm_path;
  std::filesystem::path config_path;  // empty = defaults
  std::filesystem::path out_dir;
  int jobs = 0;
  bool write_denoised = false;
};

/// Whole-pipeline entry point: denoise, normalize, vad, align, metrics,
/// select, punctuate, report, writing all artifacts under out_dir
/// (state.json, metrics.csv, summary.json, manifest_kept.tsv and,
/// optionally, denoised/*.wav). Implemented as the composition of
/// run_stage calls, so it produces byte-identical outputs to running the
/// subcommands one by one. Returns the number of kept utterances.
int run_pipeline(const PipelineOptions& opts);

/// Report artifacts, written by the metrics/select/punctuate stages and
/// by run_pipeline.
void write_metrics_csv(const PipelineState& state,
                       const std::filesystem::path& path);
void write_summary_json(const PipelineState& state,
                        const std::filesystem::path& path);

}  // namespace ttsprep

#endif  // TTSPREP_PIPELINE_HPP_
