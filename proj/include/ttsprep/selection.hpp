// include/ttsprep/selection.hpp

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

#ifndef TTSPREP_SELECTION_HPP_
#define TTSPREP_SELECTION_HPP_

#include <map>
#include <string>
#include <vector>

#include "ttsprep/types.hpp"

namespace ttsprep {

struct SelectionConfig {
  // Records with wer strictly above this are rejected. The boundary
  // wer == max_wer is kept.
  double max_wer = 0.10;
  // Per metric, the floor(reject_fraction * N_kept) worst records go.
  double reject_fraction = 0.05;
};

/// Adds the wer_filter reason to every record whose wer exceeds
/// cfg.max_wer. Records must carry metrics; a missing report throws an
/// Error naming the id. Records already rejected for processing failures
/// are left alone.
void apply_wer_filter(std::vector<UtteranceRecord>& records,
                      const SelectionConfig& cfg);

/// For each of articulation, std_syl_dur, non_fluency and std_f0
/// independently: ranks the records still kept after the WER filter and
/// rejects the floor(reject_fraction * N_kept) largest values. All four
/// metrics rank the same population, so one record can accumulate several
/// reasons. Ties at the cut are broken by id, higher id rejected first.
void apply_percentile_rejection(std::vector<UtteranceRecord>& records,
                                const SelectionConfig& cfg);

struct SelectionSummary {
  int total = 0;
  int kept = 0;
  int rejected = 0;
  std::map<std::string, int> by_reason;
};

/// Counts verdicts. A record with several reasons is counted once in
/// kept/rejected and once per reason.
SelectionSummary selection_summary(const std::vector<UtteranceRecord>& records);

}  // namespace ttsprep

#endif  // TTSPREP_SELECTION_HPP_
