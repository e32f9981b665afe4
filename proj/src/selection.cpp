// src/selection.cpp

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

#include "ttsprep/selection.hpp"

#include <algorithm>
#include <cmath>

namespace ttsprep {

namespace {

double metric_value(const MetricReport& m, RejectReason reason) {
  switch (reason) {
    case RejectReason::kArticulation: return m.articulation;
    case RejectReason::kStdSylDur: return m.std_syl_dur_s;
    case RejectReason::kNonFluency: return m.non_fluency;
    case RejectReason::kStdF0: return m.std_f0_hz;
    default: return 0.0;
  }
}

}  // namespace

void apply_wer_filter(std::vector<UtteranceRecord>& records,
                      const SelectionConfig& cfg) {
  for (UtteranceRecord& rec : records) {
    if (rec.verdict.reasons.count(RejectReason::kProcessingFailure)) continue;
    if (!rec.metrics.has_value()) {
      throw Error("apply_wer_filter: record " + rec.id + " has no metrics");
    }
    // Strictly above the bound; wer == max_wer is kept.
    if (rec.metrics->wer > cfg.max_wer) {
      rec.verdict.reasons.insert(RejectReason::kWerFilter);
    }
  }
}

void apply_percentile_rejection(std::vector<UtteranceRecord>& records,
                                const SelectionConfig& cfg) {
  if (cfg.reject_fraction < 0.0 || cfg.reject_fraction >= 1.0) {
    throw Error("apply_percentile_rejection: reject_fraction out of [0, 1)");
  }

  // Every metric ranks the same population: whatever survived the WER
  // filter (and earlier processing), regardless of what the other three
  // metrics decide. A record can therefore collect several reasons.
  std::vector<UtteranceRecord*> pool;
  for (UtteranceRecord& rec : records) {
    if (rec.verdict.kept()) pool.push_back(&rec);
  }
  const auto reject_count = static_cast<std::size_t>(
      std::floor(cfg.reject_fraction * static_cast<double>(pool.size())));
  if (reject_count == 0) return;

  for (RejectReason reason :
       {RejectReason::kArticulation, RejectReason::kStdSylDur,
        RejectReason::kNonFluency, RejectReason::kStdF0}) {
    std::vector<UtteranceRecord*> ranked = pool;
    // Worst first: largest value, then higher id, so ties at the cut
    // reject the higher id.
    std::sort(ranked.begin(), ranked.end(),
              [reason](const UtteranceRecord* a, const UtteranceRecord* b) {
                const double va = metric_value(*a->metrics, reason);
                const double vb = metric_value(*b->metrics, reason);
                if (va != vb) return va > vb;
                return a->id > b->id;
              });
    for (std::size_t i = 0; i < reject_count; ++i) {
      ranked[i]->verdict.reasons.insert(reason);
    }
  }
}

SelectionSummary selection_summary(const std::vector<UtteranceRecord>& records) {
  SelectionSummary summary;
  summary.total = static_cast<int>(records.size());
  for (const UtteranceRecord& rec : records) {
    if (rec.verdict.kept()) {
      ++summary.kept;
    } else {
      ++summary.rejected;
    }
    for (RejectReason reason : rec.verdict.reasons) {
      ++summary.by_reason[reject_reason_name(reason)];
    }
  }
  return summary;
}

}  // namespace ttsprep
