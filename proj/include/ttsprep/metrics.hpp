// include/ttsprep/metrics.hpp

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

#ifndef TTSPREP_METRICS_HPP_
#define TTSPREP_METRICS_HPP_

#include <utility>
#include <vector>

#include "ttsprep/pitch.hpp"
#include "ttsprep/types.hpp"
#include "ttsprep/vad.hpp"
#include "ttsprep/wav.hpp"

namespace ttsprep {

/// Signal power times average syllable duration. High values flag loud,
/// slow, hyper-articulated speech. avg_syl_dur_s must be positive.
double articulation(double p_signal, double avg_syl_dur_s);

/// Longest internal pause normalized by average syllable duration;
/// 0 when there is no internal silence. avg_syl_dur_s must be positive.
double non_fluency(const std::vector<SilenceSpan>& silences,
                   double avg_syl_dur_s);

/// Mean and population standard deviation of the durations of aligned,
/// non-marker tokens. Throws Error when no token qualifies.
std::pair<double, double> syllable_duration_stats(
    const std::vector<TimedToken>& tokens);

/// Population standard deviation of F0 over voiced frames; 0 with fewer
/// than two voiced frames.
double std_f0(const dsp::F0Track& track);

/// Computes all five selection metrics for one record. The record must
/// already carry alignment results (wer, timed_tokens, silences). Errors
/// from sub-computations are rethrown tagged with the utterance id.
MetricReport build_report(const UtteranceRecord& record,
                          const dsp::AudioClip& clip,
                          const dsp::SegmentList& segments,
                          const dsp::F0Track& track);

}  // namespace ttsprep

#endif  // TTSPREP_METRICS_HPP_
