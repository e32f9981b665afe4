// src/metrics.cpp

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

#include "ttsprep/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace ttsprep {

namespace {

// Two-pass population standard deviation.
std::pair<double, double> mean_and_pop_std(const std::vector<double>& values) {
  const double n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= n;
  return {mean, std::sqrt(var)};
}

}  // namespace

double articulation(double p_signal, double avg_syl_dur_s) {
  if (avg_syl_dur_s <= 0.0) {
    throw Error("articulation: average syllable duration must be positive");
  }
  if (p_signal < 0.0) throw Error("articulation: negative signal power");
  return p_signal * avg_syl_dur_s;
}

double non_fluency(const std::vector<SilenceSpan>& silences,
                   double avg_syl_dur_s) {
  if (avg_syl_dur_s <= 0.0) {
    throw Error("non_fluency: average syllable duration must be positive");
  }
  double max_silence = 0.0;
  for (const SilenceSpan& s : silences) {
    max_silence = std::max(max_silence, s.duration_s());
  }
  return max_silence / avg_syl_dur_s;
}

std::pair<double, double> syllable_duration_stats(
    const std::vector<TimedToken>& tokens) {
  std::vector<double> durations;
  durations.reserve(tokens.size());
  for (const TimedToken& t : tokens) {
    if (t.aligned && !t.syllable.is_marker) {
      durations.push_back(t.duration_s());
    }
  }
  if (durations.empty()) {
    throw Error("syllable_duration_stats: no aligned tokens");
  }
  return mean_and_pop_std(durations);
}

double std_f0(const dsp::F0Track& track) {
  std::vector<double> voiced;
  for (std::size_t i = 0; i < track.values_hz.size(); ++i) {
    if (track.voicing[i]) voiced.push_back(track.values_hz[i]);
  }
  if (voiced.size() < 2) return 0.0;
  return mean_and_pop_std(voiced).second;
}

MetricReport build_report(const UtteranceRecord& record,
                          const dsp::AudioClip& clip,
                          const dsp::SegmentList& segments,
                          const dsp::F0Track& track) {
  try {
    if (!record.wer.has_value()) {
      throw Error("record has no alignment (wer missing)");
    }
    MetricReport report;
    report.wer = *record.wer;
    const auto [avg, std_dur] = syllable_duration_stats(record.timed_tokens);
    report.avg_syl_dur_s = avg;
    report.std_syl_dur_s = std_dur;
    report.p_signal = dsp::signal_power(clip, segments);
    report.articulation = articulation(report.p_signal, avg);
    for (const SilenceSpan& s : record.silences) {
      report.max_internal_silence_s =
          std::max(report.max_internal_silence_s, s.duration_s());
    }
    report.non_fluency = non_fluency(record.silences, avg);
    report.std_f0_hz = std_f0(track);
    return report;
  } catch (const Error& e) {
    throw Error("utterance " + record.id + ": " + e.what());
  }
}

}  // namespace ttsprep
