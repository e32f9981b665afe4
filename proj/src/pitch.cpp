// src/pitch.cpp

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

#include "ttsprep/pitch.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ttsprep/types.hpp"

namespace ttsprep::dsp {

namespace {

constexpr double kPeakSlack = 0.98;  // octave guard, see header

struct FrameResult {
  double f0 = 0.0;
  bool voiced = false;
};

bool center_in_segments(double t, const SegmentList& segments) {
  for (const Segment& seg : segments.segments) {
    if (t >= seg.start_s && t < seg.end_s) return true;
    if (seg.start_s > t) break;
  }
  return false;
}

FrameResult analyze_frame(const std::vector<double>& x, long start,
                          long window, long lag_min, long lag_max, double fs,
                          const F0Params& params) {
  FrameResult result;
  const long span = window + lag_max;
  if (start + span > static_cast<long>(x.size())) return result;

  // Mean removal over the analysis span.
  std::vector<double> buf(span);
  double mean = 0.0;
  for (long i = 0; i < span; ++i) mean += x[start + i];
  mean /= static_cast<double>(span);
  for (long i = 0; i < span; ++i) buf[i] = x[start + i] - mean;

  double energy0 = 0.0;
  for (long i = 0; i < window; ++i) energy0 += buf[i] * buf[i];
  if (energy0 < 1e-10) return result;

  const long n_lags = lag_max - lag_min + 1;
  std::vector<double> corr(n_lags, 0.0);
  for (long lag = lag_min; lag <= lag_max; ++lag) {
    double num = 0.0, energy_lag = 0.0;
    for (long i = 0; i < window; ++i) {
      num += buf[i] * buf[i + lag];
      energy_lag += buf[i + lag] * buf[i + lag];
    }
    const double den = std::sqrt(energy0 * energy_lag);
    corr[lag - lag_min] = den < 1e-12 ? 0.0 : num / den;
  }

  const double peak = *std::max_element(corr.begin(), corr.end());
  if (peak < params.voicing_threshold) return result;

  // Smallest local maximum within slack of the global peak; a pure
  // periodic signal peaks equally at every multiple of its period.
  long best = -1;
  for (long k = 0; k < n_lags; ++k) {
    const bool left_ok = k == 0 || corr[k] >= corr[k - 1];
    const bool right_ok = k == n_lags - 1 || corr[k] >= corr[k + 1];
    if (left_ok && right_ok && corr[k] >= kPeakSlack * peak) {
      best = k;
      break;
    }
  }
  if (best < 0) return result;

  double lag = static_cast<double>(best + lag_min);
  if (best > 0 && best < n_lags - 1) {
    const double denom = corr[best - 1] - 2.0 * corr[best] + corr[best + 1];
    if (std::abs(denom) > 1e-12) {
      const double delta =
          std::clamp(0.5 * (corr[best - 1] - corr[best + 1]) / denom, -0.5, 0.5);
      lag += delta;
    }
  }

  result.voiced = true;
  result.f0 = std::clamp(fs / lag, params.f_min_hz, params.f_max_hz);
  return result;
}

F0Track track_impl(const AudioClip& clip, const SegmentList& segments,
                   const F0Params& params, bool parallel) {
  if (clip.samples.empty()) throw Error("track_f0: empty clip");
  const double fs = clip.sample_rate_hz;
  const long window = std::max(2L, std::lround(params.window_s * fs));
  const long hop = std::max(1L, std::lround(params.hop_s * fs));
  const long lag_min = std::max(2L, std::lround(fs / params.f_max_hz));
  const long lag_max = std::max(lag_min + 2, std::lround(fs / params.f_min_hz));
  const long n = static_cast<long>(clip.samples.size());
  const long count = n >= window ? (n - window) / hop + 1 : 0;

  // Frames land in plain structs first; vector<bool> packs bits and must
  // not be written from concurrent threads.
  std::vector<FrameResult> results(count);
  auto run_frame = [&](long m) {
    const long start = m * hop;
    const double center = (start + 0.5 * window) / fs;
    if (!center_in_segments(center, segments)) return;
    results[m] = analyze_frame(clip.samples, start, window, lag_min, lag_max,
                               fs, params);
  };

  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long m = 0; m < count; ++m) run_frame(m);
  } else {
    for (long m = 0; m < count; ++m) run_frame(m);
  }

  F0Track track;
  track.hop_s = hop / fs;
  track.values_hz.assign(count, 0.0);
  track.voicing.assign(count, false);
  for (long m = 0; m < count; ++m) {
    track.values_hz[m] = results[m].voiced ? results[m].f0 : 0.0;
    track.voicing[m] = results[m].voiced;
  }
  return track;
}

}  // namespace

F0Track track_f0(const AudioClip& clip, const SegmentList& segments,
                 const F0Params& params) {
  return track_impl(clip, segments, params, true);
}

namespace serial {
F0Track track_f0(const AudioClip& clip, const SegmentList& segments,
                 const F0Params& params) {
  return track_impl(clip, segments, params, false);
}
}  // namespace serial

}  // namespace ttsprep::dsp
