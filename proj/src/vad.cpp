// src/vad.cpp

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

#include "ttsprep/vad.hpp"

#include <algorithm>
#include <cmath>

#include "ttsprep/types.hpp"

namespace ttsprep::dsp {

namespace {

// -120 dB floor keeps log energy finite on digital silence.
constexpr double kEnergyEps = 1e-12;

struct FrameGrid {
  long frame_len = 0;
  long hop = 0;
  long count = 0;
};

FrameGrid make_grid(const AudioClip& clip, double frame_s, double hop_s) {
  FrameGrid g;
  g.frame_len = std::max(1L, std::lround(frame_s * clip.sample_rate_hz));
  g.hop = std::max(1L, std::lround(hop_s * clip.sample_rate_hz));
  const long n = static_cast<long>(clip.samples.size());
  g.count = n >= g.frame_len ? (n - g.frame_len) / g.hop + 1 : 0;
  return g;
}

inline double frame_energy(const std::vector<double>& x, long start,
                           long frame_len) {
  double acc = 0.0;
  for (long i = start; i < start + frame_len; ++i) acc += x[i] * x[i];
  return acc / static_cast<double>(frame_len);
}

std::vector<double> frame_energies_impl(const AudioClip& clip, double frame_s,
                                        double hop_s, bool parallel) {
  const FrameGrid g = make_grid(clip, frame_s, hop_s);
  std::vector<double> energies(g.count);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long m = 0; m < g.count; ++m) {
      energies[m] = frame_energy(clip.samples, m * g.hop, g.frame_len);
    }
  } else {
    for (long m = 0; m < g.count; ++m) {
      energies[m] = frame_energy(clip.samples, m * g.hop, g.frame_len);
    }
  }
  return energies;
}

}  // namespace

std::vector<double> frame_energies(const AudioClip& clip, double frame_s,
                                   double hop_s) {
  return frame_energies_impl(clip, frame_s, hop_s, true);
}

namespace serial {
std::vector<double> frame_energies(const AudioClip& clip, double frame_s,
                                   double hop_s) {
  return frame_energies_impl(clip, frame_s, hop_s, false);
}
}  // namespace serial

SegmentList detect_speech(const AudioClip& clip, const VadParams& params) {
  if (clip.samples.empty()) throw Error("detect_speech: empty clip");
  const FrameGrid g = make_grid(clip, params.frame_s, params.hop_s);
  SegmentList out;
  if (g.count == 0) return out;

  std::vector<double> energy_db(g.count);
  {
    std::vector<double> energies =
        frame_energies(clip, params.frame_s, params.hop_s);
    for (long m = 0; m < g.count; ++m) {
      energy_db[m] = 10.0 * std::log10(energies[m] + kEnergyEps);
    }
  }

  // Adaptive floor: a low quantile of the frame energies. Rank statistic
  // index floor(q * (n - 1)).
  std::vector<double> sorted = energy_db;
  std::sort(sorted.begin(), sorted.end());
  const auto rank = static_cast<std::size_t>(
      params.noise_percentile * static_cast<double>(g.count - 1));
  const double threshold = sorted[rank] + params.threshold_db;

  std::vector<bool> active(g.count);
  for (long m = 0; m < g.count; ++m) active[m] = energy_db[m] > threshold;

  // Frame runs -> segments.
  struct Run {
    long first, last;
  };
  std::vector<Run> runs;
  for (long m = 0; m < g.count; ++m) {
    if (!active[m]) continue;
    if (!runs.empty() && runs.back().last == m - 1) {
      runs.back().last = m;
    } else {
      runs.push_back({m, m});
    }
  }

  // Hangover: bridge gaps shorter than hangover_s, then drop runs shorter
  // than min_speech_s.
  const double fs = clip.sample_rate_hz;
  const double hop_s_eff = g.hop / fs;
  const double frame_s_eff = g.frame_len / fs;
  std::vector<Run> merged;
  for (const Run& r : runs) {
    if (!merged.empty()) {
      const double gap = (r.first - merged.back().last - 1) * hop_s_eff;
      if (gap < params.hangover_s) {
        merged.back().last = r.last;
        continue;
      }
    }
    merged.push_back(r);
  }
  const double duration = clip.duration_s();
  for (const Run& r : merged) {
    Segment seg;
    seg.start_s = r.first * hop_s_eff;
    seg.end_s = std::min(duration, r.last * hop_s_eff + frame_s_eff);
    if (seg.end_s - seg.start_s >= params.min_speech_s) {
      out.segments.push_back(seg);
    }
  }
  return out;
}

double signal_power(const AudioClip& clip, const SegmentList& segments) {
  const long n = static_cast<long>(clip.samples.size());
  double acc = 0.0;
  long count = 0;
  for (const Segment& seg : segments.segments) {
    const long first =
        std::clamp(std::lround(seg.start_s * clip.sample_rate_hz), 0L, n);
    const long last =
        std::clamp(std::lround(seg.end_s * clip.sample_rate_hz), first, n);
    for (long i = first; i < last; ++i) {
      acc += clip.samples[i] * clip.samples[i];
    }
    count += last - first;
  }
  return count == 0 ? 0.0 : acc / static_cast<double>(count);
}

}  // namespace ttsprep::dsp
