// src/resample.cpp

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

#include "ttsprep/resample.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "ttsprep/types.hpp"

namespace ttsprep::dsp {

namespace {

constexpr double kKaiserBeta = 8.6;
constexpr double kRolloff = 0.945;
constexpr int kZeroCrossings = 16;

double bessel_i0(double x) {
  // Power series; converges fast for the argument range a Kaiser window
  // ever sees.
  double sum = 1.0, term = 1.0;
  const double half_x_sq = 0.25 * x * x;
  for (int k = 1; k < 64; ++k) {
    term *= half_x_sq / (static_cast<double>(k) * k);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

// Polyphase decomposition of a Kaiser-windowed lowpass sinc. Phase p of L
// holds the kernel sampled at integer offsets minus p/L; each phase is
// normalized to unit DC gain so constants (and passband tones) keep their
// level.
struct PolyphaseFilter {
  long L = 1;          // upsampling factor
  long M = 1;          // downsampling factor
  int half_width = 0;  // input samples covered on each side
  int taps_per_phase = 0;
  std::vector<double> taps;  // L x taps_per_phase

  const double* phase(long p) const { return taps.data() + p * taps_per_phase; }
};

PolyphaseFilter design_filter(int source_hz, int target_hz) {
  PolyphaseFilter f;
  const long g = std::gcd(source_hz, target_hz);
  f.L = target_hz / g;
  f.M = source_hz / g;
  const double ratio = static_cast<double>(target_hz) / source_hz;
  const double cutoff = 0.5 * std::min(1.0, ratio) * kRolloff;
  f.half_width =
      static_cast<int>(std::ceil(kZeroCrossings / (2.0 * cutoff)));
  f.taps_per_phase = 2 * f.half_width + 1;
  f.taps.resize(static_cast<std::size_t>(f.L) * f.taps_per_phase);

  const double i0_beta = bessel_i0(kKaiserBeta);
  for (long p = 0; p < f.L; ++p) {
    double* h = f.taps.data() + p * f.taps_per_phase;
    const double frac = static_cast<double>(p) / static_cast<double>(f.L);
    double sum = 0.0;
    for (int j = 0; j < f.taps_per_phase; ++j) {
      const double t = (j - f.half_width) - frac;
      const double u = t / f.half_width;
      double w = 0.0;
      if (std::abs(u) <= 1.0) {
        w = bessel_i0(kKaiserBeta * std::sqrt(1.0 - u * u)) / i0_beta;
      }
      const double arg = 2.0 * cutoff * t;
      const double sinc =
          arg == 0.0 ? 1.0
                     : std::sin(std::numbers::pi * arg) /
                           (std::numbers::pi * arg);
      h[j] = 2.0 * cutoff * sinc * w;
      sum += h[j];
    }
    for (int j = 0; j < f.taps_per_phase; ++j) h[j] /= sum;
  }
  return f;
}

inline double output_sample(const std::vector<double>& x,
                            const PolyphaseFilter& f, long n) {
  const long num = n * f.M;
  const long base = num / f.L;
  const long phase = num % f.L;
  const double* h = f.phase(phase);
  const long in_n = static_cast<long>(x.size());
  double acc = 0.0;
  for (int j = 0; j < f.taps_per_phase; ++j) {
    const long idx = base + j - f.half_width;
    if (idx >= 0 && idx < in_n) acc += x[idx] * h[j];
  }
  return acc;
}

long output_length(std::size_t in_n, const PolyphaseFilter& f) {
  return (2 * static_cast<long>(in_n) * f.L + f.M) / (2 * f.M);
}

void check_args(const AudioClip& clip, int target_hz) {
  if (clip.sample_rate_hz <= 0) throw Error("resample: clip has no rate");
  if (target_hz <= 0) throw Error("resample: target rate must be positive");
}

}  // namespace

AudioClip resample(const AudioClip& clip, int target_hz) {
  check_args(clip, target_hz);
  if (target_hz == clip.sample_rate_hz) return clip;

  const PolyphaseFilter f = design_filter(clip.sample_rate_hz, target_hz);
  AudioClip out;
  out.sample_rate_hz = target_hz;
  const long out_n = output_length(clip.samples.size(), f);
  out.samples.resize(out_n);
#pragma omp parallel for schedule(static)
  for (long n = 0; n < out_n; ++n) {
    out.samples[n] = output_sample(clip.samples, f, n);
  }
  return out;
}

namespace serial {

AudioClip resample(const AudioClip& clip, int target_hz) {
  check_args(clip, target_hz);
  if (target_hz == clip.sample_rate_hz) return clip;

  const PolyphaseFilter f = design_filter(clip.sample_rate_hz, target_hz);
  AudioClip out;
  out.sample_rate_hz = target_hz;
  const long out_n = output_length(clip.samples.size(), f);
  out.samples.resize(out_n);
  for (long n = 0; n < out_n; ++n) {
    out.samples[n] = output_sample(clip.samples, f, n);
  }
  return out;
}

}  // namespace serial

}  // namespace ttsprep::dsp
