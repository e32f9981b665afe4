// tools/bench_dsp.cpp

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

// Times the OpenMP kernels against their serial references on synthetic
// audio and prints one row per kernel. The parallel kernels are maps over
// independent outputs, so the outputs must also compare bit-identical;
// this binary checks that too.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "ttsprep/pitch.hpp"
#include "ttsprep/resample.hpp"
#include "ttsprep/vad.hpp"
#include "ttsprep/wav.hpp"

namespace {

using ttsprep::dsp::AudioClip;

AudioClip make_test_clip(int rate_hz, double seconds) {
  AudioClip clip;
  clip.sample_rate_hz = rate_hz;
  const auto n = static_cast<std::size_t>(rate_hz * seconds);
  clip.samples.resize(n);
  std::mt19937 rng(1234);
  std::normal_distribution<double> noise(0.0, 0.01);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / rate_hz;
    clip.samples[i] =
        0.4 * std::sin(2.0 * std::numbers::pi * 220.0 * t) + noise(rng);
  }
  return clip;
}

template <typename F>
double time_best_of(int runs, F&& f) {
  double best = 1e100;
  for (int r = 0; r < runs; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

void report(const char* name, double serial_s, double parallel_s,
            bool identical) {
  std::printf("%-18s serial %8.3f ms   omp %8.3f ms   speedup %5.2fx   %s\n",
              name, serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s,
              identical ? "outputs identical" : "OUTPUTS DIFFER");
}

}  // namespace

int main() {
  namespace dsp = ttsprep::dsp;
  std::printf("threads: %d\n", omp_get_max_threads());

  const AudioClip clip48k = make_test_clip(48000, 60.0);

  AudioClip r_par, r_ser;
  const double t_res_ser =
      time_best_of(3, [&] { r_ser = dsp::serial::resample(clip48k, 16000); });
  const double t_res_par =
      time_best_of(3, [&] { r_par = dsp::resample(clip48k, 16000); });
  report("resample 48k->16k", t_res_ser, t_res_par,
         r_ser.samples == r_par.samples);

  const AudioClip clip16k = r_par;

  std::vector<double> e_par, e_ser;
  const double t_en_ser = time_best_of(
      3, [&] { e_ser = dsp::serial::frame_energies(clip16k, 0.025, 0.010); });
  const double t_en_par = time_best_of(
      3, [&] { e_par = dsp::frame_energies(clip16k, 0.025, 0.010); });
  report("frame_energies", t_en_ser, t_en_par, e_ser == e_par);

  dsp::SegmentList all;
  all.segments.push_back({0.0, clip16k.duration_s()});
  dsp::F0Track f_par, f_ser;
  const double t_f0_ser =
      time_best_of(3, [&] { f_ser = dsp::serial::track_f0(clip16k, all); });
  const double t_f0_par =
      time_best_of(3, [&] { f_par = dsp::track_f0(clip16k, all); });
  report("track_f0", t_f0_ser, t_f0_par,
         f_ser.values_hz == f_par.values_hz && f_ser.voicing == f_par.voicing);

  return 0;
}
