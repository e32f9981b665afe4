// include/ttsprep/vad.hpp

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

#ifndef TTSPREP_VAD_HPP_
#define TTSPREP_VAD_HPP_

#include <vector>

#include "ttsprep/wav.hpp"

namespace ttsprep::dsp {

struct Segment {
  double start_s = 0.0;
  double end_s = 0.0;
};

/// Speech intervals: sorted, non-overlapping, within the clip duration.
struct SegmentList {
  std::vector<Segment> segments;

  bool empty() const { return segments.empty(); }
};

struct VadParams {
  double frame_s = 0.025;
  double hop_s = 0.010;
  double noise_percentile = 0.10;  // frame-energy quantile used as floor
  double threshold_db = 6.0;       // speech = energy above floor + this
  double min_speech_s = 0.100;
  double hangover_s = 0.200;       // gaps shorter than this are bridged
};

/// Per-frame mean-square energies. OpenMP map over frames; bit-identical
/// to the serial reference.
std::vector<double> frame_energies(const AudioClip& clip, double frame_s,
                                   double hop_s);

/// Energy VAD: frames whose log energy exceeds an adaptive noise-floor
/// threshold, with hangover bridging and a minimum segment duration.
/// A silent clip yields an empty list.
SegmentList detect_speech(const AudioClip& clip, const VadParams& params = {});

/// Mean of squared samples over the union of segments; 0 when empty.
double signal_power(const AudioClip& clip, const SegmentList& segments);

namespace serial {
std::vector<double> frame_energies(const AudioClip& clip, double frame_s,
                                   double hop_s);
}  // namespace serial

}  // namespace ttsprep::dsp

#endif  // TTSPREP_VAD_HPP_
