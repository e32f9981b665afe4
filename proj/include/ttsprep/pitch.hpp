// include/ttsprep/pitch.hpp

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

#ifndef TTSPREP_PITCH_HPP_
#define TTSPREP_PITCH_HPP_

#include <vector>

#include "ttsprep/vad.hpp"
#include "ttsprep/wav.hpp"

namespace ttsprep::dsp {

struct F0Params {
  double window_s = 0.040;
  double hop_s = 0.010;
  double f_min_hz = 60.0;
  double f_max_hz = 400.0;
  double voicing_threshold = 0.3;  // on the normalized correlation peak
};

/// Per-frame F0. values_hz[i] > 0 exactly when voicing[i]; voiced values
/// stay within [f_min_hz, f_max_hz].
struct F0Track {
  double hop_s = 0.0;
  std::vector<double> values_hz;
  std::vector<bool> voicing;
};

/// Normalized cross-correlation pitch tracker. Frames whose center falls
/// outside the speech segments are unvoiced. Within a frame the smallest
/// candidate lag within 2% of the global correlation peak wins (octave
/// guard), refined by parabolic interpolation. The frame loop runs under
/// OpenMP; frames are independent, so output is bit-identical to the
/// serial reference.
F0Track track_f0(const AudioClip& clip, const SegmentList& segments,
                 const F0Params& params = {});

namespace serial {
F0Track track_f0(const AudioClip& clip, const SegmentList& segments,
                 const F0Params& params = {});
}  // namespace serial

}  // namespace ttsprep::dsp

#endif  // TTSPREP_PITCH_HPP_
