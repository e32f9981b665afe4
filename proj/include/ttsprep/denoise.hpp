// include/ttsprep/denoise.hpp

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

#ifndef TTSPREP_DENOISE_HPP_
#define TTSPREP_DENOISE_HPP_

#include "ttsprep/wav.hpp"

namespace ttsprep::dsp {

struct DenoiseParams {
  double frame_s = 0.025;
  double hop_s = 0.010;
  int noise_init_frames = 6;      // noise PSD seeded from the first frames
  double dd_alpha = 0.98;         // decision-directed a-priori SNR smoothing
  double gain_floor_db = -25.0;
  double noise_update_mu = 0.98;  // PSD smoothing in non-speech frames
  double speech_presence = 0.15;  // frame likelihood below this -> noise
};

/// Short-time spectral-amplitude MMSE suppression with a
/// decision-directed a-priori SNR estimate. The noise spectrum is seeded
/// from the first noise_init_frames frames and tracked during frames the
/// likelihood test calls non-speech. Gains are clamped to
/// [gain_floor, 1], so pure-noise input never gains energy. Output has
/// the same length and rate as the input. Requires at least
/// noise_init_frames + 4 frames of audio.
AudioClip denoise_mmse(const AudioClip& clip,
                       const DenoiseParams& params = {});

}  // namespace ttsprep::dsp

#endif  // TTSPREP_DENOISE_HPP_
