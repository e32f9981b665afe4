// include/ttsprep/resample.hpp

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

#ifndef TTSPREP_RESAMPLE_HPP_
#define TTSPREP_RESAMPLE_HPP_

#include "ttsprep/wav.hpp"

namespace ttsprep::dsp {

/// Rational-ratio resampling through a Kaiser-windowed sinc polyphase
/// filter. target_hz == source rate returns the input unchanged. Output
/// length is round(n * target/source), so duration is preserved within
/// one output sample period. The output-sample loop runs under OpenMP;
/// each output sample is computed independently, so results are
/// bit-identical to the serial reference at any thread count.
AudioClip resample(const AudioClip& clip, int target_hz);

namespace serial {
/// Single-threaded reference; same arithmetic as dsp::resample.
AudioClip resample(const AudioClip& clip, int target_hz);
}  // namespace serial

}  // namespace ttsprep::dsp

#endif  // TTSPREP_RESAMPLE_HPP_
