// include/ttsprep/wav.hpp

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

#ifndef TTSPREP_WAV_HPP_
#define TTSPREP_WAV_HPP_

#include <filesystem>
#include <vector>

namespace ttsprep::dsp {

/// Mono audio, samples in [-1, 1].
struct AudioClip {
  std::vector<double> samples;
  int sample_rate_hz = 0;

  double duration_s() const {
    return sample_rate_hz > 0
               ? static_cast<double>(samples.size()) / sample_rate_hz
               : 0.0;
  }
};

/// Reads a RIFF/WAVE file: PCM 8/16/24/32-bit or IEEE float, mono or
/// stereo (channels averaged). 16-bit samples are scaled by 1/32768 so
/// full-scale negative maps to exactly -1. Throws Error on anything it
/// cannot decode, naming the problem.
AudioClip load_wav(const std::filesystem::path& path);

/// Writes 16-bit PCM mono. Samples are clamped to [-1, 1] first.
void save_wav(const AudioClip& clip, const std::filesystem::path& path);

/// Rounds samples through 16-bit PCM, exactly as a save_wav/load_wav
/// round trip would. Stages that may read their audio back from disk use
/// this so in-memory and on-disk paths stay bit-identical.
AudioClip quantize_16bit(const AudioClip& clip);

}  // namespace ttsprep::dsp

#endif  // TTSPREP_WAV_HPP_
