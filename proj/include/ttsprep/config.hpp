// include/ttsprep/config.hpp

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

#ifndef TTSPREP_CONFIG_HPP_
#define TTSPREP_CONFIG_HPP_

#include <filesystem>
#include <string>

#include "ttsprep/denoise.hpp"
#include "ttsprep/pitch.hpp"
#include "ttsprep/punctuation.hpp"
#include "ttsprep/selection.hpp"
#include "ttsprep/textnorm.hpp"
#include "ttsprep/vad.hpp"

namespace ttsprep {

/// Every pipeline knob in one JSON-backed document. Defaults are the
/// values the stages were tuned with; a missing file means defaults.
struct PipelineConfig {
  int target_sample_rate_hz = 16000;
  dsp::DenoiseParams denoise;
  dsp::VadParams vad;
  dsp::F0Params f0;
  double min_gap_s = 0.05;  // smallest inter-token gap kept as a silence
  SelectionConfig selection;
  PunctScheme punctuation;
  NormRuleSet textnorm = default_norm_rules();
  int anchor_min_len = 3;
  bool trust_substituted_timestamps = true;
  // Selection metrics are computed on the same audio the TTS would train
  // on, i.e. after denoising. Set false to measure the raw signal.
  bool p_signal_on_denoised = true;
};

/// Loads a config JSON. Unknown keys are errors so typos cannot silently
/// fall back to defaults. Missing keys keep their default values.
PipelineConfig load_config(const std::filesystem::path& path);

/// Serializes the full config (a saved config reloads to an identical
/// value; the round trip is lossless).
std::string config_to_json(const PipelineConfig& cfg);
PipelineConfig config_from_json(const std::string& json_text);

}  // namespace ttsprep

#endif  // TTSPREP_CONFIG_HPP_
