// src/config.cpp

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

#include "ttsprep/config.hpp"

#include <fstream>
#include <initializer_list>
#include <string>

#include <json.hpp>

#include "utf8.hpp"

namespace ttsprep {

namespace {

using nlohmann::json;

// Unknown keys are config errors; a typo must not fall back to a default.
void check_keys(const json& j, const std::string& scope,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) {
      if (key == a) {
        ok = true;
        break;
      }
    }
    if (!ok) throw Error("config: unknown key '" + scope + key + "'");
  }
}

template <typename T>
void get_if_present(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

json textnorm_to_json(const NormRuleSet& rules) {
  json digits = json::object();
  for (const auto& [digit, word] : rules.digit_map) {
    digits[std::string(1, digit)] = word;
  }
  json abbrevs = json::object();
  for (const auto& [abbrev, expansion] : rules.abbreviation_map) {
    abbrevs[abbrev] = expansion;
  }
  std::u32string strip(rules.strip_chars.begin(), rules.strip_chars.end());
  return json{{"digits", digits},
              {"abbreviations", abbrevs},
              {"strip_chars", utf8::encode(strip)}};
}

NormRuleSet textnorm_from_json(const json& j) {
  check_keys(j, "textnorm.", {"digits", "abbreviations", "strip_chars"});
  NormRuleSet rules = default_norm_rules();
  if (j.contains("digits")) {
    rules.digit_map.clear();
    for (const auto& [key, value] : j.at("digits").items()) {
      if (key.size() != 1 || key[0] < '0' || key[0] > '9') {
        throw Error("config: textnorm.digits key must be one digit, got '" +
                    key + "'");
      }
      rules.digit_map[key[0]] = value.get<std::string>();
    }
  }
  if (j.contains("abbreviations")) {
    rules.abbreviation_map.clear();
    for (const auto& [key, value] : j.at("abbreviations").items()) {
      rules.abbreviation_map[key] = value.get<std::vector<std::string>>();
    }
  }
  if (j.contains("strip_chars")) {
    rules.strip_chars.clear();
    for (char32_t cp : utf8::decode(j.at("strip_chars").get<std::string>())) {
      rules.strip_chars.insert(cp);
    }
  }
  return rules;
}

void validate(const PipelineConfig& cfg) {
  if (cfg.target_sample_rate_hz <= 0) {
    throw Error("config: target_sample_rate_hz must be positive");
  }
  if (cfg.min_gap_s <= 0.0) throw Error("config: min_gap_s must be positive");
  if (cfg.selection.max_wer < 0.0) {
    throw Error("config: selection.max_wer must be >= 0");
  }
  if (cfg.selection.reject_fraction < 0.0 ||
      cfg.selection.reject_fraction >= 1.0) {
    throw Error("config: selection.reject_fraction must be in [0, 1)");
  }
  const auto& b = cfg.punctuation.boundaries_s;
  if (!(b[0] < b[1] && b[1] < b[2] && b[2] < b[3])) {
    throw Error("config: punctuation.boundaries_s must be increasing");
  }
  const auto& m = cfg.punctuation.markers;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (m[i] == m[j]) throw Error("config: punctuation markers must differ");
    }
  }
  if (cfg.anchor_min_len < 1) {
    throw Error("config: anchor_min_len must be >= 1");
  }
  if (cfg.f0.f_min_hz <= 0.0 || cfg.f0.f_max_hz <= cfg.f0.f_min_hz) {
    throw Error("config: f0 range must satisfy 0 < f_min < f_max");
  }
}

}  // namespace

std::string config_to_json(const PipelineConfig& cfg) {
  json j;
  j["target_sample_rate_hz"] = cfg.target_sample_rate_hz;
  j["denoise"] = {{"frame_s", cfg.denoise.frame_s},
                  {"hop_s", cfg.denoise.hop_s},
                  {"noise_init_frames", cfg.denoise.noise_init_frames},
                  {"dd_alpha", cfg.denoise.dd_alpha},
                  {"gain_floor_db", cfg.denoise.gain_floor_db},
                  {"noise_update_mu", cfg.denoise.noise_update_mu},
                  {"speech_presence", cfg.denoise.speech_presence}};
  j["vad"] = {{"frame_s", cfg.vad.frame_s},
              {"hop_s", cfg.vad.hop_s},
              {"noise_percentile", cfg.vad.noise_percentile},
              {"threshold_db", cfg.vad.threshold_db},
              {"min_speech_s", cfg.vad.min_speech_s},
              {"hangover_s", cfg.vad.hangover_s}};
  j["f0"] = {{"window_s", cfg.f0.window_s},
             {"hop_s", cfg.f0.hop_s},
             {"f_min_hz", cfg.f0.f_min_hz},
             {"f_max_hz", cfg.f0.f_max_hz},
             {"voicing_threshold", cfg.f0.voicing_threshold}};
  j["min_gap_s"] = cfg.min_gap_s;
  j["selection"] = {{"max_wer", cfg.selection.max_wer},
                    {"reject_fraction", cfg.selection.reject_fraction}};
  j["punctuation"] = {
      {"boundaries_s", cfg.punctuation.boundaries_s},
      {"markers", cfg.punctuation.markers}};
  j["textnorm"] = textnorm_to_json(cfg.textnorm);
  j["anchor_min_len"] = cfg.anchor_min_len;
  j["trust_substituted_timestamps"] = cfg.trust_substituted_timestamps;
  j["p_signal_on_denoised"] = cfg.p_signal_on_denoised;
  return j.dump(2) + "\n";
}

PipelineConfig config_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("config: invalid JSON: ") + e.what());
  }

  check_keys(j, "",
             {"target_sample_rate_hz", "denoise", "vad", "f0", "min_gap_s",
              "selection", "punctuation", "textnorm", "anchor_min_len",
              "trust_substituted_timestamps", "p_signal_on_denoised"});

  PipelineConfig cfg;
  try {
    get_if_present(j, "target_sample_rate_hz", cfg.target_sample_rate_hz);
    if (j.contains("denoise")) {
      const json& d = j.at("denoise");
      check_keys(d, "denoise.",
                 {"frame_s", "hop_s", "noise_init_frames", "dd_alpha",
                  "gain_floor_db", "noise_update_mu", "speech_presence"});
      get_if_present(d, "frame_s", cfg.denoise.frame_s);
      get_if_present(d, "hop_s", cfg.denoise.hop_s);
      get_if_present(d, "noise_init_frames", cfg.denoise.noise_init_frames);
      get_if_present(d, "dd_alpha", cfg.denoise.dd_alpha);
      get_if_present(d, "gain_floor_db", cfg.denoise.gain_floor_db);
      get_if_present(d, "noise_update_mu", cfg.denoise.noise_update_mu);
      get_if_present(d, "speech_presence", cfg.denoise.speech_presence);
    }
    if (j.contains("vad")) {
      const json& v = j.at("vad");
      check_keys(v, "vad.",
                 {"frame_s", "hop_s", "noise_percentile", "threshold_db",
                  "min_speech_s", "hangover_s"});
      get_if_present(v, "frame_s", cfg.vad.frame_s);
      get_if_present(v, "hop_s", cfg.vad.hop_s);
      get_if_present(v, "noise_percentile", cfg.vad.noise_percentile);
      get_if_present(v, "threshold_db", cfg.vad.threshold_db);
      get_if_present(v, "min_speech_s", cfg.vad.min_speech_s);
      get_if_present(v, "hangover_s", cfg.vad.hangover_s);
    }
    if (j.contains("f0")) {
      const json& f = j.at("f0");
      check_keys(f, "f0.",
                 {"window_s", "hop_s", "f_min_hz", "f_max_hz",
                  "voicing_threshold"});
      get_if_present(f, "window_s", cfg.f0.window_s);
      get_if_present(f, "hop_s", cfg.f0.hop_s);
      get_if_present(f, "f_min_hz", cfg.f0.f_min_hz);
      get_if_present(f, "f_max_hz", cfg.f0.f_max_hz);
      get_if_present(f, "voicing_threshold", cfg.f0.voicing_threshold);
    }
    get_if_present(j, "min_gap_s", cfg.min_gap_s);
    if (j.contains("selection")) {
      const json& s = j.at("selection");
      check_keys(s, "selection.", {"max_wer", "reject_fraction"});
      get_if_present(s, "max_wer", cfg.selection.max_wer);
      get_if_present(s, "reject_fraction", cfg.selection.reject_fraction);
    }
    if (j.contains("punctuation")) {
      const json& p = j.at("punctuation");
      check_keys(p, "punctuation.", {"boundaries_s", "markers"});
      get_if_present(p, "boundaries_s", cfg.punctuation.boundaries_s);
      get_if_present(p, "markers", cfg.punctuation.markers);
    }
    if (j.contains("textnorm")) {
      cfg.textnorm = textnorm_from_json(j.at("textnorm"));
    }
    get_if_present(j, "anchor_min_len", cfg.anchor_min_len);
    get_if_present(j, "trust_substituted_timestamps",
                   cfg.trust_substituted_timestamps);
    get_if_present(j, "p_signal_on_denoised", cfg.p_signal_on_denoised);
  } catch (const json::exception& e) {
    throw Error(std::string("config: ") + e.what());
  }

  validate(cfg);
  return cfg;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config: " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return config_from_json(text);
}

}  // namespace ttsprep
