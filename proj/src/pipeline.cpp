// src/pipeline.cpp

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

#include "ttsprep/pipeline.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "ttsprep/denoise.hpp"
#include "ttsprep/manifest.hpp"
#include "ttsprep/metrics.hpp"
#include "ttsprep/pitch.hpp"
#include "ttsprep/punctuation.hpp"
#include "ttsprep/resample.hpp"
#include "ttsprep/selection.hpp"
#include "ttsprep/textnorm.hpp"
#include "ttsprep/wav.hpp"

namespace ttsprep {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// --- state.json (de)serialization -------------------------------------------

json syllables_to_json(const std::vector<Syllable>& tokens) {
  json arr = json::array();
  for (const Syllable& s : tokens) {
    arr.push_back({{"text", s.text}, {"marker", s.is_marker}});
  }
  return arr;
}

std::vector<Syllable> syllables_from_json(const json& arr) {
  std::vector<Syllable> out;
  for (const json& j : arr) {
    out.push_back({j.at("text").get<std::string>(), j.at("marker").get<bool>()});
  }
  return out;
}

json item_to_json(const PipelineItem& item) {
  const UtteranceRecord& rec = item.record;
  json j;
  j["id"] = rec.id;
  j["audio_path"] = rec.audio_path;
  j["raw_text"] = rec.raw_text;
  j["norm_tokens"] = syllables_to_json(rec.norm_tokens);
  json timed = json::array();
  for (const TimedToken& t : rec.timed_tokens) {
    timed.push_back({{"text", t.syllable.text},
                     {"marker", t.syllable.is_marker},
                     {"start_s", t.start_s},
                     {"end_s", t.end_s},
                     {"aligned", t.aligned}});
  }
  j["timed_tokens"] = timed;
  json silences = json::array();
  for (const SilenceSpan& s : rec.silences) {
    json js = {{"start_s", s.start_s},
               {"end_s", s.end_s},
               {"after_ref_index", s.after_ref_index}};
    if (s.punct_class.has_value()) js["punct_class"] = *s.punct_class;
    silences.push_back(js);
  }
  j["silences"] = silences;
  if (rec.wer.has_value()) j["wer"] = *rec.wer;
  if (rec.metrics.has_value()) {
    const MetricReport& m = *rec.metrics;
    j["metrics"] = {{"wer", m.wer},
                    {"articulation", m.articulation},
                    {"std_syl_dur_s", m.std_syl_dur_s},
                    {"non_fluency", m.non_fluency},
                    {"std_f0_hz", m.std_f0_hz},
                    {"avg_syl_dur_s", m.avg_syl_dur_s},
                    {"p_signal", m.p_signal},
                    {"max_internal_silence_s", m.max_internal_silence_s}};
  }
  j["punct_tokens"] = syllables_to_json(rec.punct_tokens);
  json reasons = json::array();
  for (RejectReason r : rec.verdict.reasons) {
    reasons.push_back(reject_reason_name(r));
  }
  j["verdict"] = {{"reasons", reasons}, {"diagnostic", rec.verdict.diagnostic}};
  json segs = json::array();
  for (const dsp::Segment& s : item.segments.segments) {
    segs.push_back({s.start_s, s.end_s});
  }
  j["segments"] = segs;
  j["denoised_path"] = item.denoised_rel_path;
  return j;
}

PipelineItem item_from_json(const json& j) {
  PipelineItem item;
  UtteranceRecord& rec = item.record;
  rec.id = j.at("id").get<std::string>();
  rec.audio_path = j.at("audio_path").get<std::string>();
  rec.raw_text = j.at("raw_text").get<std::string>();
  rec.norm_tokens = syllables_from_json(j.at("norm_tokens"));
  for (const json& t : j.at("timed_tokens")) {
    TimedToken tok;
    tok.syllable = {t.at("text").get<std::string>(),
                    t.at("marker").get<bool>()};
    tok.start_s = t.at("start_s").get<double>();
    tok.end_s = t.at("end_s").get<double>();
    tok.aligned = t.at("aligned").get<bool>();
    rec.timed_tokens.push_back(tok);
  }
  for (const json& s : j.at("silences")) {
    SilenceSpan span;
    span.start_s = s.at("start_s").get<double>();
    span.end_s = s.at("end_s").get<double>();
    span.after_ref_index = s.at("after_ref_index").get<int>();
    if (s.contains("punct_class")) span.punct_class = s.at("punct_class").get<int>();
    rec.silences.push_back(span);
  }
  if (j.contains("wer")) rec.wer = j.at("wer").get<double>();
  if (j.contains("metrics")) {
    const json& m = j.at("metrics");
    MetricReport report;
    report.wer = m.at("wer").get<double>();
    report.articulation = m.at("articulation").get<double>();
    report.std_syl_dur_s = m.at("std_syl_dur_s").get<double>();
    report.non_fluency = m.at("non_fluency").get<double>();
    report.std_f0_hz = m.at("std_f0_hz").get<double>();
    report.avg_syl_dur_s = m.at("avg_syl_dur_s").get<double>();
    report.p_signal = m.at("p_signal").get<double>();
    report.max_internal_silence_s = m.at("max_internal_silence_s").get<double>();
    rec.metrics = report;
  }
  rec.punct_tokens = syllables_from_json(j.at("punct_tokens"));
  for (const json& r : j.at("verdict").at("reasons")) {
    const auto reason = reject_reason_from_name(r.get<std::string>());
    if (!reason.has_value()) {
      throw Error("state: unknown verdict reason " + r.get<std::string>());
    }
    rec.verdict.reasons.insert(*reason);
  }
  rec.verdict.diagnostic = j.at("verdict").at("diagnostic").get<std::string>();
  for (const json& s : j.at("segments")) {
    item.segments.segments.push_back(
        {s.at(0).get<double>(), s.at(1).get<double>()});
  }
  item.denoised_rel_path = j.at("denoised_path").get<std::string>();
  return item;
}

void fail_item(PipelineItem& item, const std::string& stage,
               const std::string& what) {
  item.record.verdict.reasons.insert(RejectReason::kProcessingFailure);
  if (!item.record.verdict.diagnostic.empty()) {
    item.record.verdict.diagnostic += "; ";
  }
  item.record.verdict.diagnostic += stage + ": " + what;
}

bool failed(const PipelineItem& item) {
  return item.record.verdict.reasons.count(RejectReason::kProcessingFailure) >
         0;
}

// Runs body(item) for every non-failed item, jobs at a time. Exceptions
// become per-utterance rejections; every item only ever touches its own
// slot, so results do not depend on the schedule.
template <typename Body>
void for_each_item(PipelineState& state, const std::string& stage, int jobs,
                   Body body) {
  const int n = static_cast<int>(state.items.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int i = 0; i < n; ++i) {
    PipelineItem& item = state.items[i];
    if (failed(item)) continue;
    try {
      body(item);
    } catch (const std::exception& e) {
      fail_item(item, stage, e.what());
    }
  }
}

void require_stages(const PipelineState& state, const std::string& stage,
                    std::initializer_list<const char*> required) {
  for (const char* req : required) {
    if (!state.completed_stages.count(req)) {
      throw Error("stage '" + stage + "' requires completed stage '" +
                  std::string(req) + "'; run that first");
    }
  }
}

// --- per-stage logic ---------------------------------------------------------

dsp::AudioClip prepared_audio(const PipelineItem& item,
                              const PipelineConfig& cfg, bool denoised) {
  dsp::AudioClip clip = dsp::load_wav(item.record.audio_path);
  if (clip.samples.empty()) throw Error("empty audio");
  clip = dsp::resample(clip, cfg.target_sample_rate_hz);
  if (denoised) clip = dsp::denoise_mmse(clip, cfg.denoise);
  return dsp::quantize_16bit(clip);
}

dsp::AudioClip denoised_audio(const PipelineItem& item,
                              const std::filesystem::path& out_dir,
                              const PipelineConfig& cfg) {
  if (!item.denoised_rel_path.empty()) {
    const auto path = out_dir / item.denoised_rel_path;
    if (std::filesystem::exists(path)) return dsp::load_wav(path);
  }
  return prepared_audio(item, cfg, true);
}

void stage_denoise(PipelineState& state, const StageOptions& opts) {
  const auto dir = opts.out_dir / "denoised";
  std::filesystem::create_directories(dir);
  for_each_item(state, "denoise", opts.jobs, [&](PipelineItem& item) {
    const dsp::AudioClip clip = prepared_audio(item, state.config, true);
    item.denoised_rel_path = "denoised/" + item.record.id + ".wav";
    dsp::save_wav(clip, opts.out_dir / item.denoised_rel_path);
  });
}

void stage_normalize(PipelineState& state, const StageOptions& opts) {
  for_each_item(state, "normalize", opts.jobs, [&](PipelineItem& item) {
    item.record.norm_tokens =
        normalize(item.record.raw_text, state.config.textnorm);
  });
}

void stage_vad(PipelineState& state, const StageOptions& opts) {
  require_stages(state, "vad", {"denoise"});
  for_each_item(state, "vad", opts.jobs, [&](PipelineItem& item) {
    const dsp::AudioClip clip =
        denoised_audio(item, opts.out_dir, state.config);
    item.segments = dsp::detect_speech(clip, state.config.vad);
  });
}

void stage_align(PipelineState& state, const StageOptions& opts) {
  require_stages(state, "align", {"normalize"});
  if (opts.ctm_path.empty()) throw Error("align: no CTM file given");
  const auto hyp_map = load_ctm(opts.ctm_path);
  for_each_item(state, "align", opts.jobs, [&](PipelineItem& item) {
    UtteranceRecord& rec = item.record;
    if (rec.norm_tokens.empty()) throw Error("no normalized tokens");
    const auto it = hyp_map.find(rec.id);
    if (it == hyp_map.end()) throw Error("no CTM entry for utterance");
    const EditAlignment alignment = align_hyp_to_ref(
        rec.norm_tokens, it->second, state.config.anchor_min_len);
    rec.wer = alignment.wer;
    rec.timed_tokens =
        transfer_timestamps(rec.norm_tokens, alignment, it->second,
                            state.config.trust_substituted_timestamps);
    rec.silences =
        detect_internal_silences(rec.timed_tokens, state.config.min_gap_s);
  });
}

void stage_metrics(PipelineState& state, const StageOptions& opts) {
  require_stages(state, "metrics", {"denoise", "vad", "align"});
  for_each_item(state, "metrics", opts.jobs, [&](PipelineItem& item) {
    const dsp::AudioClip denoised =
        denoised_audio(item, opts.out_dir, state.config);
    const dsp::F0Track track =
        dsp::track_f0(denoised, item.segments, state.config.f0);
    if (state.config.p_signal_on_denoised) {
      item.record.metrics =
          build_report(item.record, denoised, item.segments, track);
    } else {
      const dsp::AudioClip raw = prepared_audio(item, state.config, false);
      item.record.metrics =
          build_report(item.record, raw, item.segments, track);
    }
  });
  write_metrics_csv(state, opts.out_dir / "metrics.csv");
}

void stage_select(PipelineState& state, const StageOptions& opts) {
  require_stages(state, "select", {"metrics"});
  // Global ranking; cheap and single-threaded by design.
  std::vector<UtteranceRecord> records;
  records.reserve(state.items.size());
  for (PipelineItem& item : state.items) records.push_back(item.record);
  apply_wer_filter(records, state.config.selection);
  apply_percentile_rejection(records, state.config.selection);
  for (std::size_t i = 0; i < state.items.size(); ++i) {
    state.items[i].record.verdict = records[i].verdict;
  }
  write_summary_json(state, opts.out_dir / "summary.json");
}

void stage_punctuate(PipelineState& state, const StageOptions& opts) {
  require_stages(state, "punctuate", {"align", "select"});
  for_each_item(state, "punctuate", opts.jobs, [&](PipelineItem& item) {
    UtteranceRecord& rec = item.record;
    for (SilenceSpan& span : rec.silences) {
      span.punct_class =
          classify_silence(span.duration_s(), state.config.punctuation);
    }
    rec.punct_tokens = insert_punctuation(rec.norm_tokens, rec.silences,
                                          state.config.punctuation);
  });
  std::vector<UtteranceRecord> records;
  records.reserve(state.items.size());
  for (const PipelineItem& item : state.items) records.push_back(item.record);
  save_manifest(records, opts.out_dir / "manifest_kept.tsv",
                /*kept_only=*/true);
}

void stage_report(PipelineState& state, const StageOptions& opts) {
  require_stages(state, "report", {"select"});
  write_metrics_csv(state, opts.out_dir / "metrics.csv");
  write_summary_json(state, opts.out_dir / "summary.json");
}

}  // namespace

PipelineItem* PipelineState::find(const std::string& id) {
  for (PipelineItem& item : items) {
    if (item.record.id == id) return &item;
  }
  return nullptr;
}

PipelineState make_state(const std::vector<UtteranceRecord>& records,
                         const PipelineConfig& config) {
  PipelineState state;
  state.config = config;
  state.items.reserve(records.size());
  for (const UtteranceRecord& rec : records) state.items.push_back({rec, {}, {}});
  return state;
}

void save_state(const PipelineState& state,
                const std::filesystem::path& path) {
  json j;
  j["config"] = json::parse(config_to_json(state.config));
  j["completed_stages"] = state.completed_stages;
  std::vector<const PipelineItem*> ordered;
  for (const PipelineItem& item : state.items) ordered.push_back(&item);
  std::sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
    return a->record.id < b->record.id;
  });
  json items = json::array();
  for (const PipelineItem* item : ordered) items.push_back(item_to_json(*item));
  j["utterances"] = items;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write state: " + path.string());
  out << j.dump(1) << "\n";
  if (!out) throw Error("write failed: " + path.string());
}

PipelineState load_state(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open state: " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(std::string("state: invalid JSON: ") + e.what());
  }
  PipelineState state;
  state.config = config_from_json(j.at("config").dump());
  for (const json& s : j.at("completed_stages")) {
    state.completed_stages.insert(s.get<std::string>());
  }
  for (const json& item : j.at("utterances")) {
    state.items.push_back(item_from_json(item));
  }
  return state;
}

const std::vector<std::string>& stage_names() {
  static const std::vector<std::string> names = {
      "denoise", "normalize", "vad",       "align",
      "metrics", "select",    "punctuate", "report"};
  return names;
}

void run_stage(PipelineState& state, const std::string& stage,
               const StageOptions& opts) {
  std::filesystem::create_directories(opts.out_dir);
  if (stage == "denoise") {
    stage_denoise(state, opts);
  } else if (stage == "normalize") {
    stage_normalize(state, opts);
  } else if (stage == "vad") {
    stage_vad(state, opts);
  } else if (stage == "align") {
    stage_align(state, opts);
  } else if (stage == "metrics") {
    stage_metrics(state, opts);
  } else if (stage == "select") {
    stage_select(state, opts);
  } else if (stage == "punctuate") {
    stage_punctuate(state, opts);
  } else if (stage == "report") {
    stage_report(state, opts);
  } else {
    throw Error("unknown stage: " + stage);
  }
  state.completed_stages.insert(stage);
}

int run_pipeline(const PipelineOptions& opts) {
  const PipelineConfig config = opts.config_path.empty()
                                    ? PipelineConfig{}
                                    : load_config(opts.config_path);
  PipelineState state = make_state(load_manifest(opts.manifest_path), config);

  StageOptions stage_opts;
  stage_opts.out_dir = opts.out_dir;
  stage_opts.ctm_path = opts.ctm_path;
  stage_opts.jobs = opts.jobs;

  for (const std::string& stage : stage_names()) {
    run_stage(state, stage, stage_opts);
  }
  save_state(state, opts.out_dir / "state.json");

  if (!opts.write_denoised) {
    std::filesystem::remove_all(opts.out_dir / "denoised");
  }

  int kept = 0;
  for (const PipelineItem& item : state.items) {
    if (item.record.verdict.kept()) ++kept;
  }
  return kept;
}

void write_metrics_csv(const PipelineState& state,
                       const std::filesystem::path& path) {
  std::vector<const PipelineItem*> ordered;
  for (const PipelineItem& item : state.items) {
    if (item.record.metrics.has_value()) ordered.push_back(&item);
  }
  std::sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
    return a->record.id < b->record.id;
  });

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write metrics csv: " + path.string());
  out << "id,wer,articulation,std_syl_dur,non_fluency,std_f0,avg_syl_dur,"
         "p_signal,max_internal_silence\n";
  for (const PipelineItem* item : ordered) {
    const MetricReport& m = *item->record.metrics;
    out << item->record.id << ',' << fmt_double(m.wer) << ','
        << fmt_double(m.articulation) << ',' << fmt_double(m.std_syl_dur_s)
        << ',' << fmt_double(m.non_fluency) << ',' << fmt_double(m.std_f0_hz)
        << ',' << fmt_double(m.avg_syl_dur_s) << ',' << fmt_double(m.p_signal)
        << ',' << fmt_double(m.max_internal_silence_s) << '\n';
  }
  if (!out) throw Error("write failed: " + path.string());
}

void write_summary_json(const PipelineState& state,
                        const std::filesystem::path& path) {
  std::vector<UtteranceRecord> records;
  records.reserve(state.items.size());
  for (const PipelineItem& item : state.items) records.push_back(item.record);
  const SelectionSummary summary = selection_summary(records);

  json j;
  j["total"] = summary.total;
  j["kept"] = summary.kept;
  j["rejected"] = summary.rejected;
  j["by_reason"] = summary.by_reason;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write summary: " + path.string());
  out << j.dump(2) << "\n";
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace ttsprep
