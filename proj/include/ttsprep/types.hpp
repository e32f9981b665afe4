// include/ttsprep/types.hpp

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

#ifndef TTSPREP_TYPES_HPP_
#define TTSPREP_TYPES_HPP_

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ttsprep {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One normalized token. Vietnamese is monosyllabic, so a whitespace token
/// is one syllable; inserted pause markers are syllables with is_marker set.
struct Syllable {
  std::string text;
  bool is_marker = false;

  bool operator==(const Syllable&) const = default;
};

/// A syllable with timestamps transferred from a decoded hypothesis.
/// aligned == false means no hypothesis timestamp could be transferred;
/// such tokens carry no usable duration.
struct TimedToken {
  Syllable syllable;
  double start_s = 0.0;
  double end_s = 0.0;
  bool aligned = false;

  double duration_s() const { return end_s - start_s; }
};

/// An internal pause between two consecutive aligned tokens.
/// after_ref_index is the index of the token the pause follows.
/// punct_class is set by the punctuation stage (1..4), or empty when the
/// pause is too short to be a prosodic break.
struct SilenceSpan {
  double start_s = 0.0;
  double end_s = 0.0;
  int after_ref_index = -1;
  std::optional<int> punct_class;

  double duration_s() const { return end_s - start_s; }
};

enum class RejectReason {
  kWerFilter,
  kArticulation,
  kStdSylDur,
  kNonFluency,
  kStdF0,
  // Not a selection metric: set when a pipeline stage failed on the
  // utterance (unreadable audio, no aligned tokens, ...). The diagnostic
  // string on the verdict carries the details.
  kProcessingFailure,
};

const char* reject_reason_name(RejectReason reason);
std::optional<RejectReason> reject_reason_from_name(std::string_view name);

struct SelectionVerdict {
  std::set<RejectReason> reasons;
  std::string diagnostic;

  bool kept() const { return reasons.empty(); }
};

/// The per-utterance selection metrics.
/// Invariants: articulation == p_signal * avg_syl_dur_s and
/// non_fluency == max_internal_silence_s / avg_syl_dur_s.
/// p_signal is linear mean-square signal power over speech segments (not dB).
struct MetricReport {
  double wer = 0.0;
  double articulation = 0.0;
  double std_syl_dur_s = 0.0;
  double non_fluency = 0.0;
  double std_f0_hz = 0.0;
  double avg_syl_dur_s = 0.0;
  double p_signal = 0.0;
  double max_internal_silence_s = 0.0;
};

/// One audio/transcript pair and everything the pipeline derives from it.
struct UtteranceRecord {
  std::string id;
  std::string audio_path;
  std::string raw_text;
  std::vector<Syllable> norm_tokens;
  std::vector<TimedToken> timed_tokens;
  std::vector<SilenceSpan> silences;
  std::optional<double> wer;
  std::optional<MetricReport> metrics;
  std::vector<Syllable> punct_tokens;  // norm_tokens with markers inserted
  SelectionVerdict verdict;
};

/// Space-joined token text, used when writing manifests.
std::string join_syllables(const std::vector<Syllable>& tokens);

}  // namespace ttsprep

#endif  // TTSPREP_TYPES_HPP_
