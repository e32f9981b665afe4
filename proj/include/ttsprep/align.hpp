// include/ttsprep/align.hpp

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

#ifndef TTSPREP_ALIGN_HPP_
#define TTSPREP_ALIGN_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "ttsprep/types.hpp"

namespace ttsprep {

/// One decoded token with its timestamp, as read from a CTM file.
struct HypToken {
  std::string text;
  double start_s = 0.0;
  double dur_s = 0.0;
};

enum class EditOpType { kMatch, kSubstitute, kDeleteRef, kInsertHyp };

struct EditOp {
  EditOpType type;
  int ref_index = -1;  // -1 for InsertHyp
  int hyp_index = -1;  // -1 for DeleteRef
};

/// An anchor is a maximal run of exact matches, long enough to trust.
struct Anchor {
  int ref_start = 0;
  int length = 0;
};

struct EditAlignment {
  std::vector<EditOp> ops;  // ordered; every ref and hyp index once
  int matches = 0;
  int substitutions = 0;
  int deletions = 0;
  int insertions = 0;
  double wer = 0.0;  // (S + D + I) / |ref|
  std::vector<Anchor> anchors;

  int edit_distance() const { return substitutions + deletions + insertions; }
};

/// Parses `utt-id channel start_s dur_s token` lines, groups tokens by
/// utterance id, sorted by start time. Throws Error with a line number on
/// malformed lines and on non-positive durations.
std::map<std::string, std::vector<HypToken>> load_ctm(
    const std::filesystem::path& path);

/// Minimum-edit-distance alignment with unit costs and a fixed backtrace
/// tie order (Match > Substitute > DeleteRef > InsertHyp), so alignments
/// are reproducible. ref must be non-empty. Empty hyp yields all
/// DeleteRef ops and wer = 1.
EditAlignment align_hyp_to_ref(const std::vector<Syllable>& ref,
                               const std::vector<HypToken>& hyp,
                               int anchor_min_len = 3);

/// Copies hypothesis timestamps onto the reference tokens. Match ops are
/// always trusted; Substitute ops carry time despite the word differing
/// and are trusted unless trust_substitutions is false. DeleteRef tokens
/// come back with aligned = false.
std::vector<TimedToken> transfer_timestamps(const std::vector<Syllable>& ref,
                                            const EditAlignment& alignment,
                                            const std::vector<HypToken>& hyp,
                                            bool trust_substitutions = true);

/// Gaps of at least min_gap_s between consecutive aligned tokens. Leading
/// and trailing silence is never reported; fewer than two aligned tokens
/// yields an empty list. after_ref_index on each span is the index (into
/// `tokens`) of the token before the gap.
std::vector<SilenceSpan> detect_internal_silences(
    const std::vector<TimedToken>& tokens, double min_gap_s);

}  // namespace ttsprep

#endif  // TTSPREP_ALIGN_HPP_
