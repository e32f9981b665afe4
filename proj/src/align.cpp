// src/align.cpp

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

#include "ttsprep/align.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ttsprep {

std::map<std::string, std::vector<HypToken>> load_ctm(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ctm: " + path.string());

  std::map<std::string, std::vector<HypToken>> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::istringstream fields(line);
    std::string utt_id, channel, token;
    double start = 0.0, dur = 0.0;
    if (!(fields >> utt_id >> channel >> start >> dur >> token)) {
      throw Error("ctm line " + std::to_string(line_no) +
                  ": expected `utt channel start dur token`");
    }
    if (dur <= 0.0) {
      throw Error("ctm line " + std::to_string(line_no) +
                  ": non-positive duration");
    }
    out[utt_id].push_back({token, start, dur});
  }
  for (auto& [id, tokens] : out) {
    std::stable_sort(tokens.begin(), tokens.end(),
                     [](const HypToken& a, const HypToken& b) {
                       return a.start_s < b.start_s;
                     });
  }
  return out;
}

EditAlignment align_hyp_to_ref(const std::vector<Syllable>& ref,
                               const std::vector<HypToken>& hyp,
                               int anchor_min_len) {
  if (ref.empty()) throw Error("align_hyp_to_ref: empty reference");
  const int nr = static_cast<int>(ref.size());
  const int nh = static_cast<int>(hyp.size());

  // Standard Levenshtein table; dist[i][j] covers ref[0..i) vs hyp[0..j).
  std::vector<std::vector<int>> dist(nr + 1, std::vector<int>(nh + 1, 0));
  for (int i = 0; i <= nr; ++i) dist[i][0] = i;
  for (int j = 0; j <= nh; ++j) dist[0][j] = j;
  for (int i = 1; i <= nr; ++i) {
    for (int j = 1; j <= nh; ++j) {
      const int sub_cost = ref[i - 1].text == hyp[j - 1].text ? 0 : 1;
      dist[i][j] = std::min({dist[i - 1][j - 1] + sub_cost,
                             dist[i - 1][j] + 1, dist[i][j - 1] + 1});
    }
  }

  // Backtrace with the fixed tie order so alignments are reproducible:
  // Match > Substitute > DeleteRef > InsertHyp.
  EditAlignment out;
  std::vector<EditOp> rev;
  int i = nr, j = nh;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && ref[i - 1].text == hyp[j - 1].text &&
        dist[i][j] == dist[i - 1][j - 1]) {
      rev.push_back({EditOpType::kMatch, i - 1, j - 1});
      --i, --j;
    } else if (i > 0 && j > 0 && ref[i - 1].text != hyp[j - 1].text &&
               dist[i][j] == dist[i - 1][j - 1] + 1) {
      rev.push_back({EditOpType::kSubstitute, i - 1, j - 1});
      --i, --j;
    } else if (i > 0 && dist[i][j] == dist[i - 1][j] + 1) {
      rev.push_back({EditOpType::kDeleteRef, i - 1, -1});
      --i;
    } else {
      rev.push_back({EditOpType::kInsertHyp, -1, j - 1});
      --j;
    }
  }
  out.ops.assign(rev.rbegin(), rev.rend());

  for (const EditOp& op : out.ops) {
    switch (op.type) {
      case EditOpType::kMatch: ++out.matches; break;
      case EditOpType::kSubstitute: ++out.substitutions; break;
      case EditOpType::kDeleteRef: ++out.deletions; break;
      case EditOpType::kInsertHyp: ++out.insertions; break;
    }
  }
  out.wer = static_cast<double>(out.edit_distance()) / nr;

  // Anchors: maximal match runs of at least anchor_min_len.
  int run_start = -1, run_len = 0;
  auto close_run = [&] {
    if (run_len >= anchor_min_len) out.anchors.push_back({run_start, run_len});
    run_start = -1;
    run_len = 0;
  };
  for (const EditOp& op : out.ops) {
    if (op.type == EditOpType::kMatch) {
      if (run_len == 0) run_start = op.ref_index;
      ++run_len;
    } else {
      close_run();
    }
  }
  close_run();
  return out;
}

std::vector<TimedToken> transfer_timestamps(const std::vector<Syllable>& ref,
                                            const EditAlignment& alignment,
                                            const std::vector<HypToken>& hyp,
                                            bool trust_substitutions) {
  std::vector<TimedToken> out(ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) out[i].syllable = ref[i];

  for (const EditOp& op : alignment.ops) {
    if (op.type != EditOpType::kMatch && op.type != EditOpType::kSubstitute) {
      continue;
    }
    if (op.type == EditOpType::kSubstitute && !trust_substitutions) continue;
    const HypToken& h = hyp.at(op.hyp_index);
    TimedToken& t = out.at(op.ref_index);
    t.start_s = h.start_s;
    t.end_s = h.start_s + h.dur_s;
    t.aligned = true;
  }
  return out;
}

std::vector<SilenceSpan> detect_internal_silences(
    const std::vector<TimedToken>& tokens, double min_gap_s) {
  if (min_gap_s <= 0.0) {
    throw Error("detect_internal_silences: min_gap_s must be positive");
  }
  std::vector<SilenceSpan> out;
  int prev = -1;
  for (int i = 0; i < static_cast<int>(tokens.size()); ++i) {
    if (!tokens[i].aligned) continue;
    if (prev >= 0) {
      const double gap = tokens[i].start_s - tokens[prev].end_s;
      if (gap >= min_gap_s) {
        SilenceSpan span;
        span.start_s = tokens[prev].end_s;
        span.end_s = tokens[i].start_s;
        span.after_ref_index = prev;
        out.push_back(span);
      }
    }
    prev = i;
  }
  return out;
}

}  // namespace ttsprep
