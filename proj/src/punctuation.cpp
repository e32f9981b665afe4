// src/punctuation.cpp

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

#include "ttsprep/punctuation.hpp"

#include <algorithm>

namespace ttsprep {

std::optional<int> classify_silence(double duration_s,
                                    const PunctScheme& scheme) {
  const auto& b = scheme.boundaries_s;
  // [b0, b1], (b1, b2], (b2, b3], (b3, inf): closed left on the first
  // interval, half-open elsewhere.
  if (duration_s < b[0]) return std::nullopt;
  if (duration_s <= b[1]) return 1;
  if (duration_s <= b[2]) return 2;
  if (duration_s <= b[3]) return 3;
  return 4;
}

std::vector<Syllable> insert_punctuation(const std::vector<Syllable>& tokens,
                                         const std::vector<SilenceSpan>& silences,
                                         const PunctScheme& scheme) {
  // Markers for token index i, keyed by insertion position.
  std::vector<std::pair<int, int>> classified;  // (after_index, class)
  for (std::size_t s = 0; s < silences.size(); ++s) {
    const SilenceSpan& span = silences[s];
    if (span.after_ref_index < 0 ||
        span.after_ref_index >= static_cast<int>(tokens.size())) {
      throw Error("insert_punctuation: silence " + std::to_string(s) +
                  " follows token index " +
                  std::to_string(span.after_ref_index) + " outside 0.." +
                  std::to_string(tokens.size() - 1));
    }
    const auto cls = span.punct_class.has_value()
                         ? span.punct_class
                         : classify_silence(span.duration_s(), scheme);
    if (!cls.has_value()) continue;
    classified.emplace_back(span.after_ref_index, *cls);
  }
  std::stable_sort(classified.begin(), classified.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Syllable> out;
  out.reserve(tokens.size() + classified.size());
  std::size_t next = 0;
  for (int i = 0; i < static_cast<int>(tokens.size()); ++i) {
    out.push_back(tokens[i]);
    while (next < classified.size() && classified[next].first == i) {
      out.push_back({scheme.markers[classified[next].second - 1], true});
      ++next;
    }
  }
  return out;
}

}  // namespace ttsprep
