// include/ttsprep/punctuation.hpp

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

#ifndef TTSPREP_PUNCTUATION_HPP_
#define TTSPREP_PUNCTUATION_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ttsprep/types.hpp"

namespace ttsprep {

/// Four prosodic pause classes keyed by silence duration:
/// [b0, b1], (b1, b2], (b2, b3], (b3, inf). Class 4 doubles as the flag
/// for bad pauses caused by non-fluency. Markers are reserved multi-char
/// token strings so they survive any text encoding; keep them distinct
/// from every real syllable.
struct PunctScheme {
  std::array<double, 4> boundaries_s{0.12, 0.15, 0.21, 0.27};
  std::array<std::string, 4> markers{"<p1>", "<p2>", "<p3>", "<p4>"};
};

/// Pause class for a silence duration, or empty below the class floor.
/// Interval membership matches the boundary spec exactly: 0.12 and 0.15
/// map to class 1, 0.21 to 2, 0.27 to 3, anything above 0.27 to 4.
std::optional<int> classify_silence(double duration_s,
                                    const PunctScheme& scheme);

/// Inserts one marker syllable (is_marker = true) directly after the
/// token each classified silence follows. Unclassified silences insert
/// nothing; original token order is preserved, so stripping markers
/// recovers the input exactly. Throws Error when a silence's
/// after_ref_index is outside the token range.
std::vector<Syllable> insert_punctuation(const std::vector<Syllable>& tokens,
                                         const std::vector<SilenceSpan>& silences,
                                         const PunctScheme& scheme);

}  // namespace ttsprep

#endif  // TTSPREP_PUNCTUATION_HPP_
