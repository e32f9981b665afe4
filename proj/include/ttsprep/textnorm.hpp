// include/ttsprep/textnorm.hpp

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

#ifndef TTSPREP_TEXTNORM_HPP_
#define TTSPREP_TEXTNORM_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ttsprep/types.hpp"

namespace ttsprep {

/// Rule set for transcript normalization. All mapped outputs must be
/// whitespace-free syllables.
struct NormRuleSet {
  std::map<char, std::string> digit_map;                       // '0'..'9'
  std::map<std::string, std::vector<std::string>> abbreviation_map;
  std::set<char32_t> strip_chars;  // orthographic punctuation to remove
};

/// Vietnamese digit words plus a conventional punctuation strip set.
/// The abbreviation table is empty by default; supply project-specific
/// entries through the config file.
NormRuleSet default_norm_rules();

/// Lowercases, canonically composes Vietnamese diacritics (NFC over the
/// Vietnamese alphabet; other scripts pass through untouched), strips
/// orthographic punctuation, expands digits and known abbreviations, and
/// splits on whitespace. Tokens the rules do not cover pass through as
/// opaque syllables; a note per such token is appended to `warnings` when
/// given. Output syllables always have is_marker == false.
std::vector<Syllable> normalize(const std::string& raw_text,
                                const NormRuleSet& rules,
                                std::vector<std::string>* warnings = nullptr);

}  // namespace ttsprep

#endif  // TTSPREP_TEXTNORM_HPP_
