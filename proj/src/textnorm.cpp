// src/textnorm.cpp

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

#include "ttsprep/textnorm.hpp"

#include "utf8.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <utility>

namespace ttsprep {

namespace {

// --- Canonical composition over the Vietnamese alphabet --------------------
//
// Full NFC needs the whole Unicode database; transcript identity only needs
// the Vietnamese inventory (base vowels/d with breve, circumflex, horn and
// the five tone marks). The pair table below covers every composition
// reachable from that inventory, including the partially-composed starters
// that canonical reordering produces. Marks outside the table are left as
// they came.

struct ComposePair {
  char32_t starter, mark, composed;
};

constexpr ComposePair kComposeTable[] = {
    {0x0041, 0x0300, 0x00C0}, {0x0041, 0x0301, 0x00C1}, {0x0041, 0x0302, 0x00C2}, {0x0041, 0x0303, 0x00C3},
    {0x0041, 0x0306, 0x0102}, {0x0041, 0x0309, 0x1EA2}, {0x0041, 0x0323, 0x1EA0}, {0x0044, 0x0323, 0x1E0C},
    {0x0045, 0x0300, 0x00C8}, {0x0045, 0x0301, 0x00C9}, {0x0045, 0x0302, 0x00CA}, {0x0045, 0x0303, 0x1EBC},
    {0x0045, 0x0306, 0x0114}, {0x0045, 0x0309, 0x1EBA}, {0x0045, 0x0323, 0x1EB8}, {0x0049, 0x0300, 0x00CC},
    {0x0049, 0x0301, 0x00CD}, {0x0049, 0x0302, 0x00CE}, {0x0049, 0x0303, 0x0128}, {0x0049, 0x0306, 0x012C},
    {0x0049, 0x0309, 0x1EC8}, {0x0049, 0x0323, 0x1ECA}, {0x004F, 0x0300, 0x00D2}, {0x004F, 0x0301, 0x00D3},
    {0x004F, 0x0302, 0x00D4}, {0x004F, 0x0303, 0x00D5}, {0x004F, 0x0306, 0x014E}, {0x004F, 0x0309, 0x1ECE},
    {0x004F, 0x031B, 0x01A0}, {0x004F, 0x0323, 0x1ECC}, {0x0055, 0x0300, 0x00D9}, {0x0055, 0x0301, 0x00DA},
    {0x0055, 0x0302, 0x00DB}, {0x0055, 0x0303, 0x0168}, {0x0055, 0x0306, 0x016C}, {0x0055, 0x0309, 0x1EE6},
    {0x0055, 0x031B, 0x01AF}, {0x0055, 0x0323, 0x1EE4}, {0x0059, 0x0300, 0x1EF2}, {0x0059, 0x0301, 0x00DD},
    {0x0059, 0x0302, 0x0176}, {0x0059, 0x0303, 0x1EF8}, {0x0059, 0x0309, 0x1EF6}, {0x0059, 0x0323, 0x1EF4},
    {0x0061, 0x0300, 0x00E0}, {0x0061, 0x0301, 0x00E1}, {0x0061, 0x0302, 0x00E2}, {0x0061, 0x0303, 0x00E3},
    {0x0061, 0x0306, 0x0103}, {0x0061, 0x0309, 0x1EA3}, {0x0061, 0x0323, 0x1EA1}, {0x0064, 0x0323, 0x1E0D},
    {0x0065, 0x0300, 0x00E8}, {0x0065, 0x0301, 0x00E9}, {0x0065, 0x0302, 0x00EA}, {0x0065, 0x0303, 0x1EBD},
    {0x0065, 0x0306, 0x0115}, {0x0065, 0x0309, 0x1EBB}, {0x0065, 0x0323, 0x1EB9}, {0x0069, 0x0300, 0x00EC},
    {0x0069, 0x0301, 0x00ED}, {0x0069, 0x0302, 0x00EE}, {0x0069, 0x0303, 0x0129}, {0x0069, 0x0306, 0x012D},
    {0x0069, 0x0309, 0x1EC9}, {0x0069, 0x0323, 0x1ECB}, {0x006F, 0x0300, 0x00F2}, {0x006F, 0x0301, 0x00F3},
    {0x006F, 0x0302, 0x00F4}, {0x006F, 0x0303, 0x00F5}, {0x006F, 0x0306, 0x014F}, {0x006F, 0x0309, 0x1ECF},
    {0x006F, 0x031B, 0x01A1}, {0x006F, 0x0323, 0x1ECD}, {0x0075, 0x0300, 0x00F9}, {0x0075, 0x0301, 0x00FA},
    {0x0075, 0x0302, 0x00FB}, {0x0075, 0x0303, 0x0169}, {0x0075, 0x0306, 0x016D}, {0x0075, 0x0309, 0x1EE7},
    {0x0075, 0x031B, 0x01B0}, {0x0075, 0x0323, 0x1EE5}, {0x0079, 0x0300, 0x1EF3}, {0x0079, 0x0301, 0x00FD},
    {0x0079, 0x0302, 0x0177}, {0x0079, 0x0303, 0x1EF9}, {0x0079, 0x0309, 0x1EF7}, {0x0079, 0x0323, 0x1EF5},
    {0x00C2, 0x0300, 0x1EA6}, {0x00C2, 0x0301, 0x1EA4}, {0x00C2, 0x0303, 0x1EAA}, {0x00C2, 0x0309, 0x1EA8},
    {0x00CA, 0x0300, 0x1EC0}, {0x00CA, 0x0301, 0x1EBE}, {0x00CA, 0x0303, 0x1EC4}, {0x00CA, 0x0309, 0x1EC2},
    {0x00D4, 0x0300, 0x1ED2}, {0x00D4, 0x0301, 0x1ED0}, {0x00D4, 0x0303, 0x1ED6}, {0x00D4, 0x0309, 0x1ED4},
    {0x00D5, 0x0301, 0x1E4C}, {0x00E2, 0x0300, 0x1EA7}, {0x00E2, 0x0301, 0x1EA5}, {0x00E2, 0x0303, 0x1EAB},
    {0x00E2, 0x0309, 0x1EA9}, {0x00EA, 0x0300, 0x1EC1}, {0x00EA, 0x0301, 0x1EBF}, {0x00EA, 0x0303, 0x1EC5},
    {0x00EA, 0x0309, 0x1EC3}, {0x00F4, 0x0300, 0x1ED3}, {0x00F4, 0x0301, 0x1ED1}, {0x00F4, 0x0303, 0x1ED7},
    {0x00F4, 0x0309, 0x1ED5}, {0x00F5, 0x0301, 0x1E4D}, {0x0102, 0x0300, 0x1EB0}, {0x0102, 0x0301, 0x1EAE},
    {0x0102, 0x0303, 0x1EB4}, {0x0102, 0x0309, 0x1EB2}, {0x0103, 0x0300, 0x1EB1}, {0x0103, 0x0301, 0x1EAF},
    {0x0103, 0x0303, 0x1EB5}, {0x0103, 0x0309, 0x1EB3}, {0x0168, 0x0301, 0x1E78}, {0x0169, 0x0301, 0x1E79},
    {0x01A0, 0x0300, 0x1EDC}, {0x01A0, 0x0301, 0x1EDA}, {0x01A0, 0x0303, 0x1EE0}, {0x01A0, 0x0309, 0x1EDE},
    {0x01A0, 0x0323, 0x1EE2}, {0x01A1, 0x0300, 0x1EDD}, {0x01A1, 0x0301, 0x1EDB}, {0x01A1, 0x0303, 0x1EE1},
    {0x01A1, 0x0309, 0x1EDF}, {0x01A1, 0x0323, 0x1EE3}, {0x01AF, 0x0300, 0x1EEA}, {0x01AF, 0x0301, 0x1EE8},
    {0x01AF, 0x0303, 0x1EEE}, {0x01AF, 0x0309, 0x1EEC}, {0x01AF, 0x0323, 0x1EF0}, {0x01B0, 0x0300, 0x1EEB},
    {0x01B0, 0x0301, 0x1EE9}, {0x01B0, 0x0303, 0x1EEF}, {0x01B0, 0x0309, 0x1EED}, {0x01B0, 0x0323, 0x1EF1},
    {0x1EA0, 0x0302, 0x1EAC}, {0x1EA0, 0x0306, 0x1EB6}, {0x1EA1, 0x0302, 0x1EAD}, {0x1EA1, 0x0306, 0x1EB7},
    {0x1EB8, 0x0302, 0x1EC6}, {0x1EB9, 0x0302, 0x1EC7}, {0x1ECC, 0x0302, 0x1ED8}, {0x1ECD, 0x0302, 0x1ED9}};

constexpr std::pair<char32_t, char32_t> kLowercaseTable[] = {
    {0x00C0, 0x00E0}, {0x00C1, 0x00E1}, {0x00C2, 0x00E2}, {0x00C3, 0x00E3}, {0x00C8, 0x00E8}, {0x00C9, 0x00E9},
    {0x00CA, 0x00EA}, {0x00CC, 0x00EC}, {0x00CD, 0x00ED}, {0x00CE, 0x00EE}, {0x00D2, 0x00F2}, {0x00D3, 0x00F3},
    {0x00D4, 0x00F4}, {0x00D5, 0x00F5}, {0x00D9, 0x00F9}, {0x00DA, 0x00FA}, {0x00DB, 0x00FB}, {0x00DD, 0x00FD},
    {0x0102, 0x0103}, {0x0110, 0x0111}, {0x0114, 0x0115}, {0x0128, 0x0129}, {0x012C, 0x012D}, {0x014E, 0x014F},
    {0x0168, 0x0169}, {0x016C, 0x016D}, {0x0176, 0x0177}, {0x01A0, 0x01A1}, {0x01AF, 0x01B0}, {0x1E0C, 0x1E0D},
    {0x1E4C, 0x1E4D}, {0x1E78, 0x1E79}, {0x1EA0, 0x1EA1}, {0x1EA2, 0x1EA3}, {0x1EA4, 0x1EA5}, {0x1EA6, 0x1EA7},
    {0x1EA8, 0x1EA9}, {0x1EAA, 0x1EAB}, {0x1EAC, 0x1EAD}, {0x1EAE, 0x1EAF}, {0x1EB0, 0x1EB1}, {0x1EB2, 0x1EB3},
    {0x1EB4, 0x1EB5}, {0x1EB6, 0x1EB7}, {0x1EB8, 0x1EB9}, {0x1EBA, 0x1EBB}, {0x1EBC, 0x1EBD}, {0x1EBE, 0x1EBF},
    {0x1EC0, 0x1EC1}, {0x1EC2, 0x1EC3}, {0x1EC4, 0x1EC5}, {0x1EC6, 0x1EC7}, {0x1EC8, 0x1EC9}, {0x1ECA, 0x1ECB},
    {0x1ECC, 0x1ECD}, {0x1ECE, 0x1ECF}, {0x1ED0, 0x1ED1}, {0x1ED2, 0x1ED3}, {0x1ED4, 0x1ED5}, {0x1ED6, 0x1ED7},
    {0x1ED8, 0x1ED9}, {0x1EDA, 0x1EDB}, {0x1EDC, 0x1EDD}, {0x1EDE, 0x1EDF}, {0x1EE0, 0x1EE1}, {0x1EE2, 0x1EE3},
    {0x1EE4, 0x1EE5}, {0x1EE6, 0x1EE7}, {0x1EE8, 0x1EE9}, {0x1EEA, 0x1EEB}, {0x1EEC, 0x1EED}, {0x1EEE, 0x1EEF},
    {0x1EF0, 0x1EF1}, {0x1EF2, 0x1EF3}, {0x1EF4, 0x1EF5}, {0x1EF6, 0x1EF7}, {0x1EF8, 0x1EF9}};

int combining_class(char32_t cp) {
  switch (cp) {
    case 0x031B: return 216;  // horn
    case 0x0323: return 220;  // dot below
    case 0x0300: case 0x0301: case 0x0302: case 0x0303:
    case 0x0306: case 0x0309: return 230;
    default: return 0;
  }
}

char32_t compose_pair(char32_t starter, char32_t mark) {
  for (const ComposePair& p : kComposeTable) {
    if (p.starter == starter && p.mark == mark) return p.composed;
  }
  return 0;
}

// Canonical-orders runs of known combining marks, then folds them into
// their starters where the pair table allows.
std::u32string compose_vietnamese(const std::u32string& in) {
  std::u32string s = in;
  // Bubble adjacent marks into canonical order (stable for equal classes).
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && combining_class(s[j]) > 0 && combining_class(s[j - 1]) > 0 &&
           combining_class(s[j - 1]) > combining_class(s[j])) {
      std::swap(s[j - 1], s[j]);
      --j;
    }
  }
  std::u32string out;
  out.reserve(s.size());
  for (char32_t cp : s) {
    if (!out.empty() && combining_class(cp) > 0) {
      if (char32_t composed = compose_pair(out.back(), cp)) {
        out.back() = composed;
        continue;
      }
    }
    out.push_back(cp);
  }
  return out;
}

char32_t to_lower_cp(char32_t cp) {
  if (cp < 0x80) {
    return static_cast<char32_t>(
        std::tolower(static_cast<unsigned char>(cp)));
  }
  for (const auto& [upper, lower] : kLowercaseTable) {
    if (upper == cp) return lower;
  }
  return cp;
}

bool is_space_cp(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
         cp == 0x00A0 || cp == 0x2028 || cp == 0x2029;
}

bool is_covered_cp(char32_t cp) {
  if (cp < 0x80) return std::isalnum(static_cast<unsigned char>(cp)) != 0;
  if (cp == 0x0111 || cp == 0x0110) return true;  // đ Đ
  for (const ComposePair& p : kComposeTable) {
    if (p.composed == cp || p.starter == cp) return true;
  }
  for (const auto& [upper, lower] : kLowercaseTable) {
    if (upper == cp || lower == cp) return true;
  }
  return false;
}

}  // namespace

NormRuleSet default_norm_rules() {
  NormRuleSet rules;
  rules.digit_map = {{'0', "không"}, {'1', "một"}, {'2', "hai"},
                     {'3', "ba"},    {'4', "bốn"}, {'5', "năm"},
                     {'6', "sáu"},   {'7', "bảy"}, {'8', "tám"},
                     {'9', "chín"}};
  for (char c : std::string(R"(!"#$%&'()*+,-./:;<=>?@[\]^_`{|}~)")) {
    rules.strip_chars.insert(static_cast<char32_t>(c));
  }
  for (char32_t cp : {U'‘', U'’', U'“', U'”', U'…',
                      U'«', U'»', U'–', U'—', U'·',
                      U'‐', U'‑', U'¡', U'¿'}) {
    rules.strip_chars.insert(cp);
  }
  return rules;
}

std::vector<Syllable> normalize(const std::string& raw_text,
                                const NormRuleSet& rules,
                                std::vector<std::string>* warnings) {
  std::u32string cps = compose_vietnamese(utf8::decode(raw_text));
  for (char32_t& cp : cps) cp = to_lower_cp(cp);

  // Strip orthographic punctuation to spaces, then split.
  std::vector<std::u32string> raw_tokens;
  std::u32string cur;
  for (char32_t cp : cps) {
    if (is_space_cp(cp) || rules.strip_chars.count(cp)) {
      if (!cur.empty()) raw_tokens.push_back(std::exchange(cur, {}));
    } else {
      cur.push_back(cp);
    }
  }
  if (!cur.empty()) raw_tokens.push_back(cur);

  std::vector<Syllable> out;
  for (const std::u32string& tok32 : raw_tokens) {
    std::string tok = utf8::encode(tok32);
    if (auto it = rules.abbreviation_map.find(tok);
        it != rules.abbreviation_map.end()) {
      for (const std::string& part : it->second) {
        out.push_back({part, false});
      }
      continue;
    }
    // Digit runs expand digit-by-digit; other runs stay one syllable.
    std::u32string run;
    bool opaque = false;
    auto flush_run = [&] {
      if (!run.empty()) out.push_back({utf8::encode(run), false});
      run.clear();
    };
    for (char32_t cp : tok32) {
      if (cp < 0x80 && std::isdigit(static_cast<unsigned char>(cp))) {
        flush_run();
        auto it = rules.digit_map.find(static_cast<char>(cp));
        if (it != rules.digit_map.end()) {
          out.push_back({it->second, false});
        } else {
          out.push_back({std::string(1, static_cast<char>(cp)), false});
        }
      } else {
        if (!is_covered_cp(cp)) opaque = true;
        run.push_back(cp);
      }
    }
    flush_run();
    if (opaque && warnings) {
      warnings->push_back("opaque token kept as-is: " + tok);
    }
  }
  return out;
}

}  // namespace ttsprep
