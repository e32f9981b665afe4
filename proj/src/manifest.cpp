// src/manifest.cpp

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

#include "ttsprep/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace ttsprep {

std::vector<UtteranceRecord> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open manifest: " + path.string());

  std::vector<UtteranceRecord> records;
  std::set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    auto tab1 = line.find('\t');
    auto tab2 = tab1 == std::string::npos ? std::string::npos
                                          : line.find('\t', tab1 + 1);
    if (tab1 == std::string::npos || tab2 == std::string::npos) {
      throw Error("manifest line " + std::to_string(line_no) +
                  ": expected id<TAB>audio_path<TAB>text");
    }
    UtteranceRecord rec;
    rec.id = line.substr(0, tab1);
    rec.audio_path = line.substr(tab1 + 1, tab2 - tab1 - 1);
    rec.raw_text = line.substr(tab2 + 1);
    if (rec.id.empty()) {
      throw Error("manifest line " + std::to_string(line_no) + ": empty id");
    }
    if (!seen.insert(rec.id).second) {
      throw Error("duplicate utterance id: " + rec.id);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

namespace {

std::string manifest_text(const UtteranceRecord& rec) {
  if (!rec.punct_tokens.empty()) return join_syllables(rec.punct_tokens);
  if (!rec.norm_tokens.empty()) return join_syllables(rec.norm_tokens);
  return rec.raw_text;
}

}  // namespace

void save_manifest(const std::vector<UtteranceRecord>& records,
                   const std::filesystem::path& path, bool kept_only) {
  std::vector<const UtteranceRecord*> ordered;
  ordered.reserve(records.size());
  for (const UtteranceRecord& rec : records) {
    if (kept_only && !rec.verdict.kept()) continue;
    ordered.push_back(&rec);
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const auto* a, const auto* b) { return a->id < b->id; });

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write manifest: " + path.string());
  for (const UtteranceRecord* rec : ordered) {
    out << rec->id << '\t' << rec->audio_path << '\t' << manifest_text(*rec)
        << '\n';
  }
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace ttsprep
