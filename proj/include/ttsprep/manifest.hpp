// include/ttsprep/manifest.hpp

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

#ifndef TTSPREP_MANIFEST_HPP_
#define TTSPREP_MANIFEST_HPP_

#include <filesystem>
#include <vector>

#include "ttsprep/types.hpp"

namespace ttsprep {

/// Reads a tab-separated manifest: one `id<TAB>audio_path<TAB>raw_text`
/// line per utterance, UTF-8, LF endings. Blank lines are skipped.
/// Throws Error on a duplicate id (naming it) or a malformed line
/// (naming the line number). Input order is preserved.
std::vector<UtteranceRecord> load_manifest(const std::filesystem::path& path);

/// Writes records as manifest lines sorted by id. The text column is the
/// most processed text available: punctuated tokens if present, else
/// normalized tokens, else the raw text. With kept_only, rejected records
/// are omitted.
void save_manifest(const std::vector<UtteranceRecord>& records,
                   const std::filesystem::path& path, bool kept_only);

}  // namespace ttsprep

#endif  // TTSPREP_MANIFEST_HPP_
