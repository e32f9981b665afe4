// src/types.cpp

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

#include "ttsprep/types.hpp"

namespace ttsprep {

const char* reject_reason_name(RejectReason reason) {
  switch (reason) {
    case RejectReason::kWerFilter: return "wer_filter";
    case RejectReason::kArticulation: return "articulation";
    case RejectReason::kStdSylDur: return "std_syl_dur";
    case RejectReason::kNonFluency: return "non_fluency";
    case RejectReason::kStdF0: return "std_f0";
    case RejectReason::kProcessingFailure: return "processing_failure";
  }
  return "unknown";
}

std::optional<RejectReason> reject_reason_from_name(std::string_view name) {
  for (RejectReason r : {RejectReason::kWerFilter, RejectReason::kArticulation,
                         RejectReason::kStdSylDur, RejectReason::kNonFluency,
                         RejectReason::kStdF0,
                         RejectReason::kProcessingFailure}) {
    if (name == reject_reason_name(r)) return r;
  }
  return std::nullopt;
}

std::string join_syllables(const std::vector<Syllable>& tokens) {
  std::string out;
  for (const Syllable& s : tokens) {
    if (!out.empty()) out += ' ';
    out += s.text;
  }
  return out;
}

}  // namespace ttsprep
