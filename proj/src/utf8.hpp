// src/utf8.hpp

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

#ifndef TTSPREP_SRC_UTF8_HPP_
#define TTSPREP_SRC_UTF8_HPP_

#include <string>

namespace ttsprep::utf8 {

// Malformed byte sequences decode to U+FFFD, one replacement per bad byte.
std::u32string decode(const std::string& s);

void encode(char32_t cp, std::string& out);
std::string encode(const std::u32string& s);

}  // namespace ttsprep::utf8

#endif  // TTSPREP_SRC_UTF8_HPP_
