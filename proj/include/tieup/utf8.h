// Copyright 2026 The Tieup Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TIEUP_UTF8_H_
#define TIEUP_UTF8_H_

#include <string>
#include <string_view>
#include <vector>

namespace tieup {

// Decodes UTF-8 into code points. Throws std::invalid_argument on malformed
// input.
std::u32string DecodeUtf8(std::string_view text);

// Encodes code points as UTF-8.
std::string EncodeUtf8(std::u32string_view text);

// Number of code points in a UTF-8 string.
size_t Utf8Length(std::string_view text);

// True if every character is an ASCII letter (and the string is non-empty).
bool IsAsciiWord(std::string_view text);

// Maximal runs of ASCII letters inside `text`, in order of appearance.
std::vector<std::string> AsciiWords(std::string_view text);

// Splits on ASCII whitespace, dropping empty pieces.
std::vector<std::string> SplitWhitespace(std::string_view text);

std::string_view Trim(std::string_view text);

}  // namespace tieup

#endif  // TIEUP_UTF8_H_
