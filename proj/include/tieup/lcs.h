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

#ifndef TIEUP_LCS_H_
#define TIEUP_LCS_H_

#include <string>
#include <string_view>

namespace tieup {

// Length of the longest common subsequence of two code-point sequences,
// computed with the Wagner-Fischer dynamic program in O(|a|*|b|) time and
// O(min(|a|,|b|)) space.
int LcsLength(std::u32string_view a, std::u32string_view b);

// UTF-8 convenience overload; lengths are counted in characters.
int LcsLength(std::string_view a, std::string_view b);

}  // namespace tieup

#endif  // TIEUP_LCS_H_
