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

#include "tieup/lcs.h"

#include <algorithm>
#include <vector>

#include "tieup/utf8.h"

namespace tieup {

int LcsLength(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  // row[j] holds the LCS of the processed prefix of a and b[0, j).
  std::vector<int> row(b.size() + 1, 0);
  for (char32_t ca : a) {
    int diagonal = 0;
    for (size_t j = 1; j <= b.size(); ++j) {
      int above = row[j];
      row[j] = ca == b[j - 1] ? diagonal + 1 : std::max(above, row[j - 1]);
      diagonal = above;
    }
  }
  return row[b.size()];
}

int LcsLength(std::string_view a, std::string_view b) {
  return LcsLength(std::u32string_view(DecodeUtf8(a)),
                   std::u32string_view(DecodeUtf8(b)));
}

}  // namespace tieup
