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

#ifndef TIEUP_ERROR_H_
#define TIEUP_ERROR_H_

#include <stdexcept>
#include <string>

namespace tieup {

// Raised by every file-format reader. Line numbers are 1-based; 0 means the
// error is not tied to a particular line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string &message, int line)
      : std::runtime_error(line > 0
                               ? "line " + std::to_string(line) + ": " + message
                               : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace tieup

#endif  // TIEUP_ERROR_H_
