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

#ifndef TIEUP_SCORER_H_
#define TIEUP_SCORER_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tieup/templates.h"

namespace tieup {

// Exact non-negative-denominator fraction, always in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t num, int64_t den = 1);  // NOLINT: implicit from integers

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }
  double ToDouble() const { return static_cast<double>(num_) / den_; }
  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational &a, const Rational &b);
  friend Rational operator-(const Rational &a, const Rational &b);
  friend Rational operator*(const Rational &a, const Rational &b);
  friend Rational operator/(const Rational &a, const Rational &b);
  friend bool operator==(const Rational &a, const Rational &b) = default;
  friend std::strong_ordering operator<=>(const Rational &a,
                                          const Rational &b);

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

// Percentage in tenths, rounded half up: 0.6375 -> 638.
int64_t PercentTenths(const Rational &r);
// "63.8"
std::string FormatPercent(const Rational &r);

struct ScoreCounts {
  int64_t cor = 0;
  int64_t par = 0;
  int64_t inc = 0;
  int64_t mis = 0;
  int64_t spu = 0;

  int64_t possible() const { return cor + par + inc + mis; }
  int64_t actual() const { return cor + par + inc + spu; }
  ScoreCounts &operator+=(const ScoreCounts &o);
  bool operator==(const ScoreCounts &o) const = default;
};

struct Metrics {
  enum Flag : unsigned {
    kErr = 1u << 0,
    kUnd = 1u << 1,
    kOvg = 1u << 2,
    kSub = 1u << 3,
    kRec = 1u << 4,
    kPre = 1u << 5,
    kPr = 1u << 6,
  };

  Rational err, und, ovg, sub, rec, pre, pr;
  unsigned undefined = 0;  // Flag bits of metrics whose ratio was 0/0

  bool is_undefined(Flag f) const { return (undefined & f) != 0; }
};

// Harmonic mean 2*rec*pre/(rec+pre); 0 when both are 0.
Rational FMeasure(const Rational &rec, const Rational &pre,
                  bool *undefined = nullptr);

Metrics ComputeMetrics(const ScoreCounts &counts);

enum class FillResult { kCorrect, kPartial, kIncorrect, kMissing, kSpurious };

std::string_view FillResultName(FillResult r);  // COR, PAR, ...

struct FillRecord {
  std::string key_object;       // "<ENTITY-1>" or empty
  std::string response_object;  // "<ENTITY-2>" or empty
  std::string slot;
  std::string key_value;
  std::string response_value;
  FillResult result = FillResult::kCorrect;
};

// Response object -> key object.
using Alignment = std::map<ObjectRef, ObjectRef>;

struct ScoreResult {
  ScoreCounts counts;
  Alignment alignment;
  std::vector<FillRecord> fills;
};

// Counts every fill of both graphs under a fixed object alignment.
ScoreResult CountFills(const TemplateGraph &response, const TemplateGraph &key,
                       const Alignment &alignment);

// Greedy alignment, type by type (referenced types first). Within a type the
// pair with the most correct fills (then partial fills) is aligned first;
// ties go to the lower response then key number. Pairs sharing no correct
// or partial fill stay unaligned.
Alignment AlignObjects(const TemplateGraph &response, const TemplateGraph &key);

ScoreResult AlignAndCount(const TemplateGraph &response,
                          const TemplateGraph &key);

// Per-document aligned-slot listings followed by the metrics table (percent)
// with a TOTAL row over the pooled counts.
std::string FormatScoreReport(
    const std::vector<std::pair<std::string, ScoreResult>> &documents);

}  // namespace tieup

#endif  // TIEUP_SCORER_H_
