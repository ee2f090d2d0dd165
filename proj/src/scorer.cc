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

#include "tieup/scorer.h"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "tieup/utf8.h"

namespace tieup {

namespace {

using Wide = __int128;

// Lowest terms with a positive denominator.
std::pair<Wide, Wide> LowestTerms(Wide num, Wide den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return {num, den};
}

Rational Reduce(Wide num, Wide den) {
  auto [n, d] = LowestTerms(num, den);
  if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX) {
    throw std::overflow_error("rational overflow");
  }
  return Rational(static_cast<int64_t>(n), static_cast<int64_t>(d));
}

Rational Ratio(int64_t num, int64_t den, unsigned flag, unsigned &undefined) {
  if (den == 0) {
    undefined |= flag;
    return Rational(0);
  }
  return Rational(num, den);
}

std::string Normalize(std::string_view s) {
  std::string out;
  for (const std::string &piece : SplitWhitespace(s)) {
    if (!out.empty()) out += ' ';
    out += piece;
  }
  return out;
}

std::string ValueText(const SlotValue &v) {
  if (const auto *ref = std::get_if<ObjectRef>(&v)) return ref->ToString();
  return std::get<std::string>(v);
}

FillResult Compare(const SlotValue &key, const SlotValue &response,
                   const Alignment &alignment) {
  const auto *key_ref = std::get_if<ObjectRef>(&key);
  const auto *resp_ref = std::get_if<ObjectRef>(&response);
  if (key_ref != nullptr && resp_ref != nullptr) {
    auto it = alignment.find(*resp_ref);
    return it != alignment.end() && it->second == *key_ref
               ? FillResult::kCorrect
               : FillResult::kIncorrect;
  }
  if (key_ref != nullptr || resp_ref != nullptr) return FillResult::kIncorrect;
  const std::string &k = std::get<std::string>(key);
  const std::string &r = std::get<std::string>(response);
  if (k == r) return FillResult::kCorrect;
  std::string nk = Normalize(k);
  std::string nr = Normalize(r);
  if (!nk.empty() && !nr.empty() &&
      (nk.find(nr) != std::string::npos || nr.find(nk) != std::string::npos)) {
    return FillResult::kPartial;
  }
  return FillResult::kIncorrect;
}

void Tally(ScoreCounts &counts, FillResult r) {
  switch (r) {
    case FillResult::kCorrect:
      ++counts.cor;
      break;
    case FillResult::kPartial:
      ++counts.par;
      break;
    case FillResult::kIncorrect:
      ++counts.inc;
      break;
    case FillResult::kMissing:
      ++counts.mis;
      break;
    case FillResult::kSpurious:
      ++counts.spu;
      break;
  }
}

// Scores one slot of an aligned pair. Either side may be absent.
void CompareSlot(const std::string &name, const Slot *key_slot,
                 const Slot *resp_slot, const std::string &key_obj,
                 const std::string &resp_obj, const Alignment &alignment,
                 ScoreResult &result) {
  static const std::vector<SlotValue> kNone;
  const std::vector<SlotValue> &kv = key_slot ? key_slot->values : kNone;
  const std::vector<SlotValue> &rv = resp_slot ? resp_slot->values : kNone;
  std::vector<int> pair_of(kv.size(), -1);
  std::vector<bool> used(rv.size(), false);
  std::vector<FillResult> outcome(kv.size(), FillResult::kMissing);

  for (FillResult wanted : {FillResult::kCorrect, FillResult::kPartial}) {
    for (size_t k = 0; k < kv.size(); ++k) {
      if (pair_of[k] >= 0) continue;
      for (size_t r = 0; r < rv.size(); ++r) {
        if (used[r] || Compare(kv[k], rv[r], alignment) != wanted) continue;
        pair_of[k] = static_cast<int>(r);
        used[r] = true;
        outcome[k] = wanted;
        break;
      }
    }
  }
  size_t next = 0;
  for (size_t k = 0; k < kv.size(); ++k) {
    if (pair_of[k] >= 0) continue;
    while (next < rv.size() && used[next]) ++next;
    if (next < rv.size()) {
      pair_of[k] = static_cast<int>(next);
      used[next] = true;
      outcome[k] = FillResult::kIncorrect;
    }
  }
  for (size_t k = 0; k < kv.size(); ++k) {
    FillRecord rec{key_obj, pair_of[k] >= 0 ? resp_obj : "", name,
                   ValueText(kv[k]),
                   pair_of[k] >= 0 ? ValueText(rv[pair_of[k]]) : "",
                   outcome[k]};
    Tally(result.counts, outcome[k]);
    result.fills.push_back(std::move(rec));
  }
  for (size_t r = 0; r < rv.size(); ++r) {
    if (used[r]) continue;
    Tally(result.counts, FillResult::kSpurious);
    result.fills.push_back(FillRecord{"", resp_obj, name, "", ValueText(rv[r]),
                                      FillResult::kSpurious});
  }
}

void ComparePair(const TemplateObject *key, const TemplateObject *resp,
                 const Alignment &alignment, ScoreResult &result) {
  std::vector<std::string> names;
  for (const TemplateObject *o : {key, resp}) {
    if (o == nullptr) continue;
    for (const Slot &s : o->slots) {
      if (std::find(names.begin(), names.end(), s.name) == names.end()) {
        names.push_back(s.name);
      }
    }
  }
  const std::string key_name = key ? key->ref().ToString() : "";
  const std::string resp_name = resp ? resp->ref().ToString() : "";
  for (const std::string &name : names) {
    CompareSlot(name, key ? key->FindSlot(name) : nullptr,
                resp ? resp->FindSlot(name) : nullptr, key_name, resp_name,
                alignment, result);
  }
}

std::vector<std::string> TypesInDependencyOrder(const TemplateGraph &a,
                                                const TemplateGraph &b) {
  std::map<std::string, std::set<std::string>> deps;
  for (const TemplateGraph *g : {&a, &b}) {
    for (const TemplateObject &o : g->objects) {
      auto &d = deps[o.type];
      for (const Slot &s : o.slots) {
        for (const SlotValue &v : s.values) {
          if (const auto *ref = std::get_if<ObjectRef>(&v);
              ref != nullptr && ref->type != o.type) {
            d.insert(ref->type);
          }
        }
      }
    }
  }
  std::vector<std::string> order;
  std::set<std::string> done;
  while (done.size() < deps.size()) {
    std::string pick;
    for (const auto &[type, d] : deps) {
      if (done.contains(type)) continue;
      bool ready = std::all_of(d.begin(), d.end(), [&](const std::string &t) {
        return done.contains(t) || !deps.contains(t);
      });
      if (ready) {
        pick = type;
        break;
      }
    }
    if (pick.empty()) {
      for (const auto &[type, d] : deps) {
        if (!done.contains(type)) {
          pick = type;
          break;
        }
      }
    }
    done.insert(pick);
    order.push_back(pick);
  }
  return order;
}

}  // namespace

Rational::Rational(int64_t num, int64_t den) {
  auto [n, d] = LowestTerms(num, den);
  num_ = static_cast<int64_t>(n);
  den_ = static_cast<int64_t>(d);
}

Rational operator+(const Rational &a, const Rational &b) {
  return Reduce(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_,
                Wide(a.den_) * b.den_);
}

Rational operator-(const Rational &a, const Rational &b) {
  return Reduce(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_,
                Wide(a.den_) * b.den_);
}

Rational operator*(const Rational &a, const Rational &b) {
  return Reduce(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational operator/(const Rational &a, const Rational &b) {
  return Reduce(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
  Wide lhs = Wide(a.num_) * b.den_;
  Wide rhs = Wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int64_t PercentTenths(const Rational &r) {
  // floor(r * 1000 + 1/2) for r >= 0.
  Wide num = Wide(r.num()) * 2000 + r.den();
  Wide den = Wide(r.den()) * 2;
  Wide q = num / den;
  if (num % den != 0 && num < 0) --q;
  return static_cast<int64_t>(q);
}

std::string FormatPercent(const Rational &r) {
  int64_t tenths = PercentTenths(r);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%lld.%lld", tenths < 0 ? "-" : "",
                static_cast<long long>(std::abs(tenths) / 10),
                static_cast<long long>(std::abs(tenths) % 10));
  return buf;
}

ScoreCounts &ScoreCounts::operator+=(const ScoreCounts &o) {
  cor += o.cor;
  par += o.par;
  inc += o.inc;
  mis += o.mis;
  spu += o.spu;
  return *this;
}

Rational FMeasure(const Rational &rec, const Rational &pre, bool *undefined) {
  Rational sum = rec + pre;
  if (undefined != nullptr) *undefined = sum.is_zero();
  if (sum.is_zero()) return Rational(0);
  return Rational(2) * rec * pre / sum;
}

Metrics ComputeMetrics(const ScoreCounts &c) {
  Metrics m;
  const int64_t total = c.cor + c.par + c.inc + c.mis + c.spu;
  const int64_t hits2 = 2 * c.cor + c.par;  // 2 * (COR + PAR/2)
  m.err = Ratio(2 * (c.inc + c.mis + c.spu) + c.par, 2 * total, Metrics::kErr,
                m.undefined);
  m.und = Ratio(c.mis, c.possible(), Metrics::kUnd, m.undefined);
  m.ovg = Ratio(c.spu, c.actual(), Metrics::kOvg, m.undefined);
  m.sub = Ratio(2 * c.inc + c.par, 2 * (c.cor + c.par + c.inc), Metrics::kSub,
                m.undefined);
  m.rec = Ratio(hits2, 2 * c.possible(), Metrics::kRec, m.undefined);
  m.pre = Ratio(hits2, 2 * c.actual(), Metrics::kPre, m.undefined);
  bool pr_undefined = false;
  m.pr = FMeasure(m.rec, m.pre, &pr_undefined);
  if (pr_undefined) m.undefined |= Metrics::kPr;
  return m;
}

std::string_view FillResultName(FillResult r) {
  switch (r) {
    case FillResult::kCorrect:
      return "COR";
    case FillResult::kPartial:
      return "PAR";
    case FillResult::kIncorrect:
      return "INC";
    case FillResult::kMissing:
      return "MIS";
    case FillResult::kSpurious:
      return "SPU";
  }
  return "";
}

ScoreResult CountFills(const TemplateGraph &response, const TemplateGraph &key,
                       const Alignment &alignment) {
  ScoreResult result;
  result.alignment = alignment;
  std::set<ObjectRef> aligned_keys;
  for (const auto &[r, k] : alignment) aligned_keys.insert(k);

  for (const TemplateObject &k : key.objects) {
    const TemplateObject *partner = nullptr;
    for (const auto &[r, kr] : alignment) {
      if (kr == k.ref()) partner = response.Find(r);
    }
    ComparePair(&k, partner, alignment, result);
  }
  for (const TemplateObject &r : response.objects) {
    auto it = alignment.find(r.ref());
    if (it != alignment.end() && key.Find(it->second) != nullptr) continue;
    ComparePair(nullptr, &r, alignment, result);
  }
  return result;
}

Alignment AlignObjects(const TemplateGraph &response,
                       const TemplateGraph &key) {
  Alignment alignment;
  for (const std::string &type : TypesInDependencyOrder(response, key)) {
    std::vector<const TemplateObject *> resp = response.OfType(type);
    std::vector<const TemplateObject *> keys = key.OfType(type);
    struct Candidate {
      int64_t cor, par;
      int resp_number, key_number;
      const TemplateObject *r, *k;
    };
    std::vector<Candidate> candidates;
    for (const TemplateObject *r : resp) {
      for (const TemplateObject *k : keys) {
        ScoreResult pair;
        ComparePair(k, r, alignment, pair);
        if (pair.counts.cor + pair.counts.par == 0) continue;
        candidates.push_back(
            {pair.counts.cor, pair.counts.par, r->number, k->number, r, k});
      }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate &a, const Candidate &b) {
                return std::tie(b.cor, b.par, a.resp_number, a.key_number) <
                       std::tie(a.cor, a.par, b.resp_number, b.key_number);
              });
    std::set<int> taken_resp;
    std::set<int> taken_key;
    for (const Candidate &c : candidates) {
      if (taken_resp.contains(c.resp_number) ||
          taken_key.contains(c.key_number)) {
        continue;
      }
      taken_resp.insert(c.resp_number);
      taken_key.insert(c.key_number);
      alignment.emplace(c.r->ref(), c.k->ref());
    }
  }
  return alignment;
}

ScoreResult AlignAndCount(const TemplateGraph &response,
                          const TemplateGraph &key) {
  return CountFills(response, key, AlignObjects(response, key));
}

std::string FormatScoreReport(
    const std::vector<std::pair<std::string, ScoreResult>> &documents) {
  std::string out;
  for (const auto &[doc_id, result] : documents) {
    out += "== " + doc_id + "\n";
    for (const FillRecord &f : result.fills) {
      std::string line = "  ";
      line += FillResultName(f.result);
      line += "  ";
      line += (f.key_object.empty() ? "-" : f.key_object);
      line += " / ";
      line += (f.response_object.empty() ? "-" : f.response_object);
      line += "  " + f.slot + ": ";
      line += f.key_value.empty() ? "-" : f.key_value;
      line += " | ";
      line += f.response_value.empty() ? "-" : f.response_value;
      out += line + "\n";
    }
    out += "\n";
  }

  auto row = [](const std::string &label, const ScoreCounts &c) {
    Metrics m = ComputeMetrics(c);
    const std::pair<const Rational *, Metrics::Flag> cells[] = {
        {&m.err, Metrics::kErr}, {&m.und, Metrics::kUnd},
        {&m.ovg, Metrics::kOvg}, {&m.sub, Metrics::kSub},
        {&m.rec, Metrics::kRec}, {&m.pre, Metrics::kPre},
        {&m.pr, Metrics::kPr}};
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%-16s", label.c_str());
    std::string line = buf;
    for (const auto &[value, flag] : cells) {
      std::string cell = FormatPercent(*value);
      if (m.is_undefined(flag)) cell += "*";
      std::snprintf(buf, sizeof(buf), "%7s", cell.c_str());
      line += buf;
    }
    return line + "\n";
  };

  char header[128];
  std::snprintf(header, sizeof(header), "%-16s%7s%7s%7s%7s%7s%7s%7s\n", "DOC",
                "ERR", "UND", "OVG", "SUB", "REC", "PRE", "P&R");
  out += header;
  ScoreCounts total;
  bool any_undefined = false;
  for (const auto &[doc_id, result] : documents) {
    out += row(doc_id, result.counts);
    any_undefined |= ComputeMetrics(result.counts).undefined != 0;
    total += result.counts;
  }
  out += row("TOTAL", total);
  any_undefined |= ComputeMetrics(total).undefined != 0;
  if (any_undefined) out += "* 0/0, reported as 0\n";
  return out;
}

}  // namespace tieup
