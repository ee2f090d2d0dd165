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

// Python bindings for the extraction pipeline and the scorer.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "tieup/error.h"
#include "tieup/lcs.h"
#include "tieup/pipeline.h"
#include "tieup/runner.h"
#include "tieup/scorer.h"
#include "tieup/templates.h"
#include "tieup/token.h"

namespace py = pybind11;

namespace tieup {
namespace {

Resources Load(const std::string &patterns, const std::string &concepts,
               const std::string &designators, const std::string &concept_map,
               const std::string &discourse_config) {
  RunConfig config;
  config.patterns = patterns;
  config.concepts = concepts;
  config.designators = designators;
  config.concept_map = concept_map;
  config.discourse_config = discourse_config;
  return LoadResources(config);
}

DocumentResult Process(const std::string &tokens, const Resources &resources,
                       bool discourse) {
  PipelineOptions options;
  options.discourse = discourse;
  return ProcessDocument(ParseDocument(tokens), resources, options);
}

py::dict MetricsDict(const ScoreCounts &counts) {
  const Metrics m = ComputeMetrics(counts);
  py::dict out;
  const std::pair<const char *, const Rational *> cells[] = {
      {"err", &m.err}, {"und", &m.und}, {"ovg", &m.ovg}, {"sub", &m.sub},
      {"rec", &m.rec}, {"pre", &m.pre}, {"pr", &m.pr}};
  for (const auto &[name, value] : cells) {
    out[name] = static_cast<double>(PercentTenths(*value)) / 10.0;
  }
  py::dict raw;
  raw["cor"] = counts.cor;
  raw["par"] = counts.par;
  raw["inc"] = counts.inc;
  raw["mis"] = counts.mis;
  raw["spu"] = counts.spu;
  out["counts"] = raw;
  return out;
}

}  // namespace
}  // namespace tieup

PYBIND11_MODULE(_tieup, m) {
  using namespace tieup;
  m.doc() = "Tie-up relationship extraction from tokenized news text.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<TemplateError>(m, "TemplateError", PyExc_ValueError);

  m.def(
      "lcs_length",
      [](const std::string &a, const std::string &b) {
        return LcsLength(std::string_view(a), std::string_view(b));
      },
      py::arg("a"), py::arg("b"),
      "Length of the longest common character subsequence of two strings.");

  py::class_<Resources>(m, "Resources")
      .def_static("load", &Load, py::arg("patterns"), py::arg("concepts") = "",
                  py::arg("designators") = "", py::arg("concept_map") = "",
                  py::arg("discourse_config") = "",
                  "Loads resource files; empty paths select the defaults.")
      .def_property_readonly("num_patterns", [](const Resources &r) {
        return r.patterns.size();
      });

  m.def(
      "extract",
      [](const std::string &tokens, const Resources &resources,
         bool discourse) {
        return SerializeTemplates(Process(tokens, resources, discourse).graph);
      },
      py::arg("tokens"), py::arg("resources"), py::arg("discourse") = true,
      "Runs the pipeline on one token-file document and returns its templates.");

  m.def(
      "dump",
      [](const std::string &tokens, const Resources &resources,
         const std::string &stage, bool discourse) {
        return DumpStage(Process(tokens, resources, discourse), stage);
      },
      py::arg("tokens"), py::arg("resources"), py::arg("stage"),
      py::arg("discourse") = true, "Text dump of one intermediate stage.");

  m.def("dump_stages", &DumpStages, "Names of the dumpable stages.");

  m.def(
      "unify_names",
      [](const std::vector<std::string> &names) {
        Document doc{"names", {{}}};
        for (const std::string &name : names) {
          doc.sentences[0].push_back(Token{name, std::string(pos::kCompany)});
          doc.sentences[0].push_back(Token{"と", std::string(pos::kParticle)});
        }
        doc.Renumber();
        CompanyRegistry r =
            UnifyCompanyReferences(BuildRegistry(doc, DiscourseConfig{}));
        std::vector<int> ids;
        for (const RegistryEntry &e : r.entries()) {
          if (e.alias_of == 0) ids.push_back(e.id);
        }
        return ids;
      },
      py::arg("names"),
      "Reference ids of company names given in text order; equal ids mean "
      "the same company.");

  m.def(
      "score",
      [](const std::string &response, const std::string &key) {
        return MetricsDict(
            AlignAndCount(ParseTemplates(response), ParseTemplates(key)).counts);
      },
      py::arg("response"), py::arg("key"),
      "Scores one response template document against a key.");

  m.def(
      "compute_metrics",
      [](int64_t cor, int64_t par, int64_t inc, int64_t mis, int64_t spu) {
        return MetricsDict(ScoreCounts{cor, par, inc, mis, spu});
      },
      py::arg("cor"), py::arg("par"), py::arg("inc"), py::arg("mis"),
      py::arg("spu"), "Percentages (one decimal) for a set of fill counts.");
}
