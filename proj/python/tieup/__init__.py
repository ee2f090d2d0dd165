# Copyright 2026 The Tieup Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Tie-up relationship extraction from tokenized news text."""

from tieup._tieup import (
    ParseError,
    Resources,
    TemplateError,
    compute_metrics,
    dump,
    dump_stages,
    extract,
    lcs_length,
    score,
    unify_names,
)

__all__ = [
    "ParseError",
    "Resources",
    "TemplateError",
    "compute_metrics",
    "dump",
    "dump_stages",
    "extract",
    "lcs_length",
    "score",
    "unify_names",
]
