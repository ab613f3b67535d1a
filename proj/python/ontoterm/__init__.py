# Copyright 2026 The ontoterm Authors.
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
"""Python interface to the ontoterm core.

Functions take plain strings (file contents, not paths) and return decoded
JSON structures. Errors raise OntotermError with the E_... code in `code`.
"""

import json

from . import _ontoterm
from ._ontoterm import OntotermError, __version__, mangle_label, run_pipeline

__all__ = [
    "OntotermError", "__version__", "error_code", "extract", "build_network",
    "apply_validation", "project", "check_consistency", "align_term",
    "compare_structures", "compare_recall", "to_owl", "to_kif", "mangle_label",
    "run_pipeline",
]


def error_code(exc):
    """E_... code carried by an OntotermError."""
    return exc.args[0] if exc.args else None


def _json(fn):
    def wrapper(*args, **kwargs):
        return json.loads(fn(*args, **kwargs))
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _text(value):
    return value if isinstance(value, str) else json.dumps(value)


def extract(documents, lexicon, patterns):
    return json.loads(_ontoterm.extract(documents, lexicon, patterns))


def build_network(documents, lexicon, candidates, declarations=""):
    return json.loads(_ontoterm.build_network(documents, lexicon, _text(candidates), declarations))


def apply_validation(lexnet, decisions):
    return json.loads(_ontoterm.apply_validation(_text(lexnet), decisions))


def project(lexnet):
    return json.loads(_ontoterm.project(_text(lexnet)))


check_consistency = _json(_ontoterm.check_consistency)
align_term = _json(_ontoterm.align_term)


def compare_structures(taxonomy, dsl, stopwords=None, lexicon=""):
    return json.loads(_ontoterm.compare_structures(_text(taxonomy), dsl, stopwords, lexicon))


def compare_recall(documents, candidates, taxonomy, dsl, label, stopwords=None, lexicon=""):
    return json.loads(_ontoterm.compare_recall(
        documents, _text(candidates), _text(taxonomy), dsl, label, stopwords, lexicon))


to_owl = _ontoterm.to_owl
to_kif = _ontoterm.to_kif
