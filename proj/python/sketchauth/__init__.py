# Copyright 2026 The Sketchauth Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Sketch-based two-factor authentication.

Stroke documents are plain dicts in the stroke file format::

    {"canvas": {"w": 240, "h": 320}, "strokes": [[[x, y], ...], ...]}
"""

import json

from ._core import (
    SketchAuthError,
    gaussian_weight,
    password_space,
    validate_text_password,
)
from . import _core

__all__ = [
    "Authenticator",
    "SketchAuthError",
    "analyze",
    "gaussian_weight",
    "match",
    "palette",
    "password_space",
    "validate_text_password",
]


def _config_text(config):
    return "" if config is None else json.dumps(config)


def palette():
    """The shipped object palette as {"objects": [...]}."""
    return json.loads(_core.palette_json())


def analyze(doc, config=None):
    """Feature set of one stroke document."""
    return json.loads(_core.analyze_json(json.dumps(doc), _config_text(config)))


def match(candidate, template, config=None):
    """Match report for two stroke documents."""
    return json.loads(
        _core.match_json(json.dumps(candidate), json.dumps(template), _config_text(config)))


class Authenticator:
    """Registration and authentication against a store directory."""

    def __init__(self, store_dir, config=None):
        self._impl = _core.Authenticator(str(store_dir), _config_text(config))

    def register(self, username, password, selection, drawings):
        self._impl.register(username, password, list(selection),
                            [json.dumps(d) for d in drawings])

    def authenticate(self, username, password, drawings):
        return self._impl.authenticate(username, password,
                                       [json.dumps(d) for d in drawings])
