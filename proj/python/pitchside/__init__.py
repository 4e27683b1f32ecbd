"""Python interface to the pitchside native core.

Structured arguments are plain dicts and lists; results come back the same
way. Library errors raise PitchsideError with `kind` and `index` attributes.
"""

import json
import os

from . import _core
from ._core import PitchsideError

__all__ = [
    "PitchsideError",
    "StatStore",
    "alignment_accuracy",
    "ground",
    "normalize_query",
    "reconcile",
    "replay",
    "segment",
    "structure_tally",
    "verify_text",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def replay(log, at, history_k=1, inclusive=False, lenient=False):
    """Match state at game time `at` ("H - MM:SS")."""
    return json.loads(_core.replay(_text(log), at, history_k, inclusive, lenient))


def reconcile(log, goals, window_s=60, lenient=False):
    """Merge goals from a secondary timeline into `log`; returns {log, report}."""
    return json.loads(_core.reconcile(_text(log), _text(goals), window_s, lenient))


def ground(bundle, fps=1.0, top_k=5):
    """Frame relevance weights from a cross-attention bundle."""
    return json.loads(_core.ground(_text(bundle), fps, top_k))


def segment(features_csv, threshold=16.0):
    """Shot boundaries from per-frame features given as CSV text."""
    return json.loads(_core.segment(features_csv, threshold))


def normalize_query(dsl):
    """Canonical printed form of a statistics query."""
    return _core.normalize_query(dsl)


def alignment_accuracy(records):
    return json.loads(_core.alignment_accuracy(_text(records)))


def structure_tally(labels):
    """Facet percentages from a numbered label list."""
    return json.loads(_core.structure_tally(labels))


class StatStore:
    """Statistics tables loaded from a directory of CSV files."""

    def __init__(self, directory):
        self._store = _core.StatStore.load(os.fspath(directory))

    def query(self, dsl):
        return json.loads(self._store.query(dsl))


def verify_text(body, log, at, team=None, actor=None, store=None, strict_scoreline=False):
    """Extract and check the numeric claims in one commentary line."""
    native = store._store if store is not None else None
    return json.loads(_core.verify_text(body, _text(log), at, team, actor, native, strict_scoreline))
