"""Lee-Yang zeros of one-dimensional Ising chains through CMV matrices.

Models and run configurations use the same JSON layout as the ``leeyang``
command-line tool, passed here as plain dicts.
"""

import json as _json

from ._leeyang import *  # noqa: F401,F403
from ._leeyang import LeeyangError, _build_model, _run_verify


def build_model(spec=None, **fields):
    """Build a model from a ModelSpec dict, e.g. ``build_model(kind="cat-map", length=200)``."""
    merged = dict(spec or {})
    merged.update(fields)
    return _build_model(_json.dumps(merged))


def verify(config=None):
    """Run the identity checks; returns the report as a dict."""
    return _json.loads(_run_verify(_json.dumps(config or {})))


__all__ = [name for name in dir() if not name.startswith("_")]
