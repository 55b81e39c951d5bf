"""Exact weighted Dyck path computations: series, enumeration, bijections and checks."""

import json

from . import _core
from ._core import ValleyError, count, enumerate, oracle, render, run_cli, series, suites

__all__ = [
    "ValleyError",
    "apply",
    "count",
    "decorated",
    "enumerate",
    "oracle",
    "render",
    "run_cli",
    "series",
    "suites",
    "verify",
]


def decorated(map_name, n):
    return json.loads(_core.decorated(map_name, n))


def apply(map_name, obj):
    """Forward image of a decorated object, or the preimage of a path ({"family", "steps"})."""
    return json.loads(_core.apply(map_name, json.dumps(obj)))


def verify(suite="all", max_n=6, jobs=1):
    return json.loads(_core.verify(suite, max_n, jobs))
