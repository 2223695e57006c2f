"""Exact classification of integer triples, dihedral representations and
affine lattice groups. Thin wrappers that decode the JSON records produced
by the C++ core."""

import json as _json

from . import _core
from ._core import ConditionError, DegenerateLabeling, InvalidArgument

__all__ = [
    "ConditionError",
    "DegenerateLabeling",
    "InvalidArgument",
    "box",
    "classify",
    "count",
    "identity",
    "involutions",
    "order",
    "repr_",
    "run_cli",
    "snf",
    "sweep",
    "verify",
    "witnesses",
]


def classify(a1, a2, a3):
    return _json.loads(_core.classify(a1, a2, a3))


def count(a1, a2, a3, oracle=False):
    return _json.loads(_core.count(a1, a2, a3, oracle))


def snf(a1, a2, a3):
    return _json.loads(_core.snf(a1, a2, a3))


def involutions(a1, a2, a3):
    return _json.loads(_core.involutions(a1, a2, a3))


def repr_(n, inventory=False):
    return _json.loads(_core.repr(n, inventory))


def identity(a, b, c):
    return _json.loads(_core.identity(str(a), str(b), str(c)))


def witnesses(p, q, r):
    return _json.loads(_core.witnesses(p, q, r))


def verify(p, q, r):
    return _json.loads(_core.verify(p, q, r))


def order(n, k, refl=False, vec=()):
    return _json.loads(_core.order(n, k, refl, list(vec)))


def box(max_entry):
    rng = range(2, max_entry + 1)
    return [(a, b, c) for a in rng for b in rng for c in rng]


def sweep(triples, jobs=0):
    return _json.loads(_core.sweep([tuple(t) for t in triples], jobs))


def run_cli(*args):
    """Runs the command-line dispatcher; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
