"""Manin triples of Lie superalgebras: exact verification of the example catalog."""

import json

from . import _core
from ._core import InvalidZeta, catalog_ids

__all__ = [
    "InvalidZeta",
    "canonical",
    "casimir",
    "catalog_ids",
    "cybe",
    "export",
    "report_all",
    "verify",
]


def _words(target):
    return target.split() if isinstance(target, str) else list(target)


def verify(example_id, n=2, window=None, k=None, basis_file="", base="2.1"):
    """Certify one catalog example; returns the report as a dict."""
    return json.loads(_core.verify_json(example_id, n, window, k, basis_file, base))


def report_all(ids=None, n=2, window=None):
    """Summary rows for the catalog (or the given ids), in catalog order."""
    if ids is None:
        ids = catalog_ids()
    return json.loads(_core.report_all_json(list(ids), n, window))


def export(target, window=None, n=2):
    """Algebra JSON for a catalog id or a family such as "gl 2 2" or "po 4"."""
    return json.loads(_core.export_json(_words(target), window, n))


def canonical(algebra):
    """Import and re-export algebra JSON (dict or text)."""
    text = algebra if isinstance(algebra, str) else json.dumps(algebra)
    return json.loads(_core.canonical_json(text))


def casimir(target, window=None, n=2, seed=1):
    """Casimir element of the target's form with its invariance checks."""
    return json.loads(_core.casimir_json(_words(target), window, n, seed))


def cybe(target, n=2, samples=4):
    """CYBE residual of Casimir/(u - v) at the given number of spectral samples."""
    return json.loads(_core.cybe_json(_words(target), n, samples))
