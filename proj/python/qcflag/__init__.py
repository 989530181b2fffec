"""Exact small quantum cohomology of full flag manifolds GL_n/B."""

from pathlib import Path

from ._core import Pipeline, StageError

_packaged = Path(__file__).resolve().parent / "data"


def data_dir():
    """Directory containing golden/gl{2,3,4}.json, or None to use the build default."""
    return _packaged if (_packaged / "golden").is_dir() else None


def verify(n):
    """Exact comparison against the shipped golden data; returns the list of mismatches."""
    p = Pipeline(n)
    return p.verify_golden(data_dir())["failures"]


__all__ = ["Pipeline", "StageError", "data_dir", "verify"]
