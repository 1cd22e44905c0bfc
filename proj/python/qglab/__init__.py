"""Spectral computations on compact metric graphs."""

from ._core import *  # noqa: F401,F403
from ._core import MetricGraph, eigenvalues, run_suite

__all__ = [name for name in dir() if not name.startswith("_")]
