"""Kernel backend selection: compiled extension when available, else pure Python.

Set ``COMMTEXT_PURE_KERNELS=1`` to force the pure backend.  Both backends
are floating-point identical; the compiled one is just faster.
"""

from __future__ import annotations

import importlib
import os

from . import _pure

_speed = None
if os.environ.get("COMMTEXT_PURE_KERNELS", "") != "1":
    try:
        _speed = importlib.import_module("._speed", __name__)
    except ImportError:
        _speed = None

_selected = _speed if _speed is not None else _pure


def selected_kernel():
    """Module providing louvain_sweep / infomap_sweep for this process."""
    return _selected


def backend_name() -> str:
    return _selected.BACKEND


def available_backends() -> dict:
    """All importable kernel backends, keyed by name."""
    backends = {"pure": _pure}
    if _speed is not None:
        backends["speed"] = _speed
    return backends
