"""Composite Gauss-Legendre panels on an interval.

Nodes are strictly interior to each panel, so panel endpoints (in particular
the coordinate axes bounding the quarter-arcs) are never evaluated.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

NODES_PER_PANEL = 4


@lru_cache(maxsize=None)
def _base_rule(order: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    x, w = np.polynomial.legendre.leggauss(order)
    return tuple(x.tolist()), tuple(w.tolist())


def panel_rule(a: float, b: float, panels: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights integrating over [a, b] with `panels` equal panels."""
    if panels < 1:
        raise ValueError("panels must be >= 1, got %r" % (panels,))
    x, w = _base_rule(NODES_PER_PANEL)
    x = np.asarray(x)
    w = np.asarray(w)
    width = (b - a) / panels
    half = 0.5 * width
    starts = a + width * np.arange(panels)
    centers = starts + half
    nodes = (centers[:, None] + half * x[None, :]).ravel()
    weights = np.broadcast_to(half * w, (panels, x.size)).ravel()
    return nodes, weights
