"""Composite Gauss-Legendre quadrature on [0,1].

A rule is a number of equal panels times a fixed Gauss-Legendre order per
panel.  The same 1-D rule is tensorized for integrals over the unit square.
A rule with P panels of order m resolves oscillations sin(q*pi*x) accurately
up to roughly q ~ 1.2*P for m = 8; callers integrating high basis indices
must size the rule accordingly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NumericError


@dataclass(frozen=True)
class QuadratureRule:
    """Composite Gauss-Legendre rule on the unit interval."""

    panels: int = 64
    nodes_per_panel: int = 8

    def __post_init__(self):
        if self.panels < 1:
            raise ValueError(f"panels must be >= 1, got {self.panels}")
        if self.nodes_per_panel < 1:
            raise ValueError(
                f"nodes_per_panel must be >= 1, got {self.nodes_per_panel}"
            )

    @property
    def node_count(self) -> int:
        return self.panels * self.nodes_per_panel

    def points(self) -> tuple[np.ndarray, np.ndarray]:
        """Nodes and weights on [0,1]; weights are positive and sum to 1."""
        return _points(self.panels, self.nodes_per_panel)

    def cache_key(self) -> tuple:
        return ("gl", self.panels, self.nodes_per_panel)


@lru_cache(maxsize=32)
def _points(panels: int, m: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(m)
    edges = np.linspace(0.0, 1.0, panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def _eval_on_nodes(f, nodes: np.ndarray) -> np.ndarray:
    """Evaluate f on all nodes, accepting vectorized or scalar callables."""
    try:
        vals = np.asarray(f(nodes), dtype=float)
        if vals.shape != nodes.shape:
            raise TypeError
    except (TypeError, ValueError):
        vals = np.array([float(f(t)) for t in nodes])
    bad = np.flatnonzero(~np.isfinite(vals))
    if bad.size:
        locs = ", ".join(f"x={nodes[i]:.6g}" for i in bad[:5])
        raise NumericError(
            f"integrand is not finite at {bad.size} node(s): {locs}"
        )
    return vals


def integrate_1d(f, rule: QuadratureRule) -> float:
    """Approximate the integral of f over [0,1]."""
    nodes, weights = rule.points()
    return float(weights @ _eval_on_nodes(f, nodes))


def integrate_2d(f, rule: QuadratureRule) -> float:
    """Approximate the integral of f(x1, x2) over the unit square.

    Uses the tensor product of the 1-D rule; f must accept two equal-shape
    arrays (meshed nodes) or two scalars.
    """
    nodes, weights = rule.points()
    X1, X2 = np.meshgrid(nodes, nodes, indexing="ij")
    try:
        vals = np.asarray(f(X1, X2), dtype=float)
        if vals.shape != X1.shape:
            raise TypeError
    except (TypeError, ValueError):
        vals = np.array([[float(f(a, b)) for b in nodes] for a in nodes])
    if not np.all(np.isfinite(vals)):
        i, j = np.argwhere(~np.isfinite(vals))[0]
        raise NumericError(
            f"integrand is not finite at node (x1={nodes[i]:.6g}, x2={nodes[j]:.6g})"
        )
    return float(weights @ vals @ weights)
