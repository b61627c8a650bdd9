"""Positive-definite kernels on [0,1]^d: the compactly supported Wendland
family for dimensions 1..5 and a Gaussian RBF.

The Wendland kernel of dimension d and smoothness index m is
``k(x, x') = p_{d,m}(||x - x'|| / scale)`` for distances below ``scale`` and
exactly zero beyond.  The polynomials are hard-coded per (d, m) pair; m is
tied to d (m = (d+1)/2 for odd d, m = d/2 + 1 for even d) so that twice
continuously differentiable targets of matching order lie in the kernel's
native Sobolev space.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError

# (d, m) -> polynomial p_{d,m} as ascending power coefficients.
# p_{1,1}(r) = (1-r)^3 (3r+1)
# p_{2,2}(r) = p_{3,2}(r) = (1-r)^6 (35r^2+18r+3)
# p_{4,3}(r) = p_{5,3}(r) = (1-r)^9 (693r^3+477r^2+135r+15)
_WENDLAND_COEFFS: dict[tuple[int, int], np.ndarray] = {}


def _expand(outer_pow: int, inner: list[float]) -> np.ndarray:
    one_minus_r = np.polynomial.polynomial.polypow([1.0, -1.0], outer_pow)
    return np.polynomial.polynomial.polymul(one_minus_r, np.asarray(inner))


_WENDLAND_COEFFS[(1, 1)] = _expand(3, [1.0, 3.0])
_WENDLAND_COEFFS[(2, 2)] = _expand(6, [3.0, 18.0, 35.0])
_WENDLAND_COEFFS[(3, 2)] = _WENDLAND_COEFFS[(2, 2)]
_WENDLAND_COEFFS[(4, 3)] = _expand(9, [15.0, 135.0, 477.0, 693.0])
_WENDLAND_COEFFS[(5, 3)] = _WENDLAND_COEFFS[(4, 3)]


def smoothness_index(d: int) -> int:
    """The smoothness index m paired with dimension d."""
    if d not in (1, 2, 3, 4, 5):
        raise ConfigError(f"Wendland dimension must be in 1..5, got {d}")
    return (d + 1) // 2 if d % 2 == 1 else d // 2 + 1


def wendland_poly_eval(d: int, m: int, r) -> float | np.ndarray:
    """Evaluate phi_{d,m}(r): the polynomial p_{d,m} on [0,1], zero beyond.

    Raises ConfigError for a (d, m) pair outside the supported table.
    """
    coeffs = _WENDLAND_COEFFS.get((d, m))
    if coeffs is None:
        raise ConfigError(f"unsupported Wendland pair (d={d}, m={m})")
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr < 0):
        raise ValueError("radius must be nonnegative")
    inside = r_arr <= 1.0
    vals = np.where(
        inside, np.polynomial.polynomial.polyval(np.where(inside, r_arr, 0.0), coeffs), 0.0
    )
    return float(vals) if np.isscalar(r) or r_arr.ndim == 0 else vals


@dataclass(frozen=True)
class WendlandSpec:
    """Dimension, derived smoothness index and rescale factor."""

    d: int
    scale: float

    def __post_init__(self):
        smoothness_index(self.d)  # validates d
        if not self.scale > 0:
            raise ConfigError(f"Wendland scale must be > 0, got {self.scale}")

    @property
    def m(self) -> int:
        return smoothness_index(self.d)


def _as_points(points) -> np.ndarray:
    """Normalize a point collection to an (n, d) float array."""
    arr = np.asarray(points, dtype=float)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    elif arr.ndim == 1:
        arr = arr[:, None]
    elif arr.ndim != 2:
        raise ValueError(f"points must be scalars or vectors, got ndim={arr.ndim}")
    return arr


def _pairwise_dist(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    diff = a[:, None, :] - b[None, :, :]
    return np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))


@dataclass(frozen=True)
class Wendland:
    """Rescaled compactly supported Wendland kernel."""

    spec: WendlandSpec

    def __call__(self, x, xp) -> float:
        r = np.linalg.norm(np.atleast_1d(np.asarray(x, float)) - np.atleast_1d(np.asarray(xp, float)))
        return float(wendland_poly_eval(self.spec.d, self.spec.m, r / self.spec.scale))

    def pairwise(self, xs, xps) -> np.ndarray:
        a, b = _as_points(xs), _as_points(xps)
        r = _pairwise_dist(a, b) / self.spec.scale
        return np.asarray(wendland_poly_eval(self.spec.d, self.spec.m, r))

    @property
    def diagonal_value(self) -> float:
        """k(x, x); equals the constant term of the Wendland polynomial."""
        return float(_WENDLAND_COEFFS[(self.spec.d, self.spec.m)][0])

    def cache_key(self) -> tuple:
        return ("wendland", self.spec.d, self.spec.m, self.spec.scale)


@dataclass(frozen=True)
class GaussianRbf:
    """Gaussian RBF kernel exp(-||x-x'||^2 / (2 bandwidth^2))."""

    bandwidth: float

    def __post_init__(self):
        if not self.bandwidth > 0:
            raise ConfigError(f"RBF bandwidth must be > 0, got {self.bandwidth}")

    def __call__(self, x, xp) -> float:
        r = np.linalg.norm(np.atleast_1d(np.asarray(x, float)) - np.atleast_1d(np.asarray(xp, float)))
        return float(np.exp(-0.5 * (r / self.bandwidth) ** 2))

    def pairwise(self, xs, xps) -> np.ndarray:
        a, b = _as_points(xs), _as_points(xps)
        r = _pairwise_dist(a, b) / self.bandwidth
        return np.exp(-0.5 * r * r)

    @property
    def diagonal_value(self) -> float:
        return 1.0

    def cache_key(self) -> tuple:
        return ("rbf", self.bandwidth)


Kernel = Wendland | GaussianRbf


def wendland_kernel(d: int, scale: float) -> Wendland:
    return Wendland(WendlandSpec(d=d, scale=scale))


def kernel_eval(k: Kernel, x, xp) -> float:
    """Evaluate k(x, x')."""
    return k(x, xp)


def gram_matrix(k: Kernel, points) -> np.ndarray:
    """Symmetric Gram matrix K[i, j] = k(points[i], points[j])."""
    pts = _as_points(points)
    if pts.shape[0] == 0:
        raise ValueError("gram_matrix needs at least one point")
    K = k.pairwise(pts, pts)
    return 0.5 * (K + K.T)


def median_distance_scale(points) -> float:
    """Median of all n^2 pairwise distances, self-distances included.

    Even-count median is the mean of the two middle order statistics.  Used
    as the default rescale factor for Wendland kernels.
    """
    pts = _as_points(points)
    if pts.shape[0] < 2:
        raise ValueError("median_distance_scale needs at least 2 points")
    return float(np.median(_pairwise_dist(pts, pts)))


def rkhs_norm_sq(gram: np.ndarray, coeffs) -> float:
    """Squared RKHS norm of sum_i c_i k(., x_i): c^T K c."""
    K = np.asarray(gram, dtype=float)
    c = np.asarray(coeffs, dtype=float)
    if K.ndim != 2 or K.shape[0] != K.shape[1]:
        raise ValueError(f"gram must be square, got shape {K.shape}")
    if c.shape != (K.shape[0],):
        raise ValueError(
            f"coefficient length {c.shape} does not match gram dimension {K.shape[0]}"
        )
    return float(c @ K @ c)
