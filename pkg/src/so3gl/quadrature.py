"""Legendre polynomials and the Gauss-Legendre colatitude rule.

The colatitude nodes theta_v are the L roots of P_L(cos(theta)), found by
Newton iteration in x = cos(theta), and each node carries the quadrature
weight q(theta_v) = 2 * (sin(theta_v) / (L * P_{L-1}(cos(theta_v))))**2.
The rule integrates polynomials in cos(theta) up to degree 2L-1 exactly
against the measure sin(theta) d(theta).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Newton settings for the root finder (Chebyshev initial guess).
_ROOT_STEP_TOL = 1e-15
_ROOT_MAX_ITER = 100


def _legendre_pair(degree: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(P_degree(x), P_{degree-1}(x)) via the ascending three-term recursion."""
    p_prev = np.zeros_like(x)
    p = np.ones_like(x)
    for k in range(1, degree + 1):
        p_prev, p = p, ((2 * k - 1) * x * p - (k - 1) * p_prev) / k
    return p, p_prev


def legendre(degree: int, x):
    """Evaluate the Legendre polynomial P_degree at x, with |x| <= 1.

    Accepts a scalar or an array; raises ValueError outside [-1, 1].
    """
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    arr = np.asarray(x, dtype=float)
    if np.any(np.abs(arr) > 1.0):
        raise ValueError("legendre argument outside [-1, 1]")
    value = _legendre_pair(degree, arr)[0]
    return float(value) if np.isscalar(x) or arr.ndim == 0 else value


@dataclass(frozen=True)
class GLNodes:
    """Colatitude nodes and weights of the L-point Gauss-Legendre rule.

    theta is strictly increasing in (0, pi); cos_theta and sin_theta are
    cached because the transforms consume them directly.  Instances are
    immutable and safe to share across threads.
    """

    band_limit: int
    theta: np.ndarray
    weight: np.ndarray
    cos_theta: np.ndarray
    sin_theta: np.ndarray

    def __post_init__(self):
        for arr in (self.theta, self.weight, self.cos_theta, self.sin_theta):
            arr.flags.writeable = False


def gl_nodes(band_limit: int) -> GLNodes:
    """Build the Gauss-Legendre colatitude rule for a given band limit.

    Nodes are the roots of P_L(cos(theta)) sorted by increasing theta;
    every root is converged to |dx| <= 1e-15 in x = cos(theta).  A root
    that fails to converge within the iteration cap raises RuntimeError.
    """
    L = band_limit
    if L < 1:
        raise ValueError(f"band limit must be >= 1, got {L}")

    v = np.arange(L)
    x = np.cos(np.pi * (v + 0.75) / (L + 0.5))
    active = np.ones(L, dtype=bool)
    for _ in range(_ROOT_MAX_ITER):
        p, p_prev = _legendre_pair(L, x[active])
        dp = L * (p_prev - x[active] * p) / (1.0 - x[active] ** 2)
        dx = p / dp
        x[active] -= dx
        still = np.abs(dx) > _ROOT_STEP_TOL
        if not still.any():
            active = np.zeros(L, dtype=bool)
            break
        idx = np.flatnonzero(active)
        active[idx[~still]] = False
    if active.any():
        raise RuntimeError(
            f"Legendre root finding did not converge for band limit {L}"
        )

    # Chebyshev guesses give x descending, hence theta ascending already;
    # sort anyway so the ordering is guaranteed, not incidental.
    theta = np.sort(np.arccos(x))
    cos_theta = np.cos(theta)
    sin_theta = np.sin(theta)
    p_lm1 = _legendre_pair(L, cos_theta)[1]
    weight = 2.0 * (sin_theta / (L * p_lm1)) ** 2
    return GLNodes(L, theta, weight, cos_theta, sin_theta)
