"""Damped Gauss-Newton root finding for small polynomial systems."""

from __future__ import annotations

import numpy as np


def gauss_newton(fun, jac, x0: np.ndarray, tol: float = 1e-10,
                 max_iter: int = 200) -> np.ndarray | None:
    """Root of fun from x0, or None.  Handles under/overdetermined systems via pinv."""
    x = np.asarray(x0, dtype=float).copy()
    r = fun(x)
    best = float(np.linalg.norm(r))
    for _ in range(max_iter):
        if best < tol:
            return x
        j = jac(x)
        try:
            step = np.linalg.pinv(j, rcond=1e-12) @ r
        except np.linalg.LinAlgError:
            return None
        lam = 1.0
        improved = False
        for _ in range(30):
            xn = x - lam * step
            rn = fun(xn)
            nn = float(np.linalg.norm(rn))
            if nn < best:
                x, r, best = xn, rn, nn
                improved = True
                break
            lam *= 0.5
        if not improved:
            return x if best < tol else None
    return x if best < tol else None


def dedupe_points(points: list[np.ndarray], tol: float = 1e-5) -> list[np.ndarray]:
    out: list[np.ndarray] = []
    for p in points:
        if all(np.linalg.norm(p - q) > tol for q in out):
            out.append(p)
    return out


def matrix_rank(m: np.ndarray, rel_tol: float = 1e-6) -> int:
    if m.size == 0:
        return 0
    sv = np.linalg.svd(m, compute_uv=False)
    if len(sv) == 0 or sv[0] == 0.0:
        return 0
    return int(np.sum(sv > rel_tol * sv[0]))


def sample_sphere(rng: np.random.Generator, dim: int, count: int) -> np.ndarray:
    x = rng.standard_normal((count, dim))
    norms = np.linalg.norm(x, axis=1, keepdims=True)
    norms[norms == 0] = 1.0
    return x / norms


def sample_ball(rng: np.random.Generator, dim: int, count: int,
                radius: float = 1.0) -> np.ndarray:
    s = sample_sphere(rng, dim, count)
    r = rng.random(count) ** (1.0 / dim)
    return s * (radius * r)[:, None]
