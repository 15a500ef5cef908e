"""Numeric verification of predicted zero-branch dimensions.

A random member of the equivariant family (degrees 1..3 by default) is
instantiated, restricted to each fixed-point subspace pair of the isotropy
lattice, and probed with multi-start Gauss-Newton from a punctured ball.  The
dimension of the zero set near each found root is estimated as
dim Fix_V - rank of the Jacobian, and compared with the lattice index.

Draws where a predicted branch produced no numeric witness are flagged rather
than failed: a random coefficient vector can land outside the region where
real branches exist without contradicting the prediction.
"""

from __future__ import annotations

import io
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .equivariants import MapSum, equivariant_basis
from .errors import LengthMismatch, NoEquivariants
from .isotropy import IsotropyLattice, build_lattice
from .numerics import dedupe_points, gauss_newton, matrix_rank, sample_ball
from .representation import Representation, fix_basis

DEFAULT_DEGREES = (1, 2, 3)

MATCH = "match"
MISMATCH = "mismatch"
NON_GENERIC = "NonGenericSuspect"


@dataclass
class ProbeOptions:
    seed: int = 42
    n_draws: int = 10
    n_starts: int = 256
    radius: float = 1.0
    puncture: float = 0.01      # fraction of the radius excluded around 0
    newton_tol: float = 1e-10
    newton_max_iter: int = 200
    dedupe_tol: float = 1e-5
    max_failures_per_10: int = 1
    degrees: tuple[int, ...] = DEFAULT_DEGREES


def family_size(v: Representation, w: Representation,
                degrees: tuple[int, ...] = DEFAULT_DEGREES) -> int:
    """Number of scalar coefficients in the probed family."""
    return sum(equivariant_basis(v, w, d).dim for d in degrees)


def instantiate_map(v: Representation, w: Representation, t: np.ndarray,
                    degrees: tuple[int, ...] = DEFAULT_DEGREES) -> MapSum:
    """The equivariant map with coefficient vector t over the given degrees."""
    bases = [equivariant_basis(v, w, d) for d in degrees]
    total = sum(b.dim for b in bases)
    if len(t) != total:
        raise LengthMismatch(f"expected {total} coefficients, got {len(t)}")
    layers = []
    i = 0
    for b in bases:
        if b.dim:
            layers.append(b.combine(np.asarray(t[i:i + b.dim], dtype=float)))
            i += b.dim
    if not layers:
        raise NoEquivariants("the family is empty at the probed degrees")
    return MapSum(layers)


@dataclass
class ZeroBranchSample:
    sigma_name: str
    dim_fix_v: int
    dim_fix_w: int
    expected_dim: int          # lattice index s
    n_zeros: int
    modal_rank: int | None
    estimated_dim: int | None
    status: str
    points: list[np.ndarray] = field(default_factory=list)  # Fix_V coordinates
    jac_ranks: list[int] = field(default_factory=list)
    residuals: list[float] = field(default_factory=list)


def _exact_isotropy(v: Representation, x: np.ndarray, members: set[int],
                    tol: float = 1e-6) -> bool:
    """True if the stabilizer of x is exactly the given element set."""
    resid = np.abs(np.einsum("gij,j->gi", v.mats, x) - x[None]).max(axis=1)
    return set(np.where(resid <= tol)[0].tolist()) == members


def _probe_node(f: MapSum, v: Representation, node, a: np.ndarray,
                b: np.ndarray, opts: ProbeOptions,
                rng: np.random.Generator) -> ZeroBranchSample:
    name, expected = node.name, node.index_s
    members = set(node.subgroup.elements)
    p, q = a.shape[1], b.shape[1]
    if q == 0:
        # no equations on this stratum: the whole fixed space is zeros
        return ZeroBranchSample(name, p, 0, expected, opts.n_starts, 0, p,
                                MATCH if expected == p else MISMATCH)
    if p == 0:
        status = MATCH if expected <= 0 else MISMATCH
        return ZeroBranchSample(name, 0, q, expected, 0, None, 0, status)
    fr = f.compose_linear(a).project_output(b)
    starts = sample_ball(rng, p, opts.n_starts, opts.radius)
    # push radii out of the puncture so no start sits on the trivial zero
    norms = np.linalg.norm(starts, axis=1, keepdims=True)
    norms[norms == 0] = 1.0
    scale = opts.puncture + (1.0 - opts.puncture) * norms / opts.radius
    starts = starts / norms * (opts.radius * scale)
    roots = []
    for x0 in starts:
        r = gauss_newton(fr.evaluate, fr.jacobian, x0, tol=opts.newton_tol,
                         max_iter=opts.newton_max_iter)
        if r is not None and np.linalg.norm(r) > opts.puncture * opts.radius:
            roots.append(r)
    roots = dedupe_points(roots, opts.dedupe_tol)
    # keep only roots that live on this stratum, not on a more symmetric one
    roots = [r for r in roots if _exact_isotropy(v, a @ r, members)]
    if not roots:
        if expected <= 0:
            return ZeroBranchSample(name, p, q, expected, 0, None, None, MATCH)
        return ZeroBranchSample(name, p, q, expected, 0, None, None, NON_GENERIC)
    ranks = [matrix_rank(fr.jacobian(x)) for x in roots]
    resids = [float(np.linalg.norm(fr.evaluate(x))) for x in roots]
    modal = Counter(ranks).most_common(1)[0][0]
    est = p - modal
    status = MATCH if est == max(expected, 0) else MISMATCH
    return ZeroBranchSample(name, p, q, expected, len(roots), modal, est,
                            status, points=roots, jac_ranks=ranks,
                            residuals=resids)


@dataclass
class ProbeDraw:
    t: np.ndarray
    samples: list[ZeroBranchSample]

    @property
    def failed(self) -> bool:
        return any(s.status == MISMATCH for s in self.samples)

    @property
    def flagged(self) -> bool:
        return any(s.status == NON_GENERIC for s in self.samples)


@dataclass
class ProbeResult:
    draws: list[ProbeDraw]
    n_failed: int
    n_flagged: int
    passed: bool


def find_zero_branches(v: Representation, w: Representation, t: np.ndarray,
                       lattice: IsotropyLattice | None = None,
                       opts: ProbeOptions | None = None,
                       rng: np.random.Generator | None = None
                       ) -> list[ZeroBranchSample]:
    """Probe one family member at every isotropy class."""
    if opts is None:
        opts = ProbeOptions()
    if rng is None:
        rng = np.random.default_rng(opts.seed)
    if lattice is None:
        lattice = build_lattice(v, w)
    f = instantiate_map(v, w, t, opts.degrees)
    out = []
    for node in lattice.nodes:
        a = fix_basis(v, node.subgroup)
        b = fix_basis(w, node.subgroup)
        out.append(_probe_node(f, v, node, a, b, opts, rng))
    return out


def verify_predictions(v: Representation, w: Representation,
                       lattice: IsotropyLattice | None = None,
                       opts: ProbeOptions | None = None) -> ProbeResult:
    """Repeated random draws; pass if mismatches stay under the failure budget."""
    if opts is None:
        opts = ProbeOptions()
    if lattice is None:
        lattice = build_lattice(v, w)
    rng = np.random.default_rng(opts.seed)
    k = family_size(v, w, opts.degrees)
    draws = []
    for _ in range(opts.n_draws):
        t = rng.standard_normal(k)
        samples = find_zero_branches(v, w, t, lattice, opts, rng)
        draws.append(ProbeDraw(t=t, samples=samples))
    n_failed = sum(d.failed for d in draws)
    n_flagged = sum(d.flagged for d in draws)
    budget = opts.max_failures_per_10 * max(1, opts.n_draws) / 10.0
    return ProbeResult(draws=draws, n_failed=n_failed, n_flagged=n_flagged,
                       passed=n_failed <= budget)


def probe_to_csv(result: ProbeResult) -> str:
    """One row per stored zero, plus a summary row per (draw, sigma)."""
    buf = io.StringIO()
    buf.write("draw,sigma,expected_dim,estimated_dim,status,point,residual,rank\n")
    for i, d in enumerate(result.draws):
        for s in d.samples:
            est = "" if s.estimated_dim is None else s.estimated_dim
            buf.write(f"{i},{s.sigma_name},{s.expected_dim},{est},{s.status},,,\n")
            for x, resid, rank in zip(s.points, s.residuals, s.jac_ranks):
                coords = ";".join(f"{c:.6g}" for c in x)
                buf.write(f"{i},{s.sigma_name},{s.expected_dim},{est},"
                          f"{s.status},{coords},{resid:.3e},{rank}\n")
    return buf.getvalue()
