"""Homogeneous equivariant polynomial maps between representations.

Dimensions come from the symmetric-power character recursion; explicit bases
come from Reynolds averaging of monomial-times-target-coordinate maps.  The
two must agree, and every basis is checked for equivariance at random points
by the test suite.

Polynomial maps are stored as coefficient tensors over a fixed graded
monomial order, so evaluation and differentiation are exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DimensionMismatch, FixViolation, LengthMismatch, NoEquivariants
from .group import Subgroup
from .representation import (Character, Representation, char_inner, character,
                             fix_basis)

RANK_TOL = 1e-8


# ---------------------------------------------------------------------------
# monomial bookkeeping

@lru_cache(maxsize=None)
def monomial_exponents(n: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of the degree-d monomials in n variables, fixed order."""
    if d == 0:
        return ((0,) * n,)
    out = []
    for combo in itertools.combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return tuple(out)


@lru_cache(maxsize=None)
def _monomial_index(n: int, d: int) -> dict[tuple[int, ...], int]:
    return {e: i for i, e in enumerate(monomial_exponents(n, d))}


@lru_cache(maxsize=None)
def _mult_by_var(n: int, d: int) -> np.ndarray:
    """(n, N_d) index map: monomial beta of degree d -> index of beta + e_j."""
    idx = _monomial_index(n, d + 1)
    exps = monomial_exponents(n, d)
    out = np.empty((n, len(exps)), dtype=np.int64)
    for j in range(n):
        for k, e in enumerate(exps):
            e2 = list(e)
            e2[j] += 1
            out[j, k] = idx[tuple(e2)]
    return out


def substitution_matrix(m: np.ndarray, d: int) -> np.ndarray:
    """Matrix of the substitution x -> M u on degree-d monomial coefficients.

    m has shape (n, p): x_i = sum_j m[i, j] u_j.  Returns S of shape
    (N_p(d), N_n(d)) with column alpha holding the u-monomial coefficients of
    prod_i (M u)_i^alpha_i.
    """
    n, p = m.shape
    cols: list[np.ndarray] = [np.ones((1, 1))]
    for k in range(1, d + 1):
        exps_k = monomial_exponents(n, k)
        idx_prev = _monomial_index(n, k - 1)
        mul = _mult_by_var(p, k - 1)
        nk = len(monomial_exponents(p, k))
        s = np.zeros((nk, len(exps_k)))
        prev = cols[k - 1]
        for col, e in enumerate(exps_k):
            i = next(j for j in range(n) if e[j] > 0)
            e2 = list(e)
            e2[i] -= 1
            vec = prev[:, idx_prev[tuple(e2)]]
            acc = np.zeros(nk)
            for j in range(p):
                if m[i, j] != 0.0:
                    np.add.at(acc, mul[j], m[i, j] * vec)
            s[:, col] = acc
        cols.append(s)
    return cols[d]


@lru_cache(maxsize=None)
def _diff_tables(n: int, d: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Per variable k: (rows in degree d with exp_k>0, target rows in degree d-1, factors)."""
    exps = monomial_exponents(n, d)
    idx_lower = _monomial_index(n, d - 1)
    tables = []
    for k in range(n):
        src, dst, fac = [], [], []
        for i, e in enumerate(exps):
            if e[k] > 0:
                e2 = list(e)
                e2[k] -= 1
                src.append(i)
                dst.append(idx_lower[tuple(e2)])
                fac.append(float(e[k]))
        tables.append((np.array(src, dtype=np.int64),
                       np.array(dst, dtype=np.int64),
                       np.array(fac)))
    return tables


# ---------------------------------------------------------------------------
# polynomial maps

@dataclass
class PolyMap:
    """A homogeneous polynomial map R^n -> R^m of degree d as a coefficient tensor."""

    n: int
    m: int
    degree: int
    coeffs: np.ndarray  # (N_n(d), m)

    def monomial_values(self, x: np.ndarray) -> np.ndarray:
        exps = np.asarray(monomial_exponents(self.n, self.degree))
        return np.prod(np.asarray(x, dtype=float)[None, :] ** exps, axis=1)

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        if self.degree == 0:
            return self.coeffs[0].copy()
        return self.monomial_values(x) @ self.coeffs

    def jacobian(self, x: np.ndarray) -> np.ndarray:
        jac = np.zeros((self.m, self.n))
        if self.degree == 0:
            return jac
        lower = PolyMap(self.n, self.m, self.degree - 1,
                        np.zeros((len(monomial_exponents(self.n, self.degree - 1)), self.m)))
        mvals = lower.monomial_values(x) if self.degree > 1 else np.ones(1)
        for k, (src, dst, fac) in enumerate(_diff_tables(self.n, self.degree)):
            dk = np.zeros((len(monomial_exponents(self.n, self.degree - 1)), self.m))
            np.add.at(dk, dst, fac[:, None] * self.coeffs[src])
            jac[:, k] = mvals @ dk
        return jac

    def compose_linear(self, a: np.ndarray) -> "PolyMap":
        """The map x -> self(A x) for a matrix A of shape (n, p)."""
        s = substitution_matrix(a, self.degree)
        return PolyMap(a.shape[1], self.m, self.degree, s @ self.coeffs)

    def project_output(self, b: np.ndarray) -> "PolyMap":
        """The map x -> B^T self(x) for a matrix B of shape (m, q)."""
        return PolyMap(self.n, b.shape[1], self.degree, self.coeffs @ b)


class MapSum:
    """A sum of homogeneous polynomial maps of (possibly) different degrees."""

    def __init__(self, layers: list[PolyMap]):
        if not layers:
            raise LengthMismatch("empty map sum")
        self.layers = layers
        self.n = layers[0].n
        self.m = layers[0].m

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        out = np.zeros(self.m)
        for p in self.layers:
            out += p.evaluate(x)
        return out

    def jacobian(self, x: np.ndarray) -> np.ndarray:
        out = np.zeros((self.m, self.n))
        for p in self.layers:
            out += p.jacobian(x)
        return out

    def compose_linear(self, a: np.ndarray) -> "MapSum":
        return MapSum([p.compose_linear(a) for p in self.layers])

    def project_output(self, b: np.ndarray) -> "MapSum":
        return MapSum([p.project_output(b) for p in self.layers])


# ---------------------------------------------------------------------------
# dimensions by character

def sym_power_character(x: Character, d: int) -> Character:
    """Character of the d-th symmetric power, by the Newton-type recursion.

    chi_{S^d}(g) = (1/d) sum_{k=1..d} chi(g^k) chi_{S^{d-k}}(g).
    """
    g = x.group
    per_elem = x.per_element
    powers = np.empty((d + 1, g.order))
    powers[0] = 1.0
    pow_idx = np.arange(g.order)
    chi_pow = [np.ones(g.order)]  # chi(g^k) for k = 0.., unused at 0
    cur = np.zeros(g.order, dtype=np.int64)
    for k in range(1, d + 1):
        cur = g.mult[cur, pow_idx]
        chi_pow.append(per_elem[cur])
    for dd in range(1, d + 1):
        acc = np.zeros(g.order)
        for k in range(1, dd + 1):
            acc += chi_pow[k] * powers[dd - k]
        powers[dd] = acc / dd
    values = np.array([powers[d][c[0]] for c in g.conjugacy_classes])
    return Character(g, values)


def equivariant_dimension(v: Representation, w: Representation, d: int) -> int:
    """Dimension of degree-d homogeneous equivariant maps V -> W (trace formula)."""
    return char_inner(sym_power_character(character(v), d), character(w))


# ---------------------------------------------------------------------------
# explicit bases

@dataclass
class EquivariantBasis:
    degree: int
    maps: list[PolyMap]
    dim_v: int
    dim_w: int

    @property
    def dim(self) -> int:
        return len(self.maps)

    def combine(self, t: np.ndarray) -> PolyMap:
        """The map sum_i t_i F_i as a single coefficient tensor."""
        if len(t) != self.dim:
            raise LengthMismatch(f"expected {self.dim} coefficients, got {len(t)}")
        coeffs = np.zeros((len(monomial_exponents(self.dim_v, self.degree)), self.dim_w))
        for ti, f in zip(t, self.maps):
            coeffs += ti * f.coeffs
        return PolyMap(self.dim_v, self.dim_w, self.degree, coeffs)


def equivariant_basis(v: Representation, w: Representation, d: int) -> EquivariantBasis:
    """Orthonormal basis of the degree-d equivariant maps via Reynolds averaging.

    The averaging operator is assembled as a projector on coefficient space;
    its rank must match the trace-formula dimension.
    """
    if v.group is not w.group:
        raise DimensionMismatch("representations over different groups")
    g = v.group
    nmono = len(monomial_exponents(v.dim, d))
    size = nmono * w.dim
    proj = np.zeros((size, size))
    for e in range(g.order):
        s = substitution_matrix(v.mats[e].T, d)   # coefficients of f(rho_V(g)^-1 x)
        proj += np.kron(s, w.mats[e])
    proj /= g.order
    target = equivariant_dimension(v, w, d)
    # the averaging operator is an oblique projector in monomial coordinates
    # (the monomial basis is not orthonormal for the invariant inner product),
    # so the range is read off the SVD; nonzero singular values are >= 1
    u, sv, _ = np.linalg.svd(proj)
    rank = int(np.sum(sv > 0.5))
    if rank != target:
        raise DimensionMismatch(
            f"Reynolds rank {rank} != trace-formula dimension {target} at degree {d}")
    maps = []
    for i in range(rank):
        c = u[:, i].reshape(nmono, w.dim)
        maps.append(PolyMap(v.dim, w.dim, d, c))
    return EquivariantBasis(degree=d, maps=maps, dim_v=v.dim, dim_w=w.dim)


def trivial_representation(v: Representation) -> Representation:
    return Representation(group=v.group, dim=1,
                          mats=np.ones((v.group.order, 1, 1)))


def invariant_basis(v: Representation, d: int) -> EquivariantBasis:
    """Basis of the degree-d invariant polynomials on V (maps into a point)."""
    return equivariant_basis(v, trivial_representation(v), d)


def poly_scale(scalar: PolyMap, f: PolyMap) -> PolyMap:
    """Product p(x) * f(x) of a scalar polynomial with a polynomial map."""
    if scalar.m != 1 or scalar.n != f.n:
        raise DimensionMismatch("scalar factor must be a 1-output map on the same space")
    d = scalar.degree + f.degree
    idx = _monomial_index(f.n, d)
    exps_p = monomial_exponents(f.n, scalar.degree)
    exps_f = monomial_exponents(f.n, f.degree)
    coeffs = np.zeros((len(monomial_exponents(f.n, d)), f.m))
    for i, ep in enumerate(exps_p):
        c = scalar.coeffs[i, 0]
        if c == 0.0:
            continue
        for j, ef in enumerate(exps_f):
            coeffs[idx[tuple(a + b for a, b in zip(ep, ef))]] += c * f.coeffs[j]
    return PolyMap(f.n, f.m, d, coeffs)


def module_generator_dimension(v: Representation, w: Representation, d: int) -> int:
    """Count of degree-d equivariants modulo invariant-times-lower-degree products.

    The equivariant maps form a module over the invariant ring; the degree-d
    members of a minimal generating set number dim(equivariants_d) minus the
    rank of the multiplication image of lower-degree equivariants by positive-
    degree invariants.  For the lowest nonzero degree the two counts coincide.
    """
    total = equivariant_dimension(v, w, d)
    if total == 0:
        return 0
    products: list[np.ndarray] = []
    for e in range(1, d):
        if equivariant_dimension(v, w, e) == 0:
            continue
        inv = invariant_basis(v, d - e)
        if inv.dim == 0:
            continue
        eq = equivariant_basis(v, w, e)
        for p in inv.maps:
            for f in eq.maps:
                products.append(poly_scale(p, f).coeffs.ravel())
    if not products:
        return total
    rank = np.linalg.matrix_rank(np.array(products), tol=RANK_TOL)
    return total - int(rank)


def lowest_degree(v: Representation, w: Representation, d_max: int = 5) -> int:
    """Least degree with a nonzero equivariant, or NoEquivariants."""
    for d in range(1, d_max + 1):
        if equivariant_dimension(v, w, d) > 0:
            return d
    raise NoEquivariants(f"no equivariants up to degree {d_max}")


@dataclass
class RestrictedFamily:
    """An equivariant basis restricted to a fixed-point subspace pair."""

    maps: list[PolyMap]        # each Fix_V(S) -> Fix_W(S), coords of the bases below
    basis_v: np.ndarray        # (dim V, p) orthonormal
    basis_w: np.ndarray        # (dim W, q) orthonormal
    degree: int

    @property
    def dim_in(self) -> int:
        return self.basis_v.shape[1]

    @property
    def dim_out(self) -> int:
        return self.basis_w.shape[1]

    def combine(self, t: np.ndarray) -> PolyMap:
        if len(t) != len(self.maps):
            raise LengthMismatch("coefficient count mismatch")
        coeffs = np.zeros_like(self.maps[0].coeffs)
        for ti, f in zip(t, self.maps):
            coeffs += ti * f.coeffs
        return PolyMap(self.dim_in, self.dim_out, self.degree, coeffs)

    def is_zero(self, tol: float = 1e-10) -> bool:
        return all(np.abs(f.coeffs).max() <= tol for f in self.maps)


def restrict_to_fix(basis: EquivariantBasis, sigma: Subgroup,
                    v: Representation, w: Representation,
                    tol: float = 1e-8) -> RestrictedFamily:
    """Substitute the Fix_V(sigma) parametrization into every basis map.

    Output components off Fix_W(sigma) must vanish (equivariance); a violation
    raises FixViolation.
    """
    a = fix_basis(v, sigma)
    b = fix_basis(w, sigma)
    comp = np.eye(w.dim) - b @ b.T
    out = []
    for f in basis.maps:
        g = f.compose_linear(a)
        off = np.abs(g.coeffs @ comp).max() if g.coeffs.size else 0.0
        if off > tol:
            raise FixViolation(f"restricted map escapes Fix_W by {off:.2e}")
        out.append(g.project_output(b))
    return RestrictedFamily(maps=out, basis_v=a, basis_w=b, degree=basis.degree)


def basis_to_text(basis: EquivariantBasis, var_names: list[str] | None = None,
                  tol: float = 1e-10) -> str:
    """Human-readable dump: one monomial per line per map, plus coefficients."""
    exps = monomial_exponents(basis.dim_v, basis.degree)
    if var_names is None:
        var_names = [f"x{i+1}" for i in range(basis.dim_v)]
    lines = [f"# degree {basis.degree}, {basis.dim} generators, "
             f"V dim {basis.dim_v}, W dim {basis.dim_w}"]
    for k, f in enumerate(basis.maps):
        lines.append(f"F{k+1}:")
        for i, e in enumerate(exps):
            row = f.coeffs[i]
            if np.abs(row).max() <= tol:
                continue
            mono = "*".join(f"{var_names[j]}^{p}" if p > 1 else var_names[j]
                            for j, p in enumerate(e) if p > 0) or "1"
            vec = "[" + ", ".join(f"{c:+.6g}" for c in row) + "]"
            lines.append(f"  {mono}  {vec}")
    return "\n".join(lines) + "\n"
