"""Orthogonal representations: characters, kernels, fixed-point subspaces,
and isotypic decomposition.

Everything is real orthogonal; complex actions are realified before they get
here.  Fixed-point dimensions are computed twice (character average and rank
of the averaged projector) and must agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InternalMismatch, NotIntegral, SplitFailed
from .group import GroupTable, Subgroup

TOL_ROUND = 1e-6
GAP_THRESHOLD = 1e-6
RETRY_BUDGET = 8


@dataclass
class Representation:
    group: GroupTable
    dim: int
    mats: np.ndarray  # (order, dim, dim)

    @classmethod
    def from_generators(
        cls, group: GroupTable, gen_mats: list[np.ndarray], tol: float = 1e-9
    ) -> "Representation":
        """Build per-element matrices by following each element's word.

        Verifies the result is a homomorphism consistent with the table.
        """
        gens = [np.asarray(m, dtype=float) for m in gen_mats]
        if len(gens) != len(group.generators):
            raise InternalMismatch("one matrix per group generator required")
        dim = gens[0].shape[0]
        mats = np.empty((group.order, dim, dim))
        for e, word in enumerate(group.words):
            m = np.eye(dim)
            for j in word:
                m = m @ gens[j]
            mats[e] = m
        rep = cls(group=group, dim=dim, mats=mats)
        rep.validate(tol)
        return rep

    @classmethod
    def defining(cls, group: GroupTable) -> "Representation":
        return cls(group=group, dim=group.n_def, mats=group.element_matrices.copy())

    def validate(self, tol: float = 1e-9) -> None:
        """Check orthogonality and generator-step consistency with the table.

        mats[g*s] = mats[g] @ mats[s] for every g and every generator s implies
        the full homomorphism property by induction on words.
        """
        eye = np.eye(self.dim)
        for g in range(self.group.order):
            if np.abs(self.mats[g].T @ self.mats[g] - eye).max() > 100 * tol:
                raise InternalMismatch(f"matrix for element {g} is not orthogonal")
        for s in self.group.generators:
            prod = self.mats @ self.mats[s]
            target = self.mats[self.group.mult[:, s]]
            if np.abs(prod - target).max() > 1000 * tol:
                raise InternalMismatch("generator matrices inconsistent with the table")

    def sub(self, basis: np.ndarray, tol: float = 1e-8) -> "Representation":
        """Representation restricted to the invariant subspace spanned by basis columns."""
        sub_mats = np.einsum("ia,gij,jb->gab", basis, self.mats, basis)
        rep = Representation(self.group, basis.shape[1], sub_mats)
        # invariance check: restriction must stay orthogonal
        eye = np.eye(rep.dim)
        if rep.dim:
            for g in range(self.group.order):
                if np.abs(sub_mats[g].T @ sub_mats[g] - eye).max() > tol:
                    raise InternalMismatch("basis does not span an invariant subspace")
        return rep


@dataclass
class Character:
    group: GroupTable
    values: np.ndarray  # per conjugacy class

    def at_element(self, g: int) -> float:
        return float(self.values[self.group.class_of[g]])

    @property
    def per_element(self) -> np.ndarray:
        return self.values[self.group.class_of]


def character(rep: Representation) -> Character:
    traces = np.einsum("gii->g", rep.mats)
    values = np.array([traces[c[0]] for c in rep.group.conjugacy_classes])
    return Character(rep.group, values)


def char_inner(x: Character, y: Character, tol_round: float = TOL_ROUND) -> int:
    """(1/|G|) sum_g x(g) y(g), which must be an integer."""
    if x.group is not y.group:
        raise InternalMismatch("characters over different groups")
    sizes = np.array([len(c) for c in x.group.conjugacy_classes], dtype=float)
    val = float(np.sum(sizes * x.values * y.values)) / x.group.order
    r = round(val)
    if abs(val - r) >= tol_round:
        raise NotIntegral(f"character inner product {val} is not integral")
    return int(r)


def kernel(rep: Representation, tol: float = 1e-8) -> Subgroup:
    eye = np.eye(rep.dim)
    elems = [g for g in range(rep.group.order)
             if np.abs(rep.mats[g] - eye).max() <= tol]
    return Subgroup(tuple(sorted(elems)))


def is_faithful(rep: Representation, tol: float = 1e-8) -> bool:
    return kernel(rep, tol).order == 1


def _averaged_projector(rep: Representation, s: Subgroup) -> np.ndarray:
    return rep.mats[list(s.elements)].mean(axis=0)


def fix_dimension(rep: Representation, s: Subgroup) -> int:
    """dim Fix(s) via the character average; cross-checked against the projector."""
    chi = character(rep).per_element
    val = float(chi[list(s.elements)].sum()) / s.order
    r = round(val)
    if abs(val - r) >= TOL_ROUND:
        raise NotIntegral(f"fixed-space dimension {val} is not integral")
    p = _averaged_projector(rep, s)
    rank = int(np.sum(np.linalg.svd(p, compute_uv=False) > 0.5))
    if rank != r:
        raise InternalMismatch(
            f"projector rank {rank} != character dimension {r}")
    return int(r)


def fix_basis(rep: Representation, s: Subgroup) -> np.ndarray:
    """Orthonormal basis (columns) of the fixed-point subspace of s."""
    p = _averaged_projector(rep, s)
    u, sv, _ = np.linalg.svd(p)
    rank = int(np.sum(sv > 0.5))
    if rank != fix_dimension(rep, s):
        raise InternalMismatch("projector rank disagrees with character dimension")
    return u[:, :rank]


@dataclass
class IsotypicComponent:
    """One isotypic component of a representation.

    basis columns span the component; block_bases lists the irreducible
    summands it was assembled from (each an orthonormal column basis).
    """

    basis: np.ndarray
    irr_dim: int
    multiplicity: int
    endo_dim: int
    u_character: Character
    block_bases: list[np.ndarray] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return self.basis.shape[1]


def _split_once(rep: Representation, basis: np.ndarray, rng: np.random.Generator,
                tol_gap: float = GAP_THRESHOLD) -> list[np.ndarray] | None:
    """Try to split the invariant subspace with a random symmetrized operator.

    Returns sub-bases (in ambient coordinates) or None if no split occurred.
    Raises SplitFailed on persistently ambiguous eigenvalue clusters.
    """
    d = basis.shape[1]
    if d <= 1:
        return None
    sub = np.einsum("ia,gij,jb->gab", basis, rep.mats, basis)
    for _ in range(RETRY_BUDGET):
        s0 = rng.standard_normal((d, d))
        s0 = s0 + s0.T
        avg = np.einsum("gab,bc,gdc->ad", sub, s0, sub) / rep.group.order
        evals, evecs = np.linalg.eigh(avg)
        scale = max(1.0, float(np.abs(evals).max()))
        gaps = np.diff(evals)
        ambiguous = np.any((gaps > 1e-10 * scale) & (gaps < tol_gap * scale))
        if ambiguous:
            continue
        cut = np.where(gaps > tol_gap * scale)[0]
        if len(cut) == 0:
            return None
        bounds = [0, *list(cut + 1), d]
        return [basis @ evecs[:, bounds[i]:bounds[i + 1]]
                for i in range(len(bounds) - 1)]
    raise SplitFailed("eigenvalue clusters stayed ambiguous after retries")


def _irreducible_blocks(rep: Representation, basis: np.ndarray,
                        rng: np.random.Generator) -> list[np.ndarray]:
    parts = _split_once(rep, basis, rng)
    if parts is None:
        return [basis]
    out: list[np.ndarray] = []
    for p in parts:
        out.extend(_irreducible_blocks(rep, p, rng))
    return out


def _intertwiner_norm(rep: Representation, b1: np.ndarray, b2: np.ndarray,
                      rng: np.random.Generator) -> float:
    """Norm of the G-average of a random map between two invariant subspaces."""
    r1 = np.einsum("ia,gij,jb->gab", b1, rep.mats, b1)
    r2 = np.einsum("ia,gij,jb->gab", b2, rep.mats, b2)
    x = rng.standard_normal((b2.shape[1], b1.shape[1]))
    t = np.einsum("gab,bc,gdc->ad", r2, x, r1) / rep.group.order
    return float(np.abs(t).max())


def isotypic_decompose(rep: Representation, seed: int = 42) -> list[IsotypicComponent]:
    """Invariant splitting into isotypic components.

    Randomized symmetric averaging splits the space into irreducible blocks;
    blocks are merged when a nonzero averaged intertwiner exists between them.
    """
    rng = np.random.default_rng(seed)
    if rep.dim == 0:
        return []
    blocks = _irreducible_blocks(rep, np.eye(rep.dim), rng)
    groups: list[list[np.ndarray]] = []
    for b in blocks:
        placed = False
        for grp in groups:
            if grp[0].shape[1] != b.shape[1]:
                continue
            if _intertwiner_norm(rep, grp[0], b, rng) > 1e-8:
                grp.append(b)
                placed = True
                break
        if not placed:
            groups.append([b])
    components = []
    for grp in groups:
        basis = np.concatenate(grp, axis=1)
        u_rep = rep.sub(grp[0])
        u_char = character(u_rep)
        endo = char_inner(u_char, u_char)
        components.append(IsotypicComponent(
            basis=basis,
            irr_dim=grp[0].shape[1],
            multiplicity=len(grp),
            endo_dim=endo,
            u_character=u_char,
            block_bases=list(grp),
        ))
    components.sort(key=lambda c: (c.irr_dim, -c.multiplicity))
    return components


def delta(v: Representation, u_component: IsotypicComponent) -> int:
    """Inner product of the domain character with one irreducible copy of the target."""
    return char_inner(character(v), u_component.u_character)
