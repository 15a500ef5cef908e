"""Finite groups as Cayley tables built by closure from orthogonal generator matrices.

Element identity is decided by entrywise matrix comparison within a tolerance,
so generators with irrational entries (rotations by 2*pi/n) are fine at desk
scale.  Every element keeps the word in the generators that produced it, which
lets other representations of the same group be rebuilt from their own
generator matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotOrthogonal, OrderExceeded

DEFAULT_TOL = 1e-9
DEFAULT_MAX_ORDER = 2000


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its sorted element indices."""

    elements: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in self.elements


@dataclass
class GroupTable:
    """A finite group with multiplication table and defining matrices."""

    order: int
    mult: np.ndarray           # (order, order) int, mult[g, h] = index of g*h
    inv: np.ndarray            # (order,) int
    generators: list[int]      # element indices of the generators
    element_matrices: np.ndarray  # (order, n_def, n_def)
    words: list[tuple[int, ...]]  # per element, word in generator positions
    gen_names: list[str]
    conjugacy_classes: list[list[int]] = field(default_factory=list)
    class_of: np.ndarray | None = None
    name: str = ""

    @property
    def n_def(self) -> int:
        return self.element_matrices.shape[1]

    @property
    def identity(self) -> int:
        return 0

    def element_name(self, g: int) -> str:
        return _render_word(self.words[g], self.gen_names)

    def power(self, g: int, k: int) -> int:
        """g**k via the multiplication table (k >= 0)."""
        out = 0
        for _ in range(k):
            out = int(self.mult[out, g])
        return out

    def conjugate(self, g: int, x: int) -> int:
        """x * g * x^-1."""
        return int(self.mult[self.mult[x, g], self.inv[x]])

    def subgroup_generated(self, gens: list[int]) -> Subgroup:
        """Closure of a set of element indices under the table."""
        elems = {0}
        frontier = [0]
        while frontier:
            e = frontier.pop()
            for g in gens:
                p = int(self.mult[e, g])
                if p not in elems:
                    elems.add(p)
                    frontier.append(p)
        return Subgroup(tuple(sorted(elems)))

    def conjugate_subgroup(self, s: Subgroup, x: int) -> Subgroup:
        return Subgroup(tuple(sorted(self.conjugate(g, x) for g in s.elements)))


def _render_word(word: tuple[int, ...], gen_names: list[str]) -> str:
    if not word:
        return "1"
    # a central "-1" generator is rendered as a leading sign
    sign = ""
    body: list[str] = []
    run_gen, run_len = None, 0

    def flush():
        nonlocal run_gen, run_len
        if run_gen is None:
            return
        nm = gen_names[run_gen]
        body.append(nm if run_len == 1 else f"{nm}^{run_len}")
        run_gen, run_len = None, 0

    minus = sum(1 for j in word if gen_names[j] == "-1")
    if minus % 2 == 1:
        sign = "-"
    for j in word:
        if gen_names[j] == "-1":
            continue
        if j == run_gen:
            run_len += 1
        else:
            flush()
            run_gen, run_len = j, 1
    flush()
    if not body:
        return sign + "1" if sign else "1"
    return sign + "".join(body)


def _find(mats: np.ndarray, m: np.ndarray, tol: float) -> int:
    """Index of m in the stacked array mats, or -1."""
    if len(mats) == 0:
        return -1
    d = np.abs(mats - m[None]).max(axis=(1, 2))
    i = int(np.argmin(d))
    return i if d[i] <= tol else -1


def generate_group(
    gen_matrices: list[np.ndarray],
    tol: float = DEFAULT_TOL,
    max_order: int = DEFAULT_MAX_ORDER,
    gen_names: list[str] | None = None,
    name: str = "",
) -> GroupTable:
    """Close a set of orthogonal matrices under multiplication.

    Raises NotOrthogonal if a generator fails orthogonality by more than tol,
    OrderExceeded if the closure passes max_order.
    """
    gens = [np.asarray(g, dtype=float) for g in gen_matrices]
    n = gens[0].shape[0]
    for g in gens:
        if g.shape != (n, n):
            raise NotOrthogonal("generators must be square matrices of equal size")
        if np.abs(g.T @ g - np.eye(n)).max() > max(tol, 1e-12) * 10:
            raise NotOrthogonal("generator is not orthogonal within tolerance")
    if gen_names is None:
        gen_names = [f"g{i}" for i in range(len(gens))]

    mats = [np.eye(n)]
    words: list[tuple[int, ...]] = [()]
    # breadth-first closure; elements discovered in word-length order
    i = 0
    while i < len(mats):
        for j, g in enumerate(gens):
            p = mats[i] @ g
            if _find(np.asarray(mats), p, tol) < 0:
                mats.append(p)
                words.append(words[i] + (j,))
                if len(mats) > max_order:
                    raise OrderExceeded(f"group closure exceeded max_order={max_order}")
        i += 1

    order = len(mats)
    arr = np.asarray(mats)
    mult = np.empty((order, order), dtype=np.int64)
    for a in range(order):
        prods = arr[a] @ arr  # (order, n, n) batched on the right factor
        for b in range(order):
            k = _find(arr, prods[b], tol)
            if k < 0:
                raise OrderExceeded("closure not closed; tolerance too tight?")
            mult[a, b] = k
    inv = np.empty(order, dtype=np.int64)
    for a in range(order):
        inv[a] = int(np.where(mult[a] == 0)[0][0])

    generators = [_find(arr, g, tol) for g in gens]

    table = GroupTable(
        order=order,
        mult=mult,
        inv=inv,
        generators=generators,
        element_matrices=arr,
        words=words,
        gen_names=list(gen_names),
        name=name,
    )
    table.conjugacy_classes, table.class_of = _conjugacy_classes(table)
    return table


def _conjugacy_classes(g: GroupTable) -> tuple[list[list[int]], np.ndarray]:
    seen = np.zeros(g.order, dtype=bool)
    classes: list[list[int]] = []
    class_of = np.empty(g.order, dtype=np.int64)
    for e in range(g.order):
        if seen[e]:
            continue
        orbit = sorted({g.conjugate(e, x) for x in range(g.order)})
        for h in orbit:
            seen[h] = True
            class_of[h] = len(classes)
        classes.append(orbit)
    return classes, class_of


def enumerate_subgroups(g: GroupTable) -> list[Subgroup]:
    """All subgroups, by closing pairwise joins of cyclic subgroups."""
    subs: set[tuple[int, ...]] = {(0,)}
    for e in range(g.order):
        subs.add(g.subgroup_generated([e]).elements)
    current = set(subs)
    while True:
        new: set[tuple[int, ...]] = set()
        pool = sorted(current)
        for i, a in enumerate(pool):
            for b in pool[i + 1:]:
                if set(a) <= set(b) or set(b) <= set(a):
                    continue
                j = g.subgroup_generated(list(set(a) | set(b))).elements
                if j not in current:
                    new.add(j)
        if not new:
            break
        current |= new
    return [Subgroup(s) for s in sorted(current, key=lambda s: (len(s), s))]


def subgroup_classes(
    g: GroupTable, subs: list[Subgroup]
) -> list[tuple[Subgroup, list[Subgroup]]]:
    """Partition subgroups into conjugacy classes.

    Returns (representative, members) pairs; the representative is the
    lexicographically least member.
    """
    remaining = {s.elements: s for s in subs}
    out: list[tuple[Subgroup, list[Subgroup]]] = []
    while remaining:
        key = min(remaining)
        s = remaining.pop(key)
        members = {s.elements: s}
        for x in range(g.order):
            c = g.conjugate_subgroup(s, x)
            if c.elements in remaining:
                members[c.elements] = remaining.pop(c.elements)
        rep = Subgroup(min(members))
        out.append((rep, [members[k] for k in sorted(members)]))
    out.sort(key=lambda t: (t[0].order, t[0].elements))
    return out


def normalizer(g: GroupTable, s: Subgroup) -> Subgroup:
    """{x : x s x^-1 = s}, by brute force over the group."""
    target = set(s.elements)
    elems = [
        x for x in range(g.order)
        if {g.conjugate(e, x) for e in s.elements} == target
    ]
    return Subgroup(tuple(sorted(elems)))


def is_cyclic(g: GroupTable, s: Subgroup) -> int | None:
    """A generating element index if s is cyclic, else None.

    Prefers the generator with the shortest word (nicest name).
    """
    best = None
    for e in s.elements:
        if g.subgroup_generated([e]).order == s.order:
            if best is None or len(g.words[e]) < len(g.words[best]):
                best = e
    return best


def subgroup_name(g: GroupTable, s: Subgroup) -> str:
    """Readable label: '1', the group name for G, Zn(gen) for cyclic, else H<order>."""
    if s.order == 1:
        return "1"
    if s.order == g.order:
        return g.name or "G"
    e = is_cyclic(g, s)
    if e is not None:
        return f"Z{s.order}({g.element_name(e)})"
    return f"H{s.order}{{{','.join(str(i) for i in s.elements[:4])}}}"
