"""Isotropy subgroup classes, the lattice with indices, and DOT export.

A subgroup class is isotropy for the V action iff the pointwise stabilizer of
its fixed-point subspace equals the subgroup itself; for finite groups this
characterizes stabilizers of generic points of Fix_V.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .group import (GroupTable, Subgroup, enumerate_subgroups, normalizer,
                    subgroup_classes, subgroup_name)
from .representation import Representation, fix_basis, fix_dimension


def pointwise_stabilizer(v: Representation, s: Subgroup, tol: float = 1e-8) -> Subgroup:
    """Elements fixing every vector of Fix_V(s)."""
    basis = fix_basis(v, s)
    if basis.shape[1] == 0:
        return Subgroup(tuple(range(v.group.order)))
    resid = np.abs(np.einsum("gij,jb->gib", v.mats, basis) - basis[None]).max(axis=(1, 2))
    return Subgroup(tuple(int(i) for i in np.where(resid <= tol)[0]))


def isotropy_subgroups(v: Representation, subs: list[Subgroup] | None = None
                       ) -> list[Subgroup]:
    """Representatives of the isotropy subgroup classes of the V action."""
    g = v.group
    if subs is None:
        subs = enumerate_subgroups(g)
    classes = subgroup_classes(g, subs)
    out = []
    for rep_sub, _ in classes:
        if pointwise_stabilizer(v, rep_sub).elements == rep_sub.elements:
            out.append(rep_sub)
    return out


@dataclass
class IsotropyNode:
    subgroup: Subgroup          # class representative
    members: list[Subgroup]
    name: str
    dim_fix_v: int
    dim_fix_w: int
    n_sigma: int
    is_maximal: bool = False

    @property
    def index_s(self) -> int:
        return self.dim_fix_v - self.dim_fix_w


@dataclass
class IsotropyLattice:
    group: GroupTable
    nodes: list[IsotropyNode]
    order_edges: list[tuple[int, int]] = field(default_factory=list)  # (lower, upper) covering

    def node_by_subgroup(self, s: Subgroup) -> IsotropyNode | None:
        target = set(s.elements)
        for n in self.nodes:
            for m in n.members:
                if set(m.elements) == target:
                    return n
        return None

    def maximal_nodes(self) -> list[IsotropyNode]:
        return [n for n in self.nodes if n.is_maximal]


def _class_leq(g: GroupTable, a: Subgroup, b: Subgroup) -> bool:
    """True if some conjugate of a is contained in b."""
    sa = set(a.elements)
    if not sa <= set(range(g.order)):
        return False
    for x in range(g.order):
        if {g.conjugate(e, x) for e in a.elements} <= set(b.elements):
            return True
    return False


def build_lattice(v: Representation, w: Representation,
                  subs: list[Subgroup] | None = None) -> IsotropyLattice:
    """Lattice of isotropy classes of the V action, with indices from (V, W)."""
    g = v.group
    if subs is None:
        subs = enumerate_subgroups(g)
    classes = subgroup_classes(g, subs)
    iso = []
    for rep_sub, members in classes:
        if pointwise_stabilizer(v, rep_sub).elements == rep_sub.elements:
            iso.append((rep_sub, members))
    nodes = []
    for rep_sub, members in iso:
        nodes.append(IsotropyNode(
            subgroup=rep_sub,
            members=members,
            name=subgroup_name(g, rep_sub),
            dim_fix_v=fix_dimension(v, rep_sub),
            dim_fix_w=fix_dimension(w, rep_sub),
            n_sigma=0,
            is_maximal=False,
        ))
    # strict class order, then its covering relation
    k = len(nodes)
    less = np.zeros((k, k), dtype=bool)  # less[i, j]: class i strictly below class j
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            if nodes[i].subgroup.order < nodes[j].subgroup.order and \
                    _class_leq(g, nodes[i].subgroup, nodes[j].subgroup):
                less[i, j] = True
    edges = []
    for i in range(k):
        for j in range(k):
            if less[i, j] and not any(less[i, m] and less[m, j] for m in range(k)):
                edges.append((i, j))
    top = [j for j in range(k) if nodes[j].subgroup.order == g.order]
    for i, n in enumerate(nodes):
        n.is_maximal = bool(top) and all(j in top for j in range(k) if less[i, j]) \
            and any(less[i, j] for j in range(k))
    return IsotropyLattice(group=g, nodes=nodes, order_edges=edges)


def strata_dimension(node: IsotropyNode, k: int) -> tuple[int, int]:
    """(dimension of the universal stratum with k generators, zero-branch dimension)."""
    return node.index_s + k, node.index_s


def lattice_to_dot(lattice: IsotropyLattice) -> str:
    """DOT digraph, one node per class labeled 'name (s)', edges up the order."""
    lines = ["digraph isotropy {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for i, n in enumerate(lattice.nodes):
        lines.append(f'  n{i} [label="{n.name} ({n.index_s})"];')
    for i, j in lattice.order_edges:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_table(lattice: IsotropyLattice) -> str:
    rows = ["subgroup      order  dimFixV  dimFixW  s  maximal"]
    for n in lattice.nodes:
        rows.append(f"{n.name:<13} {n.subgroup.order:>5}  {n.dim_fix_v:>7}  "
                    f"{n.dim_fix_w:>7}  {n.index_s}  {'yes' if n.is_maximal else 'no'}")
    return "\n".join(rows) + "\n"


def lattice_with_normalizers(lattice: IsotropyLattice) -> list[tuple[str, int]]:
    """(name, |N_G(S)|) pairs; n_sigma is 0 for finite groups but the order is reported."""
    return [(n.name, normalizer(lattice.group, n.subgroup).order)
            for n in lattice.nodes]
