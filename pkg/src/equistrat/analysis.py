"""The zero-set decision pipeline.

Given representations V, W of a finite group, strip trivial summands, split W
into isotypic components, classify each component by delta vs r, and decide
for each maximal isotropy class whether the fully symmetric stratum lies in
the boundary of its stratum.  Three mechanisms: the implicit function theorem
when delta >= r, a seeded regularity sampling test on the lowest-degree
homogeneous layer when delta = 0, and a reduction to a smaller pair when
0 < delta < r.

Numeric sampling can support an Included verdict but never proves absence;
failed searches yield Inconclusive, with the evidence recorded.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import group as grp
from .equivariants import (EquivariantBasis, RestrictedFamily,
                           equivariant_basis, lowest_degree, restrict_to_fix)
from .errors import (EndoTypeAmbiguous, GenericRankFailed, InternalMismatch,
                     NoEquivariants)
from .group import GroupTable, Subgroup
from .isotropy import IsotropyLattice, IsotropyNode, build_lattice
from .numerics import dedupe_points, gauss_newton, matrix_rank, sample_sphere
from .representation import (IsotypicComponent, Representation, character,
                             char_inner, delta, fix_basis, isotypic_decompose,
                             kernel)

INCLUDED = "Included"
NOT_INCLUDED = "NotIncluded"
INCONCLUSIVE = "Inconclusive"
SKIPPED = "Skipped"

MECH_IFT = "Theorem-IFT"
MECH_BMS = "BMS-regularity"
MECH_LS = "LS-reduction"
MECH_VANISHING = "Vanishing"
MECH_INDEX = "IndexFilter"


@dataclass
class AnalyzeOptions:
    seed: int = 42
    degree_max: int = 5
    n_samples: int = 32
    n_starts: int = 64
    newton_tol: float = 1e-10
    newton_max_iter: int = 200
    success_threshold: float = 0.75
    root_majority: float = 0.5
    generic_rank_draws: int = 16

    def to_dict(self) -> dict:
        return dict(sorted(self.__dict__.items()))


@dataclass
class CaseTag:
    kind: str  # "delta_geq_r" | "delta_zero" | "delta_intermediate"
    delta: int
    r: int


@dataclass
class InclusionVerdict:
    sigma_name: str
    sigma: Subgroup
    verdict: str
    mechanism: str
    predicted_branch_dim: int
    evidence: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "sigma": self.sigma_name,
            "verdict": self.verdict,
            "mechanism": self.mechanism,
            "predicted_branch_dim": self.predicted_branch_dim,
            "evidence": self.evidence,
        }


@dataclass
class ComponentReport:
    irr_dim: int
    multiplicity: int
    endo_dim: int
    delta: int
    case: CaseTag | None
    verdicts: list[InclusionVerdict]
    vanishing: bool = False
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "irr_dim": self.irr_dim,
            "multiplicity": self.multiplicity,
            "endo_dim": self.endo_dim,
            "delta": self.delta,
            "case": None if self.case is None else self.case.kind,
            "vanishing": self.vanishing,
            "note": self.note,
            "verdicts": [v.to_dict() for v in self.verdicts],
        }


@dataclass
class AnalysisReport:
    group_name: str
    group_order: int
    dim_v: int
    dim_w: int
    options: AnalyzeOptions
    reductions: dict
    lattice: IsotropyLattice
    components: list[ComponentReport]
    aggregate: list[InclusionVerdict]
    note: str = ""

    def included_names(self) -> set[str]:
        return {v.sigma_name for v in self.aggregate if v.verdict == INCLUDED}

    def to_dict(self) -> dict:
        return {
            "group": {"name": self.group_name, "order": self.group_order},
            "spaces": {"dim_V": self.dim_v, "dim_W": self.dim_w},
            "options": self.options.to_dict(),
            "reductions": self.reductions,
            "lattice": [
                {
                    "name": n.name,
                    "order": n.subgroup.order,
                    "dim_fix_V": n.dim_fix_v,
                    "dim_fix_W": n.dim_fix_w,
                    "index_s": n.index_s,
                    "n_sigma": n.n_sigma,
                    "maximal": n.is_maximal,
                }
                for n in self.lattice.nodes
            ],
            "components": [c.to_dict() for c in self.components],
            "aggregate": [v.to_dict() for v in self.aggregate],
            "note": self.note,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_markdown(self) -> str:
        lines = [f"# Zero-set analysis: {self.group_name or 'G'} "
                 f"(order {self.group_order}), V dim {self.dim_v}, W dim {self.dim_w}",
                 "", f"seed: {self.options.seed}", "", "## Isotropy lattice", ""]
        lines.append("| subgroup | order | dim Fix_V | dim Fix_W | s | maximal |")
        lines.append("|---|---|---|---|---|---|")
        for n in self.lattice.nodes:
            lines.append(f"| {n.name} | {n.subgroup.order} | {n.dim_fix_v} | "
                         f"{n.dim_fix_w} | {n.index_s} | {'yes' if n.is_maximal else ''} |")
        lines += ["", "## Verdicts", ""]
        lines.append("| subgroup | verdict | mechanism | branch dim |")
        lines.append("|---|---|---|---|")
        for v in self.aggregate:
            lines.append(f"| {v.sigma_name} | {v.verdict} | {v.mechanism} | "
                         f"{v.predicted_branch_dim} |")
        if self.note:
            lines += ["", self.note]
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# reductions

def _orth_complement(basis: np.ndarray, dim: int) -> np.ndarray:
    if basis.shape[1] == 0:
        return np.eye(dim)
    u, _, _ = np.linalg.svd(basis, full_matrices=True)
    return u[:, basis.shape[1]:]


def strip_trivial(v: Representation, w: Representation
                  ) -> tuple[Representation, Representation, int, int]:
    """Remove the fully symmetric summands from both spaces.

    Returns (V', W', p, q) with p = dim Fix_V(G), q = dim Fix_W(G).
    """
    g_full = Subgroup(tuple(range(v.group.order)))
    bv = fix_basis(v, g_full)
    bw = fix_basis(w, g_full)
    p, q = bv.shape[1], bw.shape[1]
    vs = v.sub(_orth_complement(bv, v.dim)) if p else v
    ws = w.sub(_orth_complement(bw, w.dim)) if q else w
    return vs, ws, p, q


def vanishing_check(v: Representation, w_component_rep: Representation,
                    dlt: int) -> str | None:
    """Nonlinear Schur test for one isotypic component.

    Returns "vanishing" if every equivariant map into the component is zero,
    "quotient" if the problem should be restated over a quotient group, None
    if the pipeline can continue as-is.
    """
    kv = kernel(v)
    if kv.order == 1:
        return None
    kw = kernel(w_component_rep)
    inter = set(kv.elements) & set(kw.elements)
    if inter == {0} and dlt == 0:
        return "vanishing"
    return "quotient"


def quotient_by_v_kernel(v: Representation, w: Representation
                         ) -> tuple[GroupTable, Representation, Representation]:
    """Rebuild the problem over G / ker(rho_V), when ker(rho_V) <= ker(rho_W).

    Regenerating from the V generator matrices identifies kernel cosets, since
    element identity is matrix identity.
    """
    g = v.group
    v_gens = [v.mats[e] for e in g.generators]
    w_gens = [w.mats[e] for e in g.generators]
    g2 = grp.generate_group(v_gens, gen_names=g.gen_names,
                            name=(g.name + "/ker" if g.name else "G/ker"))
    v2 = Representation.defining(g2)
    w2 = Representation.from_generators(g2, w_gens)
    return g2, v2, w2


# ---------------------------------------------------------------------------
# case classification

def classify_case(dlt: int, comp: IsotypicComponent) -> CaseTag:
    r = comp.multiplicity
    if comp.endo_dim > 1:
        mult_in_v = dlt // comp.endo_dim
        if (dlt >= r) != (mult_in_v >= r):
            raise EndoTypeAmbiguous(
                f"delta={dlt}, multiplicity={mult_in_v}, r={r}, "
                f"endo_dim={comp.endo_dim} disagree on the comparison")
    if dlt >= r:
        return CaseTag("delta_geq_r", dlt, r)
    if dlt == 0:
        return CaseTag("delta_zero", dlt, r)
    return CaseTag("delta_intermediate", dlt, r)


# ---------------------------------------------------------------------------
# case 1: implicit function theorem

def predict_case1(v: Representation, w_comp: Representation,
                  comp_lattice: IsotropyLattice, opts: AnalyzeOptions,
                  rng: np.random.Generator) -> list[InclusionVerdict]:
    """delta >= r: every maximal isotropy class with positive index is included.

    The generic-rank step of the proof is verified numerically on the linear
    generator layer.
    """
    lin = equivariant_basis(v, w_comp, 1)
    achieved = 0
    for _ in range(opts.generic_rank_draws):
        t = rng.standard_normal(lin.dim)
        achieved = max(achieved, matrix_rank(lin.combine(t).coeffs))
        if achieved == w_comp.dim:
            break
    if achieved != w_comp.dim:
        raise GenericRankFailed(
            f"linear layer rank {achieved} < {w_comp.dim} after "
            f"{opts.generic_rank_draws} draws")
    out = []
    for node in comp_lattice.nodes:
        if node.subgroup.order == v.group.order:
            continue
        if not node.is_maximal:
            out.append(InclusionVerdict(node.name, node.subgroup, SKIPPED,
                                        MECH_INDEX, node.index_s,
                                        {"reason": "NotMaximal"}))
            continue
        if node.index_s > 0:
            out.append(InclusionVerdict(
                node.name, node.subgroup, INCLUDED, MECH_IFT, node.index_s,
                {"generic_rank": achieved, "target_rank": w_comp.dim}))
        elif node.index_s == 0:
            out.append(InclusionVerdict(node.name, node.subgroup, SKIPPED,
                                        MECH_INDEX, 0, {"reason": "ZeroIndex"}))
        else:
            out.append(InclusionVerdict(node.name, node.subgroup, NOT_INCLUDED,
                                        MECH_INDEX, node.index_s,
                                        {"reason": "NegativeIndex"}))
    return out


# ---------------------------------------------------------------------------
# case 2: lowest-degree regularity sampling

def _sphere_roots(pmap, n_starts: int, rng: np.random.Generator,
                  tol: float, max_iter: int) -> list[np.ndarray]:
    """Roots of {pmap = 0, |x|^2 = 1} by multi-start damped Gauss-Newton."""
    n = pmap.n

    def fun(x):
        return np.concatenate([pmap.evaluate(x), [x @ x - 1.0]])

    def jac(x):
        return np.vstack([pmap.jacobian(x), 2.0 * x[None, :]])

    roots = []
    for x0 in sample_sphere(rng, n, n_starts):
        r = gauss_newton(fun, jac, x0, tol=tol, max_iter=max_iter)
        if r is not None:
            roots.append(r)
    return dedupe_points(roots)


def case2_regularity_test(v: Representation, w_comp: Representation,
                          comp_lattice: IsotropyLattice, opts: AnalyzeOptions,
                          rng: np.random.Generator) -> list[InclusionVerdict]:
    """delta = 0: sample the lowest-degree layer and test regularity on zeros.

    Included requires, over the sampled coefficient vectors: no irregular root
    anywhere, a success fraction >= opts.success_threshold, and roots actually
    witnessed on the fixed-point subspace for at least a majority of samples.
    Absence of roots is never read as NotIncluded.
    """
    try:
        d0 = lowest_degree(v, w_comp, opts.degree_max)
    except NoEquivariants:
        return [InclusionVerdict(node.name, node.subgroup, INCONCLUSIVE,
                                 MECH_BMS, node.index_s,
                                 {"reason": "NoEquivariants",
                                  "degree_max": opts.degree_max})
                for node in comp_lattice.nodes
                if node.subgroup.order != v.group.order]
    q_basis = equivariant_basis(v, w_comp, d0)
    k = q_basis.dim

    maximal = [n for n in comp_lattice.nodes if n.is_maximal]
    tested = [n for n in maximal if n.index_s > 0 and n.dim_fix_w > 0]
    guard = [n for n in maximal if n.index_s <= 0]  # Lemma: roots here break regularity
    families: dict[int, RestrictedFamily] = {}
    for n in tested + guard:
        families[id(n)] = restrict_to_fix(q_basis, n.subgroup, v, w_comp)

    t_draws = sample_sphere(rng, k, opts.n_samples)
    nt, mi = opts.newton_tol, opts.newton_max_iter

    # per-sample obstruction data, shared by every tested node: a root on a
    # maximal stratum with nonpositive index means the restriction there
    # cannot be regular (more independent equations than directions)
    obstructed = np.zeros(opts.n_samples, dtype=bool)
    for si, t in enumerate(t_draws):
        for n in guard:
            fam = families[id(n)]
            if fam.dim_in == 0 or fam.dim_out == 0 or fam.is_zero():
                continue
            if _sphere_roots(fam.combine(t), opts.n_starts, rng, nt, mi):
                obstructed[si] = True
                break

    out = []
    for node in comp_lattice.nodes:
        if node.subgroup.order == v.group.order:
            continue
        if not node.is_maximal:
            out.append(InclusionVerdict(node.name, node.subgroup, SKIPPED,
                                        MECH_INDEX, node.index_s,
                                        {"reason": "NotMaximal"}))
            continue
        if node.index_s < 0:
            out.append(InclusionVerdict(node.name, node.subgroup, NOT_INCLUDED,
                                        MECH_INDEX, node.index_s,
                                        {"reason": "NegativeIndex"}))
            continue
        if node.index_s == 0:
            out.append(InclusionVerdict(node.name, node.subgroup, SKIPPED,
                                        MECH_INDEX, 0, {"reason": "ZeroIndex"}))
            continue
        if node.dim_fix_w == 0:
            out.append(InclusionVerdict(
                node.name, node.subgroup, INCLUDED, MECH_IFT, node.index_s,
                {"reason": "FixWZero"}))
            continue
        fam = families[id(node)]
        if fam.is_zero():
            out.append(InclusionVerdict(node.name, node.subgroup, INCONCLUSIVE,
                                        MECH_BMS, node.index_s,
                                        {"reason": "NoDependence", "degree": d0}))
            continue
        # a branch through the origin is witnessed by a root of Q^Sigma on the
        # sphere where the restricted Jacobian is surjective; degenerate roots
        # are recorded but carry no information either way
        found_regular = np.zeros(opts.n_samples, dtype=bool)
        found_any = np.zeros(opts.n_samples, dtype=bool)
        degenerate_total = 0
        roots_per_sample = []
        rank_hist: dict[int, int] = {}
        for si, t in enumerate(t_draws):
            qt = fam.combine(t)
            roots = _sphere_roots(qt, opts.n_starts, rng, nt, mi)
            found_any[si] = bool(roots)
            roots_per_sample.append(len(roots))
            for root in roots:
                rank = matrix_rank(qt.jacobian(root))
                rank_hist[rank] = rank_hist.get(rank, 0) + 1
                if rank == fam.dim_out:
                    found_regular[si] = True
                else:
                    degenerate_total += 1
        # a sample is spoiled if its roots were all degenerate, or obstructed
        spoiled = obstructed | (found_any & ~found_regular)
        success_frac = float((~spoiled).mean())
        root_frac = float((found_regular & ~spoiled).mean())
        evidence = {
            "degree": d0,
            "n_samples": opts.n_samples,
            "n_starts": opts.n_starts,
            "success_fraction": success_frac,
            "regular_root_fraction": root_frac,
            "degenerate_roots": degenerate_total,
            "obstructed_samples": int(obstructed.sum()),
            "roots_per_sample": roots_per_sample,
            "jacobian_rank_histogram": {str(k): v for k, v in
                                        sorted(rank_hist.items())},
            "t_samples": [[round(float(x), 6) for x in t] for t in t_draws],
            "seed": opts.seed,
        }
        if (success_frac >= opts.success_threshold
                and root_frac >= opts.root_majority):
            out.append(InclusionVerdict(node.name, node.subgroup, INCLUDED,
                                        MECH_BMS, node.index_s, evidence))
        else:
            reason = ("Obstructed" if obstructed.any() else
                      "InsufficientRegularRootWitness")
            evidence["reason"] = reason
            out.append(InclusionVerdict(node.name, node.subgroup, INCONCLUSIVE,
                                        MECH_BMS, node.index_s, evidence))
    return out


# ---------------------------------------------------------------------------
# case 3: reduction

def case3_reduce(v: Representation, ws: Representation, comp: IsotypicComponent,
                 dlt: int, comp_lattice: IsotropyLattice, opts: AnalyzeOptions,
                 rng: np.random.Generator, subs: list[Subgroup],
                 seed: int) -> list[InclusionVerdict]:
    """0 < delta < r: solve the matched copies by the IFT, then run the
    regularity test on the reduced pair sharing no irreducibles."""
    if not 0 < dlt < comp.multiplicity:
        raise InternalMismatch(
            f"reduction needs 0 < delta < r, got delta={dlt} "
            f"r={comp.multiplicity}; boundary cases belong to the other branches")
    w_prime_basis = np.concatenate(comp.block_bases[:dlt], axis=1)
    w_perp_basis = np.concatenate(comp.block_bases[dlt:], axis=1)
    w_prime = ws.sub(w_prime_basis)
    w_perp = ws.sub(w_perp_basis)

    lattice_wp = build_lattice(v, w_prime, subs)
    part1 = predict_case1(v, w_prime, lattice_wp, opts, rng)
    part1_by_sub = {vd.sigma.elements: vd for vd in part1}

    # split V = (copies of U) + V'
    v_components = isotypic_decompose(v, seed=seed)
    v_prime_blocks = []
    for c in v_components:
        if c.irr_dim == comp.irr_dim and \
                char_inner(c.u_character, comp.u_character) > 0:
            continue  # the matched copies, solved by the IFT
        v_prime_blocks.append(c.basis)
    v_prime_basis = (np.concatenate(v_prime_blocks, axis=1)
                     if v_prime_blocks else np.zeros((v.dim, 0)))
    v_prime = v.sub(v_prime_basis)

    lattice_red = build_lattice(v_prime, w_perp, subs)
    part2 = case2_regularity_test(v_prime, w_perp, lattice_red, opts, rng)
    part2_by_sub = {vd.sigma.elements: vd for vd in part2}

    out = []
    for node in comp_lattice.nodes:
        if node.subgroup.order == v.group.order:
            continue
        key = node.subgroup.elements
        v1 = part1_by_sub.get(key)
        v2 = part2_by_sub.get(key)
        evidence = {
            "matched_part": None if v1 is None else v1.to_dict(),
            "reduced_part": None if v2 is None else v2.to_dict(),
        }
        if v2 is not None and v2.verdict == INCLUDED and \
                (v1 is None or v1.verdict == INCLUDED):
            out.append(InclusionVerdict(node.name, node.subgroup, INCLUDED,
                                        MECH_LS, node.index_s, evidence))
        elif (v1 is not None and v1.verdict == NOT_INCLUDED) or \
                (v2 is not None and v2.verdict == NOT_INCLUDED):
            out.append(InclusionVerdict(node.name, node.subgroup, NOT_INCLUDED,
                                        MECH_LS, node.index_s, evidence))
        elif v2 is not None and v2.verdict == SKIPPED and v2.evidence.get(
                "reason") == "NotMaximal" and (v1 is None or v1.verdict != INCLUDED):
            out.append(InclusionVerdict(node.name, node.subgroup, SKIPPED,
                                        MECH_INDEX, node.index_s,
                                        {"reason": "NotMaximal"}))
        elif v1 is None and v2 is None:
            out.append(InclusionVerdict(node.name, node.subgroup, SKIPPED,
                                        MECH_INDEX, node.index_s,
                                        {"reason": "NotInReducedLattices"}))
        else:
            out.append(InclusionVerdict(node.name, node.subgroup, INCONCLUSIVE,
                                        MECH_LS, node.index_s, evidence))
    return out


# ---------------------------------------------------------------------------
# orchestration

def _aggregate(full_lattice: IsotropyLattice,
               components: list[ComponentReport]) -> list[InclusionVerdict]:
    """Conjunction across components: included overall iff included everywhere."""
    out = []
    for node in full_lattice.nodes:
        if node.subgroup.order == full_lattice.group.order:
            continue
        key = node.subgroup.elements
        verdicts = []
        mechanisms = []
        for c in components:
            if c.vanishing:
                continue  # identically zero component constrains nothing
            for vd in c.verdicts:
                if vd.sigma.elements == key:
                    verdicts.append(vd.verdict)
                    mechanisms.append(vd.mechanism)
        if not verdicts:
            continue
        if all(v == INCLUDED for v in verdicts):
            verdict = INCLUDED
        elif any(v == NOT_INCLUDED for v in verdicts):
            verdict = NOT_INCLUDED
        elif any(v == INCONCLUSIVE for v in verdicts):
            verdict = INCONCLUSIVE
        else:
            verdict = SKIPPED
        mech = mechanisms[0] if len(set(mechanisms)) == 1 else "+".join(mechanisms)
        out.append(InclusionVerdict(node.name, node.subgroup, verdict, mech,
                                    node.index_s,
                                    {"per_component": verdicts}))
    return out


def analyze(v: Representation, w: Representation,
            opts: AnalyzeOptions | None = None) -> AnalysisReport:
    """Run the full pipeline and assemble a report.

    Deterministic for fixed inputs and options: one seeded generator drives
    every randomized step in a fixed order.
    """
    if opts is None:
        opts = AnalyzeOptions()
    rng = np.random.default_rng(opts.seed)
    g = v.group
    subs = grp.enumerate_subgroups(g)
    full_lattice = build_lattice(v, w, subs)

    vs, ws, p, q = strip_trivial(v, w)
    reductions = {"trivial_V": p, "trivial_W": q, "kernel_quotient": False}

    def report(components, note=""):
        return AnalysisReport(
            group_name=g.name, group_order=g.order, dim_v=v.dim, dim_w=w.dim,
            options=opts, reductions=reductions, lattice=full_lattice,
            components=components, aggregate=_aggregate(full_lattice, components),
            note=note)

    if ws.dim == 0:
        return report([], note=(
            f"W = Fix_W(G): every equivariant map has {q} unconstrained "
            "invariant outputs; no symmetry-forced structure to analyze."))
    if vs.dim == 0:
        comp = ComponentReport(ws.dim, 1, 1, 0, None, [], vanishing=True,
                               note="V is fully symmetric; every equivariant "
                                    "map into W' vanishes")
        return report([comp])

    kv = kernel(vs)
    if kv.order > 1:
        kw = kernel(ws)
        if set(kv.elements) <= set(kw.elements):
            g2, v2, w2 = quotient_by_v_kernel(vs, ws)
            sub_report = analyze(v2, w2, opts)
            sub_report.reductions["kernel_quotient"] = True
            sub_report.reductions["trivial_V"] = p
            sub_report.reductions["trivial_W"] = q
            sub_report.note = ("analyzed over the quotient by ker(rho_V); "
                               "subgroup names refer to the quotient group. "
                               + sub_report.note)
            return sub_report
        components = []
        for comp in isotypic_decompose(ws, seed=opts.seed):
            w_comp = ws.sub(comp.basis)
            dlt = delta(vs, comp)
            status = vanishing_check(vs, w_comp, dlt)
            if status == "vanishing":
                vd = []
                components.append(ComponentReport(
                    comp.irr_dim, comp.multiplicity, comp.endo_dim, dlt,
                    None, vd, vanishing=True,
                    note="nonlinear Schur: every equivariant map into this "
                         "component is identically zero"))
            else:
                components.append(ComponentReport(
                    comp.irr_dim, comp.multiplicity, comp.endo_dim, dlt,
                    None, [], note="unresolved kernel configuration"))
        return report(components, note="rho_V not faithful")

    components = []
    for comp in isotypic_decompose(ws, seed=opts.seed):
        w_comp = ws.sub(comp.basis)
        dlt = delta(vs, comp)
        comp_lattice = build_lattice(vs, w_comp, subs)
        try:
            tag = classify_case(dlt, comp)
        except EndoTypeAmbiguous as exc:
            components.append(ComponentReport(
                comp.irr_dim, comp.multiplicity, comp.endo_dim, dlt, None,
                [InclusionVerdict(n.name, n.subgroup, INCONCLUSIVE, MECH_INDEX,
                                  n.index_s, {"reason": "EndoTypeAmbiguous"})
                 for n in comp_lattice.nodes
                 if n.subgroup.order != g.order],
                note=str(exc)))
            continue
        if tag.kind == "delta_geq_r":
            verdicts = predict_case1(vs, w_comp, comp_lattice, opts, rng)
        elif tag.kind == "delta_zero":
            verdicts = case2_regularity_test(vs, w_comp, comp_lattice, opts, rng)
        else:
            verdicts = case3_reduce(vs, ws, comp, dlt, comp_lattice, opts, rng,
                                    subs, opts.seed)
        components.append(ComponentReport(
            comp.irr_dim, comp.multiplicity, comp.endo_dim, dlt, tag, verdicts))
    return report(components)
