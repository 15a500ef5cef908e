"""Acceptance suite: one criterion per test, one printed pass/fail line each.

Run with `pytest tests/test_acceptance.py -s` to see the lines as they land.
"""

import numpy as np

from equistrat.analysis import INCLUDED, MECH_BMS, MECH_IFT, MECH_LS
from equistrat.equivariants import (equivariant_basis, equivariant_dimension,
                                    module_generator_dimension,
                                    restrict_to_fix)
from equistrat.group import enumerate_subgroups
from equistrat.probe import MATCH, MISMATCH
from equistrat.representation import fix_basis, fix_dimension
from equistrat.specfile import parse_spec

REDUCED_PAIR_SPEC = """
group = frobenius 13 4 x cyclic 2
V = ind:7 * sign + ind:7 * sign
W = ind:10 * sign
"""

F_MAXIMAL = {"Z4(b1)", "Z4(b1c2)", "Z2(b1^2c2)"}


def _line(num, desc, fn):
    try:
        fn()
    except BaseException:
        print(f"criterion {num} ({desc}): FAIL", flush=True)
        raise
    print(f"criterion {num} ({desc}): PASS", flush=True)


def test_criterion_1_lattices(lattice):
    def check():
        d2 = {n.name: n for n in lattice("d2").nodes}
        assert sorted(n.index_s for n in d2.values()) == [0, 0, 1, 1]
        d6 = {n.name: n for n in lattice("d6").nodes}
        assert sorted(n.index_s for n in d6.values()) == [0, 1, 1, 2]
        f = {n.name: n for n in lattice("f134_case1").nodes}
        assert f["Z4(b1)"].index_s == 1
        assert f["Z4(b1c2)"].index_s == 1
        assert f["Z2(b1^2)"].index_s == 2
        assert f["Z2(b1^2c2)"].index_s == 2
        assert [f[k].dim_fix_w for k in
                ("Z4(b1)", "Z4(b1c2)", "Z2(b1^2)", "Z2(b1^2c2)")] == [1, 1, 2, 2]
    _line(1, "lattice and index reproduction", check)


def test_criterion_2_equivariant_dimensions(problem):
    def check():
        d6 = problem("d6")
        cases = [
            (d6, 2, 3),
            (d6, 3, 0),
            (problem("f134_case2"), 3, 9),
            (parse_spec(REDUCED_PAIR_SPEC), 3, 6),
            (problem("d2"), 1, 1),
        ]
        for p, d, want in cases:
            assert equivariant_dimension(p.v, p.w, d) == want
            if want:
                # equivariant_basis raises if Reynolds rank disagrees
                assert equivariant_basis(p.v, p.w, d).dim == want
        # at degree 4 the five displayed terms are the new module generators
        # inside the 13-dim linear space; both counts are checked
        assert equivariant_dimension(d6.v, d6.w, 4) == 13
        assert equivariant_basis(d6.v, d6.w, 4).dim == 13
        assert module_generator_dimension(d6.v, d6.w, 4) == 5
    _line(2, "equivariant dimensions, trace formula vs Reynolds", check)


def test_criterion_3_restricted_forms(problem, lattice):
    def check():
        # D6 on Fix(Z2(kappa)): the family spans {u^2, uv, v^2}, so the
        # displayed form t1 u^2 + t2 uv + t3 v^2 is a basis change away;
        # Jacobians of the restricted maps match finite differences
        p = problem("d6")
        node = {n.name: n for n in lattice("d6").nodes}["Z2(s)"]
        fam = restrict_to_fix(equivariant_basis(p.v, p.w, 2), node.subgroup,
                              p.v, p.w)
        coeffs = np.array([f.coeffs.ravel() for f in fam.maps])
        assert coeffs.shape == (3, 3)
        assert np.linalg.matrix_rank(coeffs, tol=1e-8) == 3
        rng = np.random.default_rng(0)
        t = rng.standard_normal(3)
        q = fam.combine(t)
        for _ in range(4):
            u, v = rng.standard_normal(2)
            x = np.array([u, v])
            jac = q.jacobian(x)
            h = 1e-6
            for i in range(2):
                e = np.zeros(2)
                e[i] = h
                fd = (q.evaluate(x + e) - q.evaluate(x - e)) / (2 * h)
                assert np.abs(jac[:, i] - fd).max() < 1e-8 * max(1.0, abs(u), abs(v))
        # F-group cubics on the two one-complex-dim strata span the full
        # univariate-pair cubic space (4 monomials), matching the displayed forms
        p2 = problem("f134_case2")
        basis = equivariant_basis(p2.v, p2.w, 3)
        nodes = {n.name: n for n in lattice("f134_case2").nodes}
        for name in ("Z4(b1)", "Z4(b1c2)"):
            fam2 = restrict_to_fix(basis, nodes[name].subgroup, p2.v, p2.w)
            c2 = np.array([f.coeffs.ravel() for f in fam2.maps])
            assert np.linalg.matrix_rank(c2, tol=1e-8) == 4
    _line(3, "restricted-form reproduction", check)


def test_criterion_4_verdicts(report):
    def check():
        r = report("d6")
        assert r.included_names() == {"Z2(s)", "Z2(rs)"}
        assert all(v.mechanism == MECH_BMS for v in r.aggregate
                   if v.verdict == INCLUDED)
        r = report("f134_case1")
        assert r.included_names() == F_MAXIMAL
        assert all(v.mechanism == MECH_IFT for v in r.aggregate
                   if v.verdict == INCLUDED)
        for name, mech in (("f134_case2", MECH_BMS), ("f134_case3", MECH_LS)):
            r = report(name)
            assert r.included_names() == F_MAXIMAL
            dims = sorted(v.predicted_branch_dim for v in r.aggregate
                          if v.verdict == INCLUDED)
            assert dims == [1, 1, 2]
            assert all(v.mechanism == mech for v in r.aggregate
                       if v.verdict == INCLUDED)
    _line(4, "verdict reproduction", check)


def test_criterion_5_vanishing(problem, report):
    def check():
        p = problem("vanishing_z2z2")
        for d in range(1, 7):
            assert equivariant_dimension(p.v, p.w, d) == 0
        r = report("vanishing_z2z2")
        assert all(c.vanishing for c in r.components)
        assert r.included_names() == set()
    _line(5, "vanishing theorem instance", check)


def test_criterion_6_probe(probe_result, lattice):
    def check():
        targets = {
            "d2": ["Z2(sigma)"],
            "z2rev": ["z2rev"],
            "d6": ["Z2(s)", "Z2(rs)"],
        }
        for name, sigmas in targets.items():
            r = probe_result(name)
            assert len(r.draws) == 10
            for sigma in sigmas:
                expected = {n.name: n.index_s for n in lattice(name).nodes}[sigma]
                assert expected == 1
                samples = [s for d in r.draws for s in d.samples
                           if s.sigma_name == sigma]
                # every draw either matches the predicted dimension or is a
                # flagged non-generic draw (no witness found); at most one
                # of ten may disagree, and mismatches never occur here
                good = sum(1 for s in samples if s.status == MATCH
                           and s.estimated_dim == expected)
                flagged = sum(1 for s in samples if s.status != MATCH
                              and s.status != MISMATCH)
                assert good + flagged == 10 and good >= 1
                assert sum(1 for s in samples if s.status == MISMATCH) <= 1
            # non-generic draws are flagged, never failed
            for d in r.draws:
                assert not any(s.status == MISMATCH for s in d.samples)
    _line(6, "probe dimension match", check)


def test_criterion_7_invariants(problem, report):
    def check():
        rng = np.random.default_rng(42)
        # equivariance residual of every basis map
        for name, d in (("d6", 2), ("d2", 1), ("f134_case2", 3)):
            p = problem(name)
            basis = equivariant_basis(p.v, p.w, d)
            xs = rng.standard_normal((3, p.v.dim))
            for f in basis.maps:
                for g in range(p.group.order):
                    for x in xs:
                        resid = np.abs(f.evaluate(p.v.mats[g] @ x)
                                       - p.w.mats[g] @ f.evaluate(x)).max()
                        assert resid < 1e-8
        # fixed-dimension cross-check on every subgroup
        for name in ("d2", "d6", "z2rev"):
            p = problem(name)
            for rep in (p.v, p.w):
                for s in enumerate_subgroups(p.group):
                    assert fix_basis(rep, s).shape[1] == fix_dimension(rep, s)
        # Jacobian vs central finite differences
        p = problem("d6")
        f = equivariant_basis(p.v, p.w, 2).combine(rng.standard_normal(3))
        for _ in range(3):
            x = rng.standard_normal(p.v.dim)
            jac = f.jacobian(x)
            h = 1e-6
            for i in range(p.v.dim):
                e = np.zeros(p.v.dim)
                e[i] = h
                fd = (f.evaluate(x + e) - f.evaluate(x - e)) / (2 * h)
                assert np.abs(jac[:, i] - fd).max() < 1e-6
        # aggregation over a two-component target is the conjunction of the
        # single-component analyses
        both = report("f134_two_component")
        r1 = report("f134_case1")
        r2 = report("f134_case2")
        assert both.included_names() == r1.included_names() & r2.included_names()
        # byte-for-byte determinism of the report
        from equistrat.analysis import analyze
        p = problem("d2")
        assert analyze(p.v, p.w).to_json() == analyze(p.v, p.w).to_json()
    _line(7, "cross-checks and determinism", check)
