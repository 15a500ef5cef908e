import numpy as np
import pytest

from equistrat.analysis import (INCLUDED, INCONCLUSIVE, MECH_BMS, MECH_IFT,
                                MECH_LS, SKIPPED, AnalyzeOptions, analyze,
                                case3_reduce, classify_case, strip_trivial)
from equistrat.errors import InternalMismatch
from equistrat.representation import isotypic_decompose
from equistrat.specfile import parse_spec

STRIP_SPEC = """
group = dihedral 6
V = rot:1 + triv
W = triv + rot:2
"""


def test_d6_verdicts(report):
    r = report("d6")
    # [REFERENCE] both reflection classes carry one-dimensional zero branches
    assert r.included_names() == {"Z2(s)", "Z2(rs)"}
    by_name = {v.sigma_name: v for v in r.aggregate}
    for name in ("Z2(s)", "Z2(rs)"):
        v = by_name[name]
        assert v.mechanism == MECH_BMS
        assert v.predicted_branch_dim == 1
    assert by_name["1"].verdict == SKIPPED
    assert r.components[0].case.kind == "delta_zero"


def test_case1_verdicts(report):
    r = report("f134_case1")
    assert r.included_names() == {"Z4(b1)", "Z4(b1c2)", "Z2(b1^2c2)"}
    by_name = {v.sigma_name: v for v in r.aggregate}
    for name in ("Z4(b1)", "Z4(b1c2)", "Z2(b1^2c2)"):
        assert by_name[name].mechanism == MECH_IFT
    assert r.components[0].case.kind == "delta_geq_r"


def test_case2_verdicts(report):
    r = report("f134_case2")
    assert r.included_names() == {"Z4(b1)", "Z4(b1c2)", "Z2(b1^2c2)"}
    by_name = {v.sigma_name: v for v in r.aggregate}
    dims = {n: by_name[n].predicted_branch_dim
            for n in ("Z4(b1)", "Z4(b1c2)", "Z2(b1^2c2)")}
    assert dims == {"Z4(b1)": 1, "Z4(b1c2)": 1, "Z2(b1^2c2)": 2}
    assert r.components[0].case.kind == "delta_zero"
    included = [v for v in r.aggregate if v.verdict == INCLUDED]
    for v in included:
        assert v.mechanism == MECH_BMS


def test_case3_verdicts(report):
    r = report("f134_case3")
    assert r.included_names() == {"Z4(b1)", "Z4(b1c2)", "Z2(b1^2c2)"}
    by_name = {v.sigma_name: v for v in r.aggregate}
    dims = sorted(by_name[n].predicted_branch_dim
                  for n in ("Z4(b1)", "Z4(b1c2)", "Z2(b1^2c2)"))
    assert dims == [1, 1, 2]
    for n in ("Z4(b1)", "Z4(b1c2)", "Z2(b1^2c2)"):
        assert by_name[n].mechanism == MECH_LS
    assert r.components[0].case.kind == "delta_intermediate"


def test_vanishing_report(report):
    r = report("vanishing_z2z2")
    assert "rho_V not faithful" in r.note
    assert all(c.vanishing for c in r.components)
    assert r.included_names() == set()


def test_strip_trivial():
    p = parse_spec(STRIP_SPEC)
    vs, ws, ptriv, qtriv = strip_trivial(p.v, p.w)
    assert (ptriv, qtriv) == (1, 1)
    assert vs.dim == 2 and ws.dim == 2


def test_two_component_aggregation(problem, report):
    # the overall inclusion must be the conjunction of the per-component
    # inclusions; W here stacks the case-1 and case-2 targets
    r = report("f134_two_component")
    r1 = report("f134_case1")
    r2 = report("f134_case2")
    assert r.included_names() == r1.included_names() & r2.included_names()
    assert len(r.components) == 2
    kinds = sorted(c.case.kind for c in r.components)
    assert kinds == ["delta_geq_r", "delta_zero"]


def test_classify_case(problem):
    comp1 = isotypic_decompose(problem("f134_case1").w)[0]
    assert classify_case(1, comp1).kind == "delta_geq_r"
    assert classify_case(0, comp1).kind == "delta_zero"
    comp3 = isotypic_decompose(problem("f134_case3").w)[0]
    assert comp3.multiplicity == 2
    assert classify_case(1, comp3).kind == "delta_intermediate"
    assert classify_case(2, comp3).kind == "delta_geq_r"


def test_case3_rejects_boundary_delta(problem):
    p = problem("f134_case3")
    comp = isotypic_decompose(p.w)[0]
    rng = np.random.default_rng(0)
    with pytest.raises(InternalMismatch):
        case3_reduce(p.v, p.w, comp, comp.multiplicity, None,
                     AnalyzeOptions(), rng, [], 42)


def test_determinism_byte_for_byte(problem):
    p = problem("d2")
    a = analyze(p.v, p.w).to_json()
    b = analyze(p.v, p.w).to_json()
    assert a == b
    assert '"verdict"' in a


def test_inconclusive_never_claims_absence(report):
    # failed numeric search may yield Inconclusive but never NotIncluded
    for name in ("d6", "f134_case2", "f134_case3"):
        for v in report(name).aggregate:
            assert v.verdict in (INCLUDED, INCONCLUSIVE, SKIPPED)
