import numpy as np
import pytest

from equistrat.errors import LengthMismatch
from equistrat.probe import (MATCH, MISMATCH, NON_GENERIC, ProbeOptions,
                             family_size, find_zero_branches, instantiate_map,
                             probe_to_csv, verify_predictions)


def test_family_size_and_length_check(problem):
    p = problem("d2")
    k = family_size(p.v, p.w)
    assert k >= 1
    with pytest.raises(LengthMismatch):
        instantiate_map(p.v, p.w, np.zeros(k + 1))


def test_zero_coefficients_give_zero_map(problem):
    p = problem("d2")
    f = instantiate_map(p.v, p.w, np.zeros(family_size(p.v, p.w)))
    rng = np.random.default_rng(0)
    for _ in range(3):
        assert np.abs(f.evaluate(rng.standard_normal(p.v.dim))).max() == 0.0


def test_d2_linear_unit_is_coordinate(problem):
    # a unit coefficient on the one-dimensional linear layer gives f = c*x
    p = problem("d2")
    k = family_size(p.v, p.w)
    t = np.zeros(k)
    t[0] = 1.0
    f = instantiate_map(p.v, p.w, t)
    x = np.array([0.7, -0.3])
    val = f.evaluate(x)[0]
    assert abs(abs(val) - 0.7) < 1e-12  # basis normalization fixes |c| = 1


def test_sample_invariants(problem):
    p = problem("z2rev")
    rng = np.random.default_rng(1)
    t = rng.standard_normal(family_size(p.v, p.w))
    samples = find_zero_branches(p.v, p.w, t)
    assert samples, "lattice has nodes"
    for s in samples:
        assert s.status in (MATCH, MISMATCH, NON_GENERIC)
        for resid in s.residuals:
            assert resid < 1e-8
        if s.estimated_dim is not None:
            assert 0 <= s.estimated_dim <= s.dim_fix_v


def test_verify_d2(probe_result):
    r = probe_result("d2")
    assert r.passed
    assert r.n_failed == 0
    assert len(r.draws) == 10
    # the predicted one-dimensional branch is seen on Z2(sigma)
    seen = [s for d in r.draws for s in d.samples
            if s.sigma_name == "Z2(sigma)" and s.status == MATCH]
    assert len(seen) >= 9


def test_verify_z2rev_and_d6(probe_result):
    for name in ("z2rev", "d6"):
        r = probe_result(name)
        assert r.passed
        assert r.n_failed == 0


def test_non_generic_flagged_not_failed(probe_result):
    # draws where a predicted branch found no witness are flagged, never failed
    for name in ("d2", "d6"):
        r = probe_result(name)
        for d in r.draws:
            if d.flagged:
                assert not d.failed


def test_csv_format(probe_result):
    csv = probe_to_csv(probe_result("d2"))
    lines = csv.strip().split("\n")
    assert lines[0] == "draw,sigma,expected_dim,estimated_dim,status,point,residual,rank"
    assert all(line.count(",") == 7 for line in lines)


def test_probe_determinism(problem):
    p = problem("d2")
    opts = ProbeOptions(n_draws=2, n_starts=64)
    a = verify_predictions(p.v, p.w, opts=opts)
    b = verify_predictions(p.v, p.w, opts=opts)
    assert probe_to_csv(a) == probe_to_csv(b)
