import math

import numpy as np
import pytest

from equistrat.errors import SpecError
from equistrat.problems import BUILTIN_SPECS, builtin_names, load_builtin
from equistrat.specfile import (load_spec, parse_matrix, parse_scalar,
                                parse_spec)


def test_scalar_expressions():
    assert parse_scalar("1 + 2 * 3") == 7.0
    assert abs(parse_scalar("cos(pi/3)") - 0.5) < 1e-12
    assert abs(parse_scalar("sin(pi/6)") - 0.5) < 1e-12
    assert abs(parse_scalar("sqrt(2)/2") - math.sqrt(2) / 2) < 1e-12
    assert parse_scalar("-(1 - 3)") == 2.0
    assert parse_scalar("2e-1 * 10") == 2.0


def test_scalar_errors():
    for bad in ("1 +", "cos 3", "foo(1)", "(1", "1 2"):
        with pytest.raises(SpecError):
            parse_scalar(bad)


def test_parse_matrix():
    m = parse_matrix("[[cos(pi), 0], [0, 1]]")
    assert np.abs(m - np.diag([-1.0, 1.0])).max() < 1e-12
    with pytest.raises(SpecError):
        parse_matrix("[[1, 2], [3]]")
    with pytest.raises(SpecError):
        parse_matrix("[1, 2]")


def test_named_groups():
    p = parse_spec("group = dihedral 4\nV = rot:1\nW = sgn")
    assert p.group.order == 8
    assert p.v.dim == 2 and p.w.dim == 1
    p = parse_spec("group = cyclic 3\nV = rot:1\nW = triv")
    assert p.group.order == 3
    p = parse_spec("group = frobenius 13 4\nV = ind:1\nW = sgnb")
    assert p.group.order == 52


def test_product_groups_and_options():
    text = ("group = cyclic 2 x cyclic 2\nV = sign * triv\nW = triv * sign\n"
            "seed = 7\ndegree_max = 3\n")
    p = parse_spec(text)
    assert p.group.order == 4
    assert p.v.dim == 1 and p.w.dim == 1
    assert p.options == {"seed": 7, "degree_max": 3}


def test_explicit_groups():
    text = ("group = explicit R\nmat.R = [[0, -1], [1, 0]]\n"
            "V = mats R\nmat.S = [[-1]]\nW = mats S\n")
    p = parse_spec(text)
    assert p.group.order == 4
    assert p.w.dim == 1


def test_spec_errors():
    base = "group = cyclic 2\nV = sign\nW = sign\n"
    with pytest.raises(SpecError):
        parse_spec(base + "bogus = 1\n")
    with pytest.raises(SpecError):
        parse_spec(base + "V = triv\n")  # duplicate key
    with pytest.raises(SpecError):
        parse_spec("group = cyclic 2\nV = sign\n")  # missing W
    with pytest.raises(SpecError):
        parse_spec("group = cyclic 2\nV = nosuch\nW = sign\n")
    with pytest.raises(SpecError):
        parse_spec("group = frobenius 13 2\nV = sgnb\nW = sgnb\n")  # q != 4
    with pytest.raises(SpecError):
        parse_spec("group = cyclic 3\nV = sign\nW = triv\n")  # odd-order sign
    with pytest.raises(SpecError):
        parse_spec(base + "seed = abc\n")
    with pytest.raises(SpecError):
        parse_spec("group = explicit R\nV = mats R\nW = mats R\n")  # no mat.R


def test_builtin_roundtrip():
    assert set(builtin_names()) == set(BUILTIN_SPECS)
    for name in builtin_names():
        p = load_builtin(name)
        again = parse_spec(p.to_spec_text())
        assert again.group.order == p.group.order
        assert again.v.dim == p.v.dim and again.w.dim == p.w.dim
        assert np.abs(again.v.mats - p.v.mats).max() < 1e-12


def test_load_spec_file(tmp_path):
    path = tmp_path / "prob.spec"
    path.write_text(BUILTIN_SPECS["d2"], encoding="utf-8")
    p = load_spec(str(path))
    assert p.name == "d2" and p.group.order == 4


def test_frobenius_relations():
    # a^13 = b^4 = 1 and b a b^-1 is a power of a generating the same cycle
    p = parse_spec("group = frobenius 13 4\nV = ind:1\nW = triv\n")
    g = p.group
    a, b = g.generators
    x = a
    for _ in range(12):
        x = g.mult[x, a]
    assert x == 0
    y = b
    for _ in range(3):
        y = g.mult[y, b]
    assert y == 0
    conj = g.mult[g.mult[b, a], g.inv[b]]
    powers = []
    x = a
    for _ in range(13):
        powers.append(x)
        x = g.mult[x, a]
    assert conj in powers
