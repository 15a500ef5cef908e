"""Builtin example problems, stored as spec text and fed through the parser."""

from __future__ import annotations

from .specfile import Problem, parse_spec

BUILTIN_SPECS: dict[str, str] = {
    # two commuting reflections on the plane; one sign equation
    "d2": """\
name = d2
group = explicit kappa sigma
mat.kappa = [[1, 0], [0, -1]]
mat.sigma = [[-1, 0], [0, 1]]
V = mats kappa sigma
mat.wk = [[1]]
mat.ws = [[-1]]
W = mats wk ws
""",
    # doubled standard plane of the hexagon group mapping to the doubled-angle plane
    "d6": """\
name = d6
group = dihedral 6
V = rot:1 + rot:1
W = rot:2
""",
    # time-reversal style symmetry: one reflected axis, target reverses the others
    "z2rev": """\
name = z2rev
group = explicit R
mat.R = [[1, 0, 0], [0, 1, 0], [0, 0, -1]]
V = mats R
mat.S = [[-1, 0, 0], [0, -1, 0], [0, 0, 1]]
W = mats S
""",
    "f134_case1": """\
name = f134_case1
group = frobenius 13 4 x cyclic 2
V = ind:1 * sign + ind:10 * sign
W = ind:10 * sign
""",
    "f134_case2": """\
name = f134_case2
group = frobenius 13 4 x cyclic 2
V = ind:1 * sign + ind:10 * sign
W = ind:7 * sign
""",
    "f134_case3": """\
name = f134_case3
group = frobenius 13 4 x cyclic 2
V = ind:7 * sign + ind:7 * sign + ind:10 * sign
W = ind:10 * sign + ind:10 * sign
""",
    # stacked targets: one component solved linearly, one by sampling
    "f134_two_component": """\
name = f134_two_component
group = frobenius 13 4 x cyclic 2
V = ind:1 * sign + ind:10 * sign
W = ind:10 * sign + ind:7 * sign
""",
    # both kernels nontrivial but transverse: the component map must vanish
    "vanishing_z2z2": """\
name = vanishing_z2z2
group = cyclic 2 x cyclic 2
V = triv * sign
W = sign * triv
""",
}


def builtin_names() -> list[str]:
    return sorted(BUILTIN_SPECS)


def load_builtin(name: str) -> Problem:
    try:
        text = BUILTIN_SPECS[name]
    except KeyError:
        raise KeyError(
            f"unknown builtin {name!r}; available: {', '.join(builtin_names())}"
        ) from None
    return parse_spec(text)
