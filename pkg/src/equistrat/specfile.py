"""Flat text problem specifications.

A spec is a sequence of `key = value` lines (# comments allowed):

    name = d6
    group = dihedral 6
    V = rot:1 + rot:1
    W = rot:2
    seed = 42

Groups: `cyclic n`, `dihedral n`, `frobenius p 4`, direct products joined
with `x`, or `explicit g1 g2 ...` with the generator matrices given as
`mat.g1 = [[...], ...]`.  Matrix entries are arithmetic expressions over
numbers, pi, cos, sin, sqrt.

Representations are sums of blocks joined by `+`.  For named groups a block
is a product of one irreducible label per factor joined by `*` (labels:
`triv`, `sign`, `rot:k` for cyclic; `triv`, `sgn`, `rot:k` for dihedral;
`triv`, `sgnb`, `ind:k` for frobenius).  For any group a block may instead be
`mats m1 m2 ...`, one named matrix per group generator.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

import numpy as np

from .errors import SpecError
from .group import GroupTable, generate_group
from .representation import Representation

# ---------------------------------------------------------------------------
# scalar expressions

_TOKEN = re.compile(r"\s*(?:(\d+\.?\d*(?:[eE][+-]?\d+)?)|([a-zA-Z_]+)|(.))")


def _tokenize(text: str) -> list[str]:
    out = []
    for num, word, ch in _TOKEN.findall(text):
        if num:
            out.append(num)
        elif word:
            out.append(word)
        elif ch.strip():
            out.append(ch)
    return out


class _ExprParser:
    """Recursive descent over + - * / unary- ( ) pi cos sin sqrt."""

    FUNCS = {"cos": math.cos, "sin": math.sin, "sqrt": math.sqrt}

    def __init__(self, tokens: list[str]):
        self.toks = tokens
        self.i = 0

    def peek(self) -> str | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected: str | None = None) -> str:
        t = self.peek()
        if t is None or (expected is not None and t != expected):
            raise SpecError(f"expected {expected!r}, got {t!r}")
        self.i += 1
        return t

    def expr(self) -> float:
        v = self.term()
        while self.peek() in ("+", "-"):
            if self.take() == "+":
                v += self.term()
            else:
                v -= self.term()
        return v

    def term(self) -> float:
        v = self.factor()
        while self.peek() in ("*", "/"):
            if self.take() == "*":
                v *= self.factor()
            else:
                v /= self.factor()
        return v

    def factor(self) -> float:
        t = self.peek()
        if t == "-":
            self.take()
            return -self.factor()
        if t == "+":
            self.take()
            return self.factor()
        if t == "(":
            self.take()
            v = self.expr()
            self.take(")")
            return v
        if t == "pi":
            self.take()
            return math.pi
        if t in self.FUNCS:
            f = self.FUNCS[self.take()]
            self.take("(")
            v = self.expr()
            self.take(")")
            return f(v)
        if t is not None and re.fullmatch(r"\d+\.?\d*(?:[eE][+-]?\d+)?", t):
            return float(self.take())
        raise SpecError(f"unexpected token {t!r} in expression")


def parse_scalar(text: str) -> float:
    p = _ExprParser(_tokenize(text))
    v = p.expr()
    if p.peek() is not None:
        raise SpecError(f"trailing tokens in expression: {text!r}")
    return v


def parse_matrix(text: str) -> np.ndarray:
    """[[e, e, ...], [e, ...], ...] with expression entries."""
    text = text.strip()
    if not (text.startswith("[[") and text.endswith("]]")):
        raise SpecError(f"matrix literal must look like [[...],[...]]: {text!r}")
    rows = []
    for row_text in re.split(r"\]\s*,\s*\[", text[2:-2]):
        rows.append([parse_scalar(e) for e in row_text.split(",")])
    if len({len(r) for r in rows}) != 1:
        raise SpecError("ragged matrix literal")
    return np.array(rows, dtype=float)


# ---------------------------------------------------------------------------
# group factors and their irreducible labels

def _rot2(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


@dataclass
class _Factor:
    """One factor of the group: generator matrices and an irrep label table."""

    kind: str
    gen_mats: list[np.ndarray]
    gen_names: list[str]
    params: tuple[int, ...] = ()

    def irrep(self, label: str) -> list[np.ndarray]:
        """Generator matrices of the named irreducible of this factor."""
        base, _, arg = label.partition(":")
        k = int(arg) if arg else None
        one = np.array([[1.0]])
        neg = np.array([[-1.0]])
        if base == "triv":
            return [one] * len(self.gen_mats)
        if self.kind == "cyclic":
            n = self.params[0]
            if base == "sign":
                if n % 2:
                    raise SpecError("sign needs an even cyclic order")
                return [neg]
            if base == "rot" and k is not None:
                return [_rot2(2 * math.pi * k / n)]
        elif self.kind == "dihedral":
            n = self.params[0]
            if base == "sgn":
                return [one, neg]
            if base == "rot" and k is not None:
                return [_rot2(2 * math.pi * k / n),
                        np.array([[1.0, 0.0], [0.0, -1.0]])]
        elif self.kind == "frobenius":
            p = self.params[0]
            if base == "sgnb":
                return [one, neg]
            if base == "ind" and k is not None:
                return _frobenius_ind(p, self.params[1], k)
        raise SpecError(f"unknown irreducible {label!r} for factor {self.kind}")


def _frobenius_ind(p: int, q: int, k: int) -> list[np.ndarray]:
    """Realified 2-complex-dim irreducible of the order-pq Frobenius group.

    a rotates the two complex lines by 2 pi k / p and 2 pi m k / p; b swaps
    them with one conjugation, which needs m^2 = -1 (mod p), hence q = 4.
    """
    m = _frobenius_m(p, q)
    a = np.zeros((4, 4))
    a[:2, :2] = _rot2(2 * math.pi * k / p)
    a[2:, 2:] = _rot2(2 * math.pi * (m * k % p) / p)
    conj = np.array([[1.0, 0.0], [0.0, -1.0]])
    b = np.zeros((4, 4))
    b[:2, 2:] = conj          # (z1, z2) -> (conj(z2), z1)
    b[2:, :2] = np.eye(2)
    return [a, b]


def _frobenius_m(p: int, q: int) -> int:
    if q != 4:
        raise SpecError("frobenius groups are supported for q = 4 only")
    for m in range(2, p):
        if (m * m) % p == p - 1:
            return m
    raise SpecError(f"no element of order 4 in the units mod {p}")


def _make_factor(kind: str, params: list[int]) -> _Factor:
    if kind == "cyclic":
        (n,) = params
        return _Factor("cyclic", [_rot2(2 * math.pi / n)], ["c"], (n,))
    if kind == "dihedral":
        (n,) = params
        return _Factor("dihedral",
                       [_rot2(2 * math.pi / n),
                        np.array([[1.0, 0.0], [0.0, -1.0]])],
                       ["r", "s"], (n,))
    if kind == "frobenius":
        p, q = params
        _frobenius_m(p, q)
        return _Factor("frobenius", _frobenius_ind(p, q, 1), ["a", "b"], (p, q))
    raise SpecError(f"unknown group kind {kind!r}")


def _direct_sum(blocks: list[np.ndarray]) -> np.ndarray:
    n = sum(b.shape[0] for b in blocks)
    out = np.zeros((n, n))
    i = 0
    for b in blocks:
        out[i:i + b.shape[0], i:i + b.shape[1]] = b
        i += b.shape[0]
    return out


# ---------------------------------------------------------------------------
# the problem

@dataclass
class Problem:
    name: str
    group: GroupTable
    v: Representation
    w: Representation
    options: dict = field(default_factory=dict)
    source: str = ""

    def to_spec_text(self) -> str:
        return self.source


def _parse_lines(text: str) -> list[tuple[str, str]]:
    pairs = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise SpecError(f"expected 'key = value': {raw!r}")
        key, value = line.split("=", 1)
        pairs.append((key.strip(), value.strip()))
    return pairs


def _build_group(value: str, mats: dict[str, np.ndarray],
                 name: str) -> tuple[GroupTable, list[_Factor] | None]:
    words = value.split()
    if words and words[0] == "explicit":
        gen_names = words[1:]
        if not gen_names:
            raise SpecError("explicit group needs generator names")
        try:
            gens = [mats[n] for n in gen_names]
        except KeyError as exc:
            raise SpecError(f"missing matrix mat.{exc.args[0]}") from None
        return generate_group(gens, gen_names=gen_names,
                              name=name or "G"), None
    factors = []
    for part in value.split(" x "):
        toks = part.split()
        if not toks:
            raise SpecError(f"empty group factor in {value!r}")
        factors.append(_make_factor(toks[0], [int(t) for t in toks[1:]]))
    # faithful rep of the product: direct sum of per-factor defining reps
    dims = [f.gen_mats[0].shape[0] for f in factors]
    gen_mats = []
    gen_names = []
    for i, f in enumerate(factors):
        for gm, gn in zip(f.gen_mats, f.gen_names):
            blocks = [gm if j == i else np.eye(dims[j])
                      for j in range(len(factors))]
            gen_mats.append(_direct_sum(blocks))
            gen_names.append(gn if len(factors) == 1 else f"{gn}{i + 1}")
    return generate_group(gen_mats, gen_names=gen_names, name=value), factors


def _build_rep(value: str, group: GroupTable, factors: list[_Factor] | None,
               mats: dict[str, np.ndarray]) -> Representation:
    block_gen_lists = []
    for block in value.split("+"):
        toks = block.split()
        if toks and toks[0] == "mats":
            names = toks[1:]
            if len(names) != len(group.generators):
                raise SpecError("mats block needs one matrix per group generator")
            try:
                block_gen_lists.append([mats[n] for n in names])
            except KeyError as exc:
                raise SpecError(f"missing matrix mat.{exc.args[0]}") from None
            continue
        if factors is None:
            raise SpecError("irreducible labels need a named group; "
                            "use 'mats ...' blocks with explicit groups")
        labels = [t.strip() for t in block.split("*")]
        if len(labels) != len(factors):
            raise SpecError(f"block {block.strip()!r}: expected one label per "
                            f"group factor ({len(factors)})")
        per_factor = [f.irrep(lb) for f, lb in zip(factors, labels)]
        # generator list for the product: Kronecker with identities elsewhere
        gens = []
        for i, f in enumerate(per_factor):
            for gm in f:
                m = np.array([[1.0]])
                for j, fj in enumerate(per_factor):
                    dj = fj[0].shape[0]
                    m = np.kron(m, gm if j == i else np.eye(dj))
                gens.append(m)
        block_gen_lists.append(gens)
    combined = [
        _direct_sum([bl[k] for bl in block_gen_lists])
        for k in range(len(group.generators))
    ]
    return Representation.from_generators(group, combined)


_OPTION_KEYS = {"seed", "degree_max", "samples", "starts", "draws"}


def parse_spec(text: str) -> Problem:
    pairs = _parse_lines(text)
    mats: dict[str, np.ndarray] = {}
    fields: dict[str, str] = {}
    options: dict[str, int] = {}
    for key, value in pairs:
        if key.startswith("mat."):
            mats[key[4:]] = parse_matrix(value)
        elif key in _OPTION_KEYS:
            try:
                options[key] = int(value)
            except ValueError:
                raise SpecError(f"option {key} must be an integer") from None
        elif key in ("name", "group", "V", "W"):
            if key in fields:
                raise SpecError(f"duplicate key {key!r}")
            fields[key] = value
        else:
            raise SpecError(f"unknown key {key!r}")
    for required in ("group", "V", "W"):
        if required not in fields:
            raise SpecError(f"missing key {required!r}")
    name = fields.get("name", "")
    group, factors = _build_group(fields["group"], mats, name)
    v = _build_rep(fields["V"], group, factors, mats)
    w = _build_rep(fields["W"], group, factors, mats)
    return Problem(name=name, group=group, v=v, w=w, options=options,
                   source=text if text.endswith("\n") else text + "\n")


def load_spec(path: str) -> Problem:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_spec(fh.read())
