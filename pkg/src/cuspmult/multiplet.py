"""Weyl-orbit generation and multiplet membership.

The dominant triple (p, ν, n) — with any subset of the parameters set
formally to zero and/or assigned positive integers — generates an orbit
under the shifted simple reflections.  Members of the multiplet are the
orbit weights whose k = −m2 is nonnegative: k positive labels a discrete
series of the sl(2,R) factor, k zero its limit.  The main multiplet takes
k strictly positive; reduced multiplets admit the limits.

An independent brute-force oracle cross-checks the orbit: an HC triple
(a, b, c) is the difference vector of a 4-vector λ with a = λ1−λ2,
b = λ2−λ3, c = λ3−λ4, on which the Weyl group acts by all 24 entry
permutations.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Mapping

from . import labeling
from .roots import HCTriple, reflect_simple
from .symexpr import SYMBOLS, LinExpr, Sign
from .weights import WeightNode

__all__ = [
    "IndefiniteSign",
    "MultipletSpec",
    "dominant_triple",
    "param_exprs",
    "generate_orbit",
    "members",
    "permutation_oracle",
]


class IndefiniteSign(RuntimeError):
    """A candidate member's k has no definite sign (internal error)."""


def _canon_zeros(zeros: Iterable[str]) -> frozenset[str]:
    out = set()
    for z in zeros:
        z = {"ν": "nu", "v": "nu"}.get(z, z)
        if z not in SYMBOLS:
            raise ValueError(f"unknown parameter {z!r}; expected one of {SYMBOLS}")
        out.add(z)
    return frozenset(out)


@dataclass(frozen=True)
class MultipletSpec:
    """Which multiplet to build.

    ``zeros`` lists parameters set formally to zero, ``numeric`` assigns
    positive integers to (some of) the remaining ones, and ``strict_k``
    excludes the k = 0 limit members.  Use :meth:`make` to get the
    normalizations (numeric zeros fold into ``zeros``; ``strict_k``
    defaults to True exactly for the unreduced multiplet).
    """

    zeros: frozenset[str] = frozenset()
    numeric: tuple[tuple[str, int], ...] = ()
    strict_k: bool = True

    def __post_init__(self) -> None:
        zeros = _canon_zeros(self.zeros)
        object.__setattr__(self, "zeros", zeros)
        seen: dict[str, int] = {}
        for sym, value in self.numeric:
            sym = _canon_zeros([sym]) and {"ν": "nu", "v": "nu"}.get(sym, sym)
            if sym in seen:
                raise ValueError(f"duplicate numeric assignment for {sym}")
            if not isinstance(value, int) or value <= 0:
                raise ValueError(f"numeric value for {sym} must be a positive integer")
            seen[sym] = value
        if set(seen) & zeros:
            raise ValueError(f"parameters {sorted(set(seen) & zeros)} are both zeroed and numeric")
        ordered = tuple((s, seen[s]) for s in SYMBOLS if s in seen)
        object.__setattr__(self, "numeric", ordered)

    @classmethod
    def make(
        cls,
        zeros: Iterable[str] = (),
        numeric: Mapping[str, int] | None = None,
        strict_k: bool | None = None,
    ) -> "MultipletSpec":
        zs = set(_canon_zeros(zeros))
        num: dict[str, int] = {}
        for sym, value in (numeric or {}).items():
            sym = {"ν": "nu", "v": "nu"}.get(sym, sym)
            if value == 0:
                zs.add(sym)  # a numeric zero is a formal reduction
            else:
                num[sym] = value
        if strict_k is None:
            strict_k = not zs
        return cls(frozenset(zs), tuple(sorted(num.items())), strict_k)

    @classmethod
    def from_params(
        cls,
        p: int | str = "sym",
        nu: int | str = "sym",
        n: int | str = "sym",
        zeros: Iterable[str] = (),
        strict_k: bool | None = None,
    ) -> "MultipletSpec":
        numeric = {}
        for sym, value in (("p", p), ("nu", nu), ("n", n)):
            if value == "sym":
                continue
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"{sym} must be 'sym' or a nonnegative integer")
            numeric[sym] = value
        return cls.make(zeros=zeros, numeric=numeric, strict_k=strict_k)

    @property
    def numeric_map(self) -> dict[str, int]:
        return dict(self.numeric)


def param_exprs(spec: MultipletSpec) -> dict[str, LinExpr]:
    """The concrete value of each parameter slot as an expression."""
    numeric = spec.numeric_map
    out: dict[str, LinExpr] = {}
    for sym in SYMBOLS:
        if sym in spec.zeros:
            out[sym] = LinExpr()
        elif sym in numeric:
            out[sym] = LinExpr.const(numeric[sym])
        else:
            out[sym] = LinExpr.symbol(sym)
    return out


def dominant_triple(spec: MultipletSpec) -> HCTriple:
    params = param_exprs(spec)
    return (params["p"], params["nu"], params["n"])


def generate_orbit(spec: MultipletSpec) -> list[WeightNode]:
    """Breadth-first closure of the dominant triple under σ1, σ2, σ3.

    Each weight carries the first word reaching it, which is the shortest
    and then lexicographically smallest one; the node list is in
    (length, lexicographic) word order.
    """
    start = dominant_triple(spec)
    words: dict[HCTriple, tuple[int, ...]] = {start: ()}
    order: list[HCTriple] = [start]
    queue: deque[HCTriple] = deque([start])
    while queue:
        triple = queue.popleft()
        word = words[triple]
        for i in (1, 2, 3):
            image = reflect_simple(triple, i)
            if image not in words:
                words[image] = word + (i,)
                order.append(image)
                queue.append(image)
    return [WeightNode(hc=t, word=words[t]) for t in order]


def _k_sign(triple: HCTriple) -> Sign:
    return (-triple[1]).sign_class()


def members(spec: MultipletSpec) -> list[WeightNode]:
    """Multiplet members, in word order, with display labels attached."""
    admissible = {Sign.POSITIVE} if spec.strict_k else {Sign.POSITIVE, Sign.ZERO}
    labels = labeling.display_labels(spec.zeros, dominant_triple(spec))
    out: list[WeightNode] = []
    for node in generate_orbit(spec):
        sign = _k_sign(node.hc)
        if sign is Sign.INDEFINITE:
            raise IndefiniteSign(f"member test for {node.hc} has indefinite k")
        if sign in admissible:
            out.append(WeightNode(node.hc, node.word, labels.get(node.hc)))
    return out


def permutation_oracle(spec: MultipletSpec) -> list[HCTriple]:
    """Brute-force orbit: all 24 permutations of the λ-vector, deduplicated.

    Independent of the reflection formulas; must produce exactly the set
    generated by :func:`generate_orbit`.
    """
    a, b, c = dominant_triple(spec)
    lam = (a + b + c, b + c, c, LinExpr())
    seen: set[HCTriple] = set()
    for perm in permutations(lam):
        seen.add((perm[0] - perm[1], perm[1] - perm[2], perm[2] - perm[3]))
    return sorted(seen, key=lambda t: tuple(e.sort_key() for e in t))
