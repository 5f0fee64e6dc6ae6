"""Weight nodes and parametrization conversions.

A multiplet member is a weight in HC coordinates together with the Weyl
word that produces it from the dominant weight.  The same weight has two
other presentations used side by side in the tables:

* the HC sextuple (m1, m2, m3, m12, m23, m13), where the last three are
  the redundant sums over composite roots, and
* the P1-induced signature {n', k, ν'} with n' = m1 − m3, k = −m2,
  ν' = −(m1 + m2 + m3).

The induced-signature relation inverts m1 = (k − ν' + n')/2, m2 = −k,
m3 = (k − ν' − n')/2.  Note that a member's k is minus its second HC
entry: the tables list k against the dominant label m2, which is the
negated second entry of every member reached by a word through σ2.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .roots import HCTriple, Root, hc_parameter
from .symexpr import LinExpr, Sign

__all__ = [
    "ParityError",
    "WeightNode",
    "P1Signature",
    "to_p1_signature",
    "from_p1_signature",
    "hc_sextuple",
    "HCSextuple",
    "render_triple",
    "render_sextuple",
    "render_p1",
    "word_str",
]

HCSextuple = tuple[LinExpr, LinExpr, LinExpr, LinExpr, LinExpr, LinExpr]


class ParityError(ValueError):
    """Signature cannot be halved to integer HC parameters."""


@dataclass(frozen=True, slots=True)
class P1Signature:
    """Signature {n', k, ε, ν'} of a representation induced from P1.

    k with sign class POSITIVE is a discrete-series parameter; ZERO marks
    the limit case.  ε = ±1 picks one of the two series and is carried as
    optional metadata only.
    """

    n_prime: LinExpr
    k: LinExpr
    nu_prime: LinExpr
    epsilon: int | None = None

    def __post_init__(self) -> None:
        if self.epsilon not in (None, 1, -1):
            raise ValueError(f"epsilon must be +1, -1 or None, got {self.epsilon!r}")
        if self.epsilon is not None and self.k.sign_class() not in (
            Sign.POSITIVE,
            Sign.ZERO,
        ):
            raise ValueError("epsilon is only meaningful for k >= 0 signatures")

    def with_epsilon(self, epsilon: int | None) -> "P1Signature":
        return replace(self, epsilon=epsilon)


@dataclass(frozen=True, slots=True)
class WeightNode:
    """One candidate multiplet member.

    ``word`` is the canonical Weyl word reaching ``hc`` from the dominant
    triple, applied leftmost letter first; ``label`` is a display name when
    the node matches a row of one of the standard diagrams.
    """

    hc: HCTriple
    word: tuple[int, ...] = ()
    label: str | None = None

    @property
    def sextuple(self) -> HCSextuple:
        return hc_sextuple(self.hc)

    @property
    def p1(self) -> P1Signature:
        return to_p1_signature(self.hc)

    def sort_key(self):
        return (len(self.word), self.word)


def to_p1_signature(t: HCTriple) -> P1Signature:
    m1, m2, m3 = t
    return P1Signature(n_prime=m1 - m3, k=-m2, nu_prime=-(m1 + m2 + m3))


def _halve(e: LinExpr) -> LinExpr:
    coeffs = (e.c0, e.cp, e.cnu, e.cn)
    if any(c % 2 for c in coeffs):
        raise ParityError(f"{e} is not exactly halvable")
    return LinExpr(*(c // 2 for c in coeffs))


def from_p1_signature(s: P1Signature) -> HCTriple:
    """Invert the signature map; raises ParityError if halving is inexact."""
    m1 = _halve(s.k - s.nu_prime + s.n_prime)
    m3 = _halve(s.k - s.nu_prime - s.n_prime)
    return (m1, -s.k, m3)


def hc_sextuple(t: HCTriple) -> HCSextuple:
    """(m1, m2, m3, m12, m23, m13); the sums are recomputed, never stored."""
    return (
        t[0],
        t[1],
        t[2],
        hc_parameter(t, Root.A12),
        hc_parameter(t, Root.A23),
        hc_parameter(t, Root.A13),
    )


def render_triple(t: HCTriple, ascii: bool = False) -> str:
    return "(" + ", ".join(e.render(ascii) for e in t) + ")"


def render_sextuple(t: HCTriple, ascii: bool = False) -> str:
    s = hc_sextuple(t)
    head = ", ".join(e.render(ascii) for e in s[:3])
    tail = ", ".join(e.render(ascii) for e in s[3:])
    return f"({head}; {tail})"


def render_p1(s: P1Signature, ascii: bool = False) -> str:
    return (
        "{"
        + ", ".join(e.render(ascii) for e in (s.n_prime, s.k, s.nu_prime))
        + "}"
    )


def word_str(word: tuple[int, ...]) -> str:
    """Digit string for a Weyl word; the empty word is written ``0``."""
    return "".join(str(i) for i in word) if word else "0"
