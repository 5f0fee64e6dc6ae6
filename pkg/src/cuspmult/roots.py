"""Root data for A3 = sl(4,C), the complexification of so(4,2).

Weights are handled throughout in Harish-Chandra coordinates: the triple
(m1, m2, m3) of HC parameters against the three simple coroots.  These are
already rho-shifted, so no separate rho bookkeeping is needed and the Weyl
action below is the shifted one.

Compactness classifications are the fixed data of the so(4,2) real form
with the maximal cuspidal parabolic: the Levi factor contributes the
single M-compact root α2, and invariant differential operators arise only
from the five M-noncompact roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .symexpr import LinExpr

__all__ = [
    "Root",
    "POSITIVE_ROOTS",
    "M_NONCOMPACT",
    "M_COMPACT",
    "K_COMPACT",
    "K_NONCOMPACT",
    "HCTriple",
    "InvalidIndex",
    "InvalidRank",
    "reflect_simple",
    "apply_word",
    "reflect_root",
    "hc_parameter",
    "ParabolicInfo",
    "parabolic_table",
]

HCTriple = tuple[LinExpr, LinExpr, LinExpr]


class InvalidIndex(ValueError):
    """Simple-reflection index outside {1, 2, 3}."""


class InvalidRank(ValueError):
    """so(n,2) parabolic table requested for n < 3."""


class Root(Enum):
    """The six positive roots, as their supports on the simple roots."""

    A1 = (1,)
    A2 = (2,)
    A3 = (3,)
    A12 = (1, 2)
    A23 = (2, 3)
    A13 = (1, 2, 3)

    @property
    def simple_support(self) -> tuple[int, ...]:
        return self.value

    @property
    def is_simple(self) -> bool:
        return len(self.value) == 1

    def render(self, ascii: bool = False) -> str:
        head = "a" if ascii else "α"
        return head + "".join(str(i) for i in self.value)

    def __str__(self) -> str:
        return self.render()


POSITIVE_ROOTS = (Root.A1, Root.A2, Root.A3, Root.A12, Root.A23, Root.A13)

M_NONCOMPACT = (Root.A1, Root.A3, Root.A12, Root.A23, Root.A13)
M_COMPACT = (Root.A2,)

K_COMPACT = (Root.A1, Root.A3)
K_NONCOMPACT = (Root.A2, Root.A12, Root.A23, Root.A13)


def reflect_simple(t: HCTriple, i: int) -> HCTriple:
    """Shifted action of the simple reflection σ_i on an HC triple."""
    a, b, c = t
    if i == 1:
        return (-a, a + b, c)
    if i == 2:
        return (a + b, -b, b + c)
    if i == 3:
        return (a, b + c, -c)
    raise InvalidIndex(f"simple reflection index must be 1, 2 or 3, got {i!r}")


def apply_word(t: HCTriple, word: tuple[int, ...]) -> HCTriple:
    """Apply a Weyl word to a triple, leftmost letter first."""
    for i in word:
        t = reflect_simple(t, i)
    return t


def reflect_root(t: HCTriple, root: Root) -> HCTriple:
    """Shifted action of the reflection in any positive root.

    The non-simple cases are closed forms for the compositions
    s_{α12} = σ1σ2σ1,  s_{α23} = σ2σ3σ2,  s_{α13} = σ1σ2σ3σ2σ1;
    their agreement with the word expansions is enforced by tests.
    """
    a, b, c = t
    if root is Root.A1:
        return reflect_simple(t, 1)
    if root is Root.A2:
        return reflect_simple(t, 2)
    if root is Root.A3:
        return reflect_simple(t, 3)
    if root is Root.A12:
        return (-b, -a, a + b + c)
    if root is Root.A23:
        return (a + b + c, -c, -b)
    return (-b - c, b, -a - b)  # Root.A13


def hc_parameter(t: HCTriple, root: Root) -> LinExpr:
    """HC parameter of a triple against a positive root.

    For the simple roots these are the triple entries themselves; for the
    composite roots they are the sums over the simple support,
    m12 = m1+m2, m23 = m2+m3, m13 = m1+m2+m3.
    """
    total = t[root.value[0] - 1]
    for i in root.value[1:]:
        total = total + t[i - 1]
    return total


@dataclass(frozen=True, slots=True)
class ParabolicInfo:
    name: str
    dim_a: int
    dim_n: int
    levi_description: str


def parabolic_table(n: int) -> list[ParabolicInfo]:
    """The three nonconjugate parabolic subalgebras of so(n,2), n >= 3.

    P0 is minimal, P1 maximal cuspidal, P2 maximal noncuspidal.  Purely
    informational: the rest of the library is specific to n = 4.
    """
    if n < 3:
        raise InvalidRank(f"so(n,2) parabolic dimensions need n >= 3, got {n}")
    return [
        ParabolicInfo("P0", 2, 2 * (n - 1), f"so({n - 2})"),
        ParabolicInfo("P1", 1, 2 * n - 3, f"so({n - 2}) + sl(2,R)"),
        ParabolicInfo("P2", 1, n, f"so({n - 1},1)"),
    ]
