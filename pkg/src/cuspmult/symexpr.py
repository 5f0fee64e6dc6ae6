"""Exact linear expressions in the induction parameters p, ν (nu) and n.

Every quantity in the multiplet tables is an integer-linear expression in
the three induction parameters, so instead of a general symbolic engine we
keep an exact quadruple of integer coefficients: a constant term plus one
coefficient per parameter.  Python integers are unbounded, hence all
arithmetic is exact and overflow-free.

Sign determination follows the genericity convention of the induced
picture: a parameter that has not been substituted to zero ranges over
{1, 2, ...}.  An expression whose nonzero coefficients all share one sign
therefore has that definite sign, while a mixed-sign expression such as
p−n is order-undetermined (``Sign.INDEFINITE``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

__all__ = [
    "SYMBOLS",
    "Sign",
    "MissingAssignment",
    "LinExpr",
    "ZERO",
    "ONE",
    "P",
    "NU",
    "N",
    "symbol",
    "parse_expr",
]

# Canonical symbol order; all renderings list terms in this order.
SYMBOLS = ("p", "nu", "n")

_UNICODE_SYMBOL = {"p": "p", "nu": "ν", "n": "n"}
_MINUS = "−"
_ALIASES = {"ν": "nu", "v": "nu"}


def _canon_symbol(name: str) -> str:
    name = _ALIASES.get(name, name)
    if name not in SYMBOLS:
        raise ValueError(f"unknown symbol {name!r}; expected one of {SYMBOLS}")
    return name


class Sign(Enum):
    POSITIVE = "positive"
    ZERO = "zero"
    NEGATIVE = "negative"
    INDEFINITE = "indefinite"

    def negated(self) -> "Sign":
        if self is Sign.POSITIVE:
            return Sign.NEGATIVE
        if self is Sign.NEGATIVE:
            return Sign.POSITIVE
        return self


class MissingAssignment(KeyError):
    """A symbol with nonzero coefficient has no value in the assignment."""


@dataclass(frozen=True, slots=True)
class LinExpr:
    """Integer-linear expression  c0 + cp·p + cnu·ν + cn·n."""

    c0: int = 0
    cp: int = 0
    cnu: int = 0
    cn: int = 0

    @staticmethod
    def const(value: int) -> "LinExpr":
        return LinExpr(c0=value)

    @staticmethod
    def symbol(name: str) -> "LinExpr":
        name = _canon_symbol(name)
        return LinExpr(**{f"c{name}": 1})

    def coeff(self, name: str) -> int:
        return getattr(self, f"c{_canon_symbol(name)}")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "LinExpr") -> "LinExpr":
        return LinExpr(
            self.c0 + other.c0,
            self.cp + other.cp,
            self.cnu + other.cnu,
            self.cn + other.cn,
        )

    def __sub__(self, other: "LinExpr") -> "LinExpr":
        return LinExpr(
            self.c0 - other.c0,
            self.cp - other.cp,
            self.cnu - other.cnu,
            self.cn - other.cn,
        )

    def __neg__(self) -> "LinExpr":
        return LinExpr(-self.c0, -self.cp, -self.cnu, -self.cn)

    # -- queries ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self == ZERO

    def sign_class(self) -> Sign:
        nonzero = [c for c in (self.c0, self.cp, self.cnu, self.cn) if c != 0]
        if not nonzero:
            return Sign.ZERO
        if all(c > 0 for c in nonzero):
            return Sign.POSITIVE
        if all(c < 0 for c in nonzero):
            return Sign.NEGATIVE
        return Sign.INDEFINITE

    def substitute(self, zeros: Iterable[str]) -> "LinExpr":
        """Set the listed symbols formally to zero."""
        zeroed = {_canon_symbol(z) for z in zeros}
        return LinExpr(
            self.c0,
            0 if "p" in zeroed else self.cp,
            0 if "nu" in zeroed else self.cnu,
            0 if "n" in zeroed else self.cn,
        )

    def evaluate(self, assignment: Mapping[str, int]) -> int:
        values = {_canon_symbol(k): v for k, v in assignment.items()}
        total = self.c0
        for name in SYMBOLS:
            coeff = self.coeff(name)
            if coeff == 0:
                continue
            if name not in values:
                raise MissingAssignment(name)
            total += coeff * values[name]
        return total

    def sort_key(self) -> tuple[int, int, int, int]:
        """Deterministic ordering key (coefficients in symbol order)."""
        return (self.cp, self.cnu, self.cn, self.c0)

    # -- rendering ----------------------------------------------------------

    def render(self, ascii: bool = False) -> str:
        minus = "-" if ascii else _MINUS
        parts: list[tuple[bool, str]] = []
        for name in SYMBOLS:
            coeff = self.coeff(name)
            if coeff == 0:
                continue
            glyph = name if ascii else _UNICODE_SYMBOL[name]
            mag = abs(coeff)
            parts.append((coeff > 0, glyph if mag == 1 else f"{mag}{glyph}"))
        if self.c0 != 0:
            parts.append((self.c0 > 0, str(abs(self.c0))))
        if not parts:
            return "0"
        out: list[str] = []
        for i, (positive, term) in enumerate(parts):
            if positive:
                if i > 0:
                    out.append("+")
            else:
                out.append(minus)
            out.append(term)
        return "".join(out)

    def __str__(self) -> str:
        return self.render()


ZERO = LinExpr()
ONE = LinExpr.const(1)
P = LinExpr.symbol("p")
NU = LinExpr.symbol("nu")
N = LinExpr.symbol("n")


def symbol(name: str) -> LinExpr:
    return LinExpr.symbol(name)


# One term: optional sign, optional magnitude, optional symbol ("nu" must be
# tried before "n").
_TERM = re.compile(r"\s*(?P<sign>[+\-−])?\s*(?P<mag>\d+)?\s*(?P<sym>nu|ν|p|n)?")


def parse_expr(text: str) -> LinExpr:
    """Parse the canonical rendering (either alphabet) back to a LinExpr.

    Accepts e.g. ``p+ν+n``, ``-2nu+3``, ``−p−ν``, ``0``.
    """
    result = ZERO
    pos = 0
    first = True
    end = len(text.rstrip())
    while pos < end:
        m = _TERM.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse expression {text!r} at offset {pos}")
        sign, mag, sym = m.group("sign"), m.group("mag"), m.group("sym")
        if mag is None and sym is None:
            raise ValueError(f"cannot parse expression {text!r} at offset {pos}")
        if sign is None and not first:
            raise ValueError(f"missing operator in {text!r} at offset {pos}")
        value = 1 if mag is None else int(mag)
        if sign in ("-", _MINUS):
            value = -value
        if sym is None:
            term = LinExpr.const(value)
        else:
            term = LinExpr(**{f"c{_canon_symbol(sym)}": value})
        result = result + term
        pos = m.end()
        first = False
    if first:
        raise ValueError("empty expression")
    return result
