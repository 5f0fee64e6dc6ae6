"""Display labels and P2-coincidence labels for the standard multiplets.

The seven standard reduction patterns (no parameter zeroed, one zeroed,
two zeroed) each come with a fixed table of rows: a defining Weyl word,
the diagram name of the node (Λ⁻₀, Λ⁺d, ...), and the chain of signature
identifications with representations induced from the maximal
noncuspidal parabolic (χ′⁻, ₂χ⁺, χˢ, ...).

Rows are resolved to weights by applying the defining word to the
dominant triple of the concrete multiplet, so they stay correct for
reduced families where the canonical (shortest) word of a node differs
from the defining one, and for numeric parameter values.
"""

from __future__ import annotations

from .roots import HCTriple, apply_word
from .symexpr import LinExpr

__all__ = [
    "display_rows",
    "display_labels",
    "chi_rows",
    "chi_chains",
    "render_display_label",
    "render_chi_label",
]

Word = tuple[int, ...]

# -- display (diagram) labels -----------------------------------------------
# Table entries: (defining word, sign, subscript).  Sign "" marks nodes that
# are their own Knapp-Stein image and carry no +/- side.

_DISPLAY: dict[frozenset[str], tuple[tuple[Word, str, str], ...]] = {
    frozenset(): (
        ((2,), "-", "0"),
        ((1, 2), "-", "a"),
        ((3, 2), "-", "b"),
        ((1, 2, 1), "-", "c"),
        ((1, 3, 2), "-", "d"),
        ((2, 3, 2), "-", "e"),
        ((1, 2, 3, 2), "+", "e"),
        ((2, 1, 3, 2), "+", "d"),
        ((1, 3, 2, 1), "+", "c"),
        ((1, 2, 1, 3, 2), "+", "b"),
        ((2, 1, 3, 2, 1), "+", "a"),
        ((1, 2, 1, 3, 2, 1), "+", "0"),
    ),
    frozenset({"nu"}): (
        ((2,), "-", "0"),
        ((1, 2), "-", "a"),
        ((3, 2), "-", "b"),
        ((1, 3, 2), "", "c"),
        ((1, 2, 3, 2), "+", "b"),
        ((1, 3, 2, 1), "+", "a"),
        ((1, 2, 1, 3, 2, 1), "+", "0"),
    ),
    frozenset({"p"}): (
        ((2,), "-", "0n"),
        ((3, 2), "-", "b"),
        ((2, 1, 2), "-", "d"),
        ((2, 3, 2), "", "e"),
        ((3, 2, 1, 2), "+", "d"),
        ((2, 1, 3, 2), "+", "b"),
        ((2, 3, 2, 1, 2), "+", "0n"),
    ),
    frozenset({"n"}): (
        ((2,), "-", "0p"),
        ((1, 2), "-", "a"),
        ((2, 3, 2), "-", "e"),
        ((2, 1, 2), "", "d"),
        ((1, 2, 3, 2), "+", "e"),
        ((2, 3, 2, 1, 2), "+", "a"),
        ((2, 1, 3, 2, 1, 3), "+", "0p"),
    ),
    frozenset({"p", "n"}): (
        ((2,), "-", "0"),
        ((2, 1, 2), "", "d"),
        ((2, 3, 2), "", "e"),
        ((2, 1, 3, 2), "+", "0"),
    ),
    frozenset({"p", "nu"}): (
        ((2,), "-", "0pu"),
        ((3, 2), "", "b"),
        ((3, 2, 1, 2), "+", "0pu"),
    ),
    frozenset({"nu", "n"}): (
        ((2,), "-", "0nu"),
        ((1, 2), "", "a"),
        ((1, 2, 1, 3, 2, 1), "+", "0nu"),
    ),
}

_SUB_DIGITS = dict(zip("0123456789", "₀₁₂₃₄₅₆₇₈₉"))
_SUPER = {"-": "⁻", "+": "⁺", "": ""}


def render_display_label(sign: str, sub: str, ascii: bool = False) -> str:
    if ascii:
        sup = {"-": "^-", "+": "^+", "": ""}[sign]
        body = sub if len(sub) == 1 else "{" + sub + "}"
        return f"L{sup}_{body}"
    if len(sub) == 1:
        body = _SUB_DIGITS.get(sub, sub)
    else:
        body = "_{" + sub + "}"
    return "Λ" + _SUPER[sign] + body


def display_rows(
    zeros: frozenset[str], dominant: HCTriple, ascii: bool = False
) -> list[tuple[HCTriple, str]]:
    """Labelled rows for the given reduction pattern, in diagram order.

    Empty for patterns without a standard diagram (all parameters zero).
    """
    table = _DISPLAY.get(frozenset(zeros), ())
    return [
        (apply_word(dominant, word), render_display_label(sign, sub, ascii))
        for word, sign, sub in table
    ]


def display_labels(
    zeros: frozenset[str], dominant: HCTriple, ascii: bool = False
) -> dict[HCTriple, str]:
    return dict(display_rows(zeros, dominant, ascii))


# -- chi identifications ------------------------------------------------------
# Chain items: (numeric prefix or None, decoration, subscript slots).  Slots
# name parameters; they render from the multiplet's actual parameter values
# (symbols, zeros or integers).

_PNN = ("p", "nu", "n")

_CHI: dict[frozenset[str], tuple[tuple[Word, tuple[tuple[int | None, str, tuple[str, ...]], ...]], ...]] = {
    frozenset(): (
        ((2,), ((None, "'-", _PNN),)),
        ((1, 2), ((None, "''-", _PNN),)),
        ((3, 2), ((None, "''+", _PNN),)),
        ((1, 3, 2), ((None, "'+", _PNN),)),
        ((2, 1, 3, 2), ((None, "+", _PNN),)),
    ),
    frozenset({"nu"}): (
        ((2,), ((None, "'-", _PNN), (2, "-", ("p", "n")))),
        ((1, 2), ((None, "''-", _PNN),)),
        ((3, 2), ((None, "''+", _PNN),)),
        ((1, 3, 2), ((None, "'+", _PNN), (None, "+", _PNN), (2, "+", ("p", "n")))),
    ),
    frozenset({"p"}): (
        ((2,), ((None, "'-", _PNN), (None, "''-", _PNN), (1, "-", ("nu", "n")))),
        ((3, 2), ((None, "''+", _PNN), (None, "'+", _PNN), (1, "+", ("nu", "n")))),
        ((2, 1, 3, 2), ((None, "+", _PNN),)),
    ),
    frozenset({"n"}): (
        ((2,), ((None, "'-", _PNN), (None, "''+", _PNN), (3, "-", ("p", "nu")))),
        ((1, 2), ((None, "''-", _PNN), (None, "'+", _PNN), (3, "+", ("p", "nu")))),
        ((2, 3, 2, 1, 2), ((None, "+", _PNN),)),
    ),
    frozenset({"p", "n"}): (
        (
            (2,),
            (
                (None, "'-", _PNN),
                (None, "''-", _PNN),
                (None, "''+", _PNN),
                (None, "'+", _PNN),
                (None, "s", ("nu",)),
            ),
        ),
        ((2, 1, 3, 2), ((None, "+", _PNN),)),
    ),
    frozenset({"p", "nu"}): (
        ((2,), ((None, "'-", _PNN), (None, "''-", _PNN))),
        ((3, 2), ((None, "''+", _PNN), (None, "'+", _PNN), (None, "+", _PNN))),
    ),
    frozenset({"nu", "n"}): (
        ((2,), ((None, "'-", _PNN), (None, "''+", _PNN))),
        ((1, 2), ((None, "''-", _PNN), (None, "'+", _PNN), (None, "+", _PNN))),
    ),
}

_DECOR_UNI = {
    "'-": "′⁻",
    "''-": "″⁻",
    "''+": "″⁺",
    "'+": "′⁺",
    "+": "⁺",
    "s": "ˢ",
}
_DECOR_ASCII = {
    "'-": "'^-",
    "''-": "''^-",
    "''+": "''^+",
    "'+": "'^+",
    "+": "^+",
    "s": "^s",
}


def render_chi_label(
    prefix: int | None,
    decor: str,
    subs: tuple[str, ...],
    params: dict[str, LinExpr],
    ascii: bool = False,
) -> str:
    values = [params[s].render(ascii) for s in subs]
    if ascii:
        head = ("" if prefix is None else str(prefix)) + "chi" + _DECOR_ASCII[decor]
        return head + "_{" + " ".join(values) + "}"
    head = ("" if prefix is None else _SUB_DIGITS[str(prefix)]) + "χ" + _DECOR_UNI[decor]
    body = "".join(values)
    if len(body) == 1:
        return head + "_" + body
    return head + "_{" + body + "}"


def chi_rows(
    zeros: frozenset[str],
    dominant: HCTriple,
    params: dict[str, LinExpr],
    ascii: bool = False,
) -> list[tuple[HCTriple, list[str]]]:
    """Identification chains per labelled row, in diagram order."""
    table = _CHI.get(frozenset(zeros), ())
    out: list[tuple[HCTriple, list[str]]] = []
    for word, chain in table:
        triple = apply_word(dominant, word)
        out.append(
            (triple, [render_chi_label(pre, dec, subs, params, ascii) for pre, dec, subs in chain])
        )
    return out


def chi_chains(
    zeros: frozenset[str],
    dominant: HCTriple,
    params: dict[str, LinExpr],
    ascii: bool = False,
) -> dict[HCTriple, list[str]]:
    return dict(chi_rows(zeros, dominant, params, ascii))
