"""Sparse multivariate polynomials over exponent families.

A polynomial is a map from exponent tuples to nonzero exact coefficients
(integers or Fractions, never floats: ordering and cancellation must be
exact).  The operations are exactly what monomial orders pay for: parsing,
sorting the terms under any strict vector order, picking the leading term,
and multiplying by a single monomial.

Grammar for parse_poly: terms joined by '+'/'-'; a term is an optional
integer or rational coefficient and '*'-separated factors "Xi" or "Xi^e"
with e a natural.  Whitespace is ignored.  For up to three variables, the
aliases X, Y, Z stand for X0, X1, X2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Dict, List, Optional, Sequence, Tuple

from .families import Family, LengthMismatchError, VectorRelation

_ALIASES = {"X": 0, "Y": 1, "Z": 2}

_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<number>\d+(?:\s*/\s*\d+)?)
      | (?P<var>X\d+|[XYZ])
      | (?P<op>[\^*+-])
    """,
    re.VERBOSE,
)


class PolyParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Term:
    exponents: Tuple[int, ...]
    coefficient: Fraction

    def __post_init__(self):
        if self.coefficient == 0:
            raise ValueError("terms carry nonzero coefficients")
        object.__setattr__(self, "exponents", tuple(self.exponents))
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))


@dataclass(frozen=True)
class SparsePoly:
    dimension: int
    terms: Dict[Tuple[int, ...], Fraction]

    @classmethod
    def from_pairs(cls, dimension: int, pairs) -> "SparsePoly":
        """Build a canonical polynomial: like terms combined, zeros dropped."""
        acc: Dict[Tuple[int, ...], Fraction] = {}
        for exponents, coefficient in pairs:
            exponents = tuple(exponents)
            if len(exponents) != dimension:
                raise LengthMismatchError(
                    f"exponent family of length {len(exponents)} in dimension {dimension}"
                )
            acc[exponents] = acc.get(exponents, Fraction(0)) + Fraction(coefficient)
        return cls(dimension, {e: c for e, c in acc.items() if c != 0})

    def is_zero(self) -> bool:
        return not self.terms


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise PolyParseError(f"unexpected character {text[pos]!r}", pos)
        if match.lastgroup != "ws":
            tokens.append((match.lastgroup, match.group(), pos))
        pos = match.end()
    return tokens


def _var_index(token: str, dimension: int, pos: int) -> int:
    if token in _ALIASES:
        if dimension > 3:
            raise PolyParseError(
                f"alias {token!r} is only available for dimension <= 3", pos
            )
        index = _ALIASES[token]
    else:
        index = int(token[1:])
    if index >= dimension:
        raise PolyParseError(
            f"variable X{index} exceeds declared dimension {dimension}", pos
        )
    return index


def parse_poly(text: str, dimension: int) -> SparsePoly:
    if dimension < 1:
        raise ValueError(f"dimension must be >= 1, got {dimension}")
    tokens = _tokenize(text)
    if not tokens:
        raise PolyParseError("empty polynomial text", 0)
    pairs = []
    i = 0
    sign = 1
    # optional leading sign
    if tokens[i][0] == "op" and tokens[i][1] in "+-":
        sign = -1 if tokens[i][1] == "-" else 1
        i += 1
    while True:
        i, exponents, coefficient = _parse_term(tokens, i, dimension)
        pairs.append((exponents, sign * coefficient))
        if i == len(tokens):
            break
        kind, value, pos = tokens[i]
        if kind != "op" or value not in "+-":
            raise PolyParseError(f"expected '+' or '-', got {value!r}", pos)
        sign = -1 if value == "-" else 1
        i += 1
    return SparsePoly.from_pairs(dimension, pairs)


def _parse_term(tokens, i: int, dimension: int):
    exponents = [0] * dimension
    coefficient = Fraction(1)
    seen_factor = False
    while True:
        if i >= len(tokens):
            pos = tokens[-1][2] if tokens else 0
            raise PolyParseError("expected a coefficient or a variable", pos)
        kind, value, pos = tokens[i]
        if kind == "number":
            coefficient *= Fraction(value.replace(" ", ""))
            i += 1
        elif kind == "var":
            index = _var_index(value, dimension, pos)
            exponent = 1
            i += 1
            if i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "^":
                i += 1
                if i >= len(tokens) or tokens[i][0] != "number" or "/" in tokens[i][1]:
                    bad = tokens[i] if i < len(tokens) else (None, "end of input", pos)
                    raise PolyParseError(f"expected a natural exponent, got {bad[1]!r}", bad[2])
                exponent = int(tokens[i][1])
                i += 1
            exponents[index] += exponent
        else:
            raise PolyParseError(f"expected a coefficient or a variable, got {value!r}", pos)
        seen_factor = True
        if i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "*":
            i += 1
            continue
        break
    if not seen_factor:
        raise PolyParseError("empty term", tokens[i][2] if i < len(tokens) else 0)
    return i, tuple(exponents), coefficient


# ---------------------------------------------------------------------------
# ordering


def sort_terms(p: SparsePoly, order: VectorRelation) -> List[Term]:
    """Terms in ascending order under a strict total vector order."""

    def compare(a: Term, b: Term) -> int:
        if order.apply(a.exponents, b.exponents):
            return -1
        if order.apply(b.exponents, a.exponents):
            return 1
        return 0

    terms = [Term(e, c) for e, c in p.terms.items()]
    return sorted(terms, key=cmp_to_key(compare))


def leading_term(p: SparsePoly, order: VectorRelation) -> Optional[Term]:
    """Maximum term under the order; None for the zero polynomial."""
    lead: Optional[Term] = None
    for exponents, coefficient in p.terms.items():
        if lead is None or order.apply(lead.exponents, exponents):
            lead = Term(exponents, coefficient)
    return lead


def monomial_mul(p: SparsePoly, gamma: Sequence[int]) -> SparsePoly:
    """Multiply by a single monomial: shift every exponent family by gamma."""
    gamma = tuple(gamma)
    if len(gamma) != p.dimension:
        raise LengthMismatchError(
            f"shift of length {len(gamma)} in dimension {p.dimension}"
        )
    return SparsePoly.from_pairs(
        p.dimension,
        ((tuple(e + g for e, g in zip(exponents, gamma)), c) for exponents, c in p.terms.items()),
    )


# ---------------------------------------------------------------------------
# formatting


def _variable_name(index: int, dimension: int, alias: bool) -> str:
    if alias and dimension <= 3:
        return "XYZ"[index]
    return f"X{index}"


def format_term(term: Term, dimension: int, alias: Optional[bool] = None) -> str:
    """Canonical unsigned rendering of a term (the sign is handled by the
    polynomial joiner)."""
    if alias is None:
        alias = dimension <= 3
    factors = []
    for index, exponent in enumerate(term.exponents):
        if exponent == 0:
            continue
        name = _variable_name(index, dimension, alias)
        factors.append(name if exponent == 1 else f"{name}^{exponent}")
    magnitude = abs(term.coefficient)
    if not factors:
        return str(magnitude)
    if magnitude == 1:
        return "*".join(factors)
    return "*".join([str(magnitude)] + factors)


def format_poly(terms: Sequence[Term], dimension: int, alias: Optional[bool] = None) -> str:
    if not terms:
        return "0"
    parts = []
    for i, term in enumerate(terms):
        body = format_term(term, dimension, alias)
        if i == 0:
            parts.append(body if term.coefficient > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if term.coefficient > 0 else '-'} {body}")
    return " ".join(parts)
