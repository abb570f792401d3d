"""Matrix-defined orders: comparison by successive weighted projections.

A weight matrix has one row per vector component and one column per weight
vector.  Two vectors are compared by their dot products against the columns,
left to right; the first column with differing projections decides via the
scalar order, equal projections fall through to the next column, and running
out of columns yields False.

All arithmetic is exact (integers, or Fractions); equality of projections
must be exact for the column recursion to make sense, so no floats are
accepted.

The matrix encodings of the named orders are candidates validated
empirically: matrix_for only returns a matrix after checking exhaustive
agreement with the combinator order on a small box (d <= 3).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence, Tuple

from .families import Family, LengthMismatchError, VectorRelation
from .graded import grcolex, grevlex, grlex, grsymlex
from .relations import LT, Relation

_EXACT_TYPES = (int, Fraction)

MATRIX_ORDER_NAMES = ("lex", "grlex", "grevlex", "grsymlex", "grcolex")


@dataclass(frozen=True)
class WeightMatrix:
    """Rectangular exact-entry matrix; rows index vector components, columns
    index weight vectors."""

    rows: Tuple[Tuple, ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ValueError("weight matrix needs at least one row")
        widths = {len(row) for row in rows}
        if len(widths) != 1:
            raise ValueError("weight matrix rows have inconsistent lengths")
        for row in rows:
            for entry in row:
                if not isinstance(entry, _EXACT_TYPES):
                    raise TypeError(f"inexact matrix entry {entry!r}")

    @property
    def d(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return len(self.rows[0])

    def column(self, j: int) -> Tuple:
        return tuple(row[j] for row in self.rows)

    def scale_column(self, j: int, factor) -> "WeightMatrix":
        return WeightMatrix(
            tuple(
                tuple(entry * factor if i == j else entry for i, entry in enumerate(row))
                for row in self.rows
            )
        )


def prepend_ones_column(w: WeightMatrix) -> WeightMatrix:
    """The matrix counterpart of grading: a leading all-ones column compares
    component sums first."""
    return WeightMatrix(tuple((1,) + row for row in w.rows))


def weighted_lt(w: WeightMatrix, k_lt: Relation, x: Family, y: Family) -> bool:
    if len(x) != w.d or len(y) != w.d:
        raise LengthMismatchError(
            f"expected families of length {w.d}, got {len(x)} and {len(y)}"
        )
    d = w.d
    for j in range(w.m):
        px = sum(x[i] * w.rows[i][j] for i in range(d))
        py = sum(y[i] * w.rows[i][j] for i in range(d))
        if px == py:
            continue
        return k_lt.apply(px, py)
    return False


def weighted_relation(w: WeightMatrix, k_lt: Relation = LT) -> VectorRelation:
    def apply(x: Family, y: Family) -> bool:
        return weighted_lt(w, k_lt, x, y)

    return VectorRelation(apply, name=f"weighted[{w.d}x{w.m}]", arity=w.d)


# ---------------------------------------------------------------------------
# matrix encodings of the named orders


def _unit(d: int, i: int, sign: int = 1) -> Tuple[int, ...]:
    return tuple(sign if j == i else 0 for j in range(d))


def _candidate_columns(order_name: str, d: int):
    ones = (1,) * d
    if order_name == "lex":
        return [_unit(d, i) for i in range(d)]
    if order_name == "grlex":
        return [ones] + [_unit(d, i) for i in range(d - 1)]
    if order_name == "grcolex":
        return [ones] + [_unit(d, i) for i in range(d - 1, 0, -1)]
    if order_name == "grsymlex":
        return [ones] + [_unit(d, i, -1) for i in range(d - 1)]
    if order_name == "grevlex":
        return [ones] + [_unit(d, i, -1) for i in range(d - 1, 0, -1)]
    raise ValueError(f"unknown order name {order_name!r}")


_COMBINATOR = {
    "grlex": grlex,
    "grcolex": grcolex,
    "grsymlex": grsymlex,
    "grevlex": grevlex,
}


def _reference_order(order_name: str) -> VectorRelation:
    if order_name == "lex":
        from .families import lex as lex_rel

        return lex_rel(LT)
    return _COMBINATOR[order_name](LT)


def matrix_for(order_name: str, d: int) -> WeightMatrix:
    """Weight matrix whose order matches the named order under strict
    integer comparison.

    The construction is validated before being returned: for d <= 3 the
    matrix order is compared with the combinator order on every pair of
    [0..3]^d, and a mismatch raises.  Larger dimensions reuse the same
    column pattern, validated at the tested sizes.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    columns = _candidate_columns(order_name, d)
    w = WeightMatrix(tuple(tuple(col[i] for col in columns) for i in range(d)))
    if d <= 3:
        reference = _reference_order(order_name)
        box = list(product(range(4), repeat=d))
        for x in box:
            for y in box:
                if weighted_lt(w, LT, x, y) != reference.apply(x, y):
                    raise AssertionError(
                        f"candidate matrix for {order_name} disagrees at {x} vs {y}"
                    )
    return w


def find_incomparable(w: WeightMatrix, k_lt: Relation, box_bound: int) -> Optional[Tuple[Family, Family]]:
    """First pair of distinct vectors in [0..box_bound]^d that the matrix
    order relates in neither direction, or None.

    Which witness is returned is an artifact of the scan order; any valid
    pair is acceptable."""
    box = list(product(range(box_bound + 1), repeat=w.d))
    for i, x in enumerate(box):
        for y in box[i + 1 :]:
            if not weighted_lt(w, k_lt, x, y) and not weighted_lt(w, k_lt, y, x):
                return (x, y)
    return None


# ---------------------------------------------------------------------------
# plain-text fixture format: first line "d m", then d rows of m integers


def parse_matrix(text: str) -> WeightMatrix:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty matrix fixture")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad matrix header {lines[0]!r}; expected 'd m'")
    d, m = (int(tok) for tok in header)
    if len(lines) - 1 != d:
        raise ValueError(f"expected {d} matrix rows, got {len(lines) - 1}")
    rows = []
    for line in lines[1 : d + 1]:
        entries = [int(tok) for tok in line.split()]
        if len(entries) != m:
            raise ValueError(f"expected {m} entries per row, got {len(entries)} in {line!r}")
        rows.append(tuple(entries))
    return WeightMatrix(tuple(rows))


def format_matrix(w: WeightMatrix) -> str:
    lines = [f"{w.d} {w.m}"]
    lines.extend(" ".join(str(entry) for entry in row) for row in w.rows)
    return "\n".join(lines) + "\n"


def load_matrix(path) -> WeightMatrix:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_matrix(handle.read())
