"""Fixed-length families and the four lexicographic comparators.

Families are plain tuples.  A vector relation compares two families of the
same length; mismatched lengths are a usage error and raise, never silently
return False.

All four comparators share one base case: on two empty families the result is
the declared reflexivity of the scalar relation.  This is what lets a single
definition cover both strict and nonstrict scalar orders (lex(le) on equal
families is True, lex(lt) is False).

The comparators are implemented iteratively (scan for the first differing
index, then consult the scalar relation); the literal structural recursion is
kept as a test oracle in the test suite.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Any, Callable, Optional, Sequence, Tuple

from .relations import Predicate, Relation

Family = Tuple[Any, ...]


class LengthMismatchError(ValueError):
    """Two families of different lengths were compared."""


class EmptyFamilyError(ValueError):
    """Head/tail/init/last was taken on an empty family."""


def check_same_length(x: Sequence, y: Sequence) -> None:
    if len(x) != len(y):
        raise LengthMismatchError(f"family lengths differ: {len(x)} vs {len(y)}")


def head(a: Family):
    if not a:
        raise EmptyFamilyError("head of empty family")
    return a[0]


def tail(a: Family) -> Family:
    if not a:
        raise EmptyFamilyError("tail of empty family")
    return tuple(a[1:])


def init(a: Family) -> Family:
    if not a:
        raise EmptyFamilyError("init of empty family")
    return tuple(a[:-1])


def last(a: Family):
    if not a:
        raise EmptyFamilyError("last of empty family")
    return a[-1]


def reverse_family(a: Family) -> Family:
    return tuple(reversed(a))


@dataclass(frozen=True)
class VectorRelation:
    """A binary predicate over pairs of equal-length families.

    ``arity`` is None for length-generic comparators (the usual case here);
    when set, it records the single family length the relation compares.
    """

    apply: Callable[[Family, Family], bool]
    name: str = ""
    arity: Optional[int] = None

    def __call__(self, x: Family, y: Family) -> bool:
        return self.apply(x, y)


def lex(r: Relation, eq: Predicate = operator.eq) -> VectorRelation:
    """Lexicographic extension of a scalar relation.

    The scalar relation decides at the first index where the items differ
    (under the supplied equality, not the relation); if no index differs the
    result is the declared reflexivity of the scalar relation.
    """
    rapply = r.apply
    base = r.declared_reflexive

    def apply(x: Family, y: Family) -> bool:
        check_same_length(x, y)
        for a, b in zip(x, y):
            if not eq(a, b):
                return rapply(a, b)
        return base

    return VectorRelation(apply, name=f"lex({r.name})")


def colex(r: Relation, eq: Predicate = operator.eq) -> VectorRelation:
    """Colexicographic order: the last differing index decides.

    Extensionally equal to reverse_rel(lex(r)); implemented as a right-to-left
    scan to avoid copying.
    """
    rapply = r.apply
    base = r.declared_reflexive

    def apply(x: Family, y: Family) -> bool:
        check_same_length(x, y)
        for i in range(len(x) - 1, -1, -1):
            if not eq(x[i], y[i]):
                return rapply(x[i], y[i])
        return base

    return VectorRelation(apply, name=f"colex({r.name})")


def symlex(r: Relation, eq: Predicate = operator.eq) -> VectorRelation:
    """Argument-swapped lex: symlex(r)(x, y) iff lex(r)(y, x)."""
    inner = lex(r, eq)

    def apply(x: Family, y: Family) -> bool:
        return inner.apply(y, x)

    return VectorRelation(apply, name=f"symlex({r.name})")


def revlex(r: Relation, eq: Predicate = operator.eq) -> VectorRelation:
    """Argument-swapped colex: revlex(r)(x, y) iff colex(r)(y, x)."""
    inner = colex(r, eq)

    def apply(x: Family, y: Family) -> bool:
        return inner.apply(y, x)

    return VectorRelation(apply, name=f"revlex({r.name})")


def reverse_rel(rn: VectorRelation) -> VectorRelation:
    """Apply a vector relation to the reversed families."""

    def apply(x: Family, y: Family) -> bool:
        check_same_length(x, y)
        return rn.apply(reverse_family(x), reverse_family(y))

    return VectorRelation(apply, name=f"reverse({rn.name})", arity=rn.arity)


def converse_rel(rn: VectorRelation) -> VectorRelation:
    """Swap the arguments of a vector relation."""

    def apply(x: Family, y: Family) -> bool:
        return rn.apply(y, x)

    return VectorRelation(apply, name=f"converse({rn.name})", arity=rn.arity)


def or_eq_rel(rn: VectorRelation) -> VectorRelation:
    """Reflexive closure of a vector relation (componentwise equality)."""

    def apply(x: Family, y: Family) -> bool:
        check_same_length(x, y)
        return tuple(x) == tuple(y) or rn.apply(x, y)

    return VectorRelation(apply, name=f"or_eq({rn.name})", arity=rn.arity)
