import operator

import pytest

from conftest import relation_from_pairs

from gradedorders import (
    Carrier,
    DIVIDES,
    GE,
    GT,
    LE,
    LT,
    Relation,
    carrier_range,
    complementary,
    converse,
    intersection,
    is_connected,
    is_reflexive,
    is_strict_total_order,
    is_strict_weak_order,
    is_strongly_connected,
    is_total_order,
    is_transitive,
    is_trichotomous,
    or_eq,
    union,
)
from gradedorders.relations import EMPTY, property_witness

C3 = carrier_range(0, 2)
C4 = carrier_range(0, 3)


def agree_on(r1, r2, carrier):
    return all(
        r1.apply(x, y) == r2.apply(x, y)
        for x in carrier.elements
        for y in carrier.elements
    )


def test_converse_unfolds():
    assert converse(LT).apply(5, 3)
    assert not converse(LT).apply(3, 5)


def test_converse_involutive():
    assert agree_on(converse(converse(LT)), LT, C4)


def test_converse_preserves_total_order():
    assert is_total_order(LE, C3)
    assert is_total_order(converse(LE), C3)


def test_complementary_of_strict_less_holds_on_diagonal():
    assert complementary(LT, declared_reflexive=True).apply(2, 2)


def test_double_complement():
    r = complementary(complementary(LT, declared_reflexive=True), declared_reflexive=False)
    assert agree_on(r, LT, C3)


def test_complementary_divisibility_not_transitive():
    c = Carrier((2, 3, 4))
    comp = complementary(DIVIDES, declared_reflexive=False)
    assert is_transitive(DIVIDES, c)
    assert not is_transitive(comp, c)


def test_or_eq():
    assert or_eq(LT).apply(7, 7)
    assert or_eq(LT).apply(3, 9)
    assert or_eq(LT).declared_reflexive


def test_or_eq_of_empty_is_identity():
    r = or_eq(EMPTY)
    for x in C4.elements:
        for y in C4.elements:
            assert r.apply(x, y) == (x == y)


def test_union_intersection():
    u = union(LT, GT, declared_reflexive=False)
    assert u.apply(2, 3)
    assert not u.apply(2, 2)
    both = intersection(LE, GE, declared_reflexive=True)
    for x in C4.elements:
        for y in C4.elements:
            assert both.apply(x, y) == (x == y)


def test_union_with_complement_is_universal():
    u = union(LT, complementary(LT, declared_reflexive=True), declared_reflexive=True)
    assert all(u.apply(x, y) for x in C4.elements for y in C4.elements)


def test_trichotomous_singleton_empty_relation():
    assert is_trichotomous(EMPTY, Carrier((0,)))


def test_connectivity_examples():
    assert is_strongly_connected(LE, C3)
    assert not is_strongly_connected(LT, C3)
    assert is_connected(LT, C3)


def test_strict_total_order_on_lt():
    assert is_strict_total_order(LT, C3)


def test_divisibility_is_not_total_order():
    assert not is_total_order(DIVIDES, Carrier((1, 2, 3)))


def test_empty_relation_is_strict_weak_order():
    assert is_strict_weak_order(EMPTY, carrier_range(0, 1))


def test_empty_carrier_vacuous():
    c = Carrier(())
    assert is_total_order(LT, c)
    assert is_strict_total_order(EMPTY, c)
    assert is_reflexive(EMPTY, c)


def test_carrier_rejects_duplicates():
    with pytest.raises(ValueError):
        Carrier((1, 1, 2))


def test_property_witness_reports_counterexample():
    failure = property_witness("connected", DIVIDES, Carrier((1, 2, 3, 4, 5, 6)))
    assert failure is not None
    name, (x, y) = failure
    assert name == "connected"
    assert not DIVIDES.apply(x, y) and not DIVIDES.apply(y, x)


def test_property_witness_unknown_name():
    with pytest.raises(KeyError):
        property_witness("wellfounded", LT, C3)


def test_custom_equality_carrier():
    # elements distinct modulo 3; relation on residues
    c = Carrier((0, 1, 2), eq=lambda a, b: a % 3 == b % 3)
    mod_le = Relation(lambda a, b: a % 3 <= b % 3, declared_reflexive=True)
    assert is_total_order(mod_le, c)
