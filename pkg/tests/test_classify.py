"""Signature validation, Euler factor, and the classification trichotomy."""

from fractions import Fraction

import pytest

from planegroups import (
    EUCLIDEAN_SIGNATURES,
    GroupId,
    Kind,
    Signature,
    classify,
    euler_factor,
)


def sig(orientable, genus, orders=(), boundary=0):
    return Signature(orientable, genus, tuple(orders), boundary)


def test_signature_sorts_cone_orders():
    s = sig(True, 0, (5, 2, 3))
    assert s.cone_orders == (2, 3, 5)


def test_signature_validation():
    with pytest.raises(ValueError):
        sig(True, -1)
    with pytest.raises(ValueError):
        sig(False, 0)  # a non-orientable surface has at least one cross-cap
    with pytest.raises(ValueError):
        sig(True, 0, (1,))
    with pytest.raises(ValueError):
        sig(True, 0, (2.5,))
    with pytest.raises(ValueError):
        sig(True, 0, (), -1)


def test_euler_factor_values():
    assert euler_factor(sig(True, 0, (2, 2, 5))) == Fraction(1, 5)
    assert euler_factor(sig(True, 0, (3, 3, 3))) == 0
    assert euler_factor(sig(True, 0, (2, 3, 7))) == Fraction(-1, 42)
    assert euler_factor(sig(True, 1)) == 0
    assert euler_factor(sig(False, 1)) == 1
    assert euler_factor(sig(False, 2, (2, 2))) == -1
    assert euler_factor(sig(True, 2)) == -2


def test_euler_factor_rejects_boundary():
    with pytest.raises(ValueError):
        euler_factor(sig(True, 0, (2,), 1))


def test_finite_classifications():
    cases = {
        (True, 0, ()): "Cyclic(1)",
        (True, 0, (7,)): "Cyclic(1)",
        (True, 0, (4, 6)): "Cyclic(2)",
        (True, 0, (5, 5)): "Cyclic(5)",
        (True, 0, (2, 2, 9)): "Dihedral(18)",
        (True, 0, (2, 2, 2)): "Dihedral(4)",
        (True, 0, (2, 3, 3)): "Tetrahedral",
        (True, 0, (2, 3, 4)): "Octahedral",
        (True, 0, (2, 3, 5)): "Icosahedral",
        (False, 1, ()): "Cyclic(2)",
        (False, 1, (2,)): "Z4",
        (False, 1, (5,)): "Cyclic(10)",
    }
    for (orientable, genus, orders), name in cases.items():
        result = classify(sig(orientable, genus, orders))
        assert result.kind is Kind.FINITE, (orientable, genus, orders)
        assert str(result.finite_name) == name, (orientable, genus, orders)
        assert result.describe() == f"Finite: {name}"


def test_euclidean_classifications():
    expected = {
        (True, 1, ()): GroupId.G0,
        (False, 2, ()): GroupId.G1,
        (True, 0, (2, 2, 2, 2)): GroupId.G2,
        (True, 0, (3, 3, 3)): GroupId.G3,
        (True, 0, (2, 4, 4)): GroupId.G4,
        (True, 0, (2, 3, 6)): GroupId.G5,
        (False, 1, (2, 2)): GroupId.G6,
    }
    assert EUCLIDEAN_SIGNATURES == expected
    for (orientable, genus, orders), gid in expected.items():
        result = classify(sig(orientable, genus, orders))
        assert result.kind is Kind.EUCLIDEAN
        assert result.euclidean_group is gid
        assert result.describe() == f"Euclidean: {gid.name}"


def test_hyperbolic_classifications():
    for s in (
        sig(True, 0, (2, 3, 7)),
        sig(True, 2),
        sig(False, 3),
        sig(True, 1, (2,)),
        sig(False, 1, (2, 3)),
    ):
        result = classify(s)
        assert result.kind is Kind.HYPERBOLIC
        assert result.chi_factor < 0
        assert result.finite_name is None
        assert result.describe() == "Hyperbolic"


def test_bordered_classifications():
    # disc: free of rank 0
    assert str(classify(sig(True, 0, (), 1)).finite_name) == "Cyclic(1)"
    # disc with one cone point: finite cyclic
    disc = classify(sig(True, 0, (9,), 1))
    assert disc.kind is Kind.FINITE
    assert str(disc.finite_name) == "Cyclic(9)"
    # two finite factors, or any genus/extra-boundary handle: infinite
    for s in (
        sig(True, 0, (2, 2), 1),
        sig(True, 1, (), 1),
        sig(False, 1, (), 1),
        sig(True, 0, (), 2),
        sig(True, 0, (4,), 2),
    ):
        result = classify(s)
        assert result.kind is Kind.FREE_PRODUCT_INFINITE, s
        assert result.describe() == "FreeProductInfinite"


def test_classification_is_order_insensitive():
    a = classify(sig(True, 0, (6, 2, 4)))
    b = classify(sig(True, 0, (4, 6, 2)))
    assert a == b


def test_sign_trichotomy_on_enumeration():
    euclidean_seen = set()
    for orientable in (True, False):
        start = 0 if orientable else 1
        for genus in range(start, 3):
            for orders in _order_tuples(max_len=4, max_order=7):
                s = sig(orientable, genus, orders)
                chi = euler_factor(s)
                result = classify(s)
                if chi > 0:
                    assert result.kind is Kind.FINITE, s
                elif chi == 0:
                    assert result.kind is Kind.EUCLIDEAN, s
                    euclidean_seen.add(result.euclidean_group)
                else:
                    assert result.kind is Kind.HYPERBOLIC, s
    assert euclidean_seen == set(GroupId)


def _order_tuples(max_len, max_order):
    yield ()
    stack = [(o,) for o in range(2, max_order + 1)]
    while stack:
        t = stack.pop()
        yield t
        if len(t) < max_len:
            stack.extend(t + (o,) for o in range(t[-1], max_order + 1))
