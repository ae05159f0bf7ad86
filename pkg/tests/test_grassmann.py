from fractions import Fraction

import pytest

from riemann_susy.errors import KindMismatchError, ParityError, RegistryError
from riemann_susy.grassmann import (
    REGISTRY,
    GrassmannElement,
    Parity,
    ScalarKind,
    gsubstitute,
    parity,
    sort_with_sign,
)

g = GrassmannElement.generator
one = GrassmannElement.scalar


def test_add_collects_and_cancels():
    assert g("eta1") + g("eta1") == g("eta1", 2)
    assert (g("eta1") + (-g("eta1"))).is_zero()
    assert (one(1) + g("eta1") * g("eta2")) + one(2) == one(3) + g("eta1") * g("eta2")


def test_generators_anticommute_and_square_to_zero():
    a, b = g("eta1"), g("eta2")
    assert a * b == -(b * a)
    assert (a * a).is_zero()
    assert (a * b * a).is_zero()


def test_product_of_sums():
    a, b = g("eta1"), g("eta2")
    assert (one(1) + a) * (one(1) + b) == one(1) + a + b + a * b


def test_product_is_associative():
    a, b, c = g("eta"), g("eta1") + one(2), g("K") * g("L") + g("eta2")
    assert (a * b) * c == a * (b * c)


def test_sort_with_sign():
    assert sort_with_sign([2, 1]) == (-1, (1, 2))
    assert sort_with_sign([3, 1, 2]) == (1, (1, 2, 3))
    assert sort_with_sign([1, 2, 1]) == (0, ())


def test_parity():
    assert parity(one(5)) is Parity.EVEN
    assert parity(g("eta1")) is Parity.ODD
    assert parity(g("eta1") * g("eta2")) is Parity.EVEN
    assert parity(one(1) + g("eta1")) is Parity.MIXED
    assert parity(GrassmannElement()) is Parity.EVEN


def test_body_of_product():
    e = (one(3) + g("eta1")) * (one(Fraction(1, 2)) + g("eta2"))
    assert e.body() == Fraction(3, 2)


def test_exact_and_float_do_not_mix():
    exact = one(1)
    approx = GrassmannElement.scalar(1.0, ScalarKind.FLOAT)
    with pytest.raises(KindMismatchError):
        exact + approx
    with pytest.raises(KindMismatchError):
        GrassmannElement({(): 0.5})


def test_substitute_odd_generators():
    a, b = g("eta1"), g("eta2")
    e = a * b
    assert gsubstitute(e, {"eta1": b}).is_zero()
    assert gsubstitute(e, {"eta1": g("K"), "eta2": g("L")}) == g("K") * g("L")
    swapped = gsubstitute(e, {"eta1": b, "eta2": a})
    assert swapped == -(a * b)


def test_substitute_rejects_even_value():
    with pytest.raises(ParityError):
        gsubstitute(g("eta1"), {"eta1": one(2)})


def test_registry():
    assert REGISTRY.get("theta").id == 0
    assert "eta1" in REGISTRY
    with pytest.raises(RegistryError):
        REGISTRY.get("not_a_generator")


def test_str():
    assert str(g("eta1") * g("eta2") - one(1)) == "-1 + eta1*eta2"
