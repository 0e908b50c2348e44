import random

import pytest

from ruvcodes.errors import NotAUnit, NotASquare
from ruvcodes.gf import is_qr, make_field
from ruvcodes.ring4 import (
    RingElement,
    UnitFamily,
    classify_unit,
    format_ring_element,
    is_square_unit,
    is_unit,
    parse_ring_element,
    ring_mul,
    sqrt_unit,
    swap_uv,
)


def R(F, text):
    return parse_ring_element(F, text)


def rand_elem(F, rng):
    return RingElement(*(F.from_index(rng.randrange(F.q)) for _ in range(4)))


def test_relations(f3):
    u, v = R(f3, "u"), R(f3, "v")
    assert ring_mul(u, v) == R(f3, "uv")
    assert not ring_mul(u, u)
    assert ring_mul(R(f3, "1+2u"), R(f3, "1+2u")) == R(f3, "1+u")


def test_units(f3):
    assert is_unit(R(f3, "2+v+uv"))
    assert not is_unit(R(f3, "u+v"))
    assert is_unit(R(f3, "1"))
    assert not is_square_unit(R(f3, "2+v+uv"))
    assert is_square_unit(R(f3, "1"))
    assert is_square_unit(R(f3, "1+u"))
    with pytest.raises(NotAUnit):
        is_square_unit(R(f3, "u"))


def test_sqrt_unit(f3):
    assert sqrt_unit(R(f3, "1")) == R(f3, "1")
    assert sqrt_unit(R(f3, "1+u")) == R(f3, "1+2u")
    F5 = make_field(5, 1, 1)
    g = sqrt_unit(R(F5, "4"))
    assert g * g == R(F5, "4")
    with pytest.raises(NotASquare):
        sqrt_unit(R(f3, "2+u"))


def test_classify_examples(f3):
    assert classify_unit(R(f3, "2+v+uv")) is UnitFamily.CASE_NO_U
    assert classify_unit(R(f3, "2+u+v")) is UnitFamily.CASE_FULL
    assert classify_unit(R(f3, "2")) is UnitFamily.UNCOVERED
    assert classify_unit(R(f3, "2+u+uv")) is UnitFamily.CASE_NO_V_SWAPPED
    assert classify_unit(R(f3, "2+v")) is UnitFamily.UNCOVERED
    assert classify_unit(R(f3, "1+u")) is UnitFamily.SQUARE


def test_classify_swap_symmetry():
    F = make_field(3, 2, 1)
    swap = {UnitFamily.CASE_NO_U: UnitFamily.CASE_NO_V_SWAPPED, UnitFamily.CASE_NO_V_SWAPPED: UnitFamily.CASE_NO_U}
    rng = random.Random(1)
    for _ in range(500):
        x = rand_elem(F, rng)
        if not is_unit(x):
            continue
        a, b = classify_unit(x), classify_unit(swap_uv(x))
        assert b == swap.get(a, a)


def test_ring_laws():
    F = make_field(3, 2, 1)
    rng = random.Random(7)
    for _ in range(10_000):
        x, y, z = rand_elem(F, rng), rand_elem(F, rng), rand_elem(F, rng)
        assert x * y == y * x
        if _ % 10 == 0:
            assert (x * y) * z == x * (y * z)


def test_radical_cubed_vanishes():
    F = make_field(5, 1, 1)
    rng = random.Random(3)
    for _ in range(500):
        x = rand_elem(F, rng)
        n = RingElement(F.zero, x.a2, x.a3, x.a4)
        assert not n * n * n


def test_square_rule_and_roundtrip():
    F = make_field(5, 1, 1)
    rng = random.Random(5)
    for _ in range(500):
        x, y = rand_elem(F, rng), rand_elem(F, rng)
        if not (is_unit(x) and is_unit(y)):
            continue
        assert is_square_unit(x * y) == (is_qr(x.a1) == is_qr(y.a1))
        if is_square_unit(x):
            g = sqrt_unit(x)
            assert g * g == x


def test_format_parse():
    F = make_field(3, 2, 1)
    x = parse_ring_element(F, "(g+1)+2u+g v+uv")
    assert x == RingElement(F.element([1, 1]), F.element(2), F.gen, F.one)
    assert parse_ring_element(F, format_ring_element(x)) == x
    rng = random.Random(11)
    for _ in range(300):
        y = rand_elem(F, rng)
        assert parse_ring_element(F, format_ring_element(y)) == y
