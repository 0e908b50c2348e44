import random

import pytest

from conftest import ambient
from ruvcodes.errors import UncoveredFamily
from ruvcodes.quotient import AdicForm, QuotPoly, from_adic, nilpotency_index, qp_add, qp_mul, qp_scale, to_adic
from ruvcodes.ring4 import RingElement, parse_ring_element


def rand_poly(P, rng):
    F = P.field
    return QuotPoly(P, tuple(RingElement(*(F.from_index(rng.randrange(F.q)) for _ in range(4))) for _ in range(P.n)))


def test_add_scale(nou):
    F = nou.field
    rng = random.Random(0)
    f = rand_poly(nou, rng)
    assert qp_add(f, nou.zero) == f
    assert not qp_add(f, -f)
    u, v = parse_ring_element(F, "u"), parse_ring_element(F, "v")
    assert qp_scale(qp_scale(f, v), u) == qp_scale(f, u * v)


def test_mul_examples(nou):
    F = nou.field
    assert qp_mul(nou.monomial(5), nou.x) == nou.constant(parse_ring_element(F, "2+v+uv"))
    assert nou.y**3 == nou.constant(parse_ring_element(F, "v+uv"))
    f = rand_poly(nou, random.Random(1))
    assert qp_mul(f, nou.one) == f


@pytest.mark.parametrize("p,m,s,alpha", [(3, 1, 1, "2+v+uv"), (3, 1, 1, "2+u+v"), (5, 1, 1, "2+v+uv"), (3, 2, 1, "(g+1)+u+v")])
def test_frobenius_identity(p, m, s, alpha):
    P = ambient(p, m, s, alpha)
    a = P.alpha
    assert P.y ** P.ps == P.constant(RingElement(P.field.zero, a.a2, a.a3, a.a4))


def test_x_power_n_is_alpha(nou):
    rng = random.Random(2)
    xn = nou.x**nou.n
    for _ in range(20):
        f = rand_poly(nou, rng)
        assert xn * f == f.scale(nou.alpha)


def test_shift_matches_mul_by_x(full):
    rng = random.Random(3)
    for _ in range(50):
        f = rand_poly(full, rng)
        assert f.shift(1) == f * full.x


def test_adic_examples(nou):
    F = nou.field
    zero_form = to_adic(nou.zero)
    assert all(not a and not b for a, b in zero_form.pairs)
    form = to_adic(nou.monomial(2))
    one = RingElement.scalar(F.one)
    zero = RingElement.scalar(F.zero)
    assert form.pairs[0] == (zero, RingElement.scalar(nou.alpha0))
    assert form.pairs[1] == (zero, one)
    assert len(form.pairs) == nou.ps


@pytest.mark.parametrize("p,m,s,alpha", [(3, 1, 1, "2+v+uv"), (3, 1, 2, "2+v+uv"), (3, 2, 1, "(g+1)+u+v")])
def test_adic_roundtrip(p, m, s, alpha):
    P = ambient(p, m, s, alpha)
    rng = random.Random(p * 100 + m * 10 + s)
    for _ in range(10_000 // 3):
        f = rand_poly(P, rng)
        assert from_adic(to_adic(f)) == f


def test_adic_reassembles(nou):
    rng = random.Random(9)
    for _ in range(30):
        f = rand_poly(nou, rng)
        acc = nou.zero
        for k, (a, b) in enumerate(to_adic(f).pairs):
            acc = acc + (nou.x.scale(a) + nou.one.scale(b)) * nou.y**k
        assert acc == f
        assert isinstance(to_adic(f), AdicForm)


@pytest.mark.parametrize("p", [3, 5])
def test_nilpotency_index(p):
    assert nilpotency_index(ambient(p, 1, 1, "2+u+v")) == 3 * p
    assert nilpotency_index(ambient(p, 1, 1, "2+v+uv")) == 2 * p


def test_nilpotency_uncovered():
    with pytest.raises(UncoveredFamily):
        nilpotency_index(ambient(3, 1, 1, "2"))


def test_format(nou):
    assert str(nou.y) == "1+x^2"  # -2 = 1 mod 3
    assert str(nou.zero) == "0"
