"""Arithmetic in GF(p^m) with a polynomial basis 1, g, ..., g^(m-1)."""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import (
    DivisionByZero,
    EvenPrime,
    NotASquare,
    NotPrime,
    ParseError,
    ReduciblePolynomial,
    ZeroInput,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _poly_divides(d: Sequence[int], f: Sequence[int], p: int) -> bool:
    """True iff monic d divides f over F_p (coefficient lists, low degree first)."""
    r = list(f)
    dd = len(d) - 1
    for top in range(len(r) - 1, dd - 1, -1):
        c = r[top] % p
        if c:
            for i in range(dd + 1):
                r[top - dd + i] = (r[top - dd + i] - c * d[i]) % p
    return not any(x % p for x in r[:dd])


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    deg = len(f) - 1
    if deg < 1:
        return False
    for k in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=k):
            if _poly_divides(list(low) + [1], f, p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree m with the smallest coefficient tuple.

    Candidates are ordered by the integer c_0 + c_1 p + ... + c_{m-1} p^(m-1).
    """
    for idx in range(p**m):
        low = [(idx // p**i) % p for i in range(m)]
        f = low + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


@dataclass(frozen=True)
class FieldParams:
    p: int
    m: int
    s: int
    irreducible: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def ps(self) -> int:
        return self.p**self.s

    def element(self, coeffs: Sequence[int] | int) -> "FieldElement":
        if isinstance(coeffs, int):
            coeffs = [coeffs] + [0] * (self.m - 1)
        if len(coeffs) != self.m:
            raise ValueError(f"expected {self.m} coordinates, got {len(coeffs)}")
        return FieldElement(self, tuple(c % self.p for c in coeffs))

    def from_index(self, idx: int) -> "FieldElement":
        return FieldElement(self, tuple((idx // self.p**i) % self.p for i in range(self.m)))

    @cached_property
    def zero(self) -> "FieldElement":
        return self.element(0)

    @cached_property
    def one(self) -> "FieldElement":
        return self.element(1)

    @cached_property
    def gen(self) -> "FieldElement":
        """Class of x modulo the defining polynomial."""
        if self.m == 1:
            return self.element(-self.irreducible[0])
        return self.element([0, 1] + [0] * (self.m - 2))

    def elements(self) -> Iterator["FieldElement"]:
        """All q elements in canonical (index) order."""
        for idx in range(self.q):
            yield self.from_index(idx)

    def nonzero(self) -> Iterator["FieldElement"]:
        for idx in range(1, self.q):
            yield self.from_index(idx)

    def describe(self) -> str:
        coeffs = ",".join(str(c) for c in self.irreducible)
        return f"GF({self.p}^{self.m}; irreducible={coeffs})"

    def parse(self, text: str) -> "FieldElement":
        return parse_field_element(self, text)


def make_field(p: int, m: int, s: int, irreducible: Sequence[int] | None = None) -> FieldParams:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        raise EvenPrime("p = 2 is not supported; p must be an odd prime")
    if m < 1 or s < 1:
        raise ValueError("m and s must be positive")
    if irreducible is None:
        poly = smallest_irreducible(p, m)
    else:
        poly = tuple(int(c) % p for c in irreducible)
        if len(poly) != m + 1 or poly[-1] != 1:
            raise ReduciblePolynomial(f"defining polynomial must be monic of degree {m}")
        if not is_irreducible(poly, p):
            raise ReduciblePolynomial(f"{list(poly)} is reducible over F_{p}")
    return FieldParams(p, m, s, poly)


@dataclass(frozen=True)
class FieldElement:
    field: FieldParams
    coeffs: tuple[int, ...]

    @property
    def index(self) -> int:
        p = self.field.p
        return sum(c * p**i for i, c in enumerate(self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __add__(self, other: "FieldElement") -> "FieldElement":
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        p = self.field.p
        return FieldElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FieldElement":
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other: "FieldElement | int") -> "FieldElement":
        F = self.field
        p, m = F.p, F.m
        if isinstance(other, int):
            return FieldElement(F, tuple((a * other) % p for a in self.coeffs))
        if m == 1:
            return FieldElement(F, ((self.coeffs[0] * other.coeffs[0]) % p,))
        prod = [0] * (2 * m - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        f = F.irreducible
        for top in range(2 * m - 2, m - 1, -1):
            c = prod[top] % p
            if c:
                for i in range(m + 1):
                    prod[top - m + i] -= c * f[i]
        return FieldElement(F, tuple(c % p for c in prod[:m]))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "FieldElement":
        F = self.field
        if e < 0:
            return self.inverse() ** (-e)
        if not self:
            return F.one if e == 0 else F.zero
        e %= F.q - 1
        result, base = F.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if not self:
            raise DivisionByZero("zero has no inverse")
        return self ** (self.field.q - 2)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def __str__(self) -> str:
        return format_field_element(self)

    def __repr__(self) -> str:
        return f"FieldElement({self})"


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def field_neg(a: FieldElement) -> FieldElement:
    return -a


def field_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def field_pow(a: FieldElement, e: int) -> FieldElement:
    return a**e


def is_qr(a: FieldElement) -> bool:
    """Euler's criterion in GF(q)."""
    if not a:
        raise ZeroInput("quadratic character of 0 is undefined")
    return a ** ((a.field.q - 1) // 2) == a.field.one


def alpha0_root(alpha1: FieldElement) -> FieldElement:
    """The unique alpha0 with alpha0^(p^s) = alpha1.

    Writing s = q0*m + r0, the root is alpha1^(p^(m - r0)).
    """
    if not alpha1:
        raise ZeroInput("alpha1 must be nonzero")
    F = alpha1.field
    r0 = F.s % F.m
    alpha0 = alpha1 ** (F.p ** (F.m - r0))
    assert alpha0 ** (F.p**F.s) == alpha1
    return alpha0


def sqrt_field(a: FieldElement) -> FieldElement:
    """Canonical square root: of the two roots, the one with the smaller first nonzero coordinate."""
    F = a.field
    if not a:
        return F.zero
    for r in F.elements():
        if r * r == a:
            neg = -r
            first = next(i for i, c in enumerate(r.coeffs) if c)
            return r if r.coeffs[first] <= neg.coeffs[first] else neg
    raise NotASquare(f"{a} is not a square in {F.describe()}")


def format_field_element(a: FieldElement) -> str:
    terms = []
    for i in range(len(a.coeffs) - 1, -1, -1):
        c = a.coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = "g" if i == 1 else f"g^{i}"
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) if terms else "0"


_FIELD_TERM = re.compile(r"^(\d*)\s*\*?\s*(g(?:\^(\d+))?)?$")


def parse_field_element(F: FieldParams, text: str) -> FieldElement:
    """Parse a polynomial in g such as ``2g+1``, ``g^2-1`` or ``(g+1)``."""
    src = text.strip()
    while src.startswith("(") and src.endswith(")"):
        src = src[1:-1].strip()
    if not src:
        raise ParseError(f"empty field literal in {text!r}")
    coeffs = [0] * max(F.m, 1)
    for sign, body in re.findall(r"([+-]?)\s*([^+-]+)", src):
        body = body.strip()
        mt = _FIELD_TERM.match(body)
        if not mt or (not mt.group(1) and not mt.group(2)):
            raise ParseError(f"cannot parse field term {body!r} in {text!r}")
        c = int(mt.group(1)) if mt.group(1) else 1
        if mt.group(2):
            deg = int(mt.group(3)) if mt.group(3) else 1
        else:
            deg = 0
        if sign == "-":
            c = -c
        if deg >= F.m:
            # reduce g^deg via the defining polynomial
            term = F.gen**deg * c
            coeffs = [x + y for x, y in zip(coeffs, term.coeffs)]
        else:
            coeffs[deg] += c
    return F.element(coeffs)
