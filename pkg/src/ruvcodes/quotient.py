"""Polynomials over R modulo x^(2p^s) - alpha, and the (x^2 - alpha0)-adic basis."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import NotAUnit, UncoveredFamily
from .gf import FieldElement, FieldParams, alpha0_root
from .ring4 import RingElement, UnitFamily, classify_unit, format_ring_element, is_unit


@dataclass(frozen=True)
class AmbientParams:
    field: FieldParams
    alpha: RingElement
    n: int
    alpha0: FieldElement

    @cached_property
    def family(self) -> UnitFamily:
        return classify_unit(self.alpha)

    @property
    def ps(self) -> int:
        return self.field.ps

    @cached_property
    def torsion_unit(self) -> RingElement:
        """The nilpotent playing the role of u in the ideal shapes (v after the u<->v swap)."""
        which = "v" if self.family is UnitFamily.CASE_NO_V_SWAPPED else "u"
        return RingElement.basis(self.field, which)

    @cached_property
    def zero(self) -> "QuotPoly":
        return QuotPoly(self, (RingElement.scalar(self.field.zero),) * self.n)

    @cached_property
    def one(self) -> "QuotPoly":
        return self.constant(RingElement.scalar(self.field.one))

    @cached_property
    def x(self) -> "QuotPoly":
        return self.monomial(1)

    @cached_property
    def y(self) -> "QuotPoly":
        """x^2 - alpha0."""
        z = RingElement.scalar(self.field.zero)
        coeffs = [z] * self.n
        coeffs[0] = RingElement.scalar(-self.alpha0)
        coeffs[2] = RingElement.scalar(self.field.one)
        return QuotPoly(self, tuple(coeffs))

    def constant(self, c: RingElement) -> "QuotPoly":
        z = RingElement.scalar(self.field.zero)
        return QuotPoly(self, (c,) + (z,) * (self.n - 1))

    def monomial(self, k: int, c: RingElement | None = None) -> "QuotPoly":
        coeff = RingElement.scalar(self.field.one) if c is None else c
        return self.constant(coeff).shift(k)

    def y_power(self, k: int) -> "QuotPoly":
        return self.y**k

    def poly(self, coeffs: Sequence[RingElement]) -> "QuotPoly":
        """Reduce an arbitrary-length coefficient list modulo x^n - alpha."""
        out = list(self.zero.coeffs)
        for i, c in enumerate(coeffs):
            k, r = divmod(i, self.n)
            out[r] = out[r] + c * (self.alpha**k)
        return QuotPoly(self, tuple(out))


def make_ambient(field: FieldParams, alpha: RingElement) -> AmbientParams:
    if not is_unit(alpha):
        raise NotAUnit(f"{alpha} is not a unit")
    return AmbientParams(field, alpha, 2 * field.ps, alpha0_root(alpha.a1))


@dataclass(frozen=True)
class QuotPoly:
    params: AmbientParams
    coeffs: tuple[RingElement, ...]

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __add__(self, o: "QuotPoly") -> "QuotPoly":
        return QuotPoly(self.params, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    def __sub__(self, o: "QuotPoly") -> "QuotPoly":
        return QuotPoly(self.params, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __neg__(self) -> "QuotPoly":
        return QuotPoly(self.params, tuple(-a for a in self.coeffs))

    def scale(self, c: RingElement | FieldElement) -> "QuotPoly":
        if isinstance(c, FieldElement):
            c = RingElement.scalar(c)
        return QuotPoly(self.params, tuple(c * a for a in self.coeffs))

    def __mul__(self, o: "QuotPoly") -> "QuotPoly":
        n = self.params.n
        alpha = self.params.alpha
        zero = RingElement.scalar(self.params.field.zero)
        low = [zero] * n
        high = [zero] * n
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if not b:
                    continue
                k = i + j
                if k < n:
                    low[k] = low[k] + a * b
                else:
                    high[k - n] = high[k - n] + a * b
        return QuotPoly(self.params, tuple(lo + alpha * hi for lo, hi in zip(low, high)))

    def __pow__(self, e: int) -> "QuotPoly":
        result, base = self.params.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int = 1) -> "QuotPoly":
        """Multiply by x^k, i.e. apply the alpha-constacyclic shift k times."""
        c = list(self.coeffs)
        alpha = self.params.alpha
        for _ in range(k):
            c = [alpha * c[-1]] + c[:-1]
        return QuotPoly(self.params, tuple(c))

    def __str__(self) -> str:
        return format_poly(self)


def qp_add(f: QuotPoly, g: QuotPoly) -> QuotPoly:
    return f + g


def qp_scale(f: QuotPoly, c: RingElement | FieldElement) -> QuotPoly:
    return f.scale(c)


def qp_mul(f: QuotPoly, g: QuotPoly) -> QuotPoly:
    return f * g


@dataclass(frozen=True)
class AdicForm:
    """Pairs (a_k, b_k) standing for sum_k (a_k x + b_k)(x^2 - alpha0)^k, k < p^s."""

    params: AmbientParams
    pairs: tuple[tuple[RingElement, RingElement], ...]


def _taylor_shift(coeffs: list[RingElement], alpha0: FieldElement) -> list[RingElement]:
    """Coefficients of c(X) in powers of (X - alpha0), by repeated synthetic division."""
    rem = list(coeffs)
    out = []
    while rem:
        # divide rem by (X - alpha0): quotient q, remainder r = rem(alpha0)
        q = [None] * (len(rem) - 1)
        acc = rem[-1]
        for i in range(len(rem) - 2, -1, -1):
            q[i] = acc
            acc = rem[i] + acc * alpha0
        out.append(acc)
        rem = q
    return out


def _inverse_taylor(coeffs: list[RingElement], alpha0: FieldElement, zero: RingElement) -> list[RingElement]:
    """Expand sum_k c_k (X - alpha0)^k back to powers of X (Horner)."""
    result: list[RingElement] = []
    for c in reversed(coeffs):
        # result = result * (X - alpha0) + c
        nxt = [zero] * (len(result) + 1)
        for i, r in enumerate(result):
            nxt[i + 1] = nxt[i + 1] + r
            nxt[i] = nxt[i] - r * alpha0
        nxt[0] = nxt[0] + c
        result = nxt
    return result


def to_adic(f: QuotPoly) -> AdicForm:
    P = f.params
    even = list(f.coeffs[0::2])
    odd = list(f.coeffs[1::2])
    b = _taylor_shift(even, P.alpha0)
    a = _taylor_shift(odd, P.alpha0)
    return AdicForm(P, tuple(zip(a, b)))


def from_adic(form: AdicForm) -> QuotPoly:
    P = form.params
    zero = RingElement.scalar(P.field.zero)
    a = [pa for pa, _ in form.pairs]
    b = [pb for _, pb in form.pairs]
    odd = _inverse_taylor(a, P.alpha0, zero)
    even = _inverse_taylor(b, P.alpha0, zero)
    coeffs = [zero] * P.n
    for i, c in enumerate(even[: P.ps]):
        coeffs[2 * i] = c
    for i, c in enumerate(odd[: P.ps]):
        coeffs[2 * i + 1] = c
    return QuotPoly(P, tuple(coeffs))


def nilpotency_index(params: AmbientParams) -> int:
    """Least N with (x^2 - alpha0)^N = 0, found by direct powering."""
    if not params.family.covered:
        raise UncoveredFamily(f"{params.alpha} is in family {params.family.value}")
    power = params.one
    for k in range(1, 4 * params.ps + 1):
        power = power * params.y
        if not power:
            return k
    raise AssertionError("x^2 - alpha0 is not nilpotent")  # unreachable for units of R


def format_poly(f: QuotPoly) -> str:
    terms = []
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        cs = format_ring_element(c)
        if "+" in cs and i > 0:
            cs = f"({cs})"
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if not mono:
            terms.append(cs)
        elif cs == "1":
            terms.append(mono)
        else:
            terms.append(f"{cs}{mono}" if cs[0].isdigit() or cs[0] == "(" else f"{cs} {mono}")
    return "+".join(terms) if terms else "0"


def format_adic(form: AdicForm) -> str:
    a0 = str(form.params.alpha0)
    terms = []
    for k, (a, b) in enumerate(form.pairs):
        if not a and not b:
            continue
        inner = []
        if a:
            s = format_ring_element(a)
            inner.append("x" if s == "1" else f"({s})x")
        if b:
            inner.append(format_ring_element(b))
        lin = "+".join(inner)
        if k == 0:
            terms.append(f"({lin})")
        else:
            ypow = f"(x^2-{a0})" if k == 1 else f"(x^2-{a0})^{k}"
            terms.append(f"({lin}){ypow}")
    return "+".join(terms) if terms else "0"
