"""Ideal shapes of R[x]/(x^(2p^s) - alpha) for non-square alpha, with counts and torsion exponents."""
from __future__ import annotations

import random
import re
from dataclasses import dataclass, field, replace
from typing import Iterator, Optional

from .errors import BoundViolation, NotAUnitForm, ParseError, UncoveredFamily
from .gf import FieldElement, FieldParams, parse_field_element
from .quotient import AmbientParams, QuotPoly, to_adic
from .ring4 import RingElement, UnitFamily, _split_top_level, sqrt_unit

TAGS = ("A0", "A1", "B", "C", "D")

ZPair = tuple[FieldElement, FieldElement]


@dataclass(frozen=True)
class IdealSpec:
    """One ideal: tag plus (ell, t, mu) and the adic coefficients of z.

    ``z`` holds pairs (z0k, z1k) meaning sum_k (z0k x + z1k)(x^2 - alpha0)^k;
    an empty tuple means z = 0.
    """

    tag: str
    ell: int = 0
    t: int = 0
    mu: int = 0
    z: tuple[ZPair, ...] = ()

    @property
    def has_z(self) -> bool:
        return any(a or b for a, b in self.z)

    @property
    def key(self) -> tuple:
        zkey = tuple((a.index, b.index) for a, b in self.z) if self.has_z else ()
        return (TAGS.index(self.tag), self.has_z, self.ell, self.t if self.has_z else 0, self.mu, zkey)


@dataclass
class CodeReport:
    eta_exponent: int
    d_h: int
    d_sp: int
    im: Optional[int] = None
    provenance: list[str] = field(default_factory=list)


def unit_z(F: FieldParams) -> tuple[ZPair, ...]:
    """The representative z = 1."""
    return ((F.zero, F.one),)


def _family(family: UnitFamily) -> UnitFamily:
    if not family.covered:
        raise UncoveredFamily(f"no ideal classification for family {family.value}")
    return family.formula_family


def _z_degree(spec: IdealSpec) -> int:
    """Largest k with a nonzero pair, or -1 for z = 0."""
    deg = -1
    for k, (a, b) in enumerate(spec.z):
        if a or b:
            deg = k
    return deg


def im_value(spec: IdealSpec, family: UnitFamily, ps: int) -> int:
    """Smallest N with u(x^2 - alpha0)^N in the principal part of the ideal."""
    fam = _family(family)
    if spec.tag not in ("C", "D"):
        raise ValueError(f"torsion exponent is defined for Types C and D, not {spec.tag}")
    ell, t = spec.ell, spec.t
    if fam is UnitFamily.CASE_FULL:
        if not spec.has_z:
            return min(ell, ps)
        if ell == ps + t:
            return ps
        return min(ell, ps, 2 * ps - ell + t)
    if not spec.has_z:
        return ell
    return min(ell, 2 * ps + t - ell)


def validate_spec(spec: IdealSpec, family: UnitFamily, ps: int) -> IdealSpec:
    _family(family)
    top = 2 * ps - 1
    if spec.tag not in TAGS:
        raise BoundViolation("tag in A0,A1,B,C,D", spec.tag)
    if spec.tag in ("A0", "A1"):
        return spec
    if not 0 <= spec.ell <= top:
        raise BoundViolation(f"0 <= ell <= {top}", spec.ell)
    if spec.tag == "B":
        return spec
    if spec.has_z:
        a0, b0 = spec.z[0]
        if not (a0 or b0):
            raise NotAUnitForm("z00 x + z10 must be nonzero")
        if len(spec.z) > ps:
            raise BoundViolation(f"z uses at most {ps} adic terms", len(spec.z))
        if spec.ell < 1:
            raise BoundViolation("ell >= 1 when z != 0", spec.ell)
        if not 0 <= spec.t < spec.ell:
            raise BoundViolation("0 <= t < ell", spec.t)
    elif spec.tag == "C" and spec.t >= spec.ell and spec.t != 0:
        raise BoundViolation("0 <= t < ell", spec.t)
    if spec.tag == "D":
        im = im_value(spec, family, ps)
        if not 0 <= spec.mu < im:
            raise BoundViolation(f"0 <= mu < Im = {im}", spec.mu)
        if spec.has_z:
            # the unit part k = 0 is always kept; higher terms are absorbed by u(x^2-alpha0)^mu
            limit = max(0, spec.mu - spec.t - 1)
            if _z_degree(spec) > limit:
                raise BoundViolation(f"deg z <= max(0, mu - t - 1) = {limit}", _z_degree(spec))
    return spec


def count_exponent(spec: IdealSpec, family: UnitFamily, ps: int, m: int) -> int:
    """Exponent e with |C| = p^e."""
    fam = _family(family)
    if spec.tag == "A0":
        return 0
    if spec.tag == "A1":
        return 8 * m * ps
    ell = spec.ell
    if spec.tag == "B":
        return 2 * m * (2 * ps - ell)
    if spec.tag == "D":
        return 2 * m * (4 * ps - ell - spec.mu)
    t = spec.t
    if fam is UnitFamily.CASE_FULL:
        if not spec.has_z:
            return 4 * m * (2 * ps - ell) if ell <= ps else 2 * m * (3 * ps - ell)
        if ell == ps + t:
            return 2 * m * (2 * ps - t)
        if ell <= ps:
            return 4 * m * (2 * ps - ell)
        if ell < ps + t:
            return 2 * m * (3 * ps - ell)
        return 2 * m * (2 * ps - t)
    if not spec.has_z:
        return 4 * m * (2 * ps - ell)
    if ell == ps + t:
        return 2 * m * (2 * ps - t)
    if 2 * ell <= 2 * ps + t:
        return 4 * m * (2 * ps - ell)
    return 2 * m * (2 * ps - t)


def z_poly(spec: IdealSpec, params: AmbientParams) -> QuotPoly:
    acc = params.zero
    ypow = params.one
    for a, b in spec.z:
        lin = params.x.scale(a) + params.one.scale(b)
        acc = acc + lin * ypow
        ypow = ypow * params.y
    return acc


def generators(spec: IdealSpec, params: AmbientParams) -> list[QuotPoly]:
    tors = params.torsion_unit
    y = params.y
    if spec.tag == "A0":
        return [params.zero]
    if spec.tag == "A1":
        return [params.one]
    if spec.tag == "B":
        return [(y**spec.ell).scale(tors)]
    main = y**spec.ell
    if spec.has_z:
        main = main + ((y**spec.t) * z_poly(spec, params)).scale(tors)
    if spec.tag == "C":
        return [main]
    return [main, (y**spec.mu).scale(tors)]


def random_unit_z(F: FieldParams, length: int, rng: random.Random) -> tuple[ZPair, ...]:
    """A random z with nonzero unit part and ``length`` adic terms."""
    while True:
        pairs = tuple(
            (F.from_index(rng.randrange(F.q)), F.from_index(rng.randrange(F.q))) for _ in range(length)
        )
        if pairs[0][0] or pairs[0][1]:
            return pairs


def enumerate_specs(
    params: AmbientParams,
    z_policy: str = "representative",
    samples: int = 1,
    seed: int = 0,
) -> Iterator[IdealSpec]:
    """Every Type A/B shape, then Types C and D, ordered by (type, z, ell, t, mu).

    ``z_policy`` is one of 'zero-only', 'representative' (z = 1) or 'random'
    (``samples`` random units per (ell, t) cell, reproducible from ``seed``).
    """
    family = params.family
    ps = params.ps
    F = params.field
    if z_policy not in ("zero-only", "representative", "random"):
        raise ValueError(f"unknown z policy {z_policy!r}")
    rng = random.Random(seed)

    yield IdealSpec("A0")
    yield IdealSpec("A1")
    for ell in range(2 * ps):
        yield IdealSpec("B", ell)
    if not family.covered:
        return

    def z_choices(limit: int) -> list[tuple[ZPair, ...]]:
        if z_policy == "representative":
            return [unit_z(F)]
        return [random_unit_z(F, limit, rng) for _ in range(samples)]

    for ell in range(1, 2 * ps):
        yield IdealSpec("C", ell)
    if z_policy != "zero-only":
        for ell in range(1, 2 * ps):
            for t in range(ell):
                for z in z_choices(ps):
                    yield IdealSpec("C", ell, t, 0, z)
    for ell in range(1, 2 * ps):
        im = im_value(IdealSpec("C", ell), family, ps)
        for mu in range(im):
            yield IdealSpec("D", ell, 0, mu)
    if z_policy != "zero-only":
        for ell in range(1, 2 * ps):
            for t in range(ell):
                im = im_value(IdealSpec("C", ell, t, 0, unit_z(F)), family, ps)
                for mu in range(im):
                    for z in z_choices(max(1, mu - t)):
                        yield IdealSpec("D", ell, t, mu, z)


@dataclass(frozen=True)
class SquareDecomposition:
    gamma: RingElement
    minus_gamma: RingElement
    length: int


def square_decomposition(params: AmbientParams) -> SquareDecomposition:
    """For square alpha = gamma^2 the ambient ring splits into gamma- and (-gamma)-constacyclic parts of length p^s."""
    gamma = sqrt_unit(params.alpha)
    return SquareDecomposition(gamma, -gamma, params.ps)


def with_z(spec: IdealSpec, z: tuple[ZPair, ...]) -> IdealSpec:
    return replace(spec, z=z)


_XTERM = re.compile(r"^(.*?)\s*\*?\s*x(?:\^(\d+))?$")


def parse_z(text: str, params: AmbientParams) -> tuple[ZPair, ...]:
    """Read z as a polynomial in x over the base field (``1``, ``x+2``, ``(g+1)x^2``) and return its adic pairs."""
    F = params.field
    coeffs = [F.zero] * params.n
    src = text.strip()
    if not src:
        raise ParseError("empty z literal")
    for sign, term in _split_top_level(src):
        mt = _XTERM.match(term)
        ctext, deg = (mt.group(1).strip(), int(mt.group(2) or 1)) if mt else (term, 0)
        c = parse_field_element(F, ctext) if ctext else F.one
        if deg >= params.n:
            raise BoundViolation(f"deg z < {params.n}", deg)
        coeffs[deg] = coeffs[deg] + (-c if sign == "-" else c)
    form = to_adic(QuotPoly(params, tuple(RingElement.scalar(c) for c in coeffs)))
    pairs = [(a.a1, b.a1) for a, b in form.pairs]
    while pairs and not (pairs[-1][0] or pairs[-1][1]):
        pairs.pop()
    return tuple(pairs)
