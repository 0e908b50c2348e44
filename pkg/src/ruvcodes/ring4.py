"""The local ring F + uF + vF + uvF with u^2 = v^2 = 0 and uv = vu."""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import NotASquare, NotAUnit, ParseError
from .gf import FieldElement, FieldParams, is_qr, parse_field_element, sqrt_field


class UnitFamily(str, enum.Enum):
    SQUARE = "Square"
    CASE_FULL = "CaseFull"
    CASE_NO_U = "CaseNoU"
    CASE_NO_V_SWAPPED = "CaseNoV-swapped"
    UNCOVERED = "Uncovered"

    @property
    def covered(self) -> bool:
        return self in (UnitFamily.CASE_FULL, UnitFamily.CASE_NO_U, UnitFamily.CASE_NO_V_SWAPPED)

    @property
    def formula_family(self) -> "UnitFamily":
        """Family whose formulas apply; the v-free case reuses the u-free one."""
        return UnitFamily.CASE_NO_U if self is UnitFamily.CASE_NO_V_SWAPPED else self


@dataclass(frozen=True)
class RingElement:
    a1: FieldElement
    a2: FieldElement
    a3: FieldElement
    a4: FieldElement

    @classmethod
    def scalar(cls, a: FieldElement) -> "RingElement":
        z = a.field.zero
        return cls(a, z, z, z)

    @classmethod
    def basis(cls, F: FieldParams, which: str, coeff: FieldElement | None = None) -> "RingElement":
        """``coeff`` times one of the monomials '1', 'u', 'v', 'uv'."""
        c = F.one if coeff is None else coeff
        z = F.zero
        slots = {"1": 0, "u": 1, "v": 2, "uv": 3}[which]
        vals = [z, z, z, z]
        vals[slots] = c
        return cls(*vals)

    @property
    def field(self) -> FieldParams:
        return self.a1.field

    @property
    def coords(self) -> tuple[FieldElement, FieldElement, FieldElement, FieldElement]:
        return (self.a1, self.a2, self.a3, self.a4)

    def __bool__(self) -> bool:
        return bool(self.a1 or self.a2 or self.a3 or self.a4)

    def __add__(self, o: "RingElement") -> "RingElement":
        return RingElement(self.a1 + o.a1, self.a2 + o.a2, self.a3 + o.a3, self.a4 + o.a4)

    def __sub__(self, o: "RingElement") -> "RingElement":
        return RingElement(self.a1 - o.a1, self.a2 - o.a2, self.a3 - o.a3, self.a4 - o.a4)

    def __neg__(self) -> "RingElement":
        return RingElement(-self.a1, -self.a2, -self.a3, -self.a4)

    def __mul__(self, o: "RingElement | FieldElement") -> "RingElement":
        if isinstance(o, FieldElement):
            return RingElement(self.a1 * o, self.a2 * o, self.a3 * o, self.a4 * o)
        a1, a2, a3, a4 = self.a1, self.a2, self.a3, self.a4
        b1, b2, b3, b4 = o.a1, o.a2, o.a3, o.a4
        return RingElement(
            a1 * b1,
            a1 * b2 + a2 * b1,
            a1 * b3 + a3 * b1,
            a1 * b4 + a4 * b1 + a2 * b3 + a3 * b2,
        )

    def __pow__(self, e: int) -> "RingElement":
        result = RingElement.scalar(self.field.one)
        for _ in range(e):
            result = result * self
        return result

    def __str__(self) -> str:
        return format_ring_element(self)

    def __repr__(self) -> str:
        return f"RingElement({self})"


def ring_add(x: RingElement, y: RingElement) -> RingElement:
    return x + y


def ring_mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


def ring_neg(x: RingElement) -> RingElement:
    return -x


def is_unit(x: RingElement) -> bool:
    return bool(x.a1)


def is_square_unit(x: RingElement) -> bool:
    # For odd p every unit with a square leading part has a root (see sqrt_unit).
    if not is_unit(x):
        raise NotAUnit(f"{x} is not a unit")
    return is_qr(x.a1)


def sqrt_unit(x: RingElement) -> RingElement:
    """gamma with gamma^2 = x, solved triangularly from the canonical root of a1."""
    if not is_square_unit(x):
        raise NotASquare(f"{x} is not a square")
    g1 = sqrt_field(x.a1)
    inv2g1 = (g1 * 2).inverse()
    g2 = x.a2 * inv2g1
    g3 = x.a3 * inv2g1
    g4 = (x.a4 - g2 * g3 * 2) * inv2g1
    gamma = RingElement(g1, g2, g3, g4)
    assert gamma * gamma == x
    return gamma


def swap_uv(x: RingElement) -> RingElement:
    """The automorphism exchanging u and v."""
    return RingElement(x.a1, x.a3, x.a2, x.a4)


def classify_unit(x: RingElement) -> UnitFamily:
    if is_square_unit(x):
        return UnitFamily.SQUARE
    if x.a2 and x.a3:
        return UnitFamily.CASE_FULL
    if not x.a2 and x.a3 and x.a4:
        return UnitFamily.CASE_NO_U
    if not x.a3 and x.a2 and x.a4:
        return UnitFamily.CASE_NO_V_SWAPPED
    return UnitFamily.UNCOVERED


def format_ring_element(x: RingElement) -> str:
    m = x.field.m
    parts = []
    for coeff, mono in zip(x.coords, ("", "u", "v", "uv")):
        if not coeff:
            continue
        c = str(coeff)
        if m > 1 and "+" in c:
            c = f"({c})"
        if mono and c == "1":
            parts.append(mono)
        elif mono:
            parts.append(f"{c}{mono}" if c.isdigit() or c.startswith("(") else f"{c} {mono}")
        else:
            parts.append(c)
    return "+".join(parts) if parts else "0"


def _split_top_level(src: str) -> list[tuple[str, str]]:
    out, depth, cur, sign = [], 0, "", "+"
    for ch in src:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-":
            if cur.strip():
                out.append((sign, cur.strip()))
            elif ch == "-" and not out:
                pass
            sign, cur = ch, ""
            continue
        cur += ch
    if depth != 0:
        raise ParseError(f"unbalanced parentheses in {src!r}")
    if cur.strip():
        out.append((sign, cur.strip()))
    return out


_MONO = re.compile(r"^(.*?)\s*\*?\s*(uv|vu|u|v)$")


def parse_ring_element(F: FieldParams, text: str) -> RingElement:
    """Parse sums like ``2+v+uv`` or ``(g+1)+2u+g v+uv``."""
    src = text.strip()
    if not src:
        raise ParseError("empty ring literal")
    acc = [F.zero] * 4
    slot = {"": 0, "u": 1, "v": 2, "uv": 3, "vu": 3}
    for sign, term in _split_top_level(src):
        mt = _MONO.match(term)
        if mt and not mt.group(1).endswith("g^"):
            coeff_txt, mono = mt.group(1).strip(), mt.group(2)
        else:
            coeff_txt, mono = term, ""
        try:
            c = parse_field_element(F, coeff_txt) if coeff_txt else F.one
        except ParseError as exc:
            raise ParseError(f"cannot parse term {term!r} of {text!r}") from exc
        if sign == "-":
            c = -c
        acc[slot[mono]] = acc[slot[mono]] + c
    return RingElement(*acc)
