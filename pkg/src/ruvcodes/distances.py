"""Closed-form Hamming and symbol-pair distances.

Every nontrivial ideal reduces to a key nu (ell for Type B, the torsion
exponent for Type C, mu for Type D).  Keys up to p^s give distance 1
(pair distance 2); keys in (p^s, 2p^s) fall into a (Gamma, gamma) range with
distance (Gamma+1) p^gamma, doubled for symbol pairs.

The ranges use the lower bound 2p^s - p^(s-gamma) + (Gamma-1) p^(s-gamma-1) + 1.
Some printed statements carry (Gamma+1) there, which leaves every range empty.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import OutOfRange
from .ideals import CodeReport, IdealSpec, count_exponent, im_value
from .ring4 import UnitFamily


@dataclass(frozen=True)
class Bucket:
    kind: str  # "unit", "ranged" or "zero"
    Gamma: Optional[int] = None
    gamma: Optional[int] = None

    def hamming(self, p: int) -> int:
        if self.kind == "unit":
            return 1
        if self.kind == "zero":
            return 0
        return (self.Gamma + 1) * p**self.gamma

    def pair(self, p: int) -> int:
        return 2 * self.hamming(p)

    def label(self) -> str:
        if self.kind == "ranged":
            return f"ranged(Gamma={self.Gamma},gamma={self.gamma})"
        return self.kind


def range_bounds(Gamma: int, gamma: int, p: int, s: int) -> tuple[int, int]:
    base = 2 * p**s - p ** (s - gamma)
    step = p ** (s - gamma - 1)
    return base + (Gamma - 1) * step + 1, base + Gamma * step


def bucket_2ps(nu: int, p: int, s: int) -> Bucket:
    ps = p**s
    if not 0 <= nu <= 2 * ps:
        raise OutOfRange(f"key {nu} outside [0, {2 * ps}]")
    if nu <= ps:
        return Bucket("unit")
    if nu == 2 * ps:
        return Bucket("zero")
    for gamma in range(s):
        for Gamma in range(1, p):
            lo, hi = range_bounds(Gamma, gamma, p, s)
            if lo <= nu <= hi:
                return Bucket("ranged", Gamma, gamma)
    raise AssertionError(f"no range contains {nu}")  # ranges tile (p^s, 2p^s)


def distance_key(spec: IdealSpec, family: UnitFamily, ps: int) -> int:
    if spec.tag == "B":
        return spec.ell
    if spec.tag == "C":
        return im_value(spec, family, ps)
    if spec.tag == "D":
        return spec.mu
    raise ValueError(f"no distance key for Type {spec.tag}")


def d_hamming(spec: IdealSpec, family: UnitFamily, p: int, s: int) -> int:
    if spec.tag == "A0":
        return 0
    if spec.tag == "A1":
        return 1
    return bucket_2ps(distance_key(spec, family, p**s), p, s).hamming(p)


def d_symbol_pair(spec: IdealSpec, family: UnitFamily, p: int, s: int) -> int:
    if spec.tag == "A0":
        return 0
    if spec.tag == "A1":
        return 2
    return bucket_2ps(distance_key(spec, family, p**s), p, s).pair(p)


def _base_bucket(ell: int, p: int, s: int) -> Bucket:
    ps = p**s
    if not 0 <= ell <= ps:
        raise OutOfRange(f"ell = {ell} outside [0, {ps}]")
    if ell == 0:
        return Bucket("unit")
    # same ranges, shifted down by p^s
    return bucket_2ps(ell + ps, p, s)


def d_hamming_base(ell: int, p: int, m: int, s: int) -> int:
    """Distance of <(x^2 - alpha0)^ell> in F_{p^m}[x]/(x^(2p^s) - alpha), alpha a non-square."""
    return _base_bucket(ell, p, s).hamming(p)


def d_symbol_pair_base(ell: int, p: int, m: int, s: int) -> int:
    return _base_bucket(ell, p, s).pair(p)


def formula_report(spec: IdealSpec, family: UnitFamily, p: int, m: int, s: int) -> CodeReport:
    """Count exponent, torsion exponent and both distances, with the branch used for each."""
    ps = p**s
    fam = family.formula_family
    eta = count_exponent(spec, family, ps, m)
    prov = [f"count:{fam.value}/{_count_branch(spec, fam, ps)}"]
    im = None
    if spec.tag in ("C", "D"):
        im = im_value(spec, family, ps)
        prov.append(f"torsion:{fam.value}/{_im_branch(spec, fam, ps)}")
    if spec.tag in ("A0", "A1"):
        prov.append(f"distance:trivial-{spec.tag}")
    else:
        key_name = {"B": "ell", "C": "torsion", "D": "mu"}[spec.tag]
        bucket = bucket_2ps(distance_key(spec, family, ps), p, s)
        prov.append(f"distance:type{spec.tag}/key={key_name}/{bucket.label()}")
    return CodeReport(eta, d_hamming(spec, family, p, s), d_symbol_pair(spec, family, p, s), im, prov)


def _count_branch(spec: IdealSpec, fam: UnitFamily, ps: int) -> str:
    if spec.tag in ("A0", "A1", "B", "D"):
        return spec.tag
    ell, t = spec.ell, spec.t
    if not spec.has_z:
        if fam is UnitFamily.CASE_FULL and ell > ps:
            return "C,z=0,ell>ps"
        return "C,z=0,ell<=ps" if fam is UnitFamily.CASE_FULL else "C,z=0"
    if ell == ps + t:
        return "C,z unit,ell=ps+t"
    if fam is UnitFamily.CASE_FULL:
        if ell <= ps:
            return "C,z unit,ell<=ps"
        return "C,z unit,ps<ell<ps+t" if ell < ps + t else "C,z unit,ell>ps+t"
    return "C,z unit,2ell<=2ps+t" if 2 * ell <= 2 * ps + t else "C,z unit,2ell>2ps+t"


def _im_branch(spec: IdealSpec, fam: UnitFamily, ps: int) -> str:
    if not spec.has_z:
        return "z=0"
    if fam is UnitFamily.CASE_FULL and spec.ell == ps + spec.t:
        return "z unit,ell=ps+t"
    return "z unit"
