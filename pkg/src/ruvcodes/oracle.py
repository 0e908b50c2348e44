"""Brute-force ground truth for ideals viewed as F_p-linear codes.

A word of length n over R is stored as an F_p vector of length 4mn: position i
owns the 4m columns [4mi, 4m(i+1)), ordered (1, u, v, uv) with m field
coordinates each.  Base-field codes use the same layout with block size m.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import BudgetExceeded, CapExceeded
from .gf import FieldElement, FieldParams
from .ideals import IdealSpec, generators
from .quotient import AmbientParams, QuotPoly, make_ambient
from .ring4 import RingElement, UnitFamily

DEFAULT_CAP = 5_000_000
DEFAULT_NODE_LIMIT = 2_000_000
_LOW_TABLE_ROWS = 1 << 17


def rref(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p; returns the nonzero rows and pivot columns."""
    A = np.array(M, dtype=np.int64) % p
    if A.ndim != 2 or A.size == 0:
        return A.reshape(0, A.shape[-1] if A.ndim == 2 else 0), []
    nrows, ncols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = (A[r] * pow(int(A[r, c]), p - 2, p)) % p
        col = A[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            A[hit] = (A[hit] - np.outer(col[hit], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank_mod_p(M: np.ndarray, p: int) -> int:
    return len(rref(M, p)[1])


def nullspace(M: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning {x : M x = 0} over F_p."""
    ncols = M.shape[1]
    R, pivots = rref(M, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    out = np.zeros((len(free), ncols), dtype=np.int64)
    for i, f in enumerate(free):
        out[i, f] = 1
        for r, pc in enumerate(pivots):
            out[i, pc] = (-R[r, f]) % p
    return out


@dataclass
class LinearCode:
    """Row-reduced generator matrix of an F_p-linear code with n blocks of width ``block``."""

    p: int
    n: int
    block: int
    rows: np.ndarray
    pivots: list[int] = field(default_factory=list)

    @classmethod
    def from_spanning(cls, vectors: np.ndarray, p: int, n: int, block: int) -> "LinearCode":
        R, piv = rref(vectors, p) if len(vectors) else (np.zeros((0, n * block), dtype=np.int64), [])
        return cls(p, n, block, R, piv)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def length(self) -> int:
        return self.n * self.block

    def contains(self, vec: np.ndarray) -> bool:
        v = np.array(vec, dtype=np.int64) % self.p
        for r, c in enumerate(self.pivots):
            if v[c]:
                v = (v - v[c] * self.rows[r]) % self.p
        return not v.any()

    @cached_property
    def parity(self) -> np.ndarray:
        if self.rank == 0:
            return np.eye(self.length, dtype=np.int64)
        return nullspace(self.rows, self.p)

    def columns(self, support: Iterable[int]) -> list[int]:
        b = self.block
        return [i * b + j for i in support for j in range(b)]

    def supported_word(self, support: Sequence[int]) -> Optional[np.ndarray]:
        """A nonzero codeword vanishing outside ``support``, or None."""
        cols = self.columns(support)
        H = self.parity[:, cols]
        if H.shape[0] == 0:
            kernel = np.eye(len(cols), dtype=np.int64)[:1]
        else:
            if rank_mod_p(H, self.p) == len(cols):
                return None
            kernel = nullspace(H, self.p)
        word = np.zeros(self.length, dtype=np.int64)
        word[cols] = kernel[0]
        return word


def block_support(vec: np.ndarray, n: int, block: int) -> np.ndarray:
    return np.asarray(vec).reshape(n, block).any(axis=1)


def hamming_weight(word) -> int:
    """Number of nonzero coordinates of a word (QuotPoly, sequence, or boolean support)."""
    coords = word.coeffs if isinstance(word, QuotPoly) else word
    return sum(1 for c in coords if c)


def pair_weight(word) -> int:
    """Number of cyclic indices i with (c_i, c_{i+1}) != (0, 0)."""
    coords = word.coeffs if isinstance(word, QuotPoly) else word
    nz = [bool(c) for c in coords]
    n = len(nz)
    return sum(1 for i in range(n) if nz[i] or nz[(i + 1) % n])


def support_pair_size(support: Sequence[int], n: int) -> int:
    s = set(support)
    return len(s | {(i - 1) % n for i in s})


@dataclass
class WeightCertificate:
    kind: str  # "exact" or "lower-bound"
    value: int
    witness: Optional[tuple[int, ...]] = None
    search_bound: int = 0
    nodes: int = 0

    @property
    def exact(self) -> bool:
        return self.kind == "exact"

    def to_dict(self, render=None) -> dict:
        out = {"kind": self.kind, "value": self.value, "search_bound": self.search_bound, "nodes": self.nodes}
        if self.witness is not None:
            out["witness"] = render(self.witness) if render else list(self.witness)
        return out


# ---------------------------------------------------------------- expansion


_SLOTS = {"1": 0, "u": 1, "v": 2, "uv": 3}


def ring_vector(x: RingElement) -> list[int]:
    out: list[int] = []
    for c in x.coords:
        out.extend(c.coeffs)
    return out


def word_vector(coeffs: Sequence[RingElement]) -> np.ndarray:
    return np.array([v for c in coeffs for v in ring_vector(c)], dtype=np.int64)


def vector_word(vec: Sequence[int], F: FieldParams) -> list[RingElement]:
    m = F.m
    b = 4 * m
    out = []
    for i in range(len(vec) // b):
        chunk = [int(v) for v in vec[i * b : (i + 1) * b]]
        out.append(RingElement(*(F.element(chunk[j * m : (j + 1) * m]) for j in range(4))))
    return out


def vector_poly(vec: Sequence[int], params: AmbientParams) -> QuotPoly:
    return QuotPoly(params, tuple(vector_word(vec, params.field)))


def ring_scalars(F: FieldParams) -> list[RingElement]:
    """F_p-basis of R: g^j times 1, u, v, uv."""
    powers = [F.gen**j if F.m > 1 else F.one for j in range(F.m)]
    return [RingElement.basis(F, mono, c) for mono in ("1", "u", "v", "uv") for c in powers]


def _spanning_rows(gens: Sequence[QuotPoly], scalars: Sequence[RingElement]) -> np.ndarray:
    rows = []
    for g in gens:
        if not g:
            continue
        for b in scalars:
            h = g.scale(b)
            for _ in range(g.params.n):
                rows.append(word_vector(h.coeffs))
                h = h.shift(1)
    return np.array(rows, dtype=np.int64)


def ideal_code(gens: Sequence[QuotPoly], params: AmbientParams) -> LinearCode:
    F = params.field
    rows = _spanning_rows(gens, ring_scalars(F))
    if len(rows) == 0:
        rows = np.zeros((0, 4 * F.m * params.n), dtype=np.int64)
    return LinearCode.from_spanning(rows, F.p, params.n, 4 * F.m)


def basis_matrix(spec: IdealSpec, params: AmbientParams) -> LinearCode:
    """The ideal spanned by x^j * b * g over all generators g, shifts j and F_p-basis scalars b."""
    return ideal_code(generators(spec, params), params)


def member(word, code: LinearCode) -> bool:
    if isinstance(word, QuotPoly):
        vec = word_vector(word.coeffs)
    elif len(word) and isinstance(word[0], RingElement):
        vec = word_vector(word)
    else:
        vec = np.asarray(word)
    return code.contains(vec)


def base_field_code(ell: int, F: FieldParams, alpha1: FieldElement) -> tuple[LinearCode, AmbientParams]:
    """<(x^2 - alpha0)^ell> inside F[x]/(x^(2p^s) - alpha1), as a block-m code."""
    params = make_ambient(F, RingElement.scalar(alpha1))
    gen = params.y**ell
    m = F.m
    scalars = [RingElement.scalar(F.gen**j if m > 1 else F.one) for j in range(m)]
    full = _spanning_rows([gen], scalars)
    if len(full) == 0:
        return LinearCode.from_spanning(np.zeros((0, m * params.n), dtype=np.int64), F.p, params.n, m), params
    b = 4 * m
    cols = [i * b + j for i in range(params.n) for j in range(m)]
    return LinearCode.from_spanning(full[:, cols], F.p, params.n, m), params


# ---------------------------------------------------------------- weights


def _weights(block_vals: np.ndarray, n: int, b: int) -> tuple[np.ndarray, np.ndarray]:
    nz = block_vals.reshape(block_vals.shape[0], n, b).any(axis=2)
    nxt = np.concatenate([nz[:, 1:], nz[:, :1]], axis=1)
    return nz.sum(axis=1), (nz | nxt).sum(axis=1)


def exhaustive_min(code: LinearCode, cap: int = DEFAULT_CAP) -> tuple[WeightCertificate, WeightCertificate]:
    """Minimum Hamming and pair weights over all p^rank codewords."""
    p, k = code.p, code.rank
    if k == 0:
        return WeightCertificate("exact", 0), WeightCertificate("exact", 0)
    total = p**k
    if total > cap:
        raise CapExceeded(f"{p}^{k} codewords exceed cap {cap}")
    G = code.rows
    lo = 0
    while lo < k and p ** (lo + 1) <= _LOW_TABLE_ROWS:
        lo += 1
    table = np.zeros((1, code.length), dtype=np.int64)
    for row in G[:lo]:
        table = ((table[None, :, :] + np.arange(p)[:, None, None] * row[None, None, :]) % p).reshape(-1, code.length)
    table = table.astype(np.int16)
    hi_rows = G[lo:]
    best_h = best_sp = None
    wit_h = wit_sp = None
    for hi_idx, digits in enumerate(itertools.product(range(p), repeat=k - lo)):
        offset = (np.array(digits, dtype=np.int64) @ hi_rows) % p if k > lo else 0
        block = (table + offset) % p
        wh, wsp = _weights(block, code.n, code.block)
        if hi_idx == 0:
            wh = wh.copy()
            wsp = wsp.copy()
            wh[0] = wsp[0] = np.iinfo(wh.dtype).max
        ih, isp = int(np.argmin(wh)), int(np.argmin(wsp))
        if best_h is None or wh[ih] < best_h:
            best_h, wit_h = int(wh[ih]), tuple(int(v) for v in block[ih])
        if best_sp is None or wsp[isp] < best_sp:
            best_sp, wit_sp = int(wsp[isp]), tuple(int(v) for v in block[isp])
    return (
        WeightCertificate("exact", best_h, wit_h, code.n, total),
        WeightCertificate("exact", best_sp, wit_sp, 2 * code.n, total),
    )


def min_hamming(code: LinearCode, w_max: int, node_limit: int = DEFAULT_NODE_LIMIT) -> WeightCertificate:
    """Smallest support carrying a nonzero codeword, searched up to size ``w_max``."""
    if code.rank == 0:
        return WeightCertificate("exact", 0, search_bound=w_max)
    nodes = 0
    for w in range(1, min(w_max, code.n) + 1):
        for support in itertools.combinations(range(code.n), w):
            nodes += 1
            if nodes > node_limit:
                raise BudgetExceeded(node_limit, nodes)
            word = code.supported_word(support)
            if word is not None:
                return WeightCertificate("exact", w, tuple(int(v) for v in word), w_max, nodes)
    return WeightCertificate("lower-bound", w_max + 1, None, w_max, nodes)


def min_pair(code: LinearCode, w_max: int, node_limit: int = DEFAULT_NODE_LIMIT) -> WeightCertificate:
    """Smallest pair weight, exact when it is at most ``w_max``.

    Hamming weight never exceeds pair weight, so supports of size <= w_max
    cover every word of pair weight <= w_max.
    """
    n = code.n
    if code.rank == 0:
        return WeightCertificate("exact", 0, search_bound=w_max)
    best: Optional[int] = None
    witness = None
    nodes = 0
    for k in range(1, n + 1):
        if k > w_max or (best is not None and k >= best):
            break
        for support in itertools.combinations(range(n), k):
            size = support_pair_size(support, n)
            if best is not None and size >= best:
                continue
            nodes += 1
            if nodes > node_limit:
                raise BudgetExceeded(node_limit, nodes)
            word = code.supported_word(support)
            if word is not None:
                best = pair_weight(block_support(word, n, code.block))
                witness = tuple(int(v) for v in word)
    if best is not None and best <= w_max:
        return WeightCertificate("exact", best, witness, w_max, nodes)
    return WeightCertificate("lower-bound", w_max + 1, witness, w_max, nodes)


def find_witness(code: LinearCode, target: int, pair: bool = False, node_limit: int = DEFAULT_NODE_LIMIT) -> Optional[tuple[int, ...]]:
    """Some nonzero codeword of weight <= target (pair weight if ``pair``), or None."""
    n = code.n
    nodes = 0
    sizes = range(1, min(target, n) + 1)
    for k in sizes:
        for support in itertools.combinations(range(n), k):
            if pair and support_pair_size(support, n) > target:
                continue
            nodes += 1
            if nodes > node_limit:
                raise BudgetExceeded(node_limit, nodes)
            word = code.supported_word(support)
            if word is not None:
                return tuple(int(v) for v in word)
    return None


# ---------------------------------------------------------------- torsion


def torsion_power_word(params: AmbientParams, N: int) -> QuotPoly:
    return (params.y**N).scale(params.torsion_unit)


def oracle_im(code: LinearCode, params: AmbientParams, limit: Optional[int] = None) -> Optional[int]:
    """Smallest N with u(x^2 - alpha0)^N in the code (v for the swapped family)."""
    top = 4 * params.ps if limit is None else limit
    word = params.one.scale(params.torsion_unit)
    for N in range(top + 1):
        if code.contains(word_vector(word.coeffs)):
            return N
        word = word * params.y
    return None


def torsion_residue_dims(code: LinearCode, params: AmbientParams) -> tuple[int, int]:
    """(dim Tor, dim Res): codewords killed by reduction mod u, and the image mod u."""
    m = params.field.m
    tors_slot = 2 if params.family is UnitFamily.CASE_NO_V_SWAPPED else 1
    other_slot = 3 - tors_slot  # the other nilpotent of the pair (u, v)
    keep = [0, other_slot]
    cols = [i * 4 * m + s * m + j for i in range(params.n) for s in keep for j in range(m)]
    res = rank_mod_p(code.rows[:, cols], code.p) if code.rank else 0
    return code.rank - res, res
