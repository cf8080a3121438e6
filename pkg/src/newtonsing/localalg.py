"""Local analytic invariants by exact linear algebra.

The colength of an ideal generated by two germs is computed on truncated
polynomial quotients: for rising truncation degree N the dimension of
K[x,y]_{<N} modulo the truncated ideal span is nonincreasing in
information, and the first repeat d_{N+1} = d_N is the exact colength (a
Nakayama argument over the complete local ring).  A bivariate gcd
pretest decides finiteness up front, so the loop always terminates.

Row reduction is exact everywhere: machine integers mod p behind numpy
for prime fields, fraction-free integer elimination over the rationals,
and generic field elimination over extension towers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd

import numpy as np

from .bivar import BivarPoly, bivar_gcd
from .errors import DomainError
from .newton import ExtNat, INFINITY

Point = tuple[int, int]


@dataclass(frozen=True)
class TruncatedQuotient:
    """Dimension data of K[x,y]_{<N} modulo the truncated ideal span."""

    truncation: int
    basis: tuple[Point, ...]
    dimension: int


def finite_colength_test(g1: BivarPoly, g2: BivarPoly) -> bool:
    """Whether the two germs generate an ideal of finite colength: no
    common irreducible factor may pass through the origin, which is
    equivalent to the gcd not vanishing there."""
    if g1.is_zero() and g2.is_zero():
        return False
    h = bivar_gcd(g1, g2)
    return h.is_unit_at_origin()


def _monomials(n: int) -> list[Point]:
    out = []
    for d in range(n):
        for a in range(d + 1):
            out.append((a, d - a))
    return out


def truncated_quotient(g1: BivarPoly, g2: BivarPoly, truncation: int) -> TruncatedQuotient:
    basis = _monomials(truncation)
    dim = len(basis) - _span_rank(g1, g2, truncation, basis)
    return TruncatedQuotient(truncation=truncation, basis=tuple(basis), dimension=dim)


def _span_rank(g1: BivarPoly, g2: BivarPoly, n: int, basis: list[Point]) -> int:
    index = {mono: k for k, mono in enumerate(basis)}
    tower = g1.tower
    rows = []
    for g in (g1, g2):
        if g.is_zero():
            continue
        # multipliers of higher degree land entirely in degree >= n
        room = n - g.multiplicity()
        terms = list(g._t.items())
        for d in range(room):
            for a in range(d + 1):
                b = d - a
                row = {}
                for (s, t), raw in terms:
                    if a + s + b + t < n:
                        row[index[(a + s, b + t)]] = raw
                if row:
                    rows.append(row)
    if not rows:
        return 0
    ncols = len(basis)
    if tower.p > 0 and tower.num_levels == 0:
        return _rank_prime_field(rows, ncols, tower.p)
    if tower.p == 0:
        return _rank_rationals(rows, ncols)
    return _rank_generic(rows, ncols, tower)


def _rank_prime_field(rows: list[dict], ncols: int, p: int) -> int:
    mat = np.zeros((len(rows), ncols), dtype=np.int64)
    for r, row in enumerate(rows):
        for c, raw in row.items():
            mat[r, c] = raw
    rank = 0
    nrows = mat.shape[0]
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(mat[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            mat[[rank, piv]] = mat[[piv, rank]]
        inv = pow(int(mat[rank, col]), p - 2, p)
        mat[rank] = (mat[rank] * inv) % p
        below = mat[rank + 1:, col]
        hit = np.nonzero(below)[0]
        if hit.size:
            idx = rank + 1 + hit
            mat[idx] = (mat[idx] - np.outer(below[hit], mat[rank])) % p
        rank += 1
    return rank


def _rank_rationals(rows: list[dict], ncols: int) -> int:
    """Sparse fraction-free elimination: rows as column-to-integer maps,
    each normalized by its content to keep entries small."""
    def normalized(row: dict) -> dict:
        g = 0
        for v in row.values():
            g = _int_gcd(g, v)
        if g > 1:
            return {c: v // g for c, v in row.items()}
        return row

    work = []
    for row in rows:
        denom = 1
        for frac in row.values():
            denom = denom * frac.denominator // _int_gcd(denom, frac.denominator)
        work.append({c: int(frac * denom) for c, frac in row.items()})
    work.sort(key=lambda r: min(r))
    pivots: dict[int, dict] = {}
    rank = 0
    for row in work:
        row = dict(row)
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = normalized(row)
                rank += 1
                break
            g = _int_gcd(piv[lead], row[lead])
            a = piv[lead] // g
            b = row[lead] // g
            nxt = {c: v * a for c, v in row.items()}
            for c, v in piv.items():
                w = nxt.get(c, 0) - b * v
                if w:
                    nxt[c] = w
                else:
                    nxt.pop(c, None)
            row = normalized(nxt)
    return rank


def _rank_generic(rows: list[dict], ncols: int, tower) -> int:
    """Sparse elimination over an extension tower, pivots kept monic."""
    zero = tower.raw_zero()
    work = sorted(rows, key=lambda r: min(r))
    pivots: dict[int, dict] = {}
    rank = 0
    for row in work:
        row = dict(row)
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = tower.raw_inv(row[lead])
                pivots[lead] = {c: tower.raw_mul(inv, v) for c, v in row.items()}
                rank += 1
                break
            b = row[lead]
            nxt = dict(row)
            for c, v in piv.items():
                w = tower.raw_sub(nxt.get(c, zero), tower.raw_mul(b, v))
                if w == zero:
                    nxt.pop(c, None)
                else:
                    nxt[c] = w
            row = nxt
    return rank


def local_quotient_dim(g1: BivarPoly, g2: BivarPoly) -> ExtNat:
    """dim K[[x,y]] / <g1, g2>, allowing infinity.

    Units give 0; the pretest rules out infinite colength; otherwise the
    truncated dimensions are computed for N = 2, 3, ... until two
    consecutive values agree, which pins the exact answer.
    """
    if g1.tower != g2.tower:
        raise DomainError("operands over different towers")
    if g1.is_unit_at_origin() or g2.is_unit_at_origin():
        return ExtNat(0)
    if not finite_colength_test(g1, g2):
        return INFINITY
    basis_cache = _monomials(2)
    prev = len(basis_cache) - _span_rank(g1, g2, 2, basis_cache)
    n = 3
    while True:
        basis = _monomials(n)
        cur = len(basis) - _span_rank(g1, g2, n, basis)
        if cur == prev:
            return ExtNat(prev)
        prev = cur
        n += 1


def milnor_number(f: BivarPoly) -> ExtNat:
    """dim K[[x,y]] / (ideal of the partials)."""
    if f.is_zero():
        raise DomainError("zero polynomial")
    if f.is_unit_at_origin():
        raise DomainError("germ must vanish at the origin")
    return local_quotient_dim(f.partial_x(), f.partial_y())


def intersection_multiplicity(f: BivarPoly, g: BivarPoly) -> ExtNat:
    """Local intersection multiplicity at the origin, symmetric in the
    arguments; units intersect with multiplicity 0."""
    return local_quotient_dim(f, g)
