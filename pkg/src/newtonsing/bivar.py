"""Sparse bivariate polynomials over a field tower.

Terms are kept in a map from exponent pairs to nonzero coefficients.
Besides ring arithmetic this module provides the pieces every torus
computation rests on: weighted-homogeneous decomposition, initial forms
along faces, the compression of a quasihomogeneous polynomial to a
univariate polynomial whose roots encode its non-monomial factors, and
the two blow-up chart substitutions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .algebra import FElem, FieldTower
from .errors import DomainError, InternalError, TowerMismatchError
from .unipoly import UniPoly

Exponent = tuple[int, int]

# stabilization sweeps keep exponents small; anything near this bound
# signals a runaway loop rather than a legitimate input
MAX_EXPONENT = 1 << 16


class BivarPoly:
    """Polynomial in x and y with exact coefficients, one entry per
    exponent pair, zero coefficients never stored."""

    __slots__ = ("tower", "_t")

    def __init__(self, tower: FieldTower, terms: Mapping[Exponent, object] | None = None):
        self.tower = tower
        data = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise DomainError(f"negative exponent ({i},{j})")
                if i > MAX_EXPONENT or j > MAX_EXPONENT:
                    raise InternalError("exponent overflow")
                e = c if isinstance(c, FElem) else tower.element(c)
                if e.tower != tower:
                    raise TowerMismatchError("coefficient from a different tower")
                if not e.is_zero():
                    key = (i, j)
                    if key in data:
                        s = FElem(tower, tower.raw_add(data[key], e.raw))
                        if s.is_zero():
                            del data[key]
                        else:
                            data[key] = s.raw
                    else:
                        data[key] = e.raw
        self._t = data

    @classmethod
    def _from_raw(cls, tower: FieldTower, data: dict) -> "BivarPoly":
        poly = object.__new__(cls)
        poly.tower = tower
        poly._t = data
        return poly

    @classmethod
    def zero(cls, tower: FieldTower) -> "BivarPoly":
        return cls._from_raw(tower, {})

    @classmethod
    def monomial(cls, tower: FieldTower, i: int, j: int, coeff=1) -> "BivarPoly":
        return cls(tower, {(i, j): coeff})

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._t

    def support(self) -> tuple[Exponent, ...]:
        return tuple(sorted(self._t))

    def terms(self):
        for key in sorted(self._t):
            yield key, FElem(self.tower, self._t[key])

    def coeff(self, i: int, j: int) -> FElem:
        raw = self._t.get((i, j))
        return FElem(self.tower, raw) if raw is not None else self.tower.zero()

    def __len__(self) -> int:
        return len(self._t)

    def multiplicity(self) -> int:
        """Minimal total degree of a term (the germ multiplicity mt)."""
        if not self._t:
            raise DomainError("multiplicity of the zero polynomial")
        return min(i + j for i, j in self._t)

    def total_degree(self) -> int:
        if not self._t:
            return -1
        return max(i + j for i, j in self._t)

    def max_exponent(self) -> int:
        if not self._t:
            return 0
        return max(max(i, j) for i, j in self._t)

    def x_divisor_exponent(self) -> int:
        """Largest j with x^j dividing the polynomial."""
        if not self._t:
            raise DomainError("zero polynomial")
        return min(i for i, _ in self._t)

    def y_divisor_exponent(self) -> int:
        if not self._t:
            raise DomainError("zero polynomial")
        return min(j for _, j in self._t)

    def is_unit_at_origin(self) -> bool:
        return (0, 0) in self._t

    def swap_xy(self) -> "BivarPoly":
        return BivarPoly._from_raw(self.tower,
                                   {(j, i): r for (i, j), r in self._t.items()})

    def vanishes_at_origin(self) -> bool:
        return (0, 0) not in self._t

    # -- ring arithmetic -----------------------------------------------------

    def _check(self, other: "BivarPoly") -> None:
        if self.tower != other.tower:
            raise TowerMismatchError("mixed field towers")

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        self._check(other)
        t = self.tower
        data = dict(self._t)
        for key, raw in other._t.items():
            if key in data:
                s = t.raw_add(data[key], raw)
                if t.raw_is_zero(s):
                    del data[key]
                else:
                    data[key] = s
            else:
                data[key] = raw
        return BivarPoly._from_raw(t, data)

    def __sub__(self, other: "BivarPoly") -> "BivarPoly":
        return self + (-other)

    def __neg__(self) -> "BivarPoly":
        t = self.tower
        return BivarPoly._from_raw(t, {k: t.raw_neg(r) for k, r in self._t.items()})

    def __mul__(self, other) -> "BivarPoly":
        if isinstance(other, FElem):
            return self.scale(other)
        self._check(other)
        t = self.tower
        data: dict = {}
        for (i1, j1), r1 in self._t.items():
            for (i2, j2), r2 in other._t.items():
                key = (i1 + i2, j1 + j2)
                prod = t.raw_mul(r1, r2)
                if key in data:
                    s = t.raw_add(data[key], prod)
                    if t.raw_is_zero(s):
                        del data[key]
                    else:
                        data[key] = s
                elif not t.raw_is_zero(prod):
                    data[key] = prod
        return BivarPoly._from_raw(t, data)

    def scale(self, c: FElem) -> "BivarPoly":
        t = self.tower
        if c.is_zero():
            return BivarPoly.zero(t)
        return BivarPoly._from_raw(t, {k: t.raw_mul(r, c.raw) for k, r in self._t.items()})

    def __pow__(self, e: int) -> "BivarPoly":
        result = BivarPoly.monomial(self.tower, 0, 0)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def map_coefficients(self, fn: Callable[[FElem], FElem],
                         tower: FieldTower | None = None) -> "BivarPoly":
        tower = tower or self.tower
        data = {}
        for key, c in self.terms():
            e = fn(c)
            if not e.is_zero():
                data[key] = e.raw
        return BivarPoly._from_raw(tower, data)

    # -- calculus ------------------------------------------------------------

    def partial_x(self) -> "BivarPoly":
        t = self.tower
        data = {}
        for (i, j), raw in self._t.items():
            if i == 0:
                continue
            c = t.raw_mul(t.raw_from_int(i), raw)
            if not t.raw_is_zero(c):
                data[(i - 1, j)] = c
        return BivarPoly._from_raw(t, data)

    def partial_y(self) -> "BivarPoly":
        t = self.tower
        data = {}
        for (i, j), raw in self._t.items():
            if j == 0:
                continue
            c = t.raw_mul(t.raw_from_int(j), raw)
            if not t.raw_is_zero(c):
                data[(i, j - 1)] = c
        return BivarPoly._from_raw(t, data)

    def evaluate(self, x: FElem, y: FElem) -> FElem:
        t = self.tower
        acc = t.raw_zero()
        xps: dict[int, object] = {0: t.raw_one()}
        yps: dict[int, object] = {0: t.raw_one()}

        def power(cache, base, e):
            if e not in cache:
                cache[e] = t.raw_mul(power(cache, base, e - 1), base.raw)
            return cache[e]

        for (i, j), raw in self._t.items():
            term = t.raw_mul(raw, t.raw_mul(power(xps, x, i), power(yps, y, j)))
            acc = t.raw_add(acc, term)
        return FElem(t, acc)

    # -- weighted structure ----------------------------------------------------

    def weighted_part(self, n0: int, m0: int, d: int) -> "BivarPoly":
        """Terms of weighted degree n0*i + m0*j equal to d."""
        data = {k: r for k, r in self._t.items() if n0 * k[0] + m0 * k[1] == d}
        return BivarPoly._from_raw(self.tower, data)

    def min_weighted_degree(self, n0: int, m0: int) -> int:
        if not self._t:
            raise DomainError("zero polynomial")
        return min(n0 * i + m0 * j for i, j in self._t)

    def is_quasihomogeneous(self, n0: int, m0: int) -> bool:
        if not self._t:
            return True
        degs = {n0 * i + m0 * j for i, j in self._t}
        return len(degs) == 1

    # -- comparisons -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, BivarPoly) and self.tower == other.tower
                and self._t == other._t)

    def __hash__(self) -> int:
        return hash((self.tower, tuple(sorted(self._t.items()))))

    def __repr__(self) -> str:
        return f"BivarPoly({self})"

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for (i, j) in sorted(self._t, key=lambda k: (k[0] + k[1], k[0], k[1])):
            c = FElem(self.tower, self._t[(i, j)])
            factors = []
            if not c.is_one() or (i == 0 and j == 0):
                factors.append(str(c))
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            parts.append("*".join(factors))
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# weighted-homogeneous decomposition


@dataclass(frozen=True)
class WeightedDecomposition:
    """A polynomial split into quasihomogeneous parts for coprime positive
    weights (n0, m0); absent degrees are zero, the first part is nonzero."""

    n0: int
    m0: int
    parts: tuple[tuple[int, BivarPoly], ...]

    @property
    def first_degree(self) -> int:
        return self.parts[0][0]

    @property
    def first(self) -> BivarPoly:
        return self.parts[0][1]

    def part(self, d: int) -> BivarPoly:
        for deg, poly in self.parts:
            if deg == d:
                return poly
        tower = self.parts[0][1].tower
        return BivarPoly.zero(tower)

    def second_term(self) -> BivarPoly:
        """The part of weighted degree d+1, possibly zero."""
        return self.part(self.first_degree + 1)


def weighted_decomposition(f: BivarPoly, n0: int, m0: int) -> WeightedDecomposition:
    if f.is_zero():
        raise DomainError("decomposition of the zero polynomial")
    if n0 < 1 or m0 < 1 or math.gcd(n0, m0) != 1:
        raise DomainError(f"weights must be positive coprime, got ({n0},{m0})")
    buckets: dict[int, dict] = {}
    for key, raw in f._t.items():
        d = n0 * key[0] + m0 * key[1]
        buckets.setdefault(d, {})[key] = raw
    parts = tuple((d, BivarPoly._from_raw(f.tower, buckets[d])) for d in sorted(buckets))
    return WeightedDecomposition(n0=n0, m0=m0, parts=parts)


# ---------------------------------------------------------------------------
# initial forms and compression


def initial_form_along(f: BivarPoly, face: Iterable[Exponent]) -> BivarPoly:
    """Sum of the terms of f supported on the given face, which is either a
    single lattice point or the closed segment between two points."""
    pts = [tuple(p) for p in face]
    if len(pts) == 1:
        (i0, j0) = pts[0]
        data = {k: r for k, r in f._t.items() if k == (i0, j0)}
    elif len(pts) == 2:
        (x1, y1), (x2, y2) = pts
        data = {}
        for (i, j), raw in f._t.items():
            cross = (x2 - x1) * (j - y1) - (y2 - y1) * (i - x1)
            if cross != 0:
                continue
            if min(x1, x2) <= i <= max(x1, x2) and min(y1, y2) <= j <= max(y1, y2):
                data[(i, j)] = raw
    else:
        raise DomainError("a face is a vertex or a segment")
    return BivarPoly._from_raw(f.tower, data)


@dataclass(frozen=True)
class CompressedForm:
    """A quasihomogeneous polynomial written as x^alpha y^beta times the
    weighted re-homogenization of a univariate polynomial H with H(0) != 0.

    The roots of H over the closure are the ratios b/a of the non-monomial
    factors (a*x^m0 - b*y^n0) of the source, with matching multiplicities.
    """

    alpha: int
    beta: int
    hpoly: UniPoly
    m0: int
    n0: int

    def rehomogenize(self, tower: FieldTower) -> BivarPoly:
        """Reconstruct the source polynomial."""
        s = self.hpoly.degree
        terms: dict[Exponent, FElem] = {}
        for k in range(s + 1):
            c = self.hpoly.coeff(k)
            if c.is_zero():
                continue
            terms[(self.alpha + k * self.m0, self.beta + (s - k) * self.n0)] = c
        return BivarPoly(tower, terms)


def compress(g: BivarPoly, m0: int, n0: int) -> CompressedForm:
    """Compress a quasihomogeneous polynomial of type (n0, m0; d).

    Along the weight line the exponent pairs differ by multiples of
    (m0, -n0), so the map to powers of T is well defined.
    """
    if g.is_zero():
        raise DomainError("compression of the zero polynomial")
    if math.gcd(m0, n0) != 1:
        raise DomainError("weights must be coprime")
    if not g.is_quasihomogeneous(n0, m0):
        raise InternalError("compress called on a non-quasihomogeneous polynomial")
    supp = g.support()
    alpha = min(i for i, _ in supp)
    beta = min(j for _, j in supp)
    deg = (max(i for i, _ in supp) - alpha)
    if deg % m0 != 0:
        raise InternalError("support not aligned with the weight lattice")
    coeffs = [g.tower.zero()] * (deg // m0 + 1)
    for (i, j), c in g.terms():
        step = i - alpha
        if step % m0 != 0:
            raise InternalError("support not aligned with the weight lattice")
        coeffs[step // m0] = c
    h = UniPoly(g.tower, coeffs)
    if h.coeff(0).is_zero():
        raise InternalError("compressed polynomial must not vanish at 0")
    return CompressedForm(alpha=alpha, beta=beta, hpoly=h, m0=m0, n0=n0)


# ---------------------------------------------------------------------------
# blow-up chart substitutions


def blow_up_chart2(f: BivarPoly, c: FElem, m: int) -> BivarPoly:
    """f(v*(u+c), v) / v^m, the chart-2 blow-up map centered at direction c.

    The division must be exact, which holds whenever m <= mt(f).
    """
    t = f.tower
    data: dict[Exponent, object] = {}
    shifted: dict[int, UniPoly] = {}
    u_plus_c = UniPoly(t, [c, t.one()])

    def upow(i: int) -> UniPoly:
        if i not in shifted:
            shifted[i] = UniPoly.constant(t, 1) if i == 0 else upow(i - 1) * u_plus_c
        return shifted[i]

    for (i, j), raw in f._t.items():
        if i + j - m < 0:
            raise InternalError("inexact division in blow-up chart")
        vexp = i + j - m
        poly = upow(i) if not c.is_zero() else None
        if poly is None:
            key = (i, vexp)
            _acc(t, data, key, raw)
        else:
            for k in range(poly.degree + 1):
                ck = poly.coeff(k)
                if ck.is_zero():
                    continue
                _acc(t, data, (k, vexp), t.raw_mul(raw, ck.raw))
    return BivarPoly._from_raw(t, data)


def blow_up_chart1(f: BivarPoly, m: int) -> BivarPoly:
    """f(u, u*v) / u^m, the chart-1 blow-up map."""
    t = f.tower
    data: dict[Exponent, object] = {}
    for (i, j), raw in f._t.items():
        if i + j - m < 0:
            raise InternalError("inexact division in blow-up chart")
        _acc(t, data, (i + j - m, j), raw)
    return BivarPoly._from_raw(t, data)


def _acc(tower: FieldTower, data: dict, key: Exponent, raw) -> None:
    if key in data:
        s = tower.raw_add(data[key], raw)
        if tower.raw_is_zero(s):
            del data[key]
        else:
            data[key] = s
    elif not tower.raw_is_zero(raw):
        data[key] = raw


# ---------------------------------------------------------------------------
# bivariate gcd via primitive-part pseudo-remainders over K[x]


def _y_coefficients(f: BivarPoly) -> list[UniPoly]:
    """f as a dense polynomial in y with coefficients in K[x]."""
    degy = max(j for _, j in f.support())
    buckets: list[dict[int, object]] = [dict() for _ in range(degy + 1)]
    for (i, j), raw in f._t.items():
        buckets[j][i] = raw
    out = []
    for b in buckets:
        if b:
            width = max(b) + 1
            coeffs = [b.get(i, f.tower.raw_zero()) for i in range(width)]
            out.append(UniPoly._from_raw(f.tower, coeffs))
        else:
            out.append(UniPoly(f.tower))
    return out


def _from_y_coefficients(tower: FieldTower, coeffs: list[UniPoly]) -> BivarPoly:
    data: dict[Exponent, object] = {}
    for j, c in enumerate(coeffs):
        for i, raw in enumerate(c._c):
            if not tower.raw_is_zero(raw):
                data[(i, j)] = raw
    return BivarPoly._from_raw(tower, data)


def _y_trim(coeffs: list[UniPoly]) -> list[UniPoly]:
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return coeffs


def _y_content(tower: FieldTower, coeffs: list[UniPoly]) -> UniPoly:
    from .unipoly import uni_gcd
    acc = UniPoly(tower)
    for c in coeffs:
        acc = uni_gcd(acc, c)
        if acc.degree == 0:
            break
    return acc


def _y_primitive(tower: FieldTower, coeffs: list[UniPoly]) -> list[UniPoly]:
    cont = _y_content(tower, coeffs)
    if cont.is_zero() or cont.degree == 0:
        lead = None
        for c in reversed(coeffs):
            if not c.is_zero():
                lead = c.lead()
                break
        if lead is None or lead.is_one():
            return coeffs
        inv = lead.inverse()
        return [c * inv for c in coeffs]
    return [c.exact_div(cont) for c in coeffs]


def _y_pseudo_rem(tower: FieldTower, a: list[UniPoly], b: list[UniPoly]) -> list[UniPoly]:
    db = len(b) - 1
    lead = b[-1]
    r = list(a)
    while len(r) - 1 >= db and r:
        top = r[-1]
        r = [c * lead for c in r[:-1]]
        shift = len(r) - db
        for k in range(db):
            r[k + shift] = r[k + shift] - top * b[k]
        _y_trim(r)
    return r


def bivar_gcd(f: BivarPoly, g: BivarPoly) -> BivarPoly:
    """Greatest common divisor, with gcd(h, 0) = h up to normalization.

    Computed as gcd of contents times the primitive-part pseudo-remainder
    chain in y over K[x]; over the rationals the chain runs on cleared
    integer coefficients to avoid fraction blowup.  The result is
    normalized so its (y, x)-lexicographic leading coefficient is one.
    """
    if f.tower != g.tower:
        raise TowerMismatchError("gcd of polynomials over different towers")
    tower = f.tower
    if f.is_zero():
        return _normalize_gcd(g)
    if g.is_zero():
        return _normalize_gcd(f)
    if tower.p == 0:
        return _normalize_gcd(_bivar_gcd_int(f, g))
    from .unipoly import uni_gcd
    fy = _y_coefficients(f)
    gy = _y_coefficients(g)
    content = uni_gcd(_y_content(tower, fy), _y_content(tower, gy))
    a = _y_primitive(tower, fy)
    b = _y_primitive(tower, gy)
    if len(a) < len(b):
        a, b = b, a
    while _y_trim(b):
        rem = _y_pseudo_rem(tower, a, b)
        a, b = b, (_y_primitive(tower, rem) if rem else [])
    result = _from_y_coefficients(tower, a)
    if content.degree > 0:
        lift = BivarPoly._from_raw(tower, {(i, 0): raw for i, raw in enumerate(content._c)
                                           if not tower.raw_is_zero(raw)})
        result = result * lift
    return _normalize_gcd(result)


def _normalize_gcd(h: BivarPoly) -> BivarPoly:
    if h.is_zero():
        return h
    lead_key = max(h._t, key=lambda k: (k[1], k[0]))
    lead = FElem(h.tower, h._t[lead_key])
    if lead.is_one():
        return h
    return h.scale(lead.inverse())


# integer-coefficient lane for characteristic zero: polynomials in Z[x],
# stored as plain int lists


def _zx_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _zx_content(a: list[int]) -> int:
    g = 0
    for v in a:
        g = math.gcd(g, v)
    return g


def _zx_primitive(a: list[int]) -> list[int]:
    g = _zx_content(a)
    if g == 0:
        return []
    if a[-1] < 0:
        g = -g
    if g != 1:
        a = [v // g for v in a]
    return a


def _zx_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _zx_trim(out)


def _zx_scale(a: list[int], s: int) -> list[int]:
    return [] if s == 0 else [v * s for v in a]


def _zx_sub(a: list[int], b: list[int]) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, v in enumerate(b):
        out[i] -= v
    return _zx_trim(out)


def _zx_pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    db = len(b) - 1
    lead = b[-1]
    r = list(a)
    while len(r) - 1 >= db and r:
        top = r[-1]
        r = _zx_scale(r[:-1], lead)
        shift = len(r) - db
        for k in range(db):
            r[k + shift] -= top * b[k]
        _zx_trim(r)
    return r


def _zx_gcd(a: list[int], b: list[int]) -> list[int]:
    a = _zx_trim(list(a))
    b = _zx_trim(list(b))
    if not a:
        return [v if b[-1] > 0 else -v for v in b] if b else []
    if not b:
        return [v if a[-1] > 0 else -v for v in a]
    c = math.gcd(abs(_zx_content(a)), abs(_zx_content(b)))
    pa = _zx_primitive(a)
    pb = _zx_primitive(b)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    while pb:
        r = _zx_pseudo_rem(pa, pb)
        pa, pb = pb, _zx_primitive(r)
    return _zx_scale(pa, c)


def _zx_exact_div(a: list[int], b: list[int]) -> list[int]:
    # only valid when b divides a in Z[x], where classical long division
    # stays integral
    if not a:
        return []
    dq = len(a) - len(b)
    if dq < 0:
        raise InternalError("inexact polynomial division")
    out = [0] * (dq + 1)
    r = list(a)
    lead = b[-1]
    for i in range(dq, -1, -1):
        c = r[i + len(b) - 1]
        if c % lead != 0:
            raise InternalError("inexact polynomial division")
        q = c // lead
        out[i] = q
        if q:
            for j in range(len(b)):
                r[i + j] -= q * b[j]
    if any(r):
        raise InternalError("inexact polynomial division")
    return _zx_trim(out)


def _y_content_int(rows: list[list[int]]) -> list[int]:
    acc: list[int] = []
    for c in rows:
        if c:
            acc = _zx_gcd(acc, c)
            if acc == [1]:
                break
    return acc


def _y_primitive_int(rows: list[list[int]]) -> list[list[int]]:
    rows = [list(c) for c in rows]
    while rows and not rows[-1]:
        rows.pop()
    if not rows:
        return rows
    cont = _y_content_int(rows)
    if cont and cont != [1]:
        rows = [_zx_exact_div(c, cont) if c else c for c in rows]
    return rows


def _y_pseudo_rem_int(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    db = len(b) - 1
    lead = b[-1]
    r = [list(c) for c in a]
    while len(r) - 1 >= db and r:
        top = r[-1]
        r = [_zx_mul(c, lead) for c in r[:-1]]
        shift = len(r) - db
        for k in range(db):
            r[k + shift] = _zx_sub(r[k + shift], _zx_mul(top, b[k]))
        while r and not r[-1]:
            r.pop()
    return r


def _to_int_rows(f: BivarPoly) -> list[list[int]]:
    denom = 1
    for _, c in f.terms():
        d = c.raw.denominator
        denom = denom * d // math.gcd(denom, d)
    degy = max(j for _, j in f.support())
    rows: list[list[int]] = [[] for _ in range(degy + 1)]
    for (i, j), c in f.terms():
        row = rows[j]
        if len(row) <= i:
            row.extend([0] * (i + 1 - len(row)))
        row[i] = int(c.raw * denom)
    return rows


def _bivar_gcd_int(f: BivarPoly, g: BivarPoly) -> BivarPoly:
    from .algebra import QQ
    fy = _to_int_rows(f)
    gy = _to_int_rows(g)
    content = _zx_gcd(_y_content_int(fy), _y_content_int(gy))
    a = _y_primitive_int(fy)
    b = _y_primitive_int(gy)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _y_pseudo_rem_int(a, b)
        a, b = b, _y_primitive_int(r)
    if content and content != [1]:
        a = [_zx_mul(c, content) if c else c for c in a]
    data = {}
    for j, c in enumerate(a):
        for i, v in enumerate(c):
            if v:
                data[(i, j)] = Fraction(v)
    return BivarPoly(QQ, data)
