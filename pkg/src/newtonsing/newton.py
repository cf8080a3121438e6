"""Newton diagrams of plane germs and their combinatorial invariants.

Everything here is exact rational arithmetic; areas come from shoelace
sums over the vertex chain and no floating point is ever involved.  The
headline invariants are the Newton number, the Newton delta invariant
and the two edge-counting invariants, together with the stabilization
machinery that extends them from convenient germs to arbitrary ones by
adjoining high axis powers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .bivar import BivarPoly, CompressedForm, compress, initial_form_along
from .errors import DomainError, InternalError
from .unipoly import squarefree_part

Point = tuple[int, int]

#: escalation cap for the stabilization sweeps
MAX_STAB_EXPONENT = 1 << 16


class ExtNat:
    """A nonnegative integer extended by infinity.

    Ordered, hashable, with absorbing addition and multiplication.
    """

    __slots__ = ("_v",)

    def __init__(self, value: int | None):
        if value is not None:
            value = int(value)
            if value < 0:
                raise DomainError("ExtNat values are nonnegative")
        self._v = value

    @classmethod
    def infinity(cls) -> "ExtNat":
        return cls(None)

    @property
    def is_finite(self) -> bool:
        return self._v is not None

    @property
    def value(self) -> int:
        if self._v is None:
            raise DomainError("infinite value has no integer form")
        return self._v

    def _other(self, x) -> "ExtNat":
        if isinstance(x, ExtNat):
            return x
        if isinstance(x, int):
            return ExtNat(x)
        return NotImplemented  # type: ignore[return-value]

    def __eq__(self, other) -> bool:
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return self._v == other._v

    def __lt__(self, other) -> bool:
        other = self._other(other)
        if self._v == other._v:
            return False
        if self._v is None:
            return False
        if other._v is None:
            return True
        return self._v < other._v

    def __le__(self, other) -> bool:
        return self == other or self < other

    def __gt__(self, other) -> bool:
        return not self <= other

    def __ge__(self, other) -> bool:
        return not self < other

    def __add__(self, other) -> "ExtNat":
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        if self._v is None or other._v is None:
            return ExtNat.infinity()
        return ExtNat(self._v + other._v)

    __radd__ = __add__

    def __mul__(self, other) -> "ExtNat":
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        if self._v is None or other._v is None:
            return ExtNat.infinity()
        return ExtNat(self._v * other._v)

    __rmul__ = __mul__

    def __hash__(self) -> int:
        return hash(self._v)

    def __repr__(self) -> str:
        return "ExtNat(infinity)" if self._v is None else f"ExtNat({self._v})"

    def __str__(self) -> str:
        return "infinity" if self._v is None else str(self._v)

    def to_json(self):
        return "infinity" if self._v is None else self._v


INFINITY = ExtNat.infinity()


@dataclass(frozen=True)
class EdgeData:
    """One compact edge of a diagram with its lattice data.

    The primitive weights satisfy m0 = dx / length and n0 = dy / length
    with gcd(m0, n0) = 1; the weighted degree is n0*i + m0*j for any
    point (i, j) on the edge and equals twice the area of the triangle
    spanned by the origin and the two endpoints.
    """

    start: Point
    end: Point
    m0: int
    n0: int
    length: int
    degree: int

    def meets_y_axis(self) -> bool:
        return self.start[0] == 0

    def meets_x_axis(self) -> bool:
        return self.end[1] == 0


@dataclass(frozen=True)
class NewtonDiagram:
    """The chain of compact faces of the Newton polyhedron.

    Vertices run from the upper-left end to the lower-right end, with
    strictly increasing first and strictly decreasing second coordinates.
    The diagram is convenient when it touches both axes.
    """

    vertices: tuple[Point, ...]
    edges: tuple[EdgeData, ...]
    convenient: bool
    monomial_divisors: tuple[int, int]

    @property
    def c0(self) -> int:
        return self.vertices[0][0]

    @property
    def e0(self) -> int:
        return self.vertices[0][1]

    @property
    def ck(self) -> int:
        return self.vertices[-1][0]

    @property
    def ek(self) -> int:
        return self.vertices[-1][1]

    def y_at(self, x: Fraction) -> Fraction | None:
        """Height of the diagram polyline over abscissa x, if reached."""
        x = Fraction(x)
        if x < self.c0 or x > self.ck:
            return None
        for (c1, e1), (c2, e2) in zip(self.vertices, self.vertices[1:]):
            if c1 <= x <= c2:
                return Fraction(e1) + (x - c1) * Fraction(e2 - e1, c2 - c1)
        return Fraction(self.vertices[0][1])

    def x_at(self, y: Fraction) -> Fraction | None:
        y = Fraction(y)
        if y < self.ek or y > self.e0:
            return None
        for (c1, e1), (c2, e2) in zip(self.vertices, self.vertices[1:]):
            if e2 <= y <= e1:
                return Fraction(c1) + (e1 - y) * Fraction(c2 - c1, e1 - e2)
        return Fraction(self.vertices[0][0])

    def contains_on_or_above(self, point: Point) -> bool:
        """Whether a lattice point lies in the Newton polyhedron spanned by
        the diagram, i.e. on or above every edge and within the two
        bounding rays."""
        i, j = point
        if i < self.c0 or j < self.ek:
            return False
        for e in self.edges:
            if e.n0 * i + e.m0 * j < e.degree:
                return False
        return True


def newton_diagram(f: BivarPoly) -> NewtonDiagram:
    """Lower-left hull of the support: the union of compact faces of
    supp(f) + R^2_{>=0}."""
    if f.is_zero():
        raise DomainError("Newton diagram of the zero polynomial")
    lowest: dict[int, int] = {}
    for i, j in f.support():
        if i not in lowest or j < lowest[i]:
            lowest[i] = j
    frontier = []
    cur = None
    for i in sorted(lowest):
        j = lowest[i]
        if cur is None or j < cur:
            frontier.append((i, j))
            cur = j
    hull: list[Point] = []
    for pt in frontier:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    vertices = tuple(hull)
    edges = []
    for a, b in zip(vertices, vertices[1:]):
        dc = b[0] - a[0]
        de = a[1] - b[1]
        ell = math.gcd(dc, de)
        m0, n0 = dc // ell, de // ell
        d = n0 * a[0] + m0 * a[1]
        # twice the triangle area over the origin equals the weighted degree
        # taken with the full (unreduced) edge weights
        if ell * d != abs(a[0] * b[1] - b[0] * a[1]):
            raise InternalError("edge degree does not match the triangle area")
        edges.append(EdgeData(start=a, end=b, m0=m0, n0=n0, length=ell, degree=d))
    supp = f.support()
    mono = (min(i for i, _ in supp), min(j for _, j in supp))
    convenient = vertices[0][0] == 0 and vertices[-1][1] == 0
    return NewtonDiagram(vertices=vertices, edges=tuple(edges),
                         convenient=convenient, monomial_divisors=mono)


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


# ---------------------------------------------------------------------------
# clipped polyline against the quadrant shifted to (1, 1)


def r1_clip(diagram: NewtonDiagram) -> tuple[tuple[Fraction, Fraction], ...]:
    """The polyline of the diagram intersected with {x >= 1, y >= 1},
    as an ordered tuple of exact points (possibly empty)."""
    out: list[tuple[Fraction, Fraction]] = []

    def push(pt: tuple[Fraction, Fraction]) -> None:
        if not out or out[-1] != pt:
            out.append(pt)

    if not diagram.edges:
        (i, j) = diagram.vertices[0]
        if i >= 1 and j >= 1:
            push((Fraction(i), Fraction(j)))
        return tuple(out)
    for e in diagram.edges:
        ax, ay = e.start
        bx, by = e.end
        # x rises, y falls along the edge; clip the parameter interval
        tlo = Fraction(0)
        thi = Fraction(1)
        if ax < 1:
            tlo = max(tlo, Fraction(1 - ax, bx - ax))
        if by < 1:
            thi = min(thi, Fraction(ay - 1, ay - by))
        if tlo > thi:
            continue
        for t in (tlo, thi):
            push((ax + t * (bx - ax), ay + t * (by - ay)))
    return tuple(out)


# ---------------------------------------------------------------------------
# the Newton number, three ways


def mu_N_convenient(diagram: NewtonDiagram) -> int:
    """Newton number of a convenient diagram.

    Computed as the alternating volume sum, as twice the area under the
    diagram minus the axis intercepts plus one, and (when the diagram
    meets {x >= 1, y >= 1}) as twice the area of the cone over that
    intersection plus one; the three results are cross-checked.
    """
    if not diagram.convenient:
        raise DomainError("diagram is not convenient")
    # fan triangulation, one triangle per edge
    v2_fan = Fraction(0)
    for e in diagram.edges:
        v2_fan += Fraction(abs(e.start[0] * e.end[1] - e.end[0] * e.start[1]), 2)
    v1 = diagram.ck + diagram.e0
    kouchnirenko = 2 * v2_fan - v1 + 1

    v2_shoelace = _area_under(diagram)
    vertex_formula = 2 * v2_shoelace - diagram.ck - diagram.e0 + 1

    if kouchnirenko != vertex_formula:
        raise InternalError("Newton number formulas disagree")
    clip = r1_clip(diagram)
    if clip:
        cone = 2 * _polygon_area([(Fraction(0), Fraction(0))] + list(clip)) + 1
        if cone != vertex_formula:
            raise InternalError("cone formula for the Newton number disagrees")
    result = vertex_formula
    if result.denominator != 1 or result < 0:
        raise InternalError(f"Newton number must be a nonnegative integer, got {result}")
    return int(result)


def _area_under(diagram: NewtonDiagram) -> Fraction:
    poly = [(Fraction(0), Fraction(0))]
    poly += [(Fraction(i), Fraction(j)) for i, j in diagram.vertices]
    return _polygon_area(poly)


def _polygon_area(points) -> Fraction:
    total = Fraction(0)
    n = len(points)
    for k in range(n):
        x1, y1 = points[k]
        x2, y2 = points[(k + 1) % n]
        total += x1 * y2 - x2 * y1
    return abs(total) / 2


def delta_N_convenient(diagram: NewtonDiagram) -> int:
    """Newton delta invariant of a convenient diagram: area under the
    diagram, minus half the axis intercepts, plus half the total lattice
    length of the edges."""
    if not diagram.convenient:
        raise DomainError("diagram is not convenient")
    v2 = _area_under(diagram)
    v1 = diagram.ck + diagram.e0
    total_length = sum(e.length for e in diagram.edges)
    value = v2 - Fraction(v1, 2) + Fraction(total_length, 2)
    if value.denominator != 1 or value < 0:
        raise InternalError(f"Newton delta invariant must be integral, got {value}")
    return int(value)


# ---------------------------------------------------------------------------
# stabilization for non-convenient germs


def stabilization_bound(f: BivarPoly) -> int | None:
    """The exponent bound beyond which adjoining x^m + y^m freezes the
    inner part of the diagram; None when the recipe does not apply
    (then callers fall back to the escalation loop)."""
    d = newton_diagram(f)
    n1 = _axis_bound(d, x_side=False)
    m1 = _axis_bound(d, x_side=True)
    if n1 is None or m1 is None:
        return None
    return max(n1, m1)


def _axis_bound(d: NewtonDiagram, x_side: bool) -> int | None:
    if x_side:
        if d.vertices[-1][1] == 0:
            return d.vertices[-1][0]
        val = d.x_at(Fraction(1))
    else:
        if d.vertices[0][0] == 0:
            return d.vertices[0][1]
        val = d.y_at(Fraction(1))
    if val is None:
        return None
    doubled = 2 * val
    return int(math.ceil(doubled)) if doubled.denominator != 1 else int(doubled)


def _validate_germ(f: BivarPoly) -> None:
    if f.is_zero():
        raise DomainError("zero polynomial")
    if f.is_unit_at_origin():
        raise DomainError("polynomial is a unit at the origin")


def with_axis_terms(f: BivarPoly, m: int) -> BivarPoly:
    return f + BivarPoly.monomial(f.tower, m, 0) + BivarPoly.monomial(f.tower, 0, m)


def _next_admissible(f: BivarPoly, m: int) -> int:
    minus_one = -f.tower.one()
    while f.coeff(m, 0) == minus_one or f.coeff(0, m) == minus_one:
        m += 1
    return m


def stabilized_diagram(f: BivarPoly) -> tuple[NewtonDiagram, int]:
    """Diagram of f + x^m + y^m at a certified exponent m: two consecutive
    admissible exponents must produce the same intersection with
    {x >= 1, y >= 1}, which pins the supremum-defined invariants.

    Exponents m whose axis coefficient would cancel are skipped; the
    admissible ones are cofinal so the supremum is unaffected.
    """
    bound = stabilization_bound(f) or 0
    m1 = _next_admissible(f, max(bound + 1, f.max_exponent() + 2, 3))
    while True:
        m2 = _next_admissible(f, m1 + 1)
        d1 = newton_diagram(with_axis_terms(f, m1))
        d2 = newton_diagram(with_axis_terms(f, m2))
        if not d1.convenient or not d2.convenient:
            raise InternalError("stabilized diagram must be convenient")
        if r1_clip(d1) == r1_clip(d2):
            return d1, m1
        m1 = _next_admissible(f, 2 * m2)
        if m1 > MAX_STAB_EXPONENT:
            raise InternalError("stabilization sweep failed to converge")


def _diverges(f: BivarPoly) -> bool:
    # a repeated axis factor makes the inner cone grow without bound
    return f.x_divisor_exponent() >= 2 or f.y_divisor_exponent() >= 2


def mu_N(f: BivarPoly) -> ExtNat:
    """Newton number of a germ, convenient or not."""
    _validate_germ(f)
    d = newton_diagram(f)
    if d.convenient:
        return ExtNat(mu_N_convenient(d))
    if _diverges(f):
        return INFINITY
    dd, _ = stabilized_diagram(f)
    return ExtNat(mu_N_convenient(dd))


def delta_N(f: BivarPoly) -> ExtNat:
    """Newton delta invariant of a germ, convenient or not."""
    _validate_germ(f)
    d = newton_diagram(f)
    if d.convenient:
        return ExtNat(delta_N_convenient(d))
    if _diverges(f):
        return INFINITY
    dd, _ = stabilized_diagram(f)
    return ExtNat(delta_N_convenient(dd))


# ---------------------------------------------------------------------------
# edge-counting invariants


def edge_initial_form(f: BivarPoly, edge: EdgeData) -> BivarPoly:
    return initial_form_along(f, (edge.start, edge.end))


def edge_compression(f: BivarPoly, edge: EdgeData) -> CompressedForm:
    return compress(edge_initial_form(f, edge), edge.m0, edge.n0)


def r_N(f: BivarPoly) -> int:
    """Total lattice length of the diagram edges plus the exponents of the
    maximal monomial divisors."""
    _validate_germ(f)
    d = newton_diagram(f)
    return sum(e.length for e in d.edges) + sum(d.monomial_divisors)


def s_N(f: BivarPoly) -> int:
    """Number of distinct non-monomial edge factors over the closure,
    summed over edges, plus the monomial divisor exponents.

    Counted as the degree of the squarefree part of each edge compression,
    which is exact because the coefficient fields are perfect.
    """
    _validate_germ(f)
    d = newton_diagram(f)
    total = sum(d.monomial_divisors)
    for e in d.edges:
        h = edge_compression(f, e).hpoly
        total += squarefree_part(h).degree
    return total


def iter_faces(d: NewtonDiagram) -> Iterator[tuple[str, int]]:
    """All faces as (kind, index) pairs: vertices then edges."""
    for i in range(len(d.vertices)):
        yield ("vertex", i)
    for i in range(len(d.edges)):
        yield ("edge", i)
