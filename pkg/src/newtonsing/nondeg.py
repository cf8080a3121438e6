"""Non-degeneracy of a germ along diagram faces, and the global
classifiers built from the per-face verdicts.

Every closure-level statement (torus zeros of an ideal, distinct-factor
counts, divisibility by conjugate linear factors) is decided by gcd and
squarefree computations over the base field; this is exact because the
base fields are perfect and divisor sets are Galois stable, so the
classifier never has to construct a splitting field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bivar import BivarPoly, compress, initial_form_along, weighted_decomposition
from .errors import DomainError, InternalError
from .newton import (EdgeData, NewtonDiagram, Point, _next_admissible,
                     _validate_germ, edge_compression, edge_initial_form,
                     newton_diagram, stabilization_bound, with_axis_terms)
from .unipoly import UniPoly, squarefree_decomposition, uni_gcd


@dataclass(frozen=True)
class ZeroLocusSummary:
    """Where the common zeros of a quasihomogeneous Jacobian pair lie,
    split by orbit type: the torus, the two punctured axes, the origin."""

    has_torus: bool
    has_x_axis: bool
    has_y_axis: bool
    has_origin: bool


@dataclass(frozen=True)
class FaceRef:
    """A face of a diagram: its kind, position, and whether it avoids the
    coordinate axes.  Planar edges are always inner."""

    kind: str  # "vertex" or "edge"
    index: int
    inner: bool


@dataclass(frozen=True)
class CPolytope:
    """A convenient diagram used as the compact polytope for the inner
    non-degeneracy test, together with the axis exponent it came from."""

    diagram: NewtonDiagram
    m: int

    def __post_init__(self):
        if not self.diagram.convenient:
            raise InternalError("a C-polytope must touch both axes")


@dataclass(frozen=True)
class FaceVerdict:
    face: FaceRef
    points: tuple[Point, ...]
    nd: bool | None = None
    ind: bool | None = None
    wnd: bool | None = None
    whnd: bool | None = None


@dataclass(frozen=True)
class NonDegReport:
    """Per-face verdicts plus the global flags, which are exactly the
    conjunctions of the relevant per-face results."""

    gamma_faces: tuple[FaceVerdict, ...]
    cpoly_faces: tuple[FaceVerdict, ...]
    nnd: bool
    innd: bool
    innd_m: int
    wnnd: bool
    wnnd_vacuous: bool
    whnnd: bool
    nnd1: bool
    nd1_x_vertex: bool | None
    nd1_y_vertex: bool | None


# ---------------------------------------------------------------------------
# zero locus of a quasihomogeneous Jacobian pair


def _restricts_to_zero_on_x_axis(h: BivarPoly) -> bool:
    return all(j > 0 for _, j in h.support())


def _restricts_to_zero_on_y_axis(h: BivarPoly) -> bool:
    return all(i > 0 for i, _ in h.support())


def jacobian_zero_locus(g: BivarPoly, m0: int, n0: int) -> ZeroLocusSummary:
    """Zero locus of the pair of partials of g over the closure, decided
    by compressions: two quasihomogeneous polynomials with the same
    weights share a torus orbit exactly when their compressions share a
    root, and roots of a compression are never zero."""
    if not g.is_quasihomogeneous(n0, m0):
        raise InternalError("jacobian_zero_locus needs a quasihomogeneous input")
    gx = g.partial_x()
    gy = g.partial_y()
    if gx.is_zero() and gy.is_zero():
        return ZeroLocusSummary(True, True, True, True)
    if gx.is_zero() or gy.is_zero():
        other = gy if gx.is_zero() else gx
        torus = compress(other, m0, n0).hpoly.degree >= 1
    else:
        hx = compress(gx, m0, n0).hpoly
        hy = compress(gy, m0, n0).hpoly
        torus = uni_gcd(hx, hy).degree >= 1
    x_axis = ((gx.is_zero() or _restricts_to_zero_on_x_axis(gx))
              and (gy.is_zero() or _restricts_to_zero_on_x_axis(gy)))
    y_axis = ((gx.is_zero() or _restricts_to_zero_on_y_axis(gx))
              and (gy.is_zero() or _restricts_to_zero_on_y_axis(gy)))
    origin = gx.vanishes_at_origin() and gy.vanishes_at_origin()
    return ZeroLocusSummary(has_torus=torus, has_x_axis=x_axis,
                            has_y_axis=y_axis, has_origin=origin)


def _face_weights(points: tuple[Point, ...]) -> tuple[int, int]:
    """Primitive weights (m0, n0) of a face; a vertex is quasihomogeneous
    for every choice, so (1, 1) serves."""
    if len(points) == 1:
        return 1, 1
    (x1, y1), (x2, y2) = sorted(points)
    dc = x2 - x1
    de = y1 - y2
    ell = math.gcd(dc, de)
    return dc // ell, de // ell


def _zero_locus_on_face(f: BivarPoly, points: tuple[Point, ...]) -> ZeroLocusSummary:
    g = initial_form_along(f, points)
    m0, n0 = _face_weights(points)
    if g.is_zero():
        # the zero ideal vanishes everywhere
        return ZeroLocusSummary(True, True, True, True)
    return jacobian_zero_locus(g, m0, n0)


# ---------------------------------------------------------------------------
# per-face decision procedures


def nd_along(f: BivarPoly, points) -> bool:
    """Non-degeneracy along a face: the Jacobian ideal of the initial form
    has no zero in the torus."""
    return not _zero_locus_on_face(f, tuple(points)).has_torus


def ind_along(f: BivarPoly, points, polytope: CPolytope) -> bool:
    """Inner non-degeneracy along an inner face of a C-polytope: a torus
    zero always obstructs, an axis zero obstructs when the face reaches
    that axis, an origin zero never does."""
    points = tuple(points)
    if len(points) == 1 and (points[0][0] == 0 or points[0][1] == 0):
        raise DomainError("inner non-degeneracy is only defined on inner faces")
    locus = _zero_locus_on_face(f, points)
    if locus.has_torus:
        return False
    meets_y_axis = any(i == 0 for i, _ in points)
    meets_x_axis = any(j == 0 for _, j in points)
    if locus.has_y_axis and meets_y_axis:
        return False
    if locus.has_x_axis and meets_x_axis:
        return False
    return True


def wnd_along_edge(f: BivarPoly, edge: EdgeData) -> bool:
    """Weak non-degeneracy along an edge, decided twice and cross-checked:
    no common nonzero root of the compressions of the edge form and its
    partials, equivalently a squarefree edge compression."""
    g = edge_initial_form(f, edge)
    h = compress(g, edge.m0, edge.n0).hpoly
    common = h
    for partial in (g.partial_x(), g.partial_y()):
        if partial.is_zero():
            continue
        common = uni_gcd(common, compress(partial, edge.m0, edge.n0).hpoly)
    tjurina_route = common.degree == 0
    squarefree_route = all(m == 1 for _, m in squarefree_decomposition(h))
    if tjurina_route != squarefree_route:
        raise InternalError("weak non-degeneracy routes disagree")
    return tjurina_route


def whnd_along_edge(f: BivarPoly, edge: EdgeData) -> bool:
    """Weighted-homogeneous non-degeneracy along an edge: repeated edge
    factors must not divide the next weighted-homogeneous part.

    The repeated factors are collected into a base-field radical R; the
    test gcd(R, compression of the next part) = 1 is exact by Galois
    stability.  A vanishing next part is divisible by everything, so any
    repeated factor then already decides degeneracy.
    """
    h = edge_compression(f, edge).hpoly
    repeated = UniPoly.constant(f.tower, 1)
    for g, m in squarefree_decomposition(h):
        if m >= 2:
            repeated = repeated * g
    if repeated.degree == 0:
        return True
    nxt = f.weighted_part(edge.n0, edge.m0, edge.degree + 1)
    if nxt.is_zero():
        return False
    lhat = compress(nxt, edge.m0, edge.n0).hpoly
    return uni_gcd(repeated, lhat).degree == 0


def nd1_along_axis_vertex(f: BivarPoly, axis: str) -> bool:
    """The first-neighbourhood condition at the diagram vertex on the given
    axis ("x" for the vertex (m, 0), "y" for (0, n)): automatic unless the
    characteristic divides the axis degree, in which case the diagram must
    pass through a support point one step off the axis."""
    d = newton_diagram(f)
    p = f.tower.p
    if axis == "y":
        if d.c0 != 0:
            raise DomainError("no vertex on the y-axis")
        n = d.e0
        if p == 0 or n % p != 0:
            return True
        j1 = d.y_at(1)
        if j1 is None or j1.denominator != 1:
            return False
        return not f.coeff(1, int(j1)).is_zero()
    if axis == "x":
        if d.ek != 0:
            raise DomainError("no vertex on the x-axis")
        m = d.ck
        if p == 0 or m % p != 0:
            return True
        i1 = d.x_at(1)
        if i1 is None or i1.denominator != 1:
            return False
        return not f.coeff(int(i1), 1).is_zero()
    raise DomainError(f"axis must be 'x' or 'y', got {axis!r}")


# ---------------------------------------------------------------------------
# global classifiers


def innd_exponent(f: BivarPoly) -> int:
    """Axis exponent used to build the C-polytope for the inner test."""
    bound = stabilization_bound(f) or 0
    return _next_admissible(f, max(bound, f.max_exponent()) + 1)


def c_polytope(f: BivarPoly, m: int | None = None) -> CPolytope:
    m = innd_exponent(f) if m is None else m
    return CPolytope(diagram=newton_diagram(with_axis_terms(f, m)), m=m)


def _inner_faces(d: NewtonDiagram):
    for idx, (i, j) in enumerate(d.vertices):
        if i > 0 and j > 0:
            yield FaceRef("vertex", idx, True), ((i, j),)
    for idx, e in enumerate(d.edges):
        yield FaceRef("edge", idx, True), (e.start, e.end)


def innd_wrt(f: BivarPoly, m: int) -> bool:
    """Inner Newton non-degeneracy with respect to the diagram of
    f + x^m + y^m; the verdict is independent of admissible m past the
    stabilization bound."""
    poly = c_polytope(f, m)
    if any(not poly.diagram.contains_on_or_above(pt) for pt in f.support()):
        return False
    return all(ind_along(f, pts, poly) for _, pts in _inner_faces(poly.diagram))


def classify(f: BivarPoly) -> NonDegReport:
    """Evaluate every face of the diagram and assemble the global flags."""
    _validate_germ(f)
    d = newton_diagram(f)

    gamma_faces = []
    for idx, v in enumerate(d.vertices):
        inner = v[0] > 0 and v[1] > 0
        gamma_faces.append(FaceVerdict(face=FaceRef("vertex", idx, inner),
                                       points=(v,), nd=nd_along(f, (v,))))
    for idx, e in enumerate(d.edges):
        pts = (e.start, e.end)
        gamma_faces.append(FaceVerdict(face=FaceRef("edge", idx, True), points=pts,
                                       nd=nd_along(f, pts),
                                       wnd=wnd_along_edge(f, e),
                                       whnd=whnd_along_edge(f, e)))
    nnd = all(v.nd for v in gamma_faces)
    edge_verdicts = [v for v in gamma_faces if v.face.kind == "edge"]
    wnnd_vacuous = not edge_verdicts
    # with no edge the only face is a monomial, which never vanishes on
    # the torus, so the weak condition holds vacuously
    wnnd = all(v.wnd for v in edge_verdicts)
    whnnd = all(v.whnd for v in edge_verdicts)

    m = innd_exponent(f)
    poly = c_polytope(f, m)
    cpoly_faces = []
    supp_ok = all(poly.diagram.contains_on_or_above(pt) for pt in f.support())
    for ref, pts in _inner_faces(poly.diagram):
        cpoly_faces.append(FaceVerdict(face=ref, points=pts,
                                       ind=ind_along(f, pts, poly)))
    innd = supp_ok and all(v.ind for v in cpoly_faces)

    nd1_y = nd1_along_axis_vertex(f, "y") if d.c0 == 0 else None
    nd1_x = nd1_along_axis_vertex(f, "x") if d.ek == 0 else None
    if d.convenient:
        inner_nd = all(v.nd for v in gamma_faces if v.face.inner)
        nnd1 = inner_nd and bool(nd1_x) and bool(nd1_y)
    else:
        nnd1 = False

    return NonDegReport(gamma_faces=tuple(gamma_faces),
                        cpoly_faces=tuple(cpoly_faces),
                        nnd=nnd, innd=innd, innd_m=m,
                        wnnd=wnnd, wnnd_vacuous=wnnd_vacuous,
                        whnnd=whnnd, nnd1=nnd1,
                        nd1_x_vertex=nd1_x, nd1_y_vertex=nd1_y)
