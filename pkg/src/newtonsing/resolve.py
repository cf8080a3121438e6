"""Blow-up resolution of reduced germs over finite fields.

The tree of infinitely near points is unfolded by repeatedly blowing up
every point of multiplicity at least two.  Tangent directions are the
roots of the compressed tangent cone; when a direction is not rational
over the current tower the tower is extended by the corresponding
irreducible factor, under which the factor splits completely, and one
child node is created per root.  Every node therefore stands for a
single point over the algebraic closure and the invariants are plain
sums over nodes.

Each child owns its tower; towers are persistent values and sibling
subtrees never share mutable state.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .bivar import BivarPoly, bivar_gcd, blow_up_chart1, blow_up_chart2, compress
from .errors import DomainError, InternalError
from .unipoly import factor_finite_field, roots_in_field, extend_tower

#: recursion guards; reduced inputs stay far below these
MAX_DEPTH = 256
MAX_TOWER_DEGREE = 1 << 12


@dataclass
class BlowUpNode:
    """An infinitely near point: its local equation, multiplicity, the
    chart-origin chain flag, and the subtree of points above it."""

    local_eq: BivarPoly
    mult: int
    special: bool
    depth: int
    direction: str
    children: tuple["BlowUpNode", ...] = field(default=())

    @property
    def tower(self):
        return self.local_eq.tower

    @property
    def leaf(self) -> bool:
        return self.mult == 1

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()

    def to_json(self) -> dict:
        return {
            "mult": self.mult,
            "special": self.special,
            "depth": self.depth,
            "direction": self.direction,
            "tower_degree": self.tower.degree,
            "children": [c.to_json() for c in self.children],
        }


@dataclass(frozen=True)
class ResolutionSummary:
    delta: int
    nu: int
    branches: int
    multiplicities: tuple[int, ...]
    max_depth: int
    max_tower_degree: int


def is_reduced(f: BivarPoly) -> bool:
    """No repeated factor: the gcd of f with both partials is constant.
    If both partials vanish identically, f is a p-th power over a perfect
    field, hence not reduced."""
    if f.is_zero():
        raise DomainError("zero polynomial")
    fx = f.partial_x()
    fy = f.partial_y()
    if fx.is_zero() and fy.is_zero():
        return False
    h = bivar_gcd(bivar_gcd(f, fx), fy)
    return h.total_degree() == 0


def blow_up_children(node: BlowUpNode, rng: random.Random | None = None
                     ) -> list[tuple[str, bool, BivarPoly]]:
    """Strict transforms in the first neighbourhood of a point.

    Returns (direction descriptor, chart-origin flag, transform) triples:
    the chart-2 point over each root of the compressed tangent cone, the
    chart-2 origin when x divides the cone, and the chart-1 origin when y
    does.  The two monomial directions are the chart origins.
    """
    f = node.local_eq
    tower = f.tower
    m = node.mult
    cone = f.weighted_part(1, 1, m)
    cf = compress(cone, 1, 1)
    out: list[tuple[str, bool, BivarPoly]] = []
    if cf.alpha > 0:
        out.append(("(0:1)", True, blow_up_chart2(f, tower.zero(), m)))
    for q, _mult in factor_finite_field(cf.hpoly, rng):
        if q.degree == 1:
            roots = [-q.coeff(0)]
            f_here = f
        else:
            new_tower, embed, _root = extend_tower(tower, q)
            if new_tower.degree > MAX_TOWER_DEGREE:
                raise InternalError("tower degree cap exceeded during resolution")
            f_here = f.map_coefficients(embed, new_tower)
            q_up = q.map_coefficients(embed, new_tower)
            split = roots_in_field(q_up, rng)
            if len(split) != q.degree:
                raise InternalError("irreducible factor failed to split "
                                    "over its own extension")
            roots = [c for c, _ in split]
            roots.sort(key=lambda c: c.sort_key())
        for c in roots:
            out.append((f"({c}:1)", False, blow_up_chart2(f_here, c, m)))
    if cf.beta > 0:
        out.append(("(1:0)", True, blow_up_chart1(f, m)))
    for _, _, transform in out:
        if not transform.vanishes_at_origin():
            raise InternalError("strict transform missed the blown-up point")
    return out


def resolution_tree(f: BivarPoly, rng: random.Random | None = None) -> BlowUpNode:
    """Resolve the germ at the origin by successive point blow-ups; stops
    at multiplicity-one points."""
    if f.tower.p == 0:
        raise DomainError("resolution requires finite characteristic")
    if f.is_zero():
        raise DomainError("zero polynomial")
    if f.is_unit_at_origin():
        raise DomainError("germ must vanish at the origin")
    if not is_reduced(f):
        raise DomainError("germ must be reduced")
    if rng is None:
        rng = random.Random(0x5eed)

    def build(local_eq: BivarPoly, special: bool, depth: int, direction: str) -> BlowUpNode:
        if depth > MAX_DEPTH:
            raise InternalError("blow-up depth cap exceeded")
        node = BlowUpNode(local_eq=local_eq, mult=local_eq.multiplicity(),
                          special=special, depth=depth, direction=direction)
        if node.mult >= 2:
            kids = []
            for descr, chart_origin, transform in blow_up_children(node, rng):
                kids.append(build(transform, chart_origin and special,
                                  depth + 1, descr))
            node.children = tuple(kids)
        return node

    return build(f, True, 0, "origin")


def resolution_summary(root: BlowUpNode) -> ResolutionSummary:
    delta = 0
    nu = 0
    branches = 0
    mults = []
    max_depth = 0
    max_deg = 1
    for node in root.walk():
        contrib = node.mult * (node.mult - 1) // 2
        delta += contrib
        if node.special:
            nu += contrib
        if node.leaf:
            branches += 1
        mults.append(node.mult)
        max_depth = max(max_depth, node.depth)
        max_deg = max(max_deg, node.tower.degree)
    mults.sort(reverse=True)
    return ResolutionSummary(delta=delta, nu=nu, branches=branches,
                             multiplicities=tuple(mults),
                             max_depth=max_depth, max_tower_degree=max_deg)


def delta(f: BivarPoly) -> int:
    """Sum of m(m-1)/2 over all infinitely near points."""
    return resolution_summary(resolution_tree(f)).delta


def nu(f: BivarPoly) -> int:
    """Same sum restricted to the chart-origin chain."""
    return resolution_summary(resolution_tree(f)).nu


def branch_count(f: BivarPoly) -> int:
    """Number of branches over the closure (leaves of the tree)."""
    return resolution_summary(resolution_tree(f)).branches


def is_superisolated(f: BivarPoly) -> bool:
    """Regular after a single blow-up: every first-neighbourhood strict
    transform is smooth."""
    root = resolution_tree(f)
    return all(child.mult == 1 for child in root.children)
