"""Univariate polynomials over a field tower.

Provides the polynomial algebra the rest of the package is built on:
gcd, characteristic-aware squarefree decomposition, and complete
factorization over finite fields (distinct-degree splitting followed by
Cantor-Zassenhaus equal-degree splitting, with the char-2 trace-map
variant).  Also the only public way to grow a tower: ``extend_tower``.
"""

from __future__ import annotations

import random
from typing import Callable, Iterable, Sequence

from .algebra import FElem, FieldTower, _rp_divmod, _rp_mul, _rp_sub, _rp_trim
from .errors import DomainError, InternalError, TowerMismatchError


class UniPoly:
    """A dense univariate polynomial, coefficients ascending, no trailing
    zeros.  The zero polynomial has an empty coefficient list."""

    __slots__ = ("tower", "_c")

    def __init__(self, tower: FieldTower, coeffs: Iterable = ()):
        raws = []
        for c in coeffs:
            if isinstance(c, FElem):
                if c.tower != tower:
                    raise TowerMismatchError("coefficient from a different tower")
                raws.append(c.raw)
            else:
                raws.append(tower.element(c).raw)
        self.tower = tower
        self._c = tuple(_rp_trim(tower, tower.num_levels, raws))

    @classmethod
    def _from_raw(cls, tower: FieldTower, raws: Sequence) -> "UniPoly":
        poly = object.__new__(cls)
        poly.tower = tower
        poly._c = tuple(_rp_trim(tower, tower.num_levels, list(raws)))
        return poly

    @classmethod
    def gen(cls, tower: FieldTower) -> "UniPoly":
        """The polynomial T."""
        return cls._from_raw(tower, [tower.raw_zero(), tower.raw_one()])

    @classmethod
    def constant(cls, tower: FieldTower, value) -> "UniPoly":
        return cls(tower, [value])

    # -- inspection ----------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def coeff(self, i: int) -> FElem:
        if 0 <= i < len(self._c):
            return FElem(self.tower, self._c[i])
        return self.tower.zero()

    @property
    def coefficients(self) -> tuple[FElem, ...]:
        return tuple(FElem(self.tower, r) for r in self._c)

    def lead(self) -> FElem:
        if not self._c:
            raise DomainError("zero polynomial has no leading coefficient")
        return FElem(self.tower, self._c[-1])

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == self.tower.raw_one()

    def sort_key(self):
        from .algebra import _raw_key
        return (self.degree, tuple(_raw_key(r) for r in self._c))

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "UniPoly") -> None:
        if self.tower != other.tower:
            raise TowerMismatchError("mixed field towers")

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        t, lvl = self.tower, self.tower.num_levels
        a, b = list(self._c), list(other._c)
        if len(a) < len(b):
            a, b = b, a
        for i, x in enumerate(b):
            a[i] = t.raw_add(a[i], x, lvl)
        return UniPoly._from_raw(t, a)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        return UniPoly._from_raw(
            self.tower,
            _rp_sub(self.tower, self.tower.num_levels, list(self._c), list(other._c)))

    def __neg__(self) -> "UniPoly":
        t = self.tower
        return UniPoly._from_raw(t, [t.raw_neg(x) for x in self._c])

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, FElem):
            other = UniPoly.constant(self.tower, other)
        self._check(other)
        return UniPoly._from_raw(
            self.tower,
            _rp_mul(self.tower, self.tower.num_levels, list(self._c), list(other._c)))

    def __rmul__(self, other) -> "UniPoly":
        return self.__mul__(other)

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        self._check(other)
        q, r = _rp_divmod(self.tower, self.tower.num_levels,
                          list(self._c), list(other._c))
        return UniPoly._from_raw(self.tower, q), UniPoly._from_raw(self.tower, r)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise InternalError("division expected to be exact")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero() or self.is_monic():
            return self
        t, lvl = self.tower, self.tower.num_levels
        inv = t.raw_inv(self._c[-1])
        return UniPoly._from_raw(t, [t.raw_mul(x, inv, lvl) for x in self._c])

    def derivative(self) -> "UniPoly":
        t = self.tower
        out = [t.raw_mul(t.raw_from_int(i), c) for i, c in enumerate(self._c) if i > 0]
        return UniPoly._from_raw(t, out)

    def shift(self, k: int) -> "UniPoly":
        """Multiply by T^k."""
        if self.is_zero():
            return self
        z = self.tower.raw_zero()
        return UniPoly._from_raw(self.tower, [z] * k + list(self._c))

    def __call__(self, x: FElem) -> FElem:
        t = self.tower
        acc = t.raw_zero()
        for c in reversed(self._c):
            acc = t.raw_add(t.raw_mul(acc, x.raw), c)
        return FElem(t, acc)

    def compose_mod(self, h: "UniPoly", mod: "UniPoly") -> "UniPoly":
        """self(h) reduced modulo mod (Horner)."""
        acc = UniPoly(self.tower)
        for c in reversed(self.coefficients):
            acc = (acc * h + UniPoly.constant(self.tower, c)) % mod
        return acc

    def pow_mod(self, e: int, mod: "UniPoly") -> "UniPoly":
        if e < 0:
            raise DomainError("negative exponent")
        result = UniPoly.constant(self.tower, 1) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def __pow__(self, e: int) -> "UniPoly":
        result = UniPoly.constant(self.tower, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def map_coefficients(self, fn: Callable[[FElem], FElem],
                         tower: FieldTower | None = None) -> "UniPoly":
        tower = tower or self.tower
        return UniPoly(tower, [fn(c) for c in self.coefficients])

    # -- comparisons ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, UniPoly) and self.tower == other.tower
                and self._c == other._c)

    def __hash__(self) -> int:
        return hash((self.tower, self._c))

    def __repr__(self) -> str:
        return f"UniPoly({self})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeff(i)
            if c.is_zero():
                continue
            cs = str(c)
            if i == 0:
                parts.append(cs)
            else:
                var = "T" if i == 1 else f"T^{i}"
                parts.append(var if c.is_one() else f"{cs}*{var}")
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# gcd and squarefree structure


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor; gcd(a, 0) = monic(a), gcd(0, 0) = 0."""
    if a.tower != b.tower:
        raise TowerMismatchError("gcd of polynomials over different towers")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def _pth_root_poly(a: UniPoly) -> UniPoly:
    """For a in K[T^p] return the polynomial v with v^p = a."""
    p = a.tower.p
    coeffs = []
    for i in range(0, a.degree + 1, p):
        coeffs.append(a.coeff(i).pth_root())
        for j in range(i + 1, min(i + p, a.degree + 1)):
            if not a.coeff(j).is_zero():
                raise InternalError("polynomial is not a p-th power")
    return UniPoly(a.tower, coeffs)


def squarefree_decomposition(a: UniPoly) -> list[tuple[UniPoly, int]]:
    """Write monic(a) as a product of pairwise coprime monic squarefree
    factors with strictly increasing multiplicities.

    Correct in any characteristic; inputs lying in K[T^p] are handled by
    taking p-th roots of coefficients, which over a finite field is the
    inverse Frobenius applied levelwise.
    """
    if a.is_zero():
        raise DomainError("squarefree decomposition of the zero polynomial")
    a = a.monic()
    out: dict[int, UniPoly] = {}
    _squarefree_into(a, 1, out)
    return [(out[m], m) for m in sorted(out)]


def _squarefree_into(a: UniPoly, scale: int, out: dict[int, UniPoly]) -> None:
    if a.degree == 0:
        return
    c = uni_gcd(a, a.derivative())
    w = a.exact_div(c)
    i = 1
    while w.degree > 0:
        y = uni_gcd(w, c)
        z = w.exact_div(y)
        if z.degree > 0:
            out[i * scale] = z
        w = y
        c = c.exact_div(y)
        i += 1
    if c.degree > 0:
        p = a.tower.p
        if p == 0:
            raise InternalError("derivative gcd failed to terminate over QQ")
        _squarefree_into(_pth_root_poly(c), scale * p, out)


def squarefree_part(a: UniPoly) -> UniPoly:
    """Product of the distinct monic irreducible factors of a."""
    result = UniPoly.constant(a.tower, 1)
    for g, _ in squarefree_decomposition(a):
        result = result * g
    return result


# ---------------------------------------------------------------------------
# factorization over finite fields


def _frobenius_power_chain(f: UniPoly) -> Callable[[UniPoly], UniPoly]:
    """Return phi with phi(g) = g^q mod f for the field size q, computed by
    modular composition with T^q mod f."""
    q = f.tower.size
    xq = UniPoly.gen(f.tower).pow_mod(q, f)
    return lambda g: g.compose_mod(xq, f)


def _distinct_degree(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Split monic squarefree f into (product of irreducibles of degree d, d)."""
    out = []
    t = f.tower
    x = UniPoly.gen(t)
    frob = _frobenius_power_chain(f)
    h = frob(x)
    fstar = f
    d = 1
    while fstar.degree >= 2 * d:
        g = uni_gcd(fstar, h - x)
        if g.degree > 0:
            out.append((g, d))
            fstar = fstar.exact_div(g)
        d += 1
        h = frob(h)
    if fstar.degree > 0:
        out.append((fstar, fstar.degree))
    return out


def _equal_degree(f: UniPoly, d: int, rng: random.Random) -> list[UniPoly]:
    """Cantor-Zassenhaus split of a product of distinct irreducibles of
    degree d; char-2 towers use the trace map."""
    if f.degree == d:
        return [f.monic()]
    t = f.tower
    q = t.size
    one = UniPoly.constant(t, 1)
    while True:
        a = UniPoly(t, [t.random_element(rng) for _ in range(f.degree)])
        if a.is_constant():
            continue
        g = uni_gcd(a, f)
        if 0 < g.degree < f.degree:
            break
        if t.p == 2:
            # trace map over GF(2^k): sum of a^(2^i) for i < k*d
            b = a % f
            acc = b
            steps = t.degree * d
            for _ in range(steps - 1):
                b = (b * b) % f
                acc = (acc + b) % f
            g = uni_gcd(acc, f)
        else:
            b = a.pow_mod((q ** d - 1) // 2, f)
            g = uni_gcd(b - one, f)
        if 0 < g.degree < f.degree:
            break
    return _equal_degree(g, d, rng) + _equal_degree(f.exact_div(g), d, rng)


def factor_finite_field(a: UniPoly,
                        rng: random.Random | None = None) -> list[tuple[UniPoly, int]]:
    """Complete factorization into monic irreducibles with multiplicities.

    The equal-degree stage is randomized; it draws from the given
    generator (a fixed default seed otherwise) and the output is sorted
    canonically, so results are reproducible.
    """
    if a.is_zero():
        raise DomainError("factorization of the zero polynomial")
    if a.tower.p == 0:
        raise DomainError("factor_finite_field requires finite characteristic")
    if rng is None:
        rng = random.Random(0x5eed)
    factors: list[tuple[UniPoly, int]] = []
    for g, m in squarefree_decomposition(a):
        for h, d in _distinct_degree(g):
            for irr in _equal_degree(h, d, rng):
                factors.append((irr, m))
    factors.sort(key=lambda fm: fm[0].sort_key())
    return factors


def roots_in_field(a: UniPoly, rng: random.Random | None = None) -> list[tuple[FElem, int]]:
    """Roots of a lying in its own coefficient field, with multiplicities."""
    out = []
    for g, m in factor_finite_field(a, rng):
        if g.degree == 1:
            out.append((-g.coeff(0), m))
    return out


def is_irreducible(a: UniPoly) -> bool:
    """Rabin's test over a finite field."""
    if a.tower.p == 0:
        raise DomainError("irreducibility test requires finite characteristic")
    if a.degree < 1:
        return False
    if a.degree == 1:
        return True
    f = a.monic()
    t = f.tower
    x = UniPoly.gen(t)
    frob = _frobenius_power_chain(f)
    n = f.degree
    prime_divs = _prime_divisors(n)
    powers = {}
    h = x
    for i in range(1, n + 1):
        h = frob(h)
        powers[i] = h
    if powers[n] != x % f:
        return False
    for ell in prime_divs:
        if uni_gcd(powers[n // ell] - x, f).degree != 0:
            return False
    return True


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# tower extension


def extend_tower(tower: FieldTower, q: UniPoly):
    """Adjoin a root of the monic irreducible polynomial q.

    Returns ``(new_tower, embed, root)`` where ``embed`` lifts elements of
    the old tower and ``root`` satisfies ``q(root) = 0``.
    """
    if tower.p == 0:
        raise DomainError("extensions of the rationals are not supported")
    if q.tower != tower:
        raise TowerMismatchError("defining polynomial over the wrong tower")
    if q.degree < 2:
        raise DomainError("defining polynomial must have degree >= 2")
    if not q.is_monic():
        raise DomainError("defining polynomial must be monic")
    if not is_irreducible(q):
        raise DomainError("defining polynomial is reducible")
    new_tower = FieldTower(tower.p, tower.levels + (q._c,))
    zero_below = tower.raw_zero()
    width = q.degree

    def embed(e: FElem) -> FElem:
        if e.tower != tower:
            raise TowerMismatchError("embedding an element of the wrong tower")
        return FElem(new_tower, (e.raw,) + (zero_below,) * (width - 1))

    root = FElem(new_tower,
                 (zero_below, tower.raw_one()) + (zero_below,) * (width - 2))
    return new_tower, embed, root
