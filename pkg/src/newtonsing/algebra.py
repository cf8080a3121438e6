"""Exact coefficient fields: the rationals and towers of finite field
extensions.

A :class:`FieldTower` is either the rationals (characteristic 0, no
levels) or a prime field with a chain of extensions, each given by a
monic irreducible defining polynomial over the field below it.  Elements
are stored in a canonical nested form:

* characteristic 0: a ``Fraction``,
* prime field: an ``int`` in ``[0, p)``,
* level ``k >= 1``: a tuple of fixed length (the degree of the level-k
  defining polynomial) whose entries are level ``k-1`` values.

Towers are immutable values; two towers compare equal when they have the
same characteristic and the same chain of defining polynomials, so
elements built independently over equal towers interoperate.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .errors import DomainError, TowerMismatchError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_characteristic(p: int) -> int:
    """Validate that p is zero or prime and return it."""
    if p != 0 and not is_prime(p):
        raise DomainError(f"characteristic must be 0 or prime, got {p}")
    return p


# ---------------------------------------------------------------------------
# raw-value arithmetic, parameterized by (tower, level)
#
# level 0 means the base field; level k means the field after k extensions.


class FieldTower:
    """The rationals, or a finite field built as a chain of extensions."""

    __slots__ = ("p", "_levels", "_degrees", "degree", "_key", "_zero_cache", "_one_cache")

    def __init__(self, characteristic: int, _levels: tuple = ()):
        self.p = check_characteristic(characteristic)
        if self.p == 0 and _levels:
            raise DomainError("extensions of the rationals are not supported")
        # each level is a monic raw coefficient tuple over the levels below;
        # irreducibility is established by extend_tower, the only public
        # way to add a level
        self._levels = _levels
        self._degrees = tuple(len(q) - 1 for q in _levels)
        deg = 1
        for d in self._degrees:
            if d < 2:
                raise DomainError("defining polynomials must have degree >= 2")
            deg *= d
        self.degree = deg
        self._key = (self.p, _levels)
        self._zero_cache: list = []
        self._one_cache: list = []

    # -- structure ---------------------------------------------------------

    @property
    def levels(self) -> tuple["UniPolyView", ...]:
        """Defining polynomials, one per extension level, as coefficient
        tuples of elements of the field below that level."""
        return self._levels

    @property
    def num_levels(self) -> int:
        return len(self._levels)

    @property
    def size(self) -> int | None:
        """Number of elements, or None in characteristic 0."""
        return None if self.p == 0 else self.p ** self.degree

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldTower) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        if self.p == 0:
            return "QQ"
        if not self._levels:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.degree})<{self.num_levels} levels>"

    # -- raw arithmetic ----------------------------------------------------

    def raw_zero(self, level: int | None = None):
        level = self.num_levels if level is None else level
        while len(self._zero_cache) <= level:
            k = len(self._zero_cache)
            if k == 0:
                z = Fraction(0) if self.p == 0 else 0
            else:
                below = self._zero_cache[k - 1]
                z = (below,) * self._degrees[k - 1]
            self._zero_cache.append(z)
        return self._zero_cache[level]

    def raw_one(self, level: int | None = None):
        level = self.num_levels if level is None else level
        while len(self._one_cache) <= level:
            k = len(self._one_cache)
            if k == 0:
                o = Fraction(1) if self.p == 0 else 1
            else:
                below = self._one_cache[k - 1]
                zero = self.raw_zero(k - 1)
                o = (below,) + (zero,) * (self._degrees[k - 1] - 1)
            self._one_cache.append(o)
        return self._one_cache[level]

    def raw_from_int(self, n: int, level: int | None = None):
        level = self.num_levels if level is None else level
        if level == 0:
            return Fraction(n) if self.p == 0 else n % self.p
        below = self.raw_from_int(n, level - 1)
        zero = self.raw_zero(level - 1)
        return (below,) + (zero,) * (self._degrees[level - 1] - 1)

    def raw_is_zero(self, a, level: int | None = None) -> bool:
        return a == self.raw_zero(level)

    def raw_add(self, a, b, level: int | None = None):
        level = self.num_levels if level is None else level
        if level == 0:
            return (a + b) % self.p if self.p else a + b
        k = level - 1
        return tuple(self.raw_add(x, y, k) for x, y in zip(a, b))

    def raw_sub(self, a, b, level: int | None = None):
        level = self.num_levels if level is None else level
        if level == 0:
            return (a - b) % self.p if self.p else a - b
        k = level - 1
        return tuple(self.raw_sub(x, y, k) for x, y in zip(a, b))

    def raw_neg(self, a, level: int | None = None):
        level = self.num_levels if level is None else level
        if level == 0:
            return (-a) % self.p if self.p else -a
        k = level - 1
        return tuple(self.raw_neg(x, k) for x in a)

    def raw_mul(self, a, b, level: int | None = None):
        level = self.num_levels if level is None else level
        if level == 0:
            return (a * b) % self.p if self.p else a * b
        k = level - 1
        n = self._degrees[k]
        zero = self.raw_zero(k)
        # schoolbook product, then reduce modulo the monic defining polynomial
        prod = [zero] * (2 * n - 1)
        for i, x in enumerate(a):
            if x == zero:
                continue
            for j, y in enumerate(b):
                if y == zero:
                    continue
                prod[i + j] = self.raw_add(prod[i + j], self.raw_mul(x, y, k), k)
        q = self._levels[k]
        for i in range(2 * n - 2, n - 1, -1):
            c = prod[i]
            if c == zero:
                continue
            prod[i] = zero
            for j in range(n):
                t = self.raw_mul(c, q[j], k)
                prod[i - n + j] = self.raw_sub(prod[i - n + j], t, k)
        return tuple(prod[:n])

    def raw_inv(self, a, level: int | None = None):
        level = self.num_levels if level is None else level
        if self.raw_is_zero(a, level):
            raise ZeroDivisionError("inversion of zero field element")
        if level == 0:
            return 1 / a if self.p == 0 else pow(a, self.p - 2, self.p)
        # extended Euclid against the defining polynomial, one level down
        k = level - 1
        r0 = list(self._levels[k])
        r1 = [x for x in a]
        _rp_trim(self, k, r1)
        t0: list = []
        t1 = [self.raw_one(k)]
        while r1:
            q, r = _rp_divmod(self, k, r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, _rp_sub(self, k, t0, _rp_mul(self, k, q, t1))
        # r0 is a nonzero constant: a is invertible since the level is a field
        c = self.raw_inv(r0[0], k)
        inv = [self.raw_mul(c, x, k) for x in t0]
        zero = self.raw_zero(k)
        n = self._degrees[k]
        inv = inv + [zero] * (n - len(inv))
        return tuple(inv[:n])

    def raw_pow(self, a, e: int, level: int | None = None):
        level = self.num_levels if level is None else level
        if e < 0:
            return self.raw_pow(self.raw_inv(a, level), -e, level)
        result = self.raw_one(level)
        base = a
        while e:
            if e & 1:
                result = self.raw_mul(result, base, level)
            base = self.raw_mul(base, base, level)
            e >>= 1
        return result

    def _iter_raw(self, level: int) -> Iterator:
        if level == 0:
            for n in range(self.p):
                yield n
            return
        k = level - 1
        n = self._degrees[k]

        def rec(i: int, prefix: tuple):
            if i == n:
                yield prefix
                return
            for x in self._iter_raw(k):
                yield from rec(i + 1, prefix + (x,))

        yield from rec(0, ())

    # -- element constructors ----------------------------------------------

    def zero(self) -> "FElem":
        return FElem(self, self.raw_zero())

    def one(self) -> "FElem":
        return FElem(self, self.raw_one())

    def from_int(self, n: int) -> "FElem":
        return FElem(self, self.raw_from_int(n))

    def element(self, value) -> "FElem":
        """Coerce an int, Fraction or FElem into this tower."""
        if isinstance(value, FElem):
            if value.tower != self:
                raise TowerMismatchError("element belongs to a different tower")
            return value
        if isinstance(value, Fraction):
            if self.p == 0:
                return FElem(self, value)
            den = self.raw_from_int(value.denominator)
            if self.raw_is_zero(den):
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return FElem(self, self.raw_mul(self.raw_from_int(value.numerator),
                                            self.raw_inv(den)))
        if isinstance(value, int):
            return self.from_int(value)
        raise TypeError(f"cannot coerce {value!r} into {self!r}")

    def elements(self) -> Iterator["FElem"]:
        """All field elements; finite characteristic only."""
        if self.p == 0:
            raise DomainError("cannot enumerate the rationals")
        for raw in self._iter_raw(self.num_levels):
            yield FElem(self, raw)

    def random_element(self, rng) -> "FElem":
        """Uniformly random element drawn from an explicit generator."""
        if self.p == 0:
            raise DomainError("no uniform distribution on the rationals")

        def rec(level: int):
            if level == 0:
                return rng.randrange(self.p)
            return tuple(rec(level - 1) for _ in range(self._degrees[level - 1]))

        return FElem(self, rec(self.num_levels))


#: type alias used in docstrings; defining polynomials are raw tuples
UniPolyView = tuple


class FElem:
    """An element of a :class:`FieldTower`, stored in reduced form."""

    __slots__ = ("tower", "raw")

    def __init__(self, tower: FieldTower, raw):
        self.tower = tower
        self.raw = raw

    # -- helpers -------------------------------------------------------------

    def _coerce(self, other) -> "FElem":
        if isinstance(other, FElem):
            if other.tower != self.tower:
                raise TowerMismatchError("mixed field towers")
            return other
        if isinstance(other, (int, Fraction)):
            return self.tower.element(other)
        return NotImplemented  # type: ignore[return-value]

    def is_zero(self) -> bool:
        return self.tower.raw_is_zero(self.raw)

    def is_one(self) -> bool:
        return self.raw == self.tower.raw_one()

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FElem(self.tower, self.tower.raw_add(self.raw, other.raw))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FElem(self.tower, self.tower.raw_sub(self.raw, other.raw))

    def __rsub__(self, other):
        return self.tower.element(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FElem(self.tower, self.tower.raw_mul(self.raw, other.raw))

    __rmul__ = __mul__

    def __neg__(self):
        return FElem(self.tower, self.tower.raw_neg(self.raw))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FElem(self.tower, self.tower.raw_mul(self.raw, self.tower.raw_inv(other.raw)))

    def __rtruediv__(self, other):
        return self.tower.element(other) / self

    def inverse(self) -> "FElem":
        return FElem(self.tower, self.tower.raw_inv(self.raw))

    def __pow__(self, e: int) -> "FElem":
        return FElem(self.tower, self.tower.raw_pow(self.raw, e))

    def pth_root(self) -> "FElem":
        """Inverse of the Frobenius map; finite characteristic only."""
        p = self.tower.p
        if p == 0:
            raise DomainError("p-th roots require finite characteristic")
        return self ** (p ** (self.tower.degree - 1))

    # -- comparisons / hashing -----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.tower.element(other)
        if not isinstance(other, FElem):
            return NotImplemented
        return self.tower == other.tower and self.raw == other.raw

    def __hash__(self) -> int:
        return hash((self.tower._key, self.raw))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"FElem({self.raw!r})"

    def __str__(self) -> str:
        return _raw_str(self.raw)

    def sort_key(self):
        """A total order on elements of one tower, used to make factor
        lists and tree traversals deterministic."""
        return _raw_key(self.raw)


def _raw_str(raw) -> str:
    if isinstance(raw, tuple):
        return "(" + ",".join(_raw_str(x) for x in raw) + ")"
    return str(raw)


def _raw_key(raw):
    if isinstance(raw, tuple):
        return tuple(_raw_key(x) for x in raw)
    if isinstance(raw, Fraction):
        return (raw.numerator, raw.denominator)
    return (raw,)


# ---------------------------------------------------------------------------
# raw coefficient-list polynomial helpers (shared with the univariate layer)


def _rp_trim(tower: FieldTower, level: int, a: list) -> list:
    zero = tower.raw_zero(level)
    while a and a[-1] == zero:
        a.pop()
    return a


def _rp_add(tower: FieldTower, level: int, a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = tower.raw_add(out[i], x, level)
    return _rp_trim(tower, level, out)


def _rp_sub(tower: FieldTower, level: int, a: list, b: list) -> list:
    n = max(len(a), len(b))
    zero = tower.raw_zero(level)
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else zero
        y = b[i] if i < len(b) else zero
        out.append(tower.raw_sub(x, y, level))
    return _rp_trim(tower, level, out)


def _rp_mul(tower: FieldTower, level: int, a: list, b: list) -> list:
    if not a or not b:
        return []
    zero = tower.raw_zero(level)
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == zero:
            continue
        for j, y in enumerate(b):
            if y == zero:
                continue
            out[i + j] = tower.raw_add(out[i + j], tower.raw_mul(x, y, level), level)
    return _rp_trim(tower, level, out)


def _rp_divmod(tower: FieldTower, level: int, a: list, b: list) -> tuple[list, list]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    zero = tower.raw_zero(level)
    rem = list(a)
    db = len(b) - 1
    inv_lead = tower.raw_inv(b[-1], level)
    quot = [zero] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        if c == zero:
            continue
        q = tower.raw_mul(c, inv_lead, level)
        quot[i - db] = q
        for j in range(db + 1):
            t = tower.raw_mul(q, b[j], level)
            rem[i - db + j] = tower.raw_sub(rem[i - db + j], t, level)
    return _rp_trim(tower, level, quot), _rp_trim(tower, level, rem)


#: the rational field, shared instance
QQ = FieldTower(0)


def prime_field(p: int) -> FieldTower:
    if p == 0:
        return QQ
    return FieldTower(p)
