import random

import pytest

from newtonsing.algebra import QQ, prime_field
from newtonsing.bivar import BivarPoly
from newtonsing.errors import DomainError
from newtonsing.localalg import (finite_colength_test, intersection_multiplicity,
                                 local_quotient_dim, milnor_number,
                                 truncated_quotient)
from newtonsing.newton import INFINITY, mu_N

F2 = prime_field(2)
F3 = prime_field(3)
F5 = prime_field(5)


def P(tower, terms):
    return BivarPoly(tower, terms)


def test_finite_colength_examples():
    assert finite_colength_test(P(F3, {(0, 1): 1}), P(F3, {(1, 0): 1}))
    zero = BivarPoly.zero(F2)
    assert not finite_colength_test(zero, zero)
    assert not finite_colength_test(P(QQ, {(1, 0): 1, (1, 1): 1}), P(QQ, {(1, 1): 1}))
    # one generator zero: decided by the other alone
    assert not finite_colength_test(zero, P(F2, {(1, 0): 1}))
    assert finite_colength_test(BivarPoly.zero(QQ), P(QQ, {(0, 0): 1, (1, 0): 1}))


def test_quotient_dim_examples():
    assert local_quotient_dim(P(QQ, {(1, 0): 1}), P(QQ, {(0, 1): 1})) == 1
    assert local_quotient_dim(P(QQ, {(0, 2): 1}), P(QQ, {(3, 0): 1})) == 6
    f = P(F3, {(3, 0): 1, (2, 1): 1, (1, 2): 1, (0, 7): 1})
    assert local_quotient_dim(f.partial_x(), f.partial_y()) == 8


def test_milnor_examples():
    assert milnor_number(P(F3, {(3, 0): 1, (1, 1): 1, (0, 3): 1})) == 1
    f = P(F3, {(3, 0): 1, (2, 1): 1, (1, 2): 1, (0, 7): 1, (6, 0): 1})
    assert milnor_number(f) == 8
    assert milnor_number(P(QQ, {(2, 0): 1, (0, 3): 1})) == 2
    assert milnor_number(P(F3, {(3, 0): 1, (0, 3): 1})) == INFINITY
    # reduced but wild: the partials degenerate to a single generator
    assert milnor_number(P(F3, {(0, 2): 1, (3, 0): 1})) == INFINITY
    with pytest.raises(DomainError):
        milnor_number(BivarPoly.zero(F3))
    with pytest.raises(DomainError):
        milnor_number(P(F3, {(0, 0): 1, (1, 0): 1}))


def test_units_give_zero():
    unit = P(QQ, {(0, 0): 1, (1, 0): 1})
    assert local_quotient_dim(unit, BivarPoly.zero(QQ)) == 0
    assert intersection_multiplicity(unit, P(QQ, {(1, 1): 1})) == 0


def _staircase_dim(exps1, exps2):
    """Independent oracle for monomial ideals: count lattice points not
    dominated by either generator exponent."""
    bound = max(exps1[0] + exps2[0], exps1[1] + exps2[1]) + 2
    count = 0
    for i in range(bound):
        for j in range(bound):
            in1 = i >= exps1[0] and j >= exps1[1]
            in2 = i >= exps2[0] and j >= exps2[1]
            if not (in1 or in2):
                count += 1
    return count


def test_monomial_ideals_match_staircase_oracle():
    rng = random.Random(6)
    for _ in range(60):
        tower = prime_field(rng.choice([0, 2, 3, 5]))
        a = (rng.randint(1, 4), 0)
        b = (0, rng.randint(1, 4))
        if rng.random() < 0.5:
            a = (rng.randint(1, 4), rng.randint(0, 2))
            b = (0 if a[1] > 0 else rng.randint(0, 2), rng.randint(1, 4))
        g1 = BivarPoly.monomial(tower, *a)
        g2 = BivarPoly.monomial(tower, *b)
        got = local_quotient_dim(g1, g2)
        # finite exactly when some pure x power and some pure y power lie
        # in the ideal
        finite = (a[1] == 0 or b[1] == 0) and (a[0] == 0 or b[0] == 0)
        assert got.is_finite == finite
        if finite:
            assert got.value == _staircase_dim(a, b)


def test_intersection_multiplicity_examples():
    assert intersection_multiplicity(P(QQ, {(1, 0): 1}), P(QQ, {(0, 1): 1})) == 1
    cusp = P(QQ, {(0, 2): 1, (3, 0): -1})
    assert intersection_multiplicity(cusp, P(QQ, {(0, 1): 1})) == 3
    assert intersection_multiplicity(P(QQ, {(0, 1): 1}), cusp) == 3


def test_symmetry_random():
    rng = random.Random(12)
    for _ in range(60):
        tower = prime_field(rng.choice([2, 3, 5]))
        def rand_poly():
            return BivarPoly(tower, {
                (rng.randrange(4), rng.randrange(4)): rng.randrange(tower.p)
                for _ in range(rng.randint(1, 3))})
        a, b = rand_poly(), rand_poly()
        assert intersection_multiplicity(a, b) == intersection_multiplicity(b, a)


def test_milnor_equals_intersection_of_partials():
    rng = random.Random(44)
    done = 0
    while done < 100:
        tower = prime_field(rng.choice([0, 2, 3, 5]))
        terms = {}
        for _ in range(rng.randint(1, 5)):
            key = (rng.randint(0, 6), rng.randint(0, 6))
            if key != (0, 0):
                terms[key] = rng.randrange(1, tower.p) if tower.p else rng.randint(1, 4)
        f = BivarPoly(tower, terms)
        if f.is_zero():
            continue
        assert milnor_number(f) == intersection_multiplicity(f.partial_x(), f.partial_y())
        done += 1


def test_kouchnirenko_lower_bound_random():
    rng = random.Random(91)
    done = 0
    while done < 150:
        tower = prime_field(rng.choice([0, 2, 3, 5]))
        terms = {}
        for _ in range(rng.randint(1, 6)):
            key = (rng.randint(0, 7), rng.randint(0, 7))
            if key != (0, 0):
                terms[key] = rng.randrange(1, tower.p) if tower.p else rng.randint(1, 4)
        f = BivarPoly(tower, terms)
        if f.is_zero():
            continue
        assert mu_N(f) <= milnor_number(f)
        done += 1


def test_truncation_stabilization_property():
    # after the first repeat the dimension stays put for one more step
    f = P(prime_field(7), {(2, 0): 1, (0, 5): 1})
    g1, g2 = f.partial_x(), f.partial_y()
    dims = [truncated_quotient(g1, g2, n).dimension for n in range(2, 12)]
    mu = milnor_number(f).value
    first_stable = next(n for n, (a, b) in enumerate(zip(dims, dims[1:]), start=2)
                        if a == b)
    assert dims[first_stable - 2] == mu
    assert dims[first_stable - 1] == mu
    assert dims[first_stable] == mu


def test_basis_is_degree_ordered():
    t = truncated_quotient(P(QQ, {(1, 0): 1}), P(QQ, {(0, 1): 1}), 3)
    assert t.basis == ((0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0))
    assert t.dimension == 1
