import random

import pytest

from newtonsing.algebra import QQ, prime_field
from newtonsing.bivar import BivarPoly
from newtonsing.errors import DomainError
from newtonsing.newton import delta_N, mu_N
from newtonsing.resolve import (blow_up_children, branch_count, delta,
                                is_reduced, is_superisolated, nu,
                                resolution_summary, resolution_tree)

F2 = prime_field(2)
F3 = prime_field(3)
F5 = prime_field(5)
F7 = prime_field(7)


def P(tower, terms):
    return BivarPoly(tower, terms)


EX314 = {(3, 0): 1, (2, 1): 1, (1, 2): 1, (0, 7): 1}


def test_is_reduced_examples():
    assert is_reduced(P(QQ, {(2, 0): 1, (0, 3): 1}))
    assert not is_reduced(P(F2, {(2, 0): 1, (0, 2): 1}))
    assert not is_reduced(P(QQ, {(3, 0): 1, (2, 1): -2, (1, 2): 1}))
    with pytest.raises(DomainError):
        is_reduced(BivarPoly.zero(QQ))


def test_blow_up_children_examples():
    root = resolution_tree(P(F7, {(2, 0): 1, (0, 5): 1}))
    assert len(root.children) == 1
    child = root.children[0]
    assert child.special and child.mult == 2
    assert child.local_eq == P(F7, {(2, 0): 1, (0, 3): 1})

    root = resolution_tree(P(F7, {(1, 1): 1}))
    assert len(root.children) == 2
    assert all(c.special and c.mult == 1 for c in root.children)

    root = resolution_tree(P(F7, {(2, 0): 1, (1, 1): 2, (0, 2): 1, (0, 3): 1}))
    assert len(root.children) == 1
    child = root.children[0]
    assert not child.special and child.mult == 1
    assert child.local_eq == P(F7, {(2, 0): 1, (0, 1): 1})


def test_resolution_multiplicity_multisets():
    s = resolution_summary(resolution_tree(P(F7, {(2, 0): 1, (0, 5): 1})))
    assert s.multiplicities == (2, 2, 1)
    s = resolution_summary(resolution_tree(P(F3, EX314)))
    assert s.multiplicities == (3, 2, 2, 1, 1, 1)
    assert s.max_tower_degree == 2
    s = resolution_summary(resolution_tree(P(F3, {(1, 0): 1, (0, 3): 1})))
    assert s.multiplicities == (1,)


def test_paper_deltas():
    f = P(F3, EX314)
    assert delta(f) == 5 and branch_count(f) == 3 and nu(f) == 3
    g = f + P(F3, {(6, 0): 1})
    assert delta(g) == 4 and branch_count(g) == 2 and nu(g) == 3


def test_superisolated_examples():
    assert is_superisolated(P(F7, {(2, 0): 1, (1, 1): 2, (0, 2): 1, (0, 3): 1}))
    assert not is_superisolated(P(F7, {(2, 0): 1, (0, 5): 1}))
    assert delta(P(F7, {(2, 0): 1, (0, 5): 1})) == 2
    assert nu(P(F7, {(2, 0): 1, (0, 5): 1})) == 2
    # the smooth germ is trivially regular after one blow-up
    assert is_superisolated(P(F3, {(1, 0): 1, (0, 3): 1}))


def test_special_flag_inheritance():
    # (x+y)^2 + y^5: the second infinitely near point sits at the chart
    # origin of a non-special point, so it must not count
    f = P(F7, {(2, 0): 1, (1, 1): 2, (0, 2): 1, (0, 5): 1})
    s = resolution_summary(resolution_tree(f))
    assert s.delta == 2 and s.nu == 1
    assert delta_N(f) == 1


def test_domain_errors():
    with pytest.raises(DomainError):
        resolution_tree(P(QQ, {(2, 0): 1, (0, 3): 1}))
    with pytest.raises(DomainError):
        resolution_tree(P(F3, {(3, 0): 1, (2, 1): 1, (1, 2): 1}))  # non-reduced
    with pytest.raises(DomainError):
        resolution_tree(BivarPoly.zero(F3))
    with pytest.raises(DomainError):
        resolution_tree(P(F3, {(0, 0): 1, (1, 0): 1}))


def _random_germ(rng, tower, max_exp=6):
    terms = {}
    for _ in range(rng.randint(1, 5)):
        key = (rng.randint(0, max_exp), rng.randint(0, max_exp))
        if key != (0, 0):
            terms[key] = rng.randrange(1, tower.p)
    return BivarPoly(tower, terms)


def test_newton_delta_equals_special_sum_randomized():
    # the sharpest cross-module oracle: nu always equals the Newton delta
    rng = random.Random(7)
    done = 0
    while done < 120:
        tower = prime_field(rng.choice([2, 3, 5]))
        f = _random_germ(rng, tower)
        if f.is_zero() or not is_reduced(f):
            continue
        s = resolution_summary(resolution_tree(f))
        dn = delta_N(f)
        assert dn.is_finite and s.nu == dn.value, str(f)
        assert dn.value <= s.delta
        done += 1


def test_branch_count_between_edge_counts_randomized():
    from newtonsing.newton import r_N, s_N
    rng = random.Random(19)
    done = 0
    while done < 120:
        tower = prime_field(rng.choice([2, 3, 5]))
        f = _random_germ(rng, tower)
        if f.is_zero() or not is_reduced(f):
            continue
        r = branch_count(f)
        assert s_N(f) <= r <= r_N(f), str(f)
        done += 1


def test_tree_json_shape():
    root = resolution_tree(P(F3, EX314))
    doc = root.to_json()
    assert doc["mult"] == 3 and doc["special"] and doc["depth"] == 0
    assert {c["mult"] for c in doc["children"]} == {1, 2}
    deepest = doc["children"][1]["children"][0]["children"]
    assert all(c["tower_degree"] == 2 for c in deepest)
