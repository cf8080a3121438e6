import json
import random

import pytest

from newtonsing.algebra import QQ, prime_field
from newtonsing.bivar import BivarPoly
from newtonsing.errors import DomainError
from newtonsing.report import (VERDICT_IDS, invariant_bundle,
                               sample_polynomial, summary_to_json,
                               verify_random)

F3 = prime_field(3)
F7 = prime_field(7)


def P(tower, terms):
    return BivarPoly(tower, terms)


EX21 = {(3, 0): 1, (1, 1): 1, (0, 3): 1}
EX314 = {(3, 0): 1, (2, 1): 1, (1, 2): 1, (0, 7): 1}


def test_bundle_example_pair():
    f = P(F3, EX314)
    b = invariant_bundle(f)
    assert (b.mu, b.delta, b.branches, b.wvc) == (8, 5, 3, 0)
    assert not b.nondeg.innd
    g = f + P(F3, {(6, 0): 1})
    bg = invariant_bundle(g)
    assert (bg.mu, bg.delta, bg.branches, bg.wvc) == (8, 4, 2, 1)


def test_bundle_example_21():
    b = invariant_bundle(P(F3, EX21))
    assert b.mu == 1 and b.mu_N == 1
    assert not b.nondeg.nnd and b.nondeg.innd and b.nondeg.nnd1


def test_bundle_unavailability():
    b = invariant_bundle(P(QQ, EX314))
    assert b.delta is None and b.nu is None and b.branches is None
    assert b.wvc is None and b.superisolated is None
    j = b.to_json()
    assert j["delta"] is None and j["flags"]["superisolated"] is None

    nonreduced = P(F3, {(3, 0): 1, (2, 1): 1, (1, 2): 1})
    b = invariant_bundle(nonreduced)
    assert b.delta is None and not b.reduced
    assert b.mu.to_json() == "infinity"


def test_bundle_json_schema_and_roundtrip():
    b = invariant_bundle(P(F3, EX314))
    j = b.to_json()
    assert list(j) == ["char", "mu", "mu_N", "delta", "delta_N", "nu", "r",
                       "r_N", "s_N", "wvc", "flags", "verdicts"]
    assert list(j["flags"]) == ["nnd", "innd", "wnnd", "whnnd", "nnd1",
                                "superisolated"]
    assert [v["id"] for v in j["verdicts"]] == list(VERDICT_IDS)
    text = json.dumps(j)
    assert json.loads(text) == j


def test_bundle_rejects_bad_input():
    with pytest.raises(DomainError):
        invariant_bundle(BivarPoly.zero(F3))
    with pytest.raises(DomainError):
        invariant_bundle(P(F3, {(0, 0): 1}))


def test_sample_polynomial_determinism():
    rng1 = random.Random("1:3:5")
    rng2 = random.Random("1:3:5")
    assert sample_polynomial(F3, rng1, 7) == sample_polynomial(F3, rng2, 7)


def test_verify_random_small_run():
    summary = verify_random([2, 3], samples=40, max_exp=6, seed=9)
    assert summary["failures"] == []
    assert set(summary["per_char"]) == {"2", "3"}
    pair = summary["example_pair"]
    assert pair["wvc_pair"] == [0, 1] and pair["diagrams_equal"]
    assert not pair["innd_first"]
    for stats in summary["per_char"].values():
        assert stats["evaluated"] + stats["zero_samples"] == 40
        checks = stats["checks"]
        assert set(checks) == set(VERDICT_IDS)
        assert checks["kouchnirenko_bound"]["pass"] == stats["evaluated"]


def test_verify_random_rejects_bad_arguments():
    with pytest.raises(DomainError):
        verify_random([3], samples=0)
    with pytest.raises(DomainError):
        verify_random([4], samples=5)


def test_verify_random_deterministic_and_parallel():
    a = verify_random([3], samples=30, max_exp=6, seed=4)
    b = verify_random([3], samples=30, max_exp=6, seed=4)
    c = verify_random([3], samples=30, max_exp=6, seed=4, workers=2)
    assert summary_to_json(a) == summary_to_json(b) == summary_to_json(c)


def test_char0_verify_run():
    summary = verify_random([0], samples=50, max_exp=6, seed=17)
    assert summary["failures"] == []
    stats = summary["per_char"]["0"]
    assert stats["checks"]["char0_equivalences"]["pass"] == stats["evaluated"]
    # the resolution side is never available over the rationals
    assert stats["checks"]["newton_delta_is_nu"]["skip"] == stats["evaluated"]
