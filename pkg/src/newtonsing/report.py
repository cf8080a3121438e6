"""Assemble every invariant of a germ into one bundle and check the
provable relations between them on the spot.

A bundle that contradicts a proven relation raises: the statements are
theorems, so a counterexample can only be an implementation bug.  This
turns every bundle construction, and in particular the randomized suite
below, into a package-wide self test.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .algebra import FieldTower, prime_field
from .bivar import BivarPoly
from .errors import DomainError, InternalError, PaperViolationError
from .localalg import milnor_number
from .newton import ExtNat, delta_N, mu_N, newton_diagram, r_N, s_N
from .nondeg import NonDegReport, classify
from .resolve import is_reduced, resolution_summary, resolution_tree

PASS = "pass"
FAIL = "fail"
NA = "not-applicable"

#: evaluation order of the relation checks, fixed for stable output
VERDICT_IDS = (
    "kouchnirenko_bound",
    "nnd_gives_newton_milnor",
    "inner_nondeg_criterion",
    "char0_equivalences",
    "weak_nondeg_edge_counts",
    "newton_delta_is_nu",
    "delta_bound",
    "whnnd_branch_count",
    "branch_count_bounds",
    "whnnd_delta_criterion",
    "milnor_formula_chain",
    "inner_nondeg_vs_wild_cycles",
    "superisolated_properties",
)


@dataclass(frozen=True)
class TheoremVerdict:
    id: str
    status: str


@dataclass(frozen=True)
class InvariantBundle:
    characteristic: int
    mu: ExtNat
    mu_N: ExtNat
    delta_N: ExtNat
    r_N: int
    s_N: int
    delta: int | None
    nu: int | None
    branches: int | None
    wvc: int | None
    reduced: bool
    superisolated: bool | None
    nondeg: NonDegReport
    verdicts: tuple[TheoremVerdict, ...]

    def to_json(self) -> dict:
        flags = {
            "nnd": self.nondeg.nnd,
            "innd": self.nondeg.innd,
            "wnnd": self.nondeg.wnnd,
            "whnnd": self.nondeg.whnnd,
            "nnd1": self.nondeg.nnd1,
            "superisolated": self.superisolated,
        }
        return {
            "char": self.characteristic,
            "mu": self.mu.to_json(),
            "mu_N": self.mu_N.to_json(),
            "delta": self.delta,
            "delta_N": self.delta_N.to_json(),
            "nu": self.nu,
            "r": self.branches,
            "r_N": self.r_N,
            "s_N": self.s_N,
            "wvc": self.wvc,
            "flags": flags,
            "verdicts": [{"id": v.id, "status": v.status} for v in self.verdicts],
        }


def invariant_bundle(f: BivarPoly) -> InvariantBundle:
    """Compute all invariants of the germ and evaluate the relation checks.

    The resolution-side invariants are unavailable over the rationals and
    for non-reduced germs; everything Newton-combinatorial and the Milnor
    number are always present.
    """
    if f.is_zero():
        raise DomainError("zero polynomial")
    if f.is_unit_at_origin():
        raise DomainError("germ must vanish at the origin")
    p = f.tower.p
    mu = milnor_number(f)
    muN = mu_N(f)
    dN = delta_N(f)
    rN = r_N(f)
    sN = s_N(f)
    report = classify(f)
    reduced = is_reduced(f)

    delta = nu = branches = wvc = None
    superisolated = None
    if p > 0 and reduced:
        root = resolution_tree(f)
        summary = resolution_summary(root)
        delta, nu, branches = summary.delta, summary.nu, summary.branches
        superisolated = all(child.mult == 1 for child in root.children)
        if mu.is_finite:
            wvc = mu.value - 2 * delta + branches - 1

    verdicts = _evaluate_verdicts(f, mu, muN, dN, rN, sN, report,
                                  delta, nu, branches, superisolated)
    bundle = InvariantBundle(characteristic=p, mu=mu, mu_N=muN, delta_N=dN,
                             r_N=rN, s_N=sN, delta=delta, nu=nu,
                             branches=branches, wvc=wvc, reduced=reduced,
                             superisolated=superisolated, nondeg=report,
                             verdicts=verdicts)
    failed = [v.id for v in verdicts if v.status == FAIL]
    if failed:
        raise PaperViolationError(
            f"relation(s) {failed} failed for {f} in characteristic {p}")
    return bundle


def _evaluate_verdicts(f, mu, muN, dN, rN, sN, report: NonDegReport,
                       delta, nu, branches, superisolated):
    p = f.tower.p
    out = []

    def add(vid: str, status: str) -> None:
        out.append(TheoremVerdict(vid, status))

    add("kouchnirenko_bound", PASS if muN <= mu else FAIL)

    if report.nnd:
        add("nnd_gives_newton_milnor", PASS if mu == muN else FAIL)
    else:
        add("nnd_gives_newton_milnor", NA)

    if not mu.is_finite:
        add("inner_nondeg_criterion", FAIL if report.innd else NA)
    else:
        add("inner_nondeg_criterion",
            PASS if (mu == muN) == report.innd else FAIL)

    if p == 0:
        a = report.nnd and muN.is_finite
        b = report.innd
        c = mu.is_finite and mu == muN
        ok = a == b and b == c
        if newton_diagram(f).convenient and muN.is_finite:
            ok = ok and (report.nnd == b)
        add("char0_equivalences", PASS if ok else FAIL)
    else:
        add("char0_equivalences", NA)

    add("weak_nondeg_edge_counts",
        PASS if report.wnnd == (sN == rN) else FAIL)

    have_delta = delta is not None
    if have_delta:
        if not dN.is_finite:
            raise InternalError("resolution exists but the Newton delta "
                                "invariant diverged")
        dNv = dN.value
        add("newton_delta_is_nu", PASS if dNv == nu else FAIL)
        ok = dNv <= delta and (not report.wnnd or dNv == delta)
        add("delta_bound", PASS if ok else FAIL)
        ok = sN <= branches and (not report.whnnd or sN == branches)
        add("whnnd_branch_count", PASS if ok else FAIL)
        ok = (sN <= branches <= rN
              and ((sN == branches and branches == rN) == report.wnnd))
        add("branch_count_bounds", PASS if ok else FAIL)
        add("whnnd_delta_criterion",
            PASS if (delta == dNv) == report.whnnd else FAIL)
    else:
        for vid in ("newton_delta_is_nu", "delta_bound", "whnnd_branch_count",
                    "branch_count_bounds", "whnnd_delta_criterion"):
            add(vid, NA)

    chain_parts = []
    if muN.is_finite:
        chain_parts.append(muN.value == 2 * dN.value - rN + 1)
    if have_delta:
        ordinary = 2 * delta - branches + 1
        chain_parts.append(ExtNat(ordinary) <= mu if ordinary >= 0 else False)
        if muN.is_finite:
            chain_parts.append(muN.value <= ordinary)
    if chain_parts:
        add("milnor_formula_chain", PASS if all(chain_parts) else FAIL)
    else:
        add("milnor_formula_chain", NA)

    if have_delta:
        rhs = report.wnnd and mu.is_finite and mu.value == 2 * delta - branches + 1
        add("inner_nondeg_vs_wild_cycles", PASS if report.innd == rhs else FAIL)
    else:
        add("inner_nondeg_vs_wild_cycles", NA)

    if have_delta and superisolated:
        m = f.multiplicity()
        ok = (report.whnnd and delta == nu and delta == m * (m - 1) // 2)
        add("superisolated_properties", PASS if ok else FAIL)
    else:
        add("superisolated_properties", NA)

    if [v.id for v in out] != list(VERDICT_IDS):
        raise InternalError("verdict list out of order")
    return tuple(out)


# ---------------------------------------------------------------------------
# randomized verification


def sample_polynomial(tower: FieldTower, rng: random.Random, max_exp: int) -> BivarPoly:
    """Draw a germ: supports uniform in the exponent box minus the origin,
    coefficients uniform over the field (small integers over the
    rationals); zero draws are reported as such by the caller."""
    nterms = rng.randint(1, 6)
    terms: dict[tuple[int, int], object] = {}
    acc = BivarPoly.zero(tower)
    for _ in range(nterms):
        while True:
            key = (rng.randint(0, max_exp), rng.randint(0, max_exp))
            if key != (0, 0):
                break
        if tower.p == 0:
            coeff = tower.element(rng.randint(-4, 4))
        else:
            coeff = tower.random_element(rng)
        acc = acc + BivarPoly(tower, {key: coeff})
    return acc


def _sample_key(seed, char: int, index: int) -> str:
    return f"{seed}:{char}:{index}"


def _run_sample(args) -> dict:
    seed, char, index, max_exp = args
    tower = prime_field(char)
    rng = random.Random(_sample_key(seed, char, index))
    f = sample_polynomial(tower, rng, max_exp)
    result: dict = {"char": char, "index": index}
    if f.is_zero():
        result["status"] = "zero"
        return result
    try:
        bundle = invariant_bundle(f)
    except PaperViolationError as exc:
        result["status"] = "failure"
        result["poly"] = str(f)
        result["error"] = str(exc)
        return result
    result["status"] = "ok"
    result["reduced"] = bundle.reduced
    result["mu_infinite"] = not bundle.mu.is_finite
    result["checks"] = {v.id: v.status for v in bundle.verdicts}
    return result


def _example_pair_report() -> dict:
    """The fixed pair with equal diagrams but different wild cycle counts,
    rechecked on every run."""
    t = prime_field(3)
    f = BivarPoly(t, {(3, 0): 1, (2, 1): 1, (1, 2): 1, (0, 7): 1})
    g = f + BivarPoly(t, {(6, 0): 1})
    bf = invariant_bundle(f)
    bg = invariant_bundle(g)
    same_diagram = newton_diagram(f).vertices == newton_diagram(g).vertices
    ok = (bf.wvc == 0 and bg.wvc == 1 and same_diagram
          and not bf.nondeg.innd)
    if not ok:
        raise PaperViolationError("the fixed diagram-blind pair misbehaved")
    return {
        "wvc_pair": [bf.wvc, bg.wvc],
        "diagrams_equal": same_diagram,
        "innd_first": bf.nondeg.innd,
    }


def verify_random(chars, samples: int, max_exp: int = 7, seed=1,
                  workers: int = 1) -> dict:
    """Evaluate the relation suite on random germs.

    Deterministic for a fixed seed, independent of the worker count:
    every sample derives its own generator from (seed, char, index) and
    results are merged in index order.
    """
    chars = sorted(set(int(c) for c in chars))
    for c in chars:
        if c != 0 and not _is_prime(c):
            raise DomainError(f"characteristic {c} is not 0 or prime")
    if samples < 1:
        raise DomainError("need at least one sample")
    tasks = [(seed, c, i, max_exp) for c in chars for i in range(samples)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_sample, tasks, chunksize=16))
    else:
        results = [_run_sample(t) for t in tasks]
    results.sort(key=lambda r: (r["char"], r["index"]))

    per_char: dict = {}
    failures = []
    for r in results:
        stats = per_char.setdefault(str(r["char"]), {
            "evaluated": 0,
            "zero_samples": 0,
            "nonreduced": 0,
            "mu_infinite": 0,
            "checks": {vid: {"pass": 0, "skip": 0} for vid in VERDICT_IDS},
        })
        if r["status"] == "zero":
            stats["zero_samples"] += 1
            continue
        if r["status"] == "failure":
            failures.append({"char": r["char"], "index": r["index"],
                             "poly": r["poly"], "error": r["error"]})
            continue
        stats["evaluated"] += 1
        if not r["reduced"]:
            stats["nonreduced"] += 1
        if r["mu_infinite"]:
            stats["mu_infinite"] += 1
        for vid, status in r["checks"].items():
            if status == PASS:
                stats["checks"][vid]["pass"] += 1
            elif status == NA:
                stats["checks"][vid]["skip"] += 1
    summary = {
        "seed": seed,
        "samples": samples,
        "max_exp": max_exp,
        "chars": chars,
        "example_pair": _example_pair_report(),
        "per_char": per_char,
        "failures": failures,
    }
    return summary


def summary_to_json(summary: dict) -> str:
    return json.dumps(summary, sort_keys=True, separators=(",", ":"))


def _is_prime(n: int) -> bool:
    from .algebra import is_prime
    return is_prime(n)
