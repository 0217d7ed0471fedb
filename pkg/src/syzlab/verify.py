"""Seeded invariant suites behind ``syzlab verify``.

Every instance draws from its own generator seeded by
``(seed, trial, slot)``, so serial and parallel runs give identical records.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .algebra import HPoly
from .arrangements import (
    MAX_TAU_TAGS,
    MIN_TAU_TAGS,
    CurveInput,
    FamilyTag,
    family_degree,
    random_instance,
    recognize,
    validate,
)
from .eigenscheme import NotEigenscheme, eigenscheme_degree, jacobian_to_tensor
from .jacobian import Jacobian, lift_syzygy

__all__ = ["SUITES", "run_suite", "instance_rng", "degree_range", "random_factored_curve", "sweep_instance", "EIGEN_TAGS"]

log = logging.getLogger(__name__)

ALL_TAGS = [t for t in FamilyTag if t is not FamilyTag.NONE]
# families whose Jacobian scheme is stated to be an eigenscheme
EIGEN_TAGS = (FamilyTag.L, FamilyTag.CL2)


def instance_rng(seed: int, trial: int, slot: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, trial, slot]))


def degree_range(tag: FamilyTag, lo: int, hi: int) -> list[int]:
    """Values of ``m`` giving a family degree in ``[lo, hi]`` (at least 2 conics or lines)."""
    return [m for m in range(2, hi + 1) if lo <= family_degree(tag, m) <= hi]


def _draw(tag: FamilyTag, rng, lo: int, hi: int, normal_form: bool = False):
    m = int(rng.choice(degree_range(tag, lo, hi)))
    c, params = random_instance(tag, m, rng, normal_form=normal_form)
    return m, c, params


def _params_json(params):
    return [list(p) if isinstance(p, tuple) else p for p in params]


def sweep_instance(suite: str, seed: int, trial: int, slot: int):
    """The ``(tag, curve, params)`` drawn by the max-tau or min-tau suite for this slot."""
    if suite == "max-tau":
        tag = MAX_TAU_TAGS[slot]
        _, c, params = _draw(tag, instance_rng(seed, trial, slot), 5, 10)
    elif suite == "min-tau":
        tag = MIN_TAU_TAGS[slot]
        _, c, params = _draw(tag, instance_rng(seed, trial, 100 + slot), 6, 10)
    else:
        raise ValueError(f"no family sweep named {suite!r}")
    return tag, c, params


def _max_tau(seed: int, trial: int, slot: int) -> dict:
    tag, c, params = sweep_instance("max-tau", seed, trial, slot)
    J = Jacobian(c.product)
    d = J.d
    r, tau, probe = J.mdr(), J.tjurina(), J.resolution_probe()
    dpw = J.dpw_check()
    checks = {
        "tau": tau == d * d - 3 * d + 3,
        "mdr": r == 1,
        "free": probe.is_free and probe.exponents == (1, d - 2),
        "dpw": dpw.holds,
        "recognized": recognize(c) is tag,
    }
    return {"tag": str(tag), "d": d, "params": _params_json(params), "tau": tau, "r": r,
            "freeness": str(probe), "checks": checks}


def _min_tau(seed: int, trial: int, slot: int) -> dict:
    tag, c, params = sweep_instance("min-tau", seed, trial, slot)
    J = Jacobian(c.product)
    d = J.d
    r, tau, probe = J.mdr(), J.tjurina(), J.resolution_probe()
    checks = {
        "tau": tau == d * d - 3 * d + 2,
        "mdr": r == 1,
        "nearly_free": probe.is_nearly_free,
        "recognized": recognize(c) is tag,
    }
    return {"tag": str(tag), "d": d, "params": _params_json(params), "tau": tau, "r": r,
            "freeness": str(probe), "checks": checks}


def _random_component(rng, degree: int) -> HPoly:
    n = (degree + 1) * (degree + 2) // 2
    while True:
        g = HPoly.from_vector([int(v) for v in rng.integers(-3, 4, size=n)], degree)
        if not g.is_zero():
            return g


def random_factored_curve(rng, max_degree: int = 4, slot_family: bool = True) -> CurveInput:
    """A reduced product of random lines and smooth conics, or a small family member."""
    if slot_family and rng.random() < 0.25:
        tag = ALL_TAGS[int(rng.integers(len(ALL_TAGS)))]
        choices = degree_range(tag, 3, max(max_degree, 4))
        if choices:
            return random_instance(tag, int(rng.choice(choices)), rng)[0]
    while True:
        comps, deg = [], int(rng.integers(1, max_degree + 1))
        total = 0
        while total < deg:
            k = 2 if deg - total >= 2 and rng.random() < 0.5 else 1
            comps.append(_random_component(rng, k))
            total += k
        c = CurveInput(comps)
        if not validate(c):
            return c


def _coprime(c1: CurveInput, c2: CurveInput) -> bool:
    return not validate(CurveInput(c1.components + c2.components))


def _product_pair(seed: int, trial: int, slot: int = 0) -> dict:
    rng = instance_rng(seed, trial, 200)
    while True:
        c1 = random_factored_curve(rng, 4)
        c2 = random_factored_curve(rng, 3, slot_family=False)
        if _coprime(c1, c2):
            break
    f1, f2 = c1.product, c2.product
    d1, d2 = f1.degree, f2.degree
    J1, J2, J = Jacobian(f1), Jacobian(f2), Jacobian(f1 * f2)
    r1, r2, r = J1.mdr(), J2.mdr(), J.mdr()
    delta1 = J1.syzygy_space(r1)[0]
    lifted = lift_syzygy(delta1, f1, f2)
    checks = {
        "lower": max(r1, r2) <= r,
        "upper": r <= min(r1 + d2, r2 + d1),
        "lift_is_syzygy": lifted.is_valid(f1 * f2),
        "lift_nonzero": not lifted.is_zero(),
    }
    return {"f1": [str(g) for g in c1.components], "f2": [str(g) for g in c2.components],
            "d1": d1, "d2": d2, "r1": r1, "r2": r2, "r": r, "checks": checks}


def _dpw(seed: int, trial: int, slot: int = 0) -> dict:
    rng = instance_rng(seed, trial, 300)
    c = random_factored_curve(rng, 6)
    J = Jacobian(c.product)
    r = J.mdr()
    out = {"components": [str(g) for g in c.components], "d": J.d, "r": r, "tau": J.tjurina()}
    if r == 0:
        out["checks"] = {"concurrent_lines_tau": J.tjurina() == (J.d - 1) ** 2}
        return out
    chk = J.dpw_check()
    out.update(dpw_lower=chk.lower, dpw_upper=chk.upper, checks={"dpw": chk.holds})
    return out


def _eigen(seed: int, trial: int, slot: int) -> dict:
    tag = ALL_TAGS[slot // 2]
    normal = slot % 2 == 0
    rng = instance_rng(seed, trial, 400 + slot)
    m, c, params = _draw(tag, rng, 4, 8, normal_form=normal)
    f = c.product
    expected = tag in EIGEN_TAGS
    try:
        T = jacobian_to_tensor(f)
        ok, reason = True, None
        d = f.degree
        degree_law = eigenscheme_degree(T) == Jacobian(f).tjurina() == d * d - 3 * d + 3
    except NotEigenscheme as exc:
        ok, reason, degree_law = False, exc.reason, True
    checks = {"dichotomy": ok == expected, "degree_law": degree_law}
    return {"tag": str(tag), "normal_form": normal, "d": f.degree, "params": _params_json(params),
            "tensor": ok, "reason": reason, "checks": checks}


# suite name -> (worker, slots per trial)
SUITES = {
    "max-tau": (_max_tau, len(MAX_TAU_TAGS)),
    "min-tau": (_min_tau, len(MIN_TAU_TAGS)),
    "dpw": (_dpw, 1),
    "thm-product": (_product_pair, 1),
    "eigen-dichotomy": (_eigen, 2 * len(ALL_TAGS)),
}


def _job(args):
    name, seed, trial, slot = args
    worker, _ = SUITES[name]
    rec = worker(seed, trial, slot)
    rec["trial"] = trial
    rec["ok"] = all(rec["checks"].values())
    return rec


def run_suite(name: str, trials: int, seed: int, threads: int | None = None) -> dict:
    """Run a suite; ``threads`` defaults to ``$SYZLAB_THREADS`` or 1."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    if trials < 0:
        raise ValueError("trials must be non-negative")
    if threads is None:
        threads = int(os.environ.get("SYZLAB_THREADS", "1") or 1)
    _, slots = SUITES[name]
    jobs = [(name, seed, t, s) for t in range(trials) for s in range(slots)]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(_job, jobs))
    else:
        records = [_job(j) for j in jobs]
    failures = [r for r in records if not r["ok"]]
    for r in failures:
        log.warning("violation in %s trial %d: %s", name, r["trial"], {k: v for k, v in r["checks"].items() if not v})
    return {
        "suite": name,
        "trials": trials,
        "seed": seed,
        "instances": len(records),
        "violations": len(failures),
        "passed": not failures,
        "records": records,
    }

