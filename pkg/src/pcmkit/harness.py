"""Empirical property checks for inconsistency indices.

Six behaviors an index may or may not have, labelled P1-P6:

* P1  the index equals its characteristic value nu exactly on consistent
      matrices, and moves away from nu on perturbed ones;
* P2  relabeling the alternatives (a simultaneous row/column permutation)
      leaves the value unchanged;
* P3  intensifying all preferences of an inconsistent matrix (raising every
      entry to b >= 1) never reads as less inconsistent;
* P4  pushing a single reciprocal pair of a consistent matrix further from
      its consistent value never reads as less inconsistent;
* P5  the index responds continuously to small relative changes of one
      reciprocal pair;
* P6  a matrix and its transpose are equally inconsistent.

The checks are randomized counterexample searches, so "no violation found"
is evidence rather than proof; every reported violation carries a witness
(the base matrix plus the parameters of the failing comparison) that
``recheck_witness`` can re-evaluate from scratch. P5 can only ever pass
heuristically, since continuity is probed at finitely many scales.

Comparisons respect each index's orientation: for an index where higher
means MORE consistent, monotonicity checks run on the negated values.
Value equality uses ``|a - b| <= tol * max(1, |a|, |b|)``, a relative test
with a unit floor so that near-zero values on nearly consistent matrices
do not turn rounding noise into violations.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    ConfigError,
    DiagonalEntryError,
    InconsistentBaseError,
    OrderMismatchError,
    UnitEntryError,
    ZeroDenominatorError,
)
from .generators import consistent_from_rng, derive_seed, pcm_from_rng, rng_from_seed
from .indices import IndexId, Orientation, descriptor, evaluate
from .pcm import Pcm, intensify, is_consistent, permute, perturb_entry, transpose

PROPERTIES = ("P1", "P2", "P3", "P4", "P5", "P6")

DEFAULT_SEED = 12345
DEFAULT_ORDERS = (3, 4, 5, 6, 7)
DEFAULT_B_GRID = tuple(float(x) for x in np.linspace(1.0, 5.0, 41))
DEFAULT_DELTA_GRID = tuple(k / 10 for k in (*range(1, 10), *range(11, 31)))

P5_EPSILONS = (1e-2, 1e-4, 1e-6, 1e-8)
P5_FINAL_THRESHOLD = 1e-6

_P1_MIN_LOG_RATIO = math.log(2.0)
_P2_EXHAUSTIVE_MAX = 4
_REDRAW_LIMIT = 100


class VerdictStatus(enum.Enum):
    NO_VIOLATION_FOUND = "ok"
    VIOLATION_FOUND = "violated"
    HEURISTIC = "heuristic"
    NOT_APPLICABLE = "n/a"


@dataclass(frozen=True)
class SuiteConfig:
    """Knobs for the property checks; validate() rejects bad combinations."""

    seed: int = DEFAULT_SEED
    trials_per_check: int = 1000
    orders: tuple = DEFAULT_ORDERS
    b_grid: tuple = DEFAULT_B_GRID
    delta_grid: tuple = DEFAULT_DELTA_GRID
    nu_tolerance: float = 1e-7
    equality_tolerance: float = 1e-9
    monotonicity_slack: float = 1e-12

    def validate(self) -> None:
        if not isinstance(self.seed, int) or isinstance(self.seed, bool):
            raise ConfigError(f"seed must be an integer, got {self.seed!r}")
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigError(f"seed must lie in [0, 2**64), got {self.seed}")
        if not isinstance(self.trials_per_check, int) or self.trials_per_check < 1:
            raise ConfigError("trials_per_check must be a positive integer")
        if not self.orders:
            raise ConfigError("orders must be non-empty")
        for n in self.orders:
            if not isinstance(n, int) or n < 3:
                raise ConfigError(f"orders must be integers >= 3, got {n!r}")
        if list(self.orders) != sorted(set(self.orders)):
            raise ConfigError("orders must be strictly ascending")
        if len(self.b_grid) < 2:
            raise ConfigError("b_grid needs at least two points")
        if any(not (1.0 <= b <= 5.0) for b in self.b_grid):
            raise ConfigError("b_grid points must lie in [1, 5]")
        if any(y <= x for x, y in zip(self.b_grid, self.b_grid[1:])):
            raise ConfigError("b_grid must be strictly ascending")
        if not self.delta_grid:
            raise ConfigError("delta_grid must be non-empty")
        if any(not (d > 0.0 and math.isfinite(d)) for d in self.delta_grid):
            raise ConfigError("delta_grid values must be positive and finite")
        if any(d == 1.0 for d in self.delta_grid):
            raise ConfigError("delta_grid must not contain 1 (the identity)")
        if any(y <= x for x, y in zip(self.delta_grid, self.delta_grid[1:])):
            raise ConfigError("delta_grid must be strictly ascending")
        if not self.nu_tolerance > 0.0:
            raise ConfigError("nu_tolerance must be positive")
        if not self.equality_tolerance > 0.0:
            raise ConfigError("equality_tolerance must be positive")
        if self.monotonicity_slack < 0.0:
            raise ConfigError("monotonicity_slack must be non-negative")


@dataclass
class Witness:
    """A reproducible counterexample: base matrix, transformation
    parameters (positions 1-based), and the observed values."""

    matrix: tuple
    params: dict
    observed: dict
    note: str = ""


@dataclass
class PropertyVerdict:
    status: VerdictStatus
    trials: int
    witness: Witness | None = None


@dataclass
class AxiomReport:
    """Verdicts for every requested index, keyed by property id."""

    config: SuiteConfig
    verdicts: dict


# Fixed 3x3 counterexample seeds for the searches. The first is the
# classic case where a uniform intensification eventually *shrinks* the
# normalized ambiguity index AI; the second does the same to CCI and also
# separates CCI from its transpose.
AI_P3_WITNESS_BASE = Pcm([[1, 2, 8], [1 / 2, 1, 2], [1 / 8, 1 / 2, 1]])
CCI_P3_WITNESS_BASE = Pcm([[1, 3, 7], [1 / 3, 1, 1 / 2], [1 / 7, 2, 1]])
# Consistent except for one triad; has a dominant row, and its transpose
# has a different one, which is what the P6-violating index responds to.
TRANSPOSE_WITNESS_BASE = Pcm([[1, 1 / 2, 1 / 4], [2, 1, 1 / 3], [4, 3, 1]])

_ALL_ONES_3 = Pcm(np.ones((3, 3)))


def _seeded_p3_bases(idx: IndexId) -> tuple:
    if idx is IndexId.CCI:
        return (CCI_P3_WITNESS_BASE, AI_P3_WITNESS_BASE)
    return (AI_P3_WITNESS_BASE, CCI_P3_WITNESS_BASE)


def _per_order(cfg: SuiteConfig) -> int:
    return -(-cfg.trials_per_check // len(cfg.orders))


def _cell_rng(cfg: SuiteConfig, idx: IndexId, prop: str, n: int):
    return rng_from_seed(derive_seed(cfg.seed, idx.value, prop, n))


def _oriented(desc, value: float) -> float:
    if desc.orientation is Orientation.HIGHER_IS_MORE_CONSISTENT:
        return -value
    return value


def _close(a: float, b: float, tol: float) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def _witness(m: Pcm, params: dict, observed: dict, note: str = "") -> Witness:
    clean = {}
    for k, v in observed.items():
        if isinstance(v, (list, tuple)):
            clean[k] = [float(x) for x in v]
        else:
            clean[k] = float(v)
    return Witness(matrix=m.to_rows(), params=params, observed=clean, note=note)


def _p1_probe(rng, n: int, cfg: SuiteConfig):
    """A perturbed consistent matrix guaranteed to be detectably off.

    The perturbed pair is drawn among entries at ratio >= 2 from unity so
    the induced inconsistency cannot be arbitrarily small; nearly flat
    bases are redrawn.
    """
    base = None
    cands = []
    for _ in range(_REDRAW_LIMIT):
        base = consistent_from_rng(rng, n)
        a = base.entries
        cands = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if abs(math.log(a[i, j])) >= _P1_MIN_LOG_RATIO]
        if cands:
            break
    if not cands:
        a = base.entries
        logs = np.abs(np.log(a))
        np.fill_diagonal(logs, -1.0)
        i, j = np.unravel_index(np.argmax(logs), logs.shape)
        cands = [(int(i), int(j))]
    p, q = cands[int(rng.integers(len(cands)))]
    delta = cfg.delta_grid[int(rng.integers(len(cfg.delta_grid)))]
    return perturb_entry(base, p, q, delta), base, p, q, delta


def check_p1(idx: IndexId, cfg: SuiteConfig = SuiteConfig()) -> PropertyVerdict:
    """nu on consistent matrices; detectably off nu on perturbed ones.

    trials counts matrices probed (consistent and perturbed together).
    """
    cfg.validate()
    desc = descriptor(idx)
    per = _per_order(cfg)
    count = 0
    for n in cfg.orders:
        rng = _cell_rng(cfg, idx, "P1", n)
        for _ in range(per):
            m = consistent_from_rng(rng, n)
            count += 1
            try:
                v = evaluate(idx, m)
            except ZeroDenominatorError:
                w = _witness(m, {"probe": "consistent"}, {},
                             note="undefined on a consistent matrix")
                return PropertyVerdict(VerdictStatus.VIOLATION_FOUND, count, w)
            if abs(v - desc.nu) > cfg.nu_tolerance:
                w = _witness(m, {"probe": "consistent"},
                             {"value": v, "nu": desc.nu})
                return PropertyVerdict(VerdictStatus.VIOLATION_FOUND, count, w)
        for _ in range(per):
            m, base, p, q, delta = _p1_probe(rng, n, cfg)
            count += 1
            try:
                v = evaluate(idx, m)
            except ZeroDenominatorError:
                w = _witness(base, {"probe": "perturbed", "row": p + 1,
                                    "col": q + 1, "delta": delta}, {},
                             note="undefined on a perturbed matrix")
                return PropertyVerdict(VerdictStatus.VIOLATION_FOUND, count, w)
            if abs(v - desc.nu) <= cfg.nu_tolerance:
                w = _witness(base, {"probe": "perturbed", "row": p + 1,
                                    "col": q + 1, "delta": delta},
                             {"value": v, "nu": desc.nu},
                             note="perturbed matrix still reads as consistent")
                return PropertyVerdict(VerdictStatus.VIOLATION_FOUND, count, w)
    return PropertyVerdict(VerdictStatus.NO_VIOLATION_FOUND, count)


def _distinct_permutations(rng, n: int, k: int) -> list:
    seen = set()
    out = []
    while len(out) < k:
        p = tuple(int(x) for x in rng.permutation(n))
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def check_p2(idx: IndexId, cfg: SuiteConfig = SuiteConfig()) -> PropertyVerdict:
    """Invariance under relabeling; trials counts permutation comparisons.

    For n <= 4 every permutation of each random matrix is tried; for larger
    n, min(per-order trials, n!) distinct permutations are sampled.
    """
    cfg.validate()
    per = _per_order(cfg)
    count = 0
    for n in cfg.orders:
        rng = _cell_rng(cfg, idx, "P2", n)
        nfact = math.factorial(n)
        exhaustive = n <= _P2_EXHAUSTIVE_MAX
        per_matrix = nfact if exhaustive else min(per, nfact)
        batches = -(-per // per_matrix)
        for _ in range(batches):
            m = pcm_from_rng(rng, n)
            v0 = evaluate(idx, m)
            if exhaustive:
                perms = itertools.permutations(range(n))
            else:
                perms = _distinct_permutations(rng, n, per_matrix)
            for perm in perms:
                v1 = evaluate(idx, permute(m, perm))
                count += 1
                if not _close(v0, v1, cfg.equality_tolerance):
                    w = _witness(m, {"mapping": [p + 1 for p in perm]},
                                 {"value": v0, "value_permuted": v1})
                    return PropertyVerdict(VerdictStatus.VIOLATION_FOUND,
                                           count, w)
    return PropertyVerdict(VerdictStatus.NO_VIOLATION_FOUND, count)


def _first_descent(values, slack: float):
    """Index k where values[k+1] drops below values[k] - slack, else None."""
    for k in range(len(values) - 1):
        if values[k + 1] < values[k] - slack:
            return k
    return None


def _scan_intensification(idx, desc, base, cfg):
    values = [evaluate(idx, intensify(base, b)) for b in cfg.b_grid]
    oriented = [_oriented(desc, v) for v in values]
    k = _first_descent(oriented, cfg.monotonicity_slack)
    if k is None:
        return None
    note = ""
    if desc.orientation is Orientation.HIGHER_IS_MORE_CONSISTENT:
        note = "comparison on negated values (higher means more consistent)"
    return _witness(base,
                    {"b_lower": cfg.b_grid[k], "b_upper": cfg.b_grid[k + 1]},
                    {"value_lower": values[k], "value_upper": values[k + 1]},
                    note=note)


def check_p3(idx: IndexId, cfg: SuiteConfig = SuiteConfig()) -> PropertyVerdict:
    """Monotone under intensification over the b grid.

    Two fixed 3x3 counterexample seeds are swept before any random base,
    regardless of trial count; trials counts bases swept.
    """
    cfg.validate()
    desc = descriptor(idx)
    per = _per_order(cfg)
    count = 0
    for base in _seeded_p3_bases(idx):
        count += 1
        w = _scan_intensification(idx, desc, base, cfg)
        if w is not None:
            return PropertyVerdict(VerdictStatus.VIOLATION_FOUND, count, w)
    for n in cfg.orders:
        rng = _cell_rng(cfg, idx, "P3", n)
        for _ in range(per):
            base = pcm_from_rng(rng, n)
            count += 1
            w = _scan_intensification(idx, desc, base, cfg)
            if w is not None:
                return PropertyVerdict(VerdictStatus.VIOLATION_FOUND, count, w)
    return PropertyVerdict(VerdictStatus.NO_VIOLATION_FOUND, count)


def check_p4(idx: IndexId, cfg: SuiteConfig = SuiteConfig()) -> PropertyVerdict:
    """Monotone under single-pair perturbation of a consistent base.

    The delta grid is split at 1: moving left of 1 or right of 1 must not
    read as less inconsistent. trials counts bases swept.
    """
    cfg.validate()
    desc = descriptor(idx)
    per = _per_order(cfg)
    count = 0
    lower = [d for d in cfg.delta_grid if d < 1.0]
    upper = [d for d in cfg.delta_grid if d > 1.0]
    for n in cfg.orders:
        rng = _cell_rng(cfg, idx, "P4", n)
        for _ in range(per):
            base = None
            pairs = []
            for _ in range(_REDRAW_LIMIT):
                base = consistent_from_rng(rng, n)
                a = base.entries
                pairs = [(i, j) for i in range(n) for j in range(i + 1, n)
                         if a[i, j] != 1.0]
                if pairs:
                    break
            if not pairs:
                continue
            p, q = pairs[int(rng.integers(len(pairs)))]
            count += 1
            values = {d: evaluate(idx, perturb_entry(base, p, q, d))
                      for d in cfg.delta_grid}
            # Left of 1, scanned toward 1: inconsistency may only fall.
            away_lower = [_oriented(desc, values[d]) for d in reversed(lower)]
            k = _first_descent(away_lower, cfg.monotonicity_slack)
            if k is not None:
                rev = list(reversed(lower))
                w = _witness(base, {"row": p + 1, "col": q + 1,
                                    "delta_lower": rev[k + 1],
                                    "delta_upper": rev[k]},
                             {"value_nearer_1": values[rev[k]],
                              "value_farther": values[rev[k + 1]]},
                             note="moving away from delta=1 lowered the "
                                  "oriented value")
                return PropertyVerdict(VerdictStatus.VIOLATION_FOUND, count, w)
            away_upper = [_oriented(desc, values[d]) for d in upper]
            k = _first_descent(away_upper, cfg.monotonicity_slack)
            if k is not None:
                w = _witness(base, {"row": p + 1, "col": q + 1,
                                    "delta_lower": upper[k],
                                    "delta_upper": upper[k + 1]},
                             {"value_nearer_1": values[upper[k]],
                              "value_farther": values[upper[k + 1]]},
                             note="moving away from delta=1 lowered the "
                                  "oriented value")
                return PropertyVerdict(VerdictStatus.VIOLATION_FOUND, count, w)
    return PropertyVerdict(VerdictStatus.NO_VIOLATION_FOUND, count)


def _nudge(m: Pcm, p: int, q: int, eps: float) -> Pcm:
    a = m.entries.copy()
    a[p, q] *= 1.0 + eps
    a[q, p] /= 1.0 + eps
    return Pcm(a, _trusted=True)


def _p5_diffs(idx, m, p, q):
    v0 = evaluate(idx, m)
    scale = max(1.0, abs(v0))
    diffs = [abs(evaluate(idx, _nudge(m, p, q, eps)) - v0) / scale
             for eps in P5_EPSILONS]
    return v0, diffs


def check_p5(idx: IndexId, cfg: SuiteConfig = SuiteConfig()) -> PropertyVerdict:
    """Continuity probe: response to relative nudges of one pair.

    A nudge of size eps multiplies a_pq by (1+eps); the magnitude-scaled
    value change must shrink to the bottom of the eps ladder and end below
    P5_FINAL_THRESHOLD. Passing is only ever heuristic. The all-ones
    matrix is probed first: an index undefined there fails outright.
    trials counts matrices probed.
    """
    cfg.validate()
    per = _per_order(cfg)
    count = 1
    try:
        v0, diffs = _p5_diffs(idx, _ALL_ONES_3, 0, 1)
    except ZeroDenominatorError:
        w = _witness(_ALL_ONES_3, {"row": 1, "col": 2}, {},
                     note="undefined at an interior point of the domain "
                          "(all entries equal 1)")
        return PropertyVerdict(VerdictStatus.VIOLATION_FOUND, count, w)
    w = _p5_verdict(_ALL_ONES_3, 0, 1, v0, diffs, cfg)
    if w is not None:
        return PropertyVerdict(VerdictStatus.VIOLATION_FOUND, count, w)
    for n in cfg.orders:
        rng = _cell_rng(cfg, idx, "P5", n)
        for _ in range(per):
            m = pcm_from_rng(rng, n)
            p = int(rng.integers(n))
            q = int(rng.integers(n - 1))
            if q >= p:
                q += 1
            count += 1
            try:
                v0, diffs = _p5_diffs(idx, m, p, q)
            except ZeroDenominatorError:
                w = _witness(m, {"row": p + 1, "col": q + 1}, {},
                             note="undefined under a small nudge")
                return PropertyVerdict(VerdictStatus.VIOLATION_FOUND, count, w)
            w = _p5_verdict(m, p, q, v0, diffs, cfg)
            if w is not None:
                return PropertyVerdict(VerdictStatus.VIOLATION_FOUND, count, w)
    return PropertyVerdict(VerdictStatus.HEURISTIC, count)


def _p5_verdict(m, p, q, v0, diffs, cfg):
    # The response at the finest eps must be the smallest on the ladder
    # and below the threshold. Demanding a decrease between every adjacent
    # pair would misfire on kinks: a piecewise-smooth index can bend back
    # toward its base value inside a coarse step, making the diff at a
    # larger eps legitimately smaller. A genuine jump keeps the final diff
    # large, which both clauses catch.
    settled = diffs[-1] <= min(diffs) + cfg.monotonicity_slack
    if not settled or diffs[-1] > P5_FINAL_THRESHOLD:
        return _witness(m, {"row": p + 1, "col": q + 1,
                            "epsilons": list(P5_EPSILONS),
                            "threshold": P5_FINAL_THRESHOLD},
                        {"value": v0, "scaled_diffs": diffs},
                        note="scaled response failed to shrink with eps")
    return None


def check_p6(idx: IndexId, cfg: SuiteConfig = SuiteConfig()) -> PropertyVerdict:
    """Equal value on a matrix and its transpose.

    One fixed 3x3 seed with a dominant row is compared first, then random
    matrices; trials counts comparisons.
    """
    cfg.validate()
    cfg_tol = cfg.equality_tolerance
    count = 0
    seeds = [TRANSPOSE_WITNESS_BASE]
    for m in seeds:
        count += 1
        v0 = evaluate(idx, m)
        v1 = evaluate(idx, transpose(m))
        if not _close(v0, v1, cfg_tol):
            w = _witness(m, {}, {"value": v0, "value_transposed": v1})
            return PropertyVerdict(VerdictStatus.VIOLATION_FOUND, count, w)
    for n in cfg.orders:
        rng = _cell_rng(cfg, idx, "P6", n)
        for _ in range(_per_order(cfg)):
            m = pcm_from_rng(rng, n)
            count += 1
            v0 = evaluate(idx, m)
            v1 = evaluate(idx, transpose(m))
            if not _close(v0, v1, cfg_tol):
                w = _witness(m, {}, {"value": v0, "value_transposed": v1})
                return PropertyVerdict(VerdictStatus.VIOLATION_FOUND, count, w)
    return PropertyVerdict(VerdictStatus.NO_VIOLATION_FOUND, count)


CHECKERS = {
    "P1": check_p1,
    "P2": check_p2,
    "P3": check_p3,
    "P4": check_p4,
    "P5": check_p5,
    "P6": check_p6,
}


def run_suite(ids, cfg: SuiteConfig = SuiteConfig()) -> AxiomReport:
    """Run every property check for every requested index."""
    cfg.validate()
    seen = []
    for idx in ids:
        if idx not in seen:
            seen.append(idx)
    if not seen:
        raise ConfigError("no indices requested")
    verdicts = {}
    for idx in seen:
        verdicts[idx] = {prop: CHECKERS[prop](idx, cfg)
                         for prop in PROPERTIES}
    return AxiomReport(config=cfg, verdicts=verdicts)


def recheck_witness(idx: IndexId, prop: str, witness: Witness,
                    cfg: SuiteConfig = SuiteConfig()) -> bool:
    """Re-evaluate a recorded violation from scratch; True if it reproduces."""
    cfg.validate()
    desc = descriptor(idx)
    m = Pcm(witness.matrix)
    params = witness.params
    if prop == "P1":
        if params.get("probe") == "perturbed":
            probe = perturb_entry(m, params["row"] - 1, params["col"] - 1,
                                  params["delta"])
            try:
                v = evaluate(idx, probe)
            except ZeroDenominatorError:
                return True
            return abs(v - desc.nu) <= cfg.nu_tolerance
        try:
            v = evaluate(idx, m)
        except ZeroDenominatorError:
            return True
        return abs(v - desc.nu) > cfg.nu_tolerance
    if prop == "P2":
        perm = [p - 1 for p in params["mapping"]]
        return not _close(evaluate(idx, m), evaluate(idx, permute(m, perm)),
                          cfg.equality_tolerance)
    if prop == "P3":
        lo = _oriented(desc, evaluate(idx, intensify(m, params["b_lower"])))
        hi = _oriented(desc, evaluate(idx, intensify(m, params["b_upper"])))
        return hi < lo - cfg.monotonicity_slack
    if prop == "P4":
        p, q = params["row"] - 1, params["col"] - 1
        near = _oriented(desc, evaluate(
            idx, perturb_entry(m, p, q, params["delta_lower"])))
        far = _oriented(desc, evaluate(
            idx, perturb_entry(m, p, q, params["delta_upper"])))
        if params["delta_upper"] < 1.0:
            near, far = far, near
        return far < near - cfg.monotonicity_slack
    if prop == "P5":
        p, q = params["row"] - 1, params["col"] - 1
        try:
            v0, diffs = _p5_diffs(idx, m, p, q)
        except ZeroDenominatorError:
            return True
        return _p5_verdict(m, p, q, v0, diffs, cfg) is not None
    if prop == "P6":
        return not _close(evaluate(idx, m), evaluate(idx, transpose(m)),
                          cfg.equality_tolerance)
    raise ConfigError(f"unknown property {prop!r}")


@dataclass
class CurveSeries:
    """Sampled index values along a one-parameter family of matrices."""

    index_id: IndexId
    param: str
    base: Pcm
    samples: tuple
    row: int | None = None
    col: int | None = None


def _validate_grid(grid, name: str) -> tuple:
    pts = tuple(float(g) for g in grid)
    if not pts:
        raise ConfigError(f"{name} must be non-empty")
    if any(not (math.isfinite(g) and g > 0.0) for g in pts):
        raise ConfigError(f"{name} values must be positive and finite")
    if any(y <= x for x, y in zip(pts, pts[1:])):
        raise ConfigError(f"{name} must be strictly ascending")
    return pts


def curve_intensification(idx: IndexId, m: Pcm, grid) -> CurveSeries:
    """Index values along b -> intensify(m, b)."""
    pts = _validate_grid(grid, "b grid")
    samples = tuple((b, float(evaluate(idx, intensify(m, b)))) for b in pts)
    return CurveSeries(index_id=idx, param="b", base=m, samples=samples)


def curve_perturbation(idx: IndexId, m: Pcm, p: int, q: int, grid) -> CurveSeries:
    """Index values along delta -> perturb_entry(m, p, q, delta).

    The base must be consistent (so delta=1 sits at the index's floor) and
    the chosen entry must differ from 1 (otherwise the sweep is degenerate:
    1**delta never moves).
    """
    pts = _validate_grid(grid, "delta grid")
    if not is_consistent(m):
        raise InconsistentBaseError("perturbation curves need a consistent "
                                    "base matrix")
    n = m.order
    if not (0 <= p < n and 0 <= q < n):
        raise OrderMismatchError(f"entry ({p},{q}) outside a matrix of "
                                 f"order {n}")
    if p == q:
        raise DiagonalEntryError("cannot sweep a diagonal entry; pick p != q")
    if m.entries[p, q] == 1.0:
        raise UnitEntryError(f"entry ({p + 1},{q + 1}) equals 1; the sweep "
                             f"would not move it")
    samples = tuple((d, float(evaluate(idx, perturb_entry(m, p, q, d))))
                    for d in pts)
    return CurveSeries(index_id=idx, param="delta", base=m, samples=samples,
                       row=p, col=q)
