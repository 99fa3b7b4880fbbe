"""Nine inconsistency indices over pairwise comparison matrices.

Each index maps a PCM to one number summarizing how far the matrix is from
consistency. They fall into a few families:

* triad-ratio indices (K, I_STAR, I_NOT6) look at x = a_ik / (a_ij * a_jk)
  over unordered triples i < j < k;
* ambiguity indices (AI, AI_STAR) look at the spread of the indirect
  estimates r_ij = {a_ik * a_kj : k} of each entry;
* CI_H compares the matrix against its consistent geometric-mean
  approximation;
* CCI measures alignment of the columns after normalization (the one index
  here where *larger* means *more* consistent);
* RE_STAR and RE measure least-squares residuals in log space.

Every index has a characteristic value ``nu`` attained exactly on
consistent matrices (0 for most, 1 for CI_H and CCI) and an orientation.
The registry at the bottom carries, for each index, the property claims
P1-P6 published alongside its definition; the empirical harness in
:mod:`pcmkit.harness` reports what it actually finds, which may disagree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Callable, Mapping

import numpy as np

from .errors import ZeroDenominatorError
from .pcm import Pcm


class Orientation(enum.Enum):
    """Which direction of the index scale means more inconsistency."""

    HIGHER_IS_MORE_INCONSISTENT = "higher-more-inconsistent"
    HIGHER_IS_MORE_CONSISTENT = "higher-more-consistent"


class IndexId(enum.Enum):
    K = "K"
    AI = "AI"
    AI_STAR = "AI_STAR"
    CI_H = "CI_H"
    CCI = "CCI"
    RE = "RE"
    RE_STAR = "RE_STAR"
    I_STAR = "I_STAR"
    I_NOT6 = "I_NOT6"


@lru_cache(maxsize=None)
def _triples(n: int):
    idx = np.array([(i, j, k)
                    for i in range(n)
                    for j in range(i + 1, n)
                    for k in range(j + 1, n)], dtype=int)
    return idx[:, 0], idx[:, 1], idx[:, 2]


def _triad_ratios(a: np.ndarray) -> np.ndarray:
    """x = a_ik / (a_ij * a_jk) for every i < j < k; all 1 iff consistent."""
    i, j, k = _triples(a.shape[0])
    return a[i, k] / (a[i, j] * a[j, k])


def _indirect(a: np.ndarray) -> np.ndarray:
    """Cube t[i, j, k] = a_ik * a_kj, the estimate of a_ij routed through k."""
    return a[:, None, :] * a.T[None, :, :]


def index_k(m: Pcm) -> float:
    """Worst triad deviation: max over triples of min(|1 - x|, |1 - 1/x|).

    Bounded in [0, 1); zero exactly on consistent matrices.
    """
    x = _triad_ratios(m.entries)
    return float(np.max(np.minimum(np.abs(1.0 - x), np.abs(1.0 - 1.0 / x))))


@dataclass(frozen=True)
class AmbiguityMatrix:
    """Per-entry sets of indirect estimates a_ik * a_kj, sorted ascending."""

    order: int
    cells: tuple

    def cell(self, i: int, j: int) -> tuple:
        return self.cells[i][j]


def ambiguity_sets(m: Pcm) -> AmbiguityMatrix:
    """All indirect estimates of each entry.

    Cell (i, j) holds the sorted distinct values of a_ik * a_kj over k. On
    a consistent matrix every cell collapses to the single value a_ij. The
    mirror cells satisfy r_ji = {1/x : x in r_ij} up to rounding.
    """
    t = _indirect(m.entries)
    n = m.order
    cells = tuple(tuple(tuple(sorted(set(float(v) for v in t[i, j])))
                        for j in range(n))
                  for i in range(n))
    return AmbiguityMatrix(order=n, cells=cells)


def index_ai(m: Pcm) -> float:
    """Mean normalized width of the indirect-estimate sets, upper triangle.

    Each unordered pair contributes (max - min) / ((1 + max)(1 + min));
    the normalization keeps the value in [0, 1) but also lets a uniform
    intensification shrink it again once entries grow large.
    """
    a = m.entries
    n = m.order
    t = _indirect(a)
    hi = t.max(axis=2)
    lo = t.min(axis=2)
    iu = np.triu_indices(n, 1)
    x, y = hi[iu], lo[iu]
    total = np.sum((x - y) / ((1.0 + x) * (1.0 + y)))
    return float(2.0 * total / (n * (n - 1)))


def index_ai_star(m: Pcm) -> float:
    """Mean raw width of the indirect-estimate sets over all ordered pairs.

    Summing both (i, j) and (j, i) is what makes the value monotone under
    intensification: the pair sum of widths grows with b even when one of
    the two mirror cells shrinks.
    """
    a = m.entries
    n = m.order
    t = _indirect(a)
    width = t.max(axis=2) - t.min(axis=2)
    return float(width.sum() / (n * (n - 1)))


def consistent_approximation(m: Pcm) -> Pcm:
    """Closest consistent matrix in the geometric-mean sense:
    g_ij = (prod_k a_ik * a_kj) ** (1/n)."""
    loga = np.log(m.entries)
    n = m.order
    rows = loga.sum(axis=1)
    cols = loga.sum(axis=0)
    return Pcm(np.exp((rows[:, None] + cols[None, :]) / n), _trusted=True)


def index_ci_h(m: Pcm) -> float:
    """Mean product of entries with the transposed consistent approximation,
    (1/n^2) * sum_ij a_ij * g_ji. Equals 1 exactly on consistent matrices
    and grows with inconsistency."""
    g = consistent_approximation(m).entries
    a = m.entries
    return float(np.sum(a * g.T) / (m.order ** 2))


def index_cci(m: Pcm) -> float:
    """Alignment of column-normalized judgments; 1 means consistent.

    Columns are scaled to unit Euclidean norm; the index is the norm of the
    vector of row sums divided by n. Higher is MORE consistent, capped at 1.
    """
    a = m.entries
    b = a / np.sqrt(np.sum(a * a, axis=0))
    rowsums = b.sum(axis=1)
    return float(np.sqrt(np.sum(rowsums * rowsums)) / m.order)


def index_re_star(m: Pcm) -> float:
    """Total squared residual of log entries against row-mean differences:
    sum_ij (p_ij - d_i + d_j)^2 with p = ln a and d the row means of p."""
    p = np.log(m.entries)
    d = p.mean(axis=1)
    resid = p - d[:, None] + d[None, :]
    return float(np.sum(resid * resid))


def index_re(m: Pcm) -> float:
    """Relative residual: index_re_star normalized by the total squared log
    magnitude sum_ij p_ij^2.

    Undefined on the all-ones matrix, where the denominator vanishes;
    raises ZeroDenominatorError there.
    """
    p = np.log(m.entries)
    denom = float(np.sum(p * p))
    if denom == 0.0:
        raise ZeroDenominatorError("every entry equals 1, so the relative "
                                   "residual has a zero denominator")
    d = p.mean(axis=1)
    resid = p - d[:, None] + d[None, :]
    return float(np.sum(resid * resid) / denom)


def index_i_star(m: Pcm) -> float:
    """Sum over triples of x + 1/x - 2 with x the triad ratio; unbounded,
    zero exactly on consistent matrices."""
    x = _triad_ratios(m.entries)
    return float(np.sum(x + 1.0 / x - 2.0))


def _dominance_factor(a: np.ndarray) -> float:
    """max(1, best row minimum) where each row's score is its smallest
    off-diagonal entry; exceeds 1 only when some row dominates all others."""
    masked = np.where(np.eye(a.shape[0], dtype=bool), np.inf, a)
    best = float(masked.min(axis=1).max())
    return max(1.0, best)


def index_i_not6(m: Pcm) -> float:
    """index_i_star scaled by the dominance factor of the matrix.

    The factor responds to row dominance, which transposition reverses, so
    the index deliberately distinguishes a matrix from its transpose while
    behaving like index_i_star in every other respect.
    """
    return index_i_star(m) * _dominance_factor(m.entries)


@dataclass(frozen=True)
class IndexDescriptor:
    """Everything the harness and CLI need to know about one index."""

    id: IndexId
    label: str
    nu: float
    orientation: Orientation
    documented: Mapping
    fn: Callable[[Pcm], float] = field(repr=False)


def _claims(**overrides) -> Mapping:
    """Published P1-P6 claims: True holds, False fails, None open."""
    table = {f"P{k}": True for k in range(1, 7)}
    table.update(overrides)
    return MappingProxyType(table)


REGISTRY: tuple = (
    IndexDescriptor(IndexId.K, "K", 0.0,
                    Orientation.HIGHER_IS_MORE_INCONSISTENT,
                    _claims(), index_k),
    IndexDescriptor(IndexId.AI, "AI", 0.0,
                    Orientation.HIGHER_IS_MORE_INCONSISTENT,
                    _claims(P3=False), index_ai),
    IndexDescriptor(IndexId.AI_STAR, "AI*", 0.0,
                    Orientation.HIGHER_IS_MORE_INCONSISTENT,
                    _claims(), index_ai_star),
    IndexDescriptor(IndexId.CI_H, "CI_H", 1.0,
                    Orientation.HIGHER_IS_MORE_INCONSISTENT,
                    _claims(), index_ci_h),
    IndexDescriptor(IndexId.CCI, "CCI", 1.0,
                    Orientation.HIGHER_IS_MORE_CONSISTENT,
                    _claims(P3=False, P4=None), index_cci),
    IndexDescriptor(IndexId.RE, "RE", 0.0,
                    Orientation.HIGHER_IS_MORE_INCONSISTENT,
                    _claims(P4=False, P5=False), index_re),
    IndexDescriptor(IndexId.RE_STAR, "RE*", 0.0,
                    Orientation.HIGHER_IS_MORE_INCONSISTENT,
                    _claims(), index_re_star),
    IndexDescriptor(IndexId.I_STAR, "I*", 0.0,
                    Orientation.HIGHER_IS_MORE_INCONSISTENT,
                    _claims(), index_i_star),
    IndexDescriptor(IndexId.I_NOT6, "I_not6", 0.0,
                    Orientation.HIGHER_IS_MORE_INCONSISTENT,
                    _claims(P6=False), index_i_not6),
)

_BY_ID = {d.id: d for d in REGISTRY}


def registry() -> tuple:
    """All index descriptors in canonical order."""
    return REGISTRY


def descriptor(idx: IndexId) -> IndexDescriptor:
    return _BY_ID[idx]


def evaluate(idx: IndexId, m: Pcm) -> float:
    """Apply one index to a matrix."""
    return _BY_ID[idx].fn(m)
