"""Pairwise comparison matrices and their basic transformations.

A pairwise comparison matrix (PCM) is a square matrix of positive ratio
judgments: entry a_ij says how many times more valuable item i is than
item j. The diagonal is 1 and entries come in reciprocal pairs,
a_ij * a_ji = 1. A PCM is *consistent* when every indirect estimate agrees
with the direct one, a_ik = a_ij * a_jk for all triples; real judgment
matrices are almost never consistent, which is what the indices in
:mod:`pcmkit.indices` quantify.

Construction validates shape, positivity, and reciprocity (relative
tolerance ``RECIPROCITY_REL_TOL``). Transformations return new matrices;
instances are immutable.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    DiagonalEntryError,
    NonPositiveEntryError,
    NonSquareError,
    OrderMismatchError,
    OrderTooSmallError,
    ReciprocityViolationError,
)

RECIPROCITY_REL_TOL = 1e-12
CONSISTENCY_REL_TOL = 1e-9
MIN_ORDER = 3


def _validate_entries(a: np.ndarray) -> None:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonSquareError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n < MIN_ORDER:
        raise OrderTooSmallError(f"order {n} < {MIN_ORDER}; comparisons need at "
                                 f"least {MIN_ORDER} items")
    bad = ~(np.isfinite(a) & (a > 0.0))
    if np.any(bad):
        i, j = np.argwhere(bad)[0]
        raise NonPositiveEntryError(
            f"entry at ({i + 1},{j + 1}) is {a[i, j]!r}; all entries must be "
            f"finite and positive", row=int(i) + 1, col=int(j) + 1)
    dev = np.abs(a * a.T - 1.0)
    i, j = np.unravel_index(np.argmax(dev), dev.shape)
    if dev[i, j] > RECIPROCITY_REL_TOL:
        raise ReciprocityViolationError(int(i) + 1, int(j) + 1,
                                        float(a[i, j] * a[j, i]))


class Pcm:
    """Immutable positive reciprocal matrix of order >= 3."""

    __slots__ = ("_entries",)

    def __init__(self, entries, *, _trusted: bool = False):
        a = np.array(entries, dtype=float)
        if not _trusted:
            _validate_entries(a)
        a.setflags(write=False)
        self._entries = a

    @property
    def entries(self) -> np.ndarray:
        """The (n, n) float array; read-only."""
        return self._entries

    @property
    def order(self) -> int:
        return int(self._entries.shape[0])

    def to_rows(self) -> tuple:
        """Entries as nested tuples of builtin floats (JSON-friendly)."""
        return tuple(tuple(float(x) for x in row) for row in self._entries)

    def __eq__(self, other):
        if not isinstance(other, Pcm):
            return NotImplemented
        return (self._entries.shape == other._entries.shape
                and bool(np.all(self._entries == other._entries)))

    def __hash__(self):
        return hash(self._entries.tobytes())

    def __repr__(self):
        return f"Pcm(order={self.order})"


def is_consistent(m: Pcm, tol: float = CONSISTENCY_REL_TOL) -> bool:
    """True when a_ik matches a_ij * a_jk for every triple, within rel tol."""
    a = m.entries
    ratios = a[:, None, :] / (a[:, :, None] * a[None, :, :])
    return bool(np.max(np.abs(ratios - 1.0)) <= tol)


def consistent_from_weights(weights) -> Pcm:
    """Build the consistent matrix a_ij = w_i / w_j from a positive vector."""
    w = np.asarray(weights, dtype=float)
    if w.ndim != 1:
        raise NonSquareError("weights must form a 1-d vector")
    if w.size < MIN_ORDER:
        raise OrderTooSmallError(f"need at least {MIN_ORDER} weights, got {w.size}")
    bad = ~(np.isfinite(w) & (w > 0.0))
    if np.any(bad):
        k = int(np.argwhere(bad)[0][0])
        raise NonPositiveEntryError(f"weight {k + 1} is {w[k]!r}; weights must "
                                    f"be finite and positive")
    return Pcm(w[:, None] / w[None, :], _trusted=True)


def consistent_from_chain(chain) -> Pcm:
    """Build a consistent matrix from adjacent ratios c_i = a_{i,i+1}.

    A consistent matrix is determined by its first superdiagonal; entry
    (i, j) for i < j is the product c_i * ... * c_{j-1}.
    """
    c = np.asarray(chain, dtype=float)
    if c.ndim != 1:
        raise NonSquareError("chain must form a 1-d vector")
    if c.size < MIN_ORDER - 1:
        raise OrderTooSmallError(f"need at least {MIN_ORDER - 1} adjacent "
                                 f"ratios, got {c.size}")
    bad = ~(np.isfinite(c) & (c > 0.0))
    if np.any(bad):
        k = int(np.argwhere(bad)[0][0])
        raise NonPositiveEntryError(f"ratio {k + 1} is {c[k]!r}; ratios must "
                                    f"be finite and positive")
    prefix = np.concatenate([[1.0], np.cumprod(c)])
    return Pcm(prefix[None, :] / prefix[:, None], _trusted=True)


def permute(m: Pcm, mapping) -> Pcm:
    """Relabel alternatives: entry (i, j) of the result is a[perm[i], perm[j]]."""
    n = m.order
    perm = list(mapping)
    if len(perm) != n:
        raise OrderMismatchError(f"mapping has length {len(perm)}, matrix "
                                 f"order is {n}")
    if sorted(perm) != list(range(n)):
        raise OrderMismatchError(f"mapping {perm!r} is not a permutation of "
                                 f"0..{n - 1}")
    idx = np.asarray(perm, dtype=int)
    return Pcm(m.entries[np.ix_(idx, idx)], _trusted=True)


def transpose(m: Pcm) -> Pcm:
    """Reverse every judgment: the (i, j) entry becomes a_ji."""
    return Pcm(m.entries.T, _trusted=True)


def intensify(m: Pcm, b: float) -> Pcm:
    """Raise every entry to the power b, amplifying (b > 1) or damping
    (0 < b < 1) all preferences at once."""
    b = float(b)
    if not np.isfinite(b) or b <= 0.0:
        raise ValueError(f"exponent must be a positive finite number, got {b!r}")
    return Pcm(m.entries ** b, _trusted=True)


def perturb_entry(m: Pcm, p: int, q: int, delta: float) -> Pcm:
    """Push one reciprocal pair off its value: a_pq -> a_pq**delta (and the
    mirror entry accordingly). delta = 1 returns the matrix unchanged."""
    n = m.order
    if not (0 <= p < n and 0 <= q < n):
        raise OrderMismatchError(f"entry ({p},{q}) outside a matrix of order {n}")
    if p == q:
        raise DiagonalEntryError("cannot perturb a diagonal entry; pick p != q")
    delta = float(delta)
    if not np.isfinite(delta) or delta <= 0.0:
        raise ValueError(f"delta must be a positive finite number, got {delta!r}")
    a = m.entries.copy()
    a[p, q] **= delta
    a[q, p] **= delta
    return Pcm(a, _trusted=True)
