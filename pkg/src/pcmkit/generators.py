"""Seeded random matrices, weights, and permutations.

All randomness in the package flows through numpy's PCG64 generator
(``np.random.default_rng``), so a given seed reproduces the same draws on
any platform or process. ``derive_seed`` folds structured labels into a
fresh 64-bit seed via SHA-256, which is how the harness gives every
(index, property, order) cell its own independent, stable stream.

Entries of random matrices are log-uniform on [1/9, 9], the usual span of
ratio judgment scales.
"""

from __future__ import annotations

import hashlib
import math

import numpy as np

from .errors import ConfigError, OrderTooSmallError
from .pcm import MIN_ORDER, Pcm, consistent_from_weights

_LOG_SCALE = math.log(9.0)
_SEED_LIMIT = 2 ** 64


def rng_from_seed(seed: int) -> np.random.Generator:
    """A PCG64 generator for a 64-bit unsigned seed."""
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise ConfigError(f"seed must be an integer, got {seed!r}")
    if not 0 <= seed < _SEED_LIMIT:
        raise ConfigError(f"seed must lie in [0, 2**64), got {seed}")
    return np.random.default_rng(seed)


def derive_seed(*parts) -> int:
    """Deterministically mix labels into a new 64-bit seed (SHA-256 based)."""
    text = "\x1f".join(str(p) for p in parts)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def _require_order(n: int) -> None:
    if n < MIN_ORDER:
        raise OrderTooSmallError(f"order {n} < {MIN_ORDER}")


def weights_from_rng(rng: np.random.Generator, n: int) -> np.ndarray:
    """n positive weights, log-uniform on [1/9, 9]."""
    _require_order(n)
    return np.exp(rng.uniform(-_LOG_SCALE, _LOG_SCALE, size=n))


def pcm_from_rng(rng: np.random.Generator, n: int) -> Pcm:
    """Random reciprocal matrix: upper triangle log-uniform on [1/9, 9],
    lower triangle the exact float reciprocals."""
    _require_order(n)
    a = np.ones((n, n))
    iu = np.triu_indices(n, 1)
    vals = np.exp(rng.uniform(-_LOG_SCALE, _LOG_SCALE, size=iu[0].size))
    a[iu] = vals
    a[(iu[1], iu[0])] = 1.0 / vals
    return Pcm(a, _trusted=True)


def consistent_from_rng(rng: np.random.Generator, n: int) -> Pcm:
    """Random consistent matrix built from random weights."""
    return consistent_from_weights(weights_from_rng(rng, n))


def permutation_from_rng(rng: np.random.Generator, n: int) -> tuple:
    """A uniformly random permutation of 0..n-1 as a tuple of ints."""
    return tuple(int(x) for x in rng.permutation(n))


def random_weights(n: int, seed: int) -> np.ndarray:
    return weights_from_rng(rng_from_seed(seed), n)


def random_pcm(n: int, seed: int) -> Pcm:
    return pcm_from_rng(rng_from_seed(seed), n)


def random_consistent(n: int, seed: int) -> Pcm:
    return consistent_from_rng(rng_from_seed(seed), n)


def random_permutation(n: int, seed: int) -> tuple:
    return permutation_from_rng(rng_from_seed(seed), n)
