"""Smallest-prime-factor sieve, factorization, Euler's totient, and
prime counting/indexing.

All tables are built once and are immutable afterwards; queries are
read-only and safe for concurrent use.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import CapacityError, RangeError

# Refuse to allocate tables beyond this many entries unless overridden.
DEFAULT_ENTRY_GUARD = 2_000_000_000

_SEGMENT = 1 << 22


@dataclass(frozen=True)
class SpfTable:
    """Smallest prime factor of every integer in [2, n_max]."""

    n_max: int
    spf: np.ndarray  # uint32; spf[n] = smallest prime factor of n, n >= 2

    def smallest_factor(self, n: int) -> int:
        if not 2 <= n <= self.n_max:
            raise RangeError(f"n={n} outside SPF table range [2, {self.n_max}]",
                             required_bound=n)
        return int(self.spf[n])

    def is_prime(self, n: int) -> bool:
        if not 2 <= n <= self.n_max:
            raise RangeError(f"n={n} outside SPF table range [2, {self.n_max}]",
                             required_bound=n)
        return int(self.spf[n]) == n


@dataclass(frozen=True)
class PrimeIndex:
    """All primes <= bound, in increasing order."""

    bound: int
    primes: np.ndarray  # int64, strictly increasing

    def __len__(self) -> int:
        return int(self.primes.shape[0])


def build_spf(n_max: int, *, entry_guard: int = DEFAULT_ENTRY_GUARD) -> SpfTable:
    """Build the smallest-prime-factor table for [2, n_max].

    The construction is the linear sieve: each composite is written
    exactly once, so the output is deterministic.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    if n_max + 1 > entry_guard:
        raise CapacityError(
            f"SPF table with {n_max + 1:,} entries exceeds the guard of "
            f"{entry_guard:,}; raise entry_guard explicitly to allow this")
    spf, _ = _kernels.spf_sieve(n_max)
    return SpfTable(n_max=n_max, spf=spf)


def factorize(n: int, t: SpfTable) -> list[tuple[int, int]]:
    """Canonical factorization of n as (prime, exponent) pairs,
    primes strictly increasing."""
    if n < 2:
        raise ValueError(f"factorize needs n >= 2, got {n}")
    if n > t.n_max:
        raise RangeError(f"n={n} exceeds SPF table bound {t.n_max}",
                         required_bound=n)
    out = []
    spf = t.spf
    m = n
    while m > 1:
        p = int(spf[m])
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        out.append((p, e))
    return out


def euler_phi(n: int, t: SpfTable) -> int:
    """Euler's totient; phi(1) = 1."""
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    if n > t.n_max:
        raise RangeError(f"n={n} exceeds SPF table bound {t.n_max}",
                         required_bound=n)
    if n == 1:
        return 1
    spf = t.spf
    m = n
    result = 1
    while m > 1:
        p = int(spf[m])
        m //= p
        f = p - 1
        while m % p == 0:
            m //= p
            f *= p
        result *= f
    return result


def _dense_prime_flags(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p:: p] = False
    return flags


def build_prime_index(bound: int, spf: SpfTable | None = None,
                      *, entry_guard: int = DEFAULT_ENTRY_GUARD) -> PrimeIndex:
    """Index of all primes <= bound.

    Reads the SPF table when it covers the bound; otherwise runs a
    segmented sieve (used for bounds too large to hold an SPF array).
    """
    if bound < 0:
        raise ValueError(f"bound must be >= 0, got {bound}")
    if bound + 1 > entry_guard * 8:
        raise CapacityError(f"prime index to {bound:,} exceeds the sieve guard")
    if bound < 2:
        return PrimeIndex(bound=bound, primes=np.empty(0, dtype=np.int64))
    if spf is not None and bound <= spf.n_max:
        window = spf.spf[2:bound + 1]
        primes = np.flatnonzero(window == np.arange(2, bound + 1, dtype=np.uint32))
        return PrimeIndex(bound=bound, primes=(primes + 2).astype(np.int64))
    return PrimeIndex(bound=bound, primes=_segmented_primes(bound))


def _segmented_primes(bound: int) -> np.ndarray:
    root = math.isqrt(bound)
    flags = _dense_prime_flags(max(root, 2))
    base = np.flatnonzero(flags).astype(np.int64)
    chunks = [base[base <= bound]]
    lo = root + 1
    while lo <= bound:
        hi = min(lo + _SEGMENT - 1, bound)
        mask = _kernels.sieve_segment(lo, hi, base)
        chunks.append(np.flatnonzero(mask) + lo)
        lo = hi + 1
    return np.concatenate(chunks)


def prime_pi(x: int, idx: PrimeIndex) -> int:
    """pi(x), the number of primes <= x; 0 for x < 2."""
    if x > idx.bound:
        raise RangeError(f"pi({x}) needs a prime index to at least {x}, "
                         f"have {idx.bound}", required_bound=x)
    if x < 2:
        return 0
    return int(np.searchsorted(idx.primes, x, side="right"))


def nth_prime_bound(n: int) -> int:
    """Upper bound for the n-th prime (p_n < n(ln n + ln ln n) for n >= 6)."""
    if n < 6:
        return 13
    ln = math.log(n)
    return math.ceil(n * (ln + math.log(ln)))


def nth_prime(n: int, idx: PrimeIndex) -> int:
    """The n-th prime, 1-indexed (nth_prime(1) = 2)."""
    if n < 1:
        raise ValueError(f"nth_prime needs n >= 1, got {n}")
    if n > len(idx):
        raise RangeError(
            f"nth_prime({n}) needs a prime index with at least {n} primes; "
            f"a sieve bound of {nth_prime_bound(n)} suffices",
            required_bound=nth_prime_bound(n))
    return int(idx.primes[n - 1])
