"""Numba kernels for the hot loops.

Everything here is sequential and allocation-free apart from the output
arrays, so results are identical across runs and machines.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def spf_sieve(n_max):
    """Linear (one-pass) smallest-prime-factor sieve.

    Returns ``(spf, primes)`` where ``spf[n]`` is the smallest prime
    factor of ``n`` for 2 <= n <= n_max (``spf[0] = spf[1] = 0``) and
    ``primes`` lists all primes <= n_max in increasing order.  Each
    composite is crossed off exactly once, by its smallest prime factor.
    """
    spf = np.zeros(n_max + 1, dtype=np.uint32)
    # pi(n) < 1.26 n/ln n for n >= 17 (Rosser-Schoenfeld)
    cap = max(16, int(1.3 * n_max / np.log(n_max)) + 10)
    primes = np.empty(cap, dtype=np.int64)
    count = 0
    for i in range(2, n_max + 1):
        if spf[i] == 0:
            spf[i] = i
            primes[count] = i
            count += 1
        for j in range(count):
            p = primes[j]
            ip = i * p
            if p > spf[i] or ip > n_max:
                break
            spf[ip] = np.uint32(p)
    return spf, primes[:count].copy()


@njit(cache=True)
def fill_heights(spf, n_max):
    """Heights of 1..n_max by the recurrence h(n) = h(phi(n)) + 1.

    phi(n) is rebuilt from the SPF factorization of each n; phi(n) < n,
    so h[phi(n)] is already filled when row n is reached.
    """
    h = np.zeros(n_max + 1, dtype=np.uint8)
    for n in range(2, n_max + 1):
        m = n
        phi = np.int64(1)
        while m > 1:
            p = np.int64(spf[m])
            m //= p
            f = p - 1
            while m % p == 0:
                m //= p
                f *= p
            phi *= f
        h[n] = h[phi] + 1
    return h


@njit(cache=True)
def sieve_segment(lo, hi, base_primes):
    """Boolean primality mask for the window [lo, hi].

    ``base_primes`` must contain every prime <= sqrt(hi).
    """
    mask = np.ones(hi - lo + 1, dtype=np.bool_)
    for j in range(base_primes.shape[0]):
        p = base_primes[j]
        start = p * p
        if start > hi:
            break
        if start < lo:
            start = ((lo + p - 1) // p) * p
        for q in range(start - lo, hi - lo + 1, p):
            mask[q] = False
    return mask


@njit(cache=True)
def fnv1a64(payload):
    """64-bit FNV-1a over a byte array."""
    acc = np.uint64(0xCBF29CE484222325)
    prime = np.uint64(0x100000001B3)
    for i in range(payload.shape[0]):
        acc = (acc ^ np.uint64(payload[i])) * prime
    return acc
