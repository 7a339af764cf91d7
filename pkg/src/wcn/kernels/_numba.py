import numpy as np
from numba import njit

from ._common import ALL_FLAGS, GIUGA, KORSELT, MAX_OMEGA, SQUAREFREE, WEAK_GIUGA


@njit(cache=True, nogil=True)
def _apply_prime(n, p, e, flags):
    flags = np.int64(flags)
    if e > 1:
        flags &= ALL_FLAGS ^ SQUAREFREE
    if (n - 1) % (p - 1) != 0:
        flags &= ALL_FLAGS ^ KORSELT
    if (n // p - 1) % p != 0:
        flags &= ALL_FLAGS ^ GIUGA
    if (n - p) % (p * p) != 0:
        flags &= ALL_FLAGS ^ WEAK_GIUGA
    return flags


@njit(cache=True, nogil=True)
def segment_stats(lo, hi, primes):
    """Per-n factor statistics for lo <= n < hi.

    ``primes`` must contain every prime up to isqrt(hi - 1).  Returns
    omega, bigomega, largest prime, phi and the flag word of each n.
    """
    size = hi - lo
    rem = np.empty(size, dtype=np.int64)
    for i in range(size):
        rem[i] = lo + i
    omega = np.zeros(size, dtype=np.int8)
    bigomega = np.zeros(size, dtype=np.int8)
    maxp = np.ones(size, dtype=np.int64)
    phi = np.ones(size, dtype=np.int64)
    flags = np.full(size, ALL_FLAGS, dtype=np.uint8)

    top = hi - 1
    for j in range(primes.shape[0]):
        p = primes[j]
        if p * p > top:
            break
        start = ((lo + p - 1) // p) * p
        for m in range(start, hi, p):
            i = m - lo
            r = rem[i]
            e = 0
            pk = 1
            while r % p == 0:
                r //= p
                e += 1
                pk *= p
            rem[i] = r
            omega[i] += 1
            bigomega[i] += e
            maxp[i] = p
            phi[i] *= (pk // p) * (p - 1)
            flags[i] = _apply_prime(m, p, e, flags[i])

    for i in range(size):
        q = rem[i]
        if q > 1:
            n = lo + i
            omega[i] += 1
            bigomega[i] += 1
            maxp[i] = q
            phi[i] *= q - 1
            f = np.int64(flags[i])
            if (n - 1) % (q - 1) != 0:
                f &= ALL_FLAGS ^ KORSELT
            if n != q:
                # q > sqrt(n), so q^2 > n - q and q > n/q - 1
                f &= ALL_FLAGS ^ (GIUGA | WEAK_GIUGA)
            flags[i] = f
    return omega, bigomega, maxp, phi, flags


@njit(cache=True, nogil=True)
def _mulmod(a, b, m):
    if m <= 3037000499:  # isqrt(2**63 - 1)
        return (a * b) % m
    q = np.int64(float(a) * float(b) / float(m))
    r = a * b - q * m
    while r < 0:
        r += m
    while r >= m:
        r -= m
    return r


@njit(cache=True, nogil=True)
def _powmod(b, e, m):
    result = 1 % m
    b %= m
    while e > 0:
        if e & 1:
            result = _mulmod(result, b, m)
        b = _mulmod(b, b, m)
        e >>= 1
    return result


@njit(cache=True, nogil=True)
def powsum_mod(bases, exponent, modulus):
    """sum(b ** exponent for b in bases) % modulus, modulus < 2**50."""
    acc = 0
    for k in range(bases.shape[0]):
        acc += _powmod(bases[k], exponent, modulus)
        if acc >= modulus:
            acc -= modulus
    return acc


@njit(cache=True, nogil=True)
def factor_batch(ns, primes):
    """Trial-divide each n; ``primes`` must reach isqrt(max(ns))."""
    k = ns.shape[0]
    P = np.zeros((k, MAX_OMEGA), dtype=np.int64)
    E = np.zeros((k, MAX_OMEGA), dtype=np.int64)
    for i in range(k):
        r = ns[i]
        c = 0
        for j in range(primes.shape[0]):
            p = primes[j]
            if p * p > r:
                break
            if r % p == 0:
                e = 0
                while r % p == 0:
                    r //= p
                    e += 1
                P[i, c] = p
                E[i, c] = e
                c += 1
        if r > 1:
            P[i, c] = r
            E[i, c] = 1
    return P, E
