"""Pure-numpy versions of the kernels; same signatures and outputs."""

import numpy as np

from ._common import ALL_FLAGS, GIUGA, KORSELT, MAX_OMEGA, SQUAREFREE, WEAK_GIUGA


def segment_stats(lo, hi, primes):
    size = hi - lo
    ns = np.arange(lo, hi, dtype=np.int64)
    rem = ns.copy()
    omega = np.zeros(size, dtype=np.int8)
    bigomega = np.zeros(size, dtype=np.int8)
    maxp = np.ones(size, dtype=np.int64)
    phi = np.ones(size, dtype=np.int64)
    flags = np.full(size, ALL_FLAGS, dtype=np.uint8)

    top = hi - 1
    for p in primes.tolist():
        if p * p > top:
            break
        start = -lo % p
        idx = np.arange(start, size, p)
        if idx.size == 0:
            continue
        n = ns[idx]
        r = rem[idx]
        e = np.zeros(idx.size, dtype=np.int64)
        pk = np.ones(idx.size, dtype=np.int64)
        hit = np.ones(idx.size, dtype=bool)
        while hit.any():
            r[hit] //= p
            e[hit] += 1
            pk[hit] *= p
            hit = r % p == 0
        rem[idx] = r
        omega[idx] += 1
        bigomega[idx] += e.astype(np.int8)
        maxp[idx] = p
        phi[idx] *= (pk // p) * (p - 1)
        f = flags[idx]
        f[e > 1] &= ALL_FLAGS ^ SQUAREFREE
        f[(n - 1) % (p - 1) != 0] &= ALL_FLAGS ^ KORSELT
        f[(n // p - 1) % p != 0] &= ALL_FLAGS ^ GIUGA
        f[(n - p) % (p * p) != 0] &= ALL_FLAGS ^ WEAK_GIUGA
        flags[idx] = f

    big = np.flatnonzero(rem > 1)
    q = rem[big]
    n = ns[big]
    omega[big] += 1
    bigomega[big] += 1
    maxp[big] = q
    phi[big] *= q - 1
    f = flags[big]
    f[(n - 1) % (q - 1) != 0] &= ALL_FLAGS ^ KORSELT
    f[n != q] &= ALL_FLAGS ^ (GIUGA | WEAK_GIUGA)
    flags[big] = f
    return omega, bigomega, maxp, phi, flags


def _mulmod(a, b, m):
    if m <= 3037000499:
        return a * b % m
    q = (a.astype(np.float64) * b.astype(np.float64) / float(m)).astype(np.int64)
    with np.errstate(over="ignore"):
        r = a * b - q * m
    r = np.where(r < 0, r + m, r)
    r = np.where(r < 0, r + m, r)
    r = np.where(r >= m, r - m, r)
    return np.where(r >= m, r - m, r)


def powsum_mod(bases, exponent, modulus):
    b = np.asarray(bases, dtype=np.int64) % modulus
    result = np.full(b.shape, 1 % modulus, dtype=np.int64)
    e = int(exponent)
    while e > 0:
        if e & 1:
            result = _mulmod(result, b, modulus)
        b = _mulmod(b, b, modulus)
        e >>= 1
    return int(result.sum(dtype=object) % modulus) if result.size else 0


def factor_batch(ns, primes):
    from ..arith import factorize

    k = len(ns)
    P = np.zeros((k, MAX_OMEGA), dtype=np.int64)
    E = np.zeros((k, MAX_OMEGA), dtype=np.int64)
    for i, n in enumerate(np.asarray(ns).tolist()):
        for c, (p, e) in enumerate(factorize(n).factors):
            P[i, c] = p
            E[i, c] = e
    return P, E
