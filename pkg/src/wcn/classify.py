"""Per-number predicates and statistics.

Each class predicate has a fast criterion on the factorization and, where
one exists, a direct power-sum oracle that evaluates the defining congruence
term by term.  Primes never belong to a number class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from . import kernels
from .arith import (
    Factorization,
    IntOrFactors,
    as_factorization,
    bernoulli_denominator,
    carmichael_lambda,
    cw,
    euler_phi,
    factorize,
    power_sum_mod,
    radical,
)

SUPER_CAP = 1 << 31
_BLOCK = 1 << 20
_I64 = 1 << 63


class LehmerBoundExceeded(ValueError):
    """n is in L_inf but its Lehmer index is larger than k_max."""

    def __init__(self, n: int, k: int, k_max: int):
        super().__init__(f"Lehmer index of {n} is {k} > k_max={k_max}")
        self.n, self.k, self.k_max = n, k, k_max


def _is_composite(f: Factorization) -> bool:
    return f.bigomega >= 2


def _powsum(bases: np.ndarray, exponent: int, modulus: int) -> int:
    """sum(b**exponent) mod modulus, on the kernel when it fits."""
    if modulus == 1 or bases.size == 0:
        return 0
    if modulus < kernels.MULMOD_LIMIT and exponent < _I64:
        return int(kernels.powsum_mod(bases, exponent, modulus))
    return sum(pow(int(b), exponent, modulus) for b in bases) % modulus


def _totative_blocks(n: int, primes: tuple[int, ...], stop: int) -> Iterator[np.ndarray]:
    """Totatives of n in [1, stop), in bounded-size chunks."""
    for lo in range(1, stop, _BLOCK):
        r = np.arange(lo, min(lo + _BLOCK, stop), dtype=np.int64)
        keep = np.ones(r.size, dtype=bool)
        for p in primes:
            keep &= r % p != 0
        yield r[keep]


# ---------------------------------------------------------------------------
# Weak Carmichael and Carmichael


def is_weak_carmichael(f: IntOrFactors) -> bool:
    """Odd composite with (p - 1) | (n - 1) for every prime p | n."""
    f = as_factorization(f)
    if not _is_composite(f) or not f.is_odd():
        return False
    # residues only, so exponent-form members of any size work
    return all(f.divides_n_minus_1(p - 1) for p in f.primes)


def is_weak_carmichael_oracle(n: int) -> bool:
    """Evaluate sum_{t totative} t^(n-1) == phi(n) (mod n) directly.

    For odd n the upper half of the totatives mirrors the lower half, so
    only r < n/2 are powered and the sum is doubled.
    """
    f = factorize(n)
    if not _is_composite(f):
        return False
    phi = euler_phi(f)
    if n % 2:
        s = sum(_powsum(b, n - 1, n) for b in _totative_blocks(n, f.primes, n // 2 + 1))
        s = 2 * s
    else:
        s = sum(_powsum(b, n - 1, n) for b in _totative_blocks(n, f.primes, n))
    return (s - phi) % n == 0


def is_carmichael(f: IntOrFactors) -> bool:
    f = as_factorization(f)
    return f.is_squarefree() and is_weak_carmichael(f)


def is_carmichael_bernoulli(f: IntOrFactors) -> bool:
    """n squarefree and n | denominator of B_(n-1)."""
    f = as_factorization(f)
    if not _is_composite(f) or not f.is_odd() or not f.is_squarefree():
        return False
    return bernoulli_denominator(f.n - 1) % f.n == 0


# ---------------------------------------------------------------------------
# Super Carmichael


SUPER_ROUTES = ("staged", "halved", "direct")


def _super_direct(f: Factorization) -> int:
    n = f.n
    m = n * n
    s = sum(_powsum(b, n - 1, m) for b in _totative_blocks(n, f.primes, n))
    return (s - euler_phi(f)) % m


def _super_halved(f: Factorization) -> int:
    # (n - r)^(n-1) == r^(n-1) + n r^(n-2)  (mod n^2) for odd n
    n = f.n
    m = n * n
    a = b = 0
    for block in _totative_blocks(n, f.primes, n // 2 + 1):
        a += _powsum(block, n - 1, m)
        b += _powsum(block, n - 2, n)
    return (2 * a + n * (b % n) - euler_phi(f)) % m


def _super_stages(f: Factorization) -> Iterator[tuple[int, int]]:
    """Yield (p^(2e), defect mod p^(2e)) prime by prime.

    Exponents are reduced by phi(p^(2e)) and phi(p^e); primes with the
    smallest reduced exponents come first so a failing prime is met early.
    """
    n = f.n
    phi = euler_phi(f)
    stages = []
    for p, e in f.factors:
        pe = p**e
        phi_pe = pe - pe // p
        l = (n - 1) % (pe * phi_pe)
        u = (n - 2) % phi_pe
        stages.append((max(l, u), p, pe, l, u))
    stages.sort()
    for _, p, pe, l, u in stages:
        mod = pe * pe
        a = b = 0
        for block in _totative_blocks(n, f.primes, n // 2 + 1):
            a += _powsum(block, l, mod)
            b += _powsum(block, u, pe)
        # n * b mod p^(2e) == p^e * ((n / p^e) * b mod p^e)
        yield mod, (2 * a + pe * ((n // pe) * b % pe) - phi) % mod


def _super_staged(f: Factorization) -> int:
    # CRT-combine the per-prime defects
    x, m = 0, 1
    for mod, c in _super_stages(f):
        t = (c - x) * pow(m, -1, mod) % mod
        x, m = x + m * t, m * mod
    return x


def _check_super_input(f: Factorization) -> None:
    if not _is_composite(f) or not f.is_odd():
        raise ValueError("super congruence needs an odd composite n")
    if f.n > SUPER_CAP:
        raise ValueError(f"super Carmichael check is limited to n <= 2**31, got {f.n}")


def super_defect(f: IntOrFactors, route: str = "staged") -> int:
    """sum_{t totative} t^(n-1) - phi(n) reduced mod n^2, by the chosen route."""
    f = as_factorization(f)
    _check_super_input(f)
    if route == "staged":
        return _super_staged(f)
    if route == "halved":
        return _super_halved(f)
    if route == "direct":
        return _super_direct(f)
    raise ValueError(f"unknown route {route!r}; choose from {SUPER_ROUTES}")


def super_congruence(f: IntOrFactors, route: str = "staged") -> bool:
    """Does sum_{t totative} t^(n-1) == phi(n) hold modulo n^2?

    The staged route stops at the first prime power where it fails.
    """
    f = as_factorization(f)
    _check_super_input(f)
    if route == "staged":
        return all(c == 0 for _, c in _super_stages(f))
    return super_defect(f, route) == 0


def is_super_carmichael(f: IntOrFactors, route: str = "staged") -> bool:
    f = as_factorization(f)
    if f.n > SUPER_CAP:
        raise ValueError(f"super Carmichael check is limited to n <= 2**31, got {f.n}")
    if not is_weak_carmichael(f):
        return False
    return super_congruence(f, route)


# ---------------------------------------------------------------------------
# Fermat liars


@dataclass(frozen=True)
class LiarStats:
    n: int
    F: int
    f: Fraction
    per_prime: tuple[tuple[int, int], ...]


def fermat_liar_count(f: IntOrFactors) -> LiarStats:
    """F(n) = prod gcd(p - 1, n - 1) and f(n) = F(n) / phi(n)."""
    f = as_factorization(f)
    n = f.n
    if n < 2:
        raise ValueError("need n >= 2")
    per = tuple((p, math.gcd(p - 1, n - 1)) for p in f.primes)
    F = math.prod(g for _, g in per)
    return LiarStats(n, F, Fraction(F, euler_phi(f)), per)


def fermat_liar_count_brute(n: int) -> int:
    return sum(1 for a in range(1, n) if math.gcd(a, n) == 1 and pow(a, n - 1, n) == 1)


def is_fermat_pseudoprime(n: int, a: int) -> bool:
    if n < 4 or factorize(n).is_prime():
        raise ValueError(f"{n} is not composite")
    if math.gcd(a, n) != 1:
        raise ValueError(f"base {a} is not coprime to {n}")
    return pow(a, n - 1, n) == 1


# ---------------------------------------------------------------------------
# K-numbers and Lehmer indices


def is_k_number(f: IntOrFactors) -> bool:
    """gcd(n, phi(n)) = 1.  Primes qualify (3 is needed for 3^2 = 9)."""
    f = as_factorization(f)
    if f.n < 2:
        return False
    phi_primes = set()
    for p, e in f.factors:
        if e > 1:
            return False
        phi_primes.update(factorize(p - 1).primes)
    return not phi_primes.intersection(f.primes)


def _valuation(x: int, p: int) -> int:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def lehmer_index(f: IntOrFactors, k_max: int = 64) -> int | None:
    """Smallest k with phi(n) | (n - 1)^k, or None when n is not in L_inf."""
    f = as_factorization(f)
    if not _is_composite(f):
        raise ValueError(f"{f.n} is not composite")
    n1 = f.n - 1
    phi = Factorization()
    for p, e in f.factors:
        phi = phi * factorize(p - 1)
        if e > 1:
            phi = phi * Factorization(((p, e - 1),))
    k = 1
    for q, a in phi.factors:
        b = _valuation(n1, q)
        if b == 0:
            return None
        k = max(k, -(-a // b))
    if k > k_max:
        raise LehmerBoundExceeded(f.n, k, k_max)
    return k


# ---------------------------------------------------------------------------
# Giuga


def is_giuga(f: IntOrFactors) -> bool:
    """Squarefree composite with p | (n/p - 1) for every prime p | n."""
    f = as_factorization(f)
    if not _is_composite(f) or not f.is_squarefree():
        return False
    n = f.n
    return all((n // p - 1) % p == 0 for p in f.primes)


def is_giuga_oracle(n: int) -> bool:
    """sum_{k=1}^{n-1} k^phi(n) == -1 (mod n), term by term."""
    f = factorize(n)
    if not _is_composite(f):
        return False
    phi = euler_phi(f)
    s = 0
    for lo in range(1, n, _BLOCK):
        s += _powsum(np.arange(lo, min(lo + _BLOCK, n), dtype=np.int64), phi, n)
    return (s + 1) % n == 0


def is_weak_giuga(f: IntOrFactors) -> bool:
    f = as_factorization(f)
    if not _is_composite(f):
        return False
    n = f.n
    return all((n - p) % (p * p) == 0 for p in f.primes)


def is_giuga_counterexample(n: int, f: Factorization | None = None) -> bool:
    """Composite n with 1^(n-1) + ... + (n-1)^(n-1) == -1 (mod n)."""
    if n < 4:
        return False
    f = f or factorize(n)
    if not _is_composite(f):
        return False
    return power_sum_mod(n - 1, n, f) == n - 1


# ---------------------------------------------------------------------------
# Almost Carmichael, primitive WCN


def almost_carmichael_order(f: IntOrFactors, k_max: int | None = None) -> int | None:
    """Order k of an almost Carmichael number, or None.

    With r_p = (p - 1) / gcd(p - 1, n - 1), n qualifies when exactly one
    r_p exceeds 1; the smallest admissible order is that r_p.
    """
    f = as_factorization(f)
    if not f.is_squarefree() or f.omega < 2 or not f.is_odd():
        raise ValueError(f"{f.n} is not a squarefree odd composite with >= 2 primes")
    n1 = f.n - 1
    r = [(p - 1) // math.gcd(p - 1, n1) for p in f.primes]
    off = [x for x in r if x > 1]
    if len(off) != 1:
        return None
    k = off[0]
    if k_max is not None and k > k_max:
        return None
    return k


def is_primitive_wcn(f: IntOrFactors) -> bool:
    """n is not m^e (e >= 2) for any weak Carmichael m."""
    f = as_factorization(f)
    if not is_weak_carmichael(f):
        raise ValueError(f"{f.n} is not a weak Carmichael number")
    g = math.gcd(*f.exponents)
    for e in range(2, g + 1):
        if g % e == 0:
            root = Factorization(tuple((p, x // e) for p, x in f.factors))
            if is_weak_carmichael(root):
                return False
    return True


# ---------------------------------------------------------------------------
# Profile


@dataclass(frozen=True)
class NumberProfile:
    n: int
    factorization: Factorization
    is_prime: bool
    is_prime_power: bool
    is_weak_carmichael: bool
    is_carmichael: bool
    is_k_number: bool
    lehmer_index: int | None
    giuga: bool
    weak_giuga: bool
    almost_order: int | None
    cw: int | None  # undefined for even n
    lam: int
    liar_count: int
    liar_fraction: Fraction

    def tags(self) -> list[str]:
        out = []
        if self.is_prime:
            out.append("prime")
        if self.is_prime_power:
            out.append("prime-power")
        if self.is_weak_carmichael:
            out.append("weak-carmichael")
        if self.is_carmichael:
            out.append("carmichael")
        if self.is_k_number:
            out.append("k-number")
        if self.giuga:
            out.append("giuga")
        if self.weak_giuga:
            out.append("weak-giuga")
        if self.almost_order is not None:
            out.append(f"almost-carmichael-{self.almost_order}")
        return out


def profile(n: int) -> NumberProfile:
    if n < 2:
        raise ValueError("profile needs n >= 2")
    f = factorize(n)
    composite = _is_composite(f)
    liars = fermat_liar_count(f)
    almost = None
    if f.is_squarefree() and f.omega >= 2 and f.is_odd():
        almost = almost_carmichael_order(f)
    return NumberProfile(
        n=n,
        factorization=f,
        is_prime=f.is_prime(),
        is_prime_power=f.is_prime_power(),
        is_weak_carmichael=is_weak_carmichael(f),
        is_carmichael=is_carmichael(f),
        is_k_number=is_k_number(f),
        lehmer_index=lehmer_index(f) if composite else None,
        giuga=is_giuga(f),
        weak_giuga=is_weak_giuga(f),
        almost_order=almost,
        cw=cw(f) if f.is_odd() else None,
        lam=carmichael_lambda(f),
        liar_count=liars.F,
        liar_fraction=liars.f,
    )


def in_l_infinity(f: IntOrFactors) -> bool:
    f = as_factorization(f)
    return (f.n - 1) % radical(euler_phi(f)) == 0
