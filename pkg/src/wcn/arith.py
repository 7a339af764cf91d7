"""Exact integer and modular primitives.

Everything here is a pure function of its arguments.  Integers are plain
Python ints, so intermediate products never overflow; the 64-bit limit only
matters for the deterministic primality test.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Union

import numpy as np

# Arbitrary-precision fraction kept in lowest terms (zero is 0/1).
ExactRational = Fraction

U64 = 1 << 64
PRIME_TABLE_LIMIT = 10**6
BERNOULLI_CAP = 64

# Deterministic Miller-Rabin witnesses for every n < 2**64 (Sinclair, 2011).
_MR_BASES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


@lru_cache(maxsize=None)
def primes_upto(limit: int) -> np.ndarray:
    """All primes <= limit as a read-only int64 array (Eratosthenes)."""
    if limit < 2:
        out = np.zeros(0, dtype=np.int64)
    else:
        sieve = np.ones(limit + 1, dtype=bool)
        sieve[:2] = False
        sieve[4::2] = False
        for p in range(3, math.isqrt(limit) + 1, 2):
            if sieve[p]:
                sieve[p * p :: 2 * p] = False
        out = np.flatnonzero(sieve).astype(np.int64)
    out.setflags(write=False)
    return out


def prime_table() -> np.ndarray:
    return primes_upto(PRIME_TABLE_LIMIT)


@lru_cache(maxsize=1)
def _small_table() -> tuple[int, ...]:
    return tuple(int(p) for p in primes_upto(1000))


# ---------------------------------------------------------------------------
# Factorization


@dataclass(frozen=True)
class Factorization:
    """Canonical prime decomposition, primes strictly increasing.

    The integer value is only formed on demand (``.n``); members of
    parametric families can be far beyond 64 bits and every criterion in the
    package works from ``residue`` instead.
    """

    factors: tuple[tuple[int, int], ...] = ()
    _n: int | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        prev = 1
        for p, e in self.factors:
            if p <= prev or e < 1:
                raise ValueError(f"not a canonical factorization: {self.factors!r}")
            prev = p

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Factorization":
        merged: dict[int, int] = {}
        for p, e in pairs:
            if e:
                merged[int(p)] = merged.get(int(p), 0) + int(e)
        return cls(tuple(sorted(merged.items())))

    @cached_property
    def n(self) -> int:
        if self._n is not None:
            return self._n
        return math.prod(p**e for p, e in self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.factors)

    @property
    def omega(self) -> int:
        return len(self.factors)

    @property
    def bigomega(self) -> int:
        return sum(e for _, e in self.factors)

    @property
    def largest_prime(self) -> int:
        return self.factors[-1][0] if self.factors else 1

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def is_prime(self) -> bool:
        return self.bigomega == 1

    def is_prime_power(self) -> bool:
        """p^e with e >= 2."""
        return self.omega == 1 and self.bigomega >= 2

    def is_odd(self) -> bool:
        return not self.factors or self.factors[0][0] != 2

    def residue(self, m: int) -> int:
        """n mod m, without materializing n."""
        if self._n is not None:
            return self._n % m
        r = 1 % m
        for p, e in self.factors:
            r = r * pow(p, e, m) % m
        return r

    def divides_n_minus_1(self, d: int) -> bool:
        return self.residue(d) == 1 % d

    def __pow__(self, k: int) -> "Factorization":
        if k < 1:
            raise ValueError("exponent must be positive")
        return Factorization(tuple((p, e * k) for p, e in self.factors))

    def __mul__(self, other: "Factorization") -> "Factorization":
        return Factorization.from_pairs(self.factors + other.factors)

    def format(self, sep: str = "·") -> str:
        if not self.factors:
            return "1"
        return sep.join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors)

    def __str__(self) -> str:
        return self.format()

    @classmethod
    def parse(cls, text: str) -> "Factorization":
        text = text.strip()
        if text == "1":
            return cls()
        pairs = []
        for part in text.replace("*", "·").split("·"):
            base, _, exp = part.strip().partition("^")
            pairs.append((int(base), int(exp) if exp else 1))
        return cls(tuple(pairs))


IntOrFactors = Union[int, Factorization]


def as_factorization(x: IntOrFactors) -> Factorization:
    if isinstance(x, Factorization):
        return x
    return factorize(x)


# ---------------------------------------------------------------------------
# Modular arithmetic and primality


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    if exponent < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(base, exponent, modulus)


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1 or x == 0:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic for every n < 2**64."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 47 * 47:
        return True
    if n >= U64:
        raise ValueError("is_prime is exact only below 2**64")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # A base that is a multiple of n is skipped by the x == 0 branch.
    return all(_strong_probable_prime(n, a % n, d, s) for a in _MR_BASES)


def _pollard_brent(n: int, seed: int) -> int:
    rng = random.Random(seed)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = math.isqrt(n)
    if r * r == n:
        _split(r, out)
        _split(r, out)
        return
    d = _pollard_brent(n, seed=n)
    _split(d, out)
    _split(n // d, out)


def factorize(n: int) -> Factorization:
    """Canonical factorization of 1 <= n < 2**64 (deterministic output)."""
    n = int(n)
    if not 1 <= n < U64:
        raise ValueError("factorize needs 1 <= n < 2**64")
    found: dict[int, int] = {}
    rem = n
    for p in _small_table():
        if p * p > rem:
            break
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            found[p] = e
    else:
        # Only reached when rem still has factors above 1000.
        if rem > 1 and rem < U64 and not is_prime(rem):
            table = prime_table()
            hi = min(math.isqrt(rem), PRIME_TABLE_LIMIT)
            cand = table[(table > 1000) & (table <= hi)]
            if rem < (1 << 63):
                hits = cand[np.int64(rem) % cand == 0]
            else:
                hits = [p for p in cand.tolist() if rem % p == 0]
            for p in (int(q) for q in hits):
                e = 0
                while rem % p == 0:
                    rem //= p
                    e += 1
                found[p] = e
    if rem > 1:
        _split(rem, found)
    return Factorization(tuple(sorted(found.items())), _n=n)


# ---------------------------------------------------------------------------
# Multiplicative functions


def euler_phi(f: IntOrFactors) -> int:
    f = as_factorization(f)
    return math.prod(p ** (e - 1) * (p - 1) for p, e in f.factors)


def carmichael_lambda(f: IntOrFactors) -> int:
    f = as_factorization(f)
    out = 1
    for p, e in f.factors:
        if p == 2 and e >= 3:
            part = 2 ** (e - 2)
        else:
            part = p ** (e - 1) * (p - 1)
        out = math.lcm(out, part)
    return out


def cw(f: IntOrFactors) -> int:
    """lcm of (p - 1) over the distinct primes of an odd n >= 3."""
    f = as_factorization(f)
    if not f.factors or not f.is_odd():
        raise ValueError("c_w is defined for odd n >= 3")
    return math.lcm(*(p - 1 for p in f.primes))


def radical(f: IntOrFactors) -> int:
    return math.prod(as_factorization(f).primes)


def moebius(f: IntOrFactors) -> int:
    f = as_factorization(f)
    if not f.is_squarefree():
        return 0
    return -1 if f.omega % 2 else 1


def divisors(f: IntOrFactors) -> list[int]:
    f = as_factorization(f)
    divs = [1]
    for p, e in f.factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def multiplicative_order(a: int, m: int) -> int:
    """Smallest d >= 1 with a^d == 1 (mod m); gcd(a, m) must be 1."""
    if m < 1 or math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    if m == 1:
        return 1
    d = carmichael_lambda(m)
    for q in factorize(d).primes:
        while d % q == 0 and pow(a, d // q, m) == 1:
            d //= q
    return d


# ---------------------------------------------------------------------------
# Power sums and Bernoulli numbers


def power_sum_mod(l: int, m: int, f: Factorization | None = None) -> int:
    """(1^l + 2^l + ... + (m-1)^l) mod m in the time it takes to factor m.

    Even l: minus the sum of m/p over primes p | m with (p - 1) | l.
    Odd l: pairing i with m - i cancels everything except the middle term
    (m/2)^l when m is even.
    """
    if l < 1 or m < 2:
        raise ValueError("need l >= 1 and m >= 2")
    if l % 2:
        if m % 2:
            return 0
        return m // 2 if (l == 1 or m % 4 == 2) else 0
    f = f or factorize(m)
    return -sum(m // p for p in f.primes if l % (p - 1) == 0) % m


def power_sum_mod_brute(l: int, m: int) -> int:
    return sum(pow(i, l, m) for i in range(1, m)) % m


def totative_power_sum(n: int, k: int) -> int:
    """Sum of t^k over the totatives t of n, exact (0 for n = 1)."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    if n == 1:
        return 0
    return sum(t**k for t in iter_reduced_residues(n))


@lru_cache(maxsize=1)
def _bernoulli_table() -> tuple[Fraction, ...]:
    # sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
    table = [Fraction(1)]
    for m in range(1, BERNOULLI_CAP + 1):
        acc = sum(math.comb(m + 1, j) * table[j] for j in range(m))
        table.append(-acc / (m + 1))
    return tuple(table)


def bernoulli(i: int) -> Fraction:
    """Exact B_i with B_1 = -1/2, for 0 <= i <= 64."""
    if not 0 <= i <= BERNOULLI_CAP:
        raise ValueError(f"bernoulli supports 0 <= i <= {BERNOULLI_CAP}")
    return _bernoulli_table()[i]


def bernoulli_denominator(two_n: int) -> int:
    """Product of the primes p with (p - 1) | two_n, i.e. denom(B_two_n)."""
    if two_n < 2 or two_n % 2:
        raise ValueError("argument must be a positive even integer")
    return math.prod(d + 1 for d in divisors(two_n) if is_prime(d + 1))


def faulhaber(k: int, n: int) -> int:
    """1^k + ... + (n-1)^k from exact Bernoulli numbers."""
    s = sum(math.comb(k + 1, i) * bernoulli(i) * Fraction(n) ** (k + 1 - i) for i in range(k + 1))
    s /= k + 1
    if s.denominator != 1:
        raise ArithmeticError("Faulhaber sum is not an integer")
    return s.numerator


# ---------------------------------------------------------------------------
# Reduced residues


@dataclass(frozen=True)
class TotativeSet:
    n: int
    residues: np.ndarray

    def __len__(self) -> int:
        return len(self.residues)

    def __iter__(self) -> Iterator[int]:
        return (int(r) for r in self.residues)

    def lower_half(self) -> np.ndarray:
        """r_1 .. r_{phi(n)/2}; the upper half is n - r by symmetry."""
        return self.residues[: len(self.residues) // 2]

    def tolist(self) -> list[int]:
        return [int(r) for r in self.residues]


def reduced_residues(n: int, f: Factorization | None = None) -> TotativeSet:
    if n < 2:
        raise ValueError("need n >= 2")
    f = f or factorize(n)
    keep = np.ones(n, dtype=bool)
    keep[0] = False
    for p in f.primes:
        keep[::p] = False
    out = np.flatnonzero(keep).astype(np.int64)
    out.setflags(write=False)
    return TotativeSet(n, out)


def iter_reduced_residues(n: int) -> Iterator[int]:
    primes = factorize(n).primes
    for t in range(1, n):
        if all(t % p for p in primes):
            yield t


def iroot(n: int, k: int) -> int:
    """floor(n ** (1/k)) exactly."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0, k >= 1")
    if n < 2 or k == 1:
        return n
    x = int(round(n ** (1.0 / k)))
    while x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x
