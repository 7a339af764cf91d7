"""Parametric constructions of weak Carmichael numbers.

Members can be far beyond 64 bits, so families hand them out as
Factorization objects; membership is always re-checked on the exponent form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arith import (
    Factorization,
    IntOrFactors,
    as_factorization,
    carmichael_lambda,
    divisors,
    is_prime,
    multiplicative_order,
)
from .classify import is_carmichael, is_k_number, is_weak_carmichael

KINDS = ("chernick", "extended_chernick", "lift", "prime_power_pair", "wong", "k_number_power")


class ConstructionError(ValueError):
    """A construction precondition failed; ``condition`` names which one."""

    def __init__(self, condition: str, detail: str = ""):
        super().__init__(f"{condition}: {detail}" if detail else condition)
        self.condition = condition


@dataclass(frozen=True)
class FamilyDescriptor:
    kind: str
    base_primes: tuple[int, ...]
    exponent_rule: str
    parameters: dict = field(default_factory=dict, hash=False)

    def __str__(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        primes = ",".join(map(str, self.base_primes))
        return f"{self.kind} primes={primes} {params} rule: {self.exponent_rule}".replace("  ", " ")


def _from_primes(*pairs: tuple[int, int]) -> Factorization:
    return Factorization.from_pairs(pairs)


# ---------------------------------------------------------------------------
# Chernick


@dataclass(frozen=True)
class ChernickProduct:
    m: int
    components: tuple[int, int, int]
    prime_flags: tuple[bool, bool, bool]
    n: int

    @property
    def is_carmichael(self) -> bool:
        return all(self.prime_flags)

    def factorization(self) -> Factorization:
        if not self.is_carmichael:
            raise ConstructionError("components prime", f"not all of {self.components} are prime")
        return _from_primes(*((c, 1) for c in self.components))

    def descriptor(self) -> FamilyDescriptor:
        return FamilyDescriptor("chernick", self.components, "n = (6m+1)(12m+1)(18m+1)", {"m": self.m})


def chernick(m: int) -> ChernickProduct:
    if m < 1:
        raise ConstructionError("m >= 1", str(m))
    comps = (6 * m + 1, 12 * m + 1, 18 * m + 1)
    return ChernickProduct(m, comps, tuple(is_prime(c) for c in comps), math.prod(comps))


def chernick_m0(a: int, b: int, c: int) -> tuple[int, int] | None:
    """Solve m (ab + ac + bc) == -(a + b + c) (mod abc).

    Returns (m0, modulus) with 0 <= m0 < modulus, or None when the
    congruence has no solution.
    """
    if not 0 < a < b < c:
        raise ConstructionError("0 < a < b < c", f"got ({a}, {b}, {c})")
    if math.gcd(a, b) != 1 or math.gcd(a, c) != 1 or math.gcd(b, c) != 1:
        raise ConstructionError("pairwise coprime", f"({a}, {b}, {c})")
    M = a * b * c
    s = a * b + a * c + b * c
    g = math.gcd(s, M)
    rhs = -(a + b + c)
    if rhs % g:
        return None
    mod = M // g
    if mod == 1:
        return 0, 1
    return (rhs // g) * pow(s // g, -1, mod) % mod, mod


def chernick_family(a: int, b: int, c: int, m_max: int) -> list[tuple[int, Factorization]]:
    """(am+1)(bm+1)(cm+1) for m <= m_max in the solution class, all three prime."""
    sol = chernick_m0(a, b, c)
    if sol is None:
        return []
    m0, mod = sol
    out = []
    for m in range(m0 or mod, m_max + 1, mod):
        comps = (a * m + 1, b * m + 1, c * m + 1)
        if all(is_prime(x) for x in comps):
            out.append((m, _from_primes(*((x, 1) for x in comps))))
    return out


# ---------------------------------------------------------------------------
# Extended Chernick


def _chernick_primes(m: int) -> tuple[int, int, int]:
    comps = chernick(m).components
    for c in comps:
        if not is_prime(c):
            raise ConstructionError("Chernick components prime", f"{c} is composite")
    return comps


def chernick_w_set(m: int) -> list[int]:
    """Odd primes w = 36m/d + 1 (d | 36m) other than 6m+1, 12m+1, 18m+1."""
    comps = set(chernick(m).components)
    out = []
    for d in divisors(36 * m):
        w = 36 * m // d + 1
        if w % 2 and w not in comps and is_prime(w):
            out.append(w)
    return sorted(out)


@dataclass(frozen=True)
class ExtendedChernick:
    m: int
    d: int
    l: int
    w: int
    factorization: Factorization
    member: bool  # w^l == 1 (mod 36m)
    order: int | None  # smallest admissible l; None when w | 36m (no l works)

    def descriptor(self) -> FamilyDescriptor:
        rule = (f"iff {self.order} | l" if self.order is not None
                else f"for no l, since {self.w} divides 36m")
        return FamilyDescriptor(
            "extended_chernick", self.factorization.primes,
            f"(6m+1)(12m+1)(18m+1) w^l is weak Carmichael {rule}",
            {"m": self.m, "d": self.d, "l": self.l, "w": self.w},
        )


def extended_chernick(m: int, d: int, l: int) -> ExtendedChernick:
    """C(m; d, l) = (6m+1)(12m+1)(18m+1) w^l with w = 36m/d + 1.

    Each of the three Chernick primes p has p - 1 | 36m and p == 1 (mod 36m)
    for the product, so the member condition is w^l == 1 (mod 36m).
    """
    if m < 1 or l < 1:
        raise ConstructionError("m >= 1 and l >= 1", f"m={m}, l={l}")
    if d < 1 or (36 * m) % d:
        raise ConstructionError("d divides 36m", f"{d} does not divide {36 * m}")
    comps = _chernick_primes(m)
    w = 36 * m // d + 1
    if not is_prime(w):
        raise ConstructionError("w prime", f"w = {w} is composite")
    if w in comps:
        raise ConstructionError("w distinct from the Chernick primes", f"w = {w}")
    if w == 2:
        raise ConstructionError("w odd", "w = 2")
    f = _from_primes(*((c, 1) for c in comps), (w, l))
    if (36 * m) % w == 0:
        # w | 6m = (6m+1) - 1 forces w | n - 1, impossible as w | n
        return ExtendedChernick(m, d, l, w, f, False, None)
    order = multiplicative_order(w, 36 * m)
    return ExtendedChernick(m, d, l, w, f, l % order == 0, order)


# ---------------------------------------------------------------------------
# Lifting Carmichael numbers


def lift_carmichael(f: IntOrFactors) -> list[tuple[int, int]]:
    """(p_i, d_i) with d_i the order of p_i modulo lcm_{j != i}(p_j - 1)."""
    f = as_factorization(f)
    if not is_carmichael(f):
        raise ConstructionError("Carmichael input", f"{f} is not a Carmichael number")
    out = []
    for p in f.primes:
        c = math.lcm(*(q - 1 for q in f.primes if q != p))
        out.append((p, multiplicative_order(p, c)))
    return out


def lift_member(f: IntOrFactors, p: int, m: int) -> Factorization:
    """n * p^(m d) for the lift exponent d of the prime p | n."""
    f = as_factorization(f)
    if m < 1:
        raise ConstructionError("m >= 1", str(m))
    d = dict(lift_carmichael(f)).get(p)
    if d is None:
        raise ConstructionError("p divides n", f"{p} does not divide {f}")
    return f * Factorization(((p, m * d),))


def lift_descriptor(f: IntOrFactors) -> FamilyDescriptor:
    f = as_factorization(f)
    lifts = lift_carmichael(f)
    return FamilyDescriptor(
        "lift", f.primes, "n * p_i^(m d_i), m >= 1",
        {"n": str(f), "d": " ".join(f"({p},{d})" for p, d in lifts)},
    )


# ---------------------------------------------------------------------------
# Two prime powers


@dataclass(frozen=True)
class PairFamily:
    p: int
    q: int
    u: int
    v: int

    def is_member(self, a: int, b: int) -> bool:
        return a >= 1 and b >= 1 and a % self.u == 0 and b % self.v == 0

    def member(self, s: int = 1, t: int = 1) -> Factorization:
        return _from_primes((self.p, self.u * s), (self.q, self.v * t))

    def descriptor(self) -> FamilyDescriptor:
        return FamilyDescriptor("prime_power_pair", (self.p, self.q),
                                "p^a q^b with u | a and v | b", {"u": self.u, "v": self.v})


def _check_odd_primes(ps) -> None:
    for p in ps:
        if p < 3 or not is_prime(p):
            raise ConstructionError("odd primes", f"{p} is not an odd prime")


def prime_power_pair_family(p: int, q: int) -> PairFamily | None:
    """u = ord of p mod (q - 1), v = ord of q mod (p - 1), or None if p | q - 1."""
    if p == q:
        raise ConstructionError("distinct primes", f"p = q = {p}")
    _check_odd_primes((p, q))
    if p > q:
        p, q = q, p
    if (q - 1) % p == 0:
        return None
    return PairFamily(p, q, multiplicative_order(p, q - 1), multiplicative_order(q, p - 1))


# ---------------------------------------------------------------------------
# Wong families and K-number powers


def wong_family(primes) -> tuple[int, ...]:
    """Exponents e_i with every p_1^(k_1 e_1) ... p_s^(k_s e_s) weak Carmichael.

    e_i = lcm over j != i of lcm(p_j - 1, lambda(p_j - 1)); the second term
    makes p_i^(e_i) == 1 (mod p_j - 1) hold even when lambda(p_j - 1) does
    not divide p_j - 1 (e.g. 3^10 is not 1 mod 10).
    """
    ps = sorted(set(int(p) for p in primes))
    if len(ps) != len(primes) or len(ps) < 2:
        raise ConstructionError("at least two distinct primes", str(list(primes)))
    _check_odd_primes(ps)
    for pi in ps:
        for pj in ps:
            if pi != pj and (pi - 1) % pj == 0:
                raise ConstructionError("p_i - 1 not divisible by p_j", f"{pj} divides {pi}-1")
    per = {p: math.lcm(p - 1, carmichael_lambda(p - 1)) for p in ps}
    return tuple(math.lcm(*(per[q] for q in ps if q != p)) for p in ps)


def wong_member(primes, ks) -> Factorization:
    ps = sorted(primes)
    es = wong_family(ps)
    if len(ks) != len(ps) or min(ks) < 1:
        raise ConstructionError("one k_i >= 1 per prime", str(ks))
    return _from_primes(*((p, k * e) for p, k, e in zip(ps, ks, es)))


def k_number_power_exponent(f: IntOrFactors) -> int:
    """lcm(lambda(n), lambda(lambda(n))): the base exponent of the K-number family.

    n^e is weak Carmichael iff n^e == 1 (mod lambda(n)), i.e. iff the order of
    n mod lambda(n) divides e.  That order divides lambda(lambda(n)), which
    need not divide lambda(n): 33^10 == 9 (mod 10).  For Carmichael numbers
    and primes the lcm is just lambda(n).
    """
    lam = carmichael_lambda(as_factorization(f))
    return math.lcm(lam, carmichael_lambda(lam))


def k_number_power(f: IntOrFactors, d: int) -> Factorization:
    """n^(d e) in exponent form, e = k_number_power_exponent(n)."""
    f = as_factorization(f)
    if f.n <= 2 or not is_k_number(f):
        raise ConstructionError("K-number n > 2", f"gcd({f.n}, phi) != 1 or n <= 2")
    if d < 1:
        raise ConstructionError("d >= 1", str(d))
    out = f ** (d * k_number_power_exponent(f))
    if not is_weak_carmichael(out):  # cannot happen for a K-number
        raise AssertionError(f"{f}^(d*lambda) failed the weak Carmichael check")
    return out
