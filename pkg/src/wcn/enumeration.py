"""Segmented range scans and the counting tables built on them.

All ranges are half-open, [lo, hi).  A scan splits its range into fixed
segments, sieves each one independently (optionally on a thread pool) and
concatenates the results in segment order, so the output never depends on
the number of workers.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import kernels
from .arith import Factorization, primes_upto
from .classify import SUPER_CAP, is_super_carmichael

CLASSES = ("weak", "carmichael", "giuga", "weak_giuga", "k_number", "super", "prime_power")
SCAN_LIMIT = 10**12
DEFAULT_SEGMENT = 1 << 20


@dataclass(frozen=True)
class ScanConfig:
    lo: int
    hi: int
    cls: str = "weak"
    exclude_prime_powers: bool = False
    factor_count: int | None = None
    max_prime_window: tuple[int, int] | None = None  # inclusive [c, d]
    segment_size: int = DEFAULT_SEGMENT

    def __post_init__(self):
        if self.lo < 1 or self.hi <= self.lo:
            raise ValueError(f"invalid range [{self.lo}, {self.hi})")
        if self.hi > SCAN_LIMIT + 1:
            raise ValueError(f"scan range is limited to n <= {SCAN_LIMIT}")
        if self.cls not in CLASSES:
            raise ValueError(f"unknown class {self.cls!r}; choose from {CLASSES}")
        if self.segment_size < 2:
            raise ValueError("segment_size must be >= 2")
        if self.factor_count is not None and self.factor_count < 1:
            raise ValueError("factor_count must be >= 1")
        if self.max_prime_window is not None:
            c, d = self.max_prime_window
            if c > d:
                raise ValueError(f"empty largest-prime window [{c}, {d}]")

    def query(self) -> str:
        """Canonical one-token description, used as the cache key."""
        parts = [f"class={self.cls}", f"from={self.lo}", f"to={self.hi}"]
        if self.exclude_prime_powers:
            parts.append("xpp")
        if self.factor_count is not None:
            parts.append(f"k={self.factor_count}")
        if self.max_prime_window is not None:
            parts.append("maxp={}..{}".format(*self.max_prime_window))
        return ",".join(parts)


@dataclass
class Census:
    """Per-member arrays for one class over a range, in ascending n."""

    n: np.ndarray
    omega: np.ndarray
    bigomega: np.ndarray
    maxp: np.ndarray
    flags: np.ndarray

    @property
    def squarefree(self) -> np.ndarray:
        return (self.flags & kernels.SQUAREFREE) > 0

    @property
    def prime_power(self) -> np.ndarray:
        return (self.omega == 1) & (self.bigomega >= 2)

    def __len__(self) -> int:
        return len(self.n)

    def select(self, mask: np.ndarray) -> "Census":
        return Census(self.n[mask], self.omega[mask], self.bigomega[mask], self.maxp[mask], self.flags[mask])

    def window(self, lo: int, hi: int) -> "Census":
        return self.select((self.n >= lo) & (self.n < hi))


def _segments(lo: int, hi: int, size: int) -> list[tuple[int, int]]:
    return [(a, min(a + size, hi)) for a in range(lo, hi, size)]


def _class_mask(cls, ns, omega, bigomega, phi, flags):
    composite = bigomega >= 2
    odd = ns % 2 == 1
    if cls in ("weak", "super"):
        return composite & odd & ((flags & kernels.KORSELT) > 0)
    if cls == "carmichael":
        need = kernels.KORSELT | kernels.SQUAREFREE
        return composite & odd & ((flags & need) == need)
    if cls == "giuga":
        need = kernels.GIUGA | kernels.SQUAREFREE
        return composite & ((flags & need) == need)
    if cls == "weak_giuga":
        return composite & ((flags & kernels.WEAK_GIUGA) > 0)
    if cls == "k_number":
        return (ns >= 2) & (np.gcd(ns, phi) == 1)
    if cls == "prime_power":
        return odd & (omega == 1) & (bigomega >= 2)
    raise ValueError(cls)


def _scan_segment(cfg: ScanConfig, lo: int, hi: int, primes: np.ndarray) -> Census:
    omega, bigomega, maxp, phi, flags = kernels.segment_stats(lo, hi, primes)
    ns = np.arange(lo, hi, dtype=np.int64)
    mask = _class_mask(cfg.cls, ns, omega, bigomega, phi, flags)
    if cfg.exclude_prime_powers:
        mask &= ~((omega == 1) & (bigomega >= 2))
    if cfg.factor_count is not None:
        mask &= omega == cfg.factor_count
    if cfg.max_prime_window is not None:
        c, d = cfg.max_prime_window
        mask &= (maxp >= c) & (maxp <= d)
    out = Census(ns[mask], omega[mask], bigomega[mask], maxp[mask], flags[mask])
    if cfg.cls == "super":
        keep = np.array([is_super_carmichael(int(n)) for n in out.n], dtype=bool)
        out = out.select(keep)
    return out


def _sieve_primes(hi: int) -> np.ndarray:
    return primes_upto(math.isqrt(max(hi - 1, 1)) + 1)


def census(cfg: ScanConfig, jobs: int = 1) -> Census:
    """Class members of cfg's range as arrays (no factorizations built)."""
    if cfg.cls == "super" and cfg.hi - 1 > SUPER_CAP:
        raise ValueError("super scans are limited to n <= 2**31")
    primes = _sieve_primes(cfg.hi)
    segs = _segments(cfg.lo, cfg.hi, cfg.segment_size)
    work = lambda s: _scan_segment(cfg, s[0], s[1], primes)  # noqa: E731
    if jobs > 1 and len(segs) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(work, segs))
    else:
        parts = [work(s) for s in segs]
    if not parts:
        empty = np.zeros(0, dtype=np.int64)
        return Census(empty, empty.astype(np.int8), empty.astype(np.int8), empty, empty.astype(np.uint8))
    return Census(*(np.concatenate([getattr(p, k) for p in parts]) for k in ("n", "omega", "bigomega", "maxp", "flags")))


def factorizations(ns: np.ndarray) -> list[Factorization]:
    """Factor a batch of n < 10**12 with the trial-division kernel."""
    ns = np.asarray(ns, dtype=np.int64)
    if ns.size == 0:
        return []
    P, E = kernels.factor_batch(ns, _sieve_primes(int(ns.max()) + 1))
    out = []
    for n, prow, erow in zip(ns.tolist(), P.tolist(), E.tolist()):
        pairs = tuple((p, e) for p, e in zip(prow, erow) if e)
        out.append(Factorization(pairs, _n=n))
    return out


def scan(cfg: ScanConfig, jobs: int = 1) -> list[tuple[int, Factorization]]:
    c = census(cfg, jobs)
    return list(zip(c.n.tolist(), factorizations(c.n)))


def factored_range(lo: int, hi: int, segment_size: int = DEFAULT_SEGMENT) -> Iterator[Factorization]:
    """Every n in [lo, hi) with its factorization, in order."""
    for a, b in _segments(lo, hi, segment_size):
        yield from factorizations(np.arange(a, b, dtype=np.int64))


# ---------------------------------------------------------------------------
# Counting


def prime_power_count(lo: int, hi: int) -> int:
    """Odd p^e with e >= 2 in [lo, hi), counted from the primes directly."""
    count = 0
    for p in primes_upto(math.isqrt(max(hi - 1, 0))).tolist():
        if p == 2:
            continue
        q = p * p
        while q < hi:
            if q >= lo:
                count += 1
            q *= p
    return count


def twin_carmichael_pairs(lo: int, hi: int, prime_powers_separate: bool = False,
                          jobs: int = 1) -> list[tuple[int, int]]:
    """Consecutive Carmichael numbers in [lo, hi) with no weak Carmichael
    number strictly between them.

    Odd prime powers are not treated as separators unless asked; with them
    counted, (2465, 2821) is split by 53^2 = 2809.
    """
    c = census(ScanConfig(lo, hi, "weak"), jobs)
    cn = c.n[c.squarefree].tolist()
    sep_mask = ~c.squarefree
    if not prime_powers_separate:
        sep_mask &= ~c.prime_power
    seps = c.n[sep_mask]
    out = []
    for a, b in zip(cn, cn[1:]):
        i = np.searchsorted(seps, a, side="right")
        if i == len(seps) or seps[i] >= b:
            out.append((a, b))
    return out


@dataclass(frozen=True)
class Extremal:
    """Largest "largest prime" p in a set and the smallest member it divides."""

    p: int
    witness: Factorization


@dataclass
class CountRow:
    label: str
    tallies: dict[str, int | None] = field(default_factory=dict)
    extremal: dict[str, Extremal | None] = field(default_factory=dict)

    def __getitem__(self, key: str):
        if key in self.tallies:
            return self.tallies[key]
        return self.extremal[key]


SCHEMAS = ("table1_summary", "table3", "table4", "table5")
TABLE4_BOUNDS = (10**3, 10**4, 10**5, 10**6, 2 * 10**6)
TABLE5_BOUNDS = (10**3, 10**4, 10**5, 10**6, 2 * 10**6, 10**7, 10**8)
# (a, b, windows on the largest prime); each block of the two-prime table
TABLE3_BLOCKS = (
    (1, 10**6, ((1, 10**6),)),
    (10**6, 2 * 10**6, ((1, 2 * 10**6),)),
    (2 * 10**6, 10**7, ((1, 10**3), (10**3, 10**4), (10**4, 10**7))),
    (10**7, 10**8, ((1, 10**3), (10**3, 10**4), (10**4, 10**8))),
)
TABLE3_BOUNDS = tuple(b for _, b, _ in TABLE3_BLOCKS)


def supported_bounds(schema: str) -> tuple[int, ...] | None:
    """Bounds a schema accepts; None means any bound >= 2."""
    return {"table1_summary": None, "table3": TABLE3_BOUNDS,
            "table4": TABLE4_BOUNDS, "table5": TABLE5_BOUNDS}[schema]


def _extremal(c: Census) -> Extremal | None:
    if not len(c):
        return None
    p = int(c.maxp.max())
    n = int(c.n[c.maxp == p].min())
    return Extremal(p, factorizations(np.array([n]))[0])


def _label(x: int) -> str:
    if x >= 1000 and str(x).rstrip("0") in ("1", "2", "5"):
        lead, zeros = str(x)[0], len(str(x)) - 1
        return f"10^{zeros}" if lead == "1" else f"{lead}*10^{zeros}"
    return str(x)


def count_table(bound: int, schema: str, jobs: int = 1) -> list[CountRow]:
    if schema not in SCHEMAS:
        raise ValueError(f"unknown schema {schema!r}; choose from {SCHEMAS}")
    allowed = supported_bounds(schema)
    if allowed is None:
        if bound < 2:
            raise ValueError("bound must be >= 2")
    elif bound not in allowed:
        raise ValueError(f"{schema} is defined for bounds {', '.join(map(str, allowed))}; got {bound}")
    weak = census(ScanConfig(1, bound, "weak"), jobs)
    if schema == "table1_summary":
        return _table1(weak, bound)
    if schema == "table3":
        return _table3(weak, bound)
    if schema == "table4":
        return _table4(weak, bound)
    return _table5(weak, bound)


def _table1(weak: Census, bound: int) -> list[CountRow]:
    cn = int(weak.squarefree.sum())
    pp = int(weak.prime_power.sum())
    return [CountRow(f"n < {bound}", {"total": len(weak), "C": cn, "P": pp, "other": len(weak) - cn - pp})]


def _table3(weak: Census, bound: int) -> list[CountRow]:
    rows = []
    grand = {"W_2": 0, "P": 0, "C": 0}
    for a, b, windows in TABLE3_BLOCKS:
        if b > bound:
            break
        block = weak.window(a, b)
        two = block.select((block.omega == 2) & ~block.squarefree)
        P = int(block.prime_power.sum())
        C = int(block.squarefree.sum())
        total = 0
        for i, (c, d) in enumerate(windows):
            w = two.select((two.maxp >= c) & (two.maxp <= d))
            total += len(w)
            rows.append(CountRow(
                f"({_label(a)},{_label(b)};{_label(c)},{_label(d)})",
                {"W_2": len(w), "P": P if i == 0 else None, "C": C if i == 0 else None},
                {"w_2": _extremal(w)},
            ))
        rows.append(CountRow("total", {"W_2": total, "P": P, "C": C}))
        grand = {"W_2": grand["W_2"] + total, "P": grand["P"] + P, "C": grand["C"] + C}
    rows.append(CountRow(f"total up to {_label(bound)}", grand))
    return rows


def _table4(weak: Census, bound: int) -> list[CountRow]:
    rows = []
    bounds = [N for N in TABLE4_BOUNDS if N <= bound]
    for k in (2, 3, 4, 5):
        for N in bounds:
            if N < 10**k:
                continue
            w = weak.window(1, N)
            cn, wp = w.squarefree, ~w.squarefree & ~w.prime_power
            rows.append(CountRow(f"({_label(N)},{k})", {
                "C_k": int((cn & (w.omega == k)).sum()) if k >= 3 else None,
                "C": int(cn.sum()) if k == 2 else None,
                "W_k'": int((wp & (w.omega == k)).sum()),
                "W'": int(wp.sum()) if k == 2 else None,
            }))
    cn, wp = weak.squarefree, ~weak.squarefree & ~weak.prime_power
    C, W = int(cn.sum()), int(wp.sum())
    rows.append(CountRow(f"total up to N={_label(bound)}", {"C_k": C, "C": C, "W_k'": W, "W'": W}))
    return rows


def _table5(weak: Census, bound: int) -> list[CountRow]:
    rows = []
    three = weak.select(weak.omega == 3)
    for N in TABLE5_BOUNDS:
        if N > bound:
            break
        w = three.window(1, N)
        c3 = w.select(w.squarefree)
        w3 = w.select(~w.squarefree)
        rows.append(CountRow(_label(N), {"C_3": len(c3), "W_3'": len(w3)},
                             {"W_3'": _extremal(w3), "C_3": _extremal(c3)}))
    return rows
