import numpy as np
import pytest

from wcn import reference
from wcn.arith import Factorization, factorize
from wcn.classify import (
    is_carmichael,
    is_giuga,
    is_k_number,
    is_super_carmichael,
    is_weak_carmichael,
    is_weak_giuga,
)
from wcn.enumeration import (
    CLASSES,
    ScanConfig,
    census,
    count_table,
    factored_range,
    prime_power_count,
    scan,
    supported_bounds,
    twin_carmichael_pairs,
)

PREDICATES = {
    "weak": is_weak_carmichael,
    "carmichael": is_carmichael,
    "giuga": is_giuga,
    "weak_giuga": is_weak_giuga,
    "k_number": is_k_number,
    "prime_power": lambda f: f.is_prime_power() and f.n % 2 == 1,
}


def members(cfg, jobs=1):
    return [n for n, _ in scan(cfg, jobs)]


# -- ScanConfig


@pytest.mark.parametrize("kw", [
    dict(lo=0, hi=10), dict(lo=10, hi=10), dict(lo=1, hi=10, cls="perfect"),
    dict(lo=1, hi=10, segment_size=1), dict(lo=1, hi=10, factor_count=0),
    dict(lo=1, hi=10, max_prime_window=(9, 3)), dict(lo=1, hi=10**12 + 2),
])
def test_scan_config_rejects(kw):
    with pytest.raises(ValueError):
        ScanConfig(**kw)


def test_query_string():
    cfg = ScanConfig(1, 10**4, "weak", True, 2, (3, 50))
    assert cfg.query() == "class=weak,from=1,to=10000,xpp,k=2,maxp=3..50"


# -- scan


def test_scan_weak_below_100(backend):
    assert members(ScanConfig(1, 100)) == [9, 25, 27, 45, 49, 81]


def test_scan_carmichael_below_1e4(backend):
    assert members(ScanConfig(1, 10**4, "carmichael")) == [561, 1105, 1729, 2465, 2821, 6601, 8911]


def test_scan_weak_non_prime_power_below_1e3():
    got = members(ScanConfig(1, 1000, exclude_prime_powers=True))
    assert got == [45, 225, 325, 405, 561, 637, 891]


def test_scan_returns_factorizations():
    for n, f in scan(ScanConfig(1, 5000)):
        assert f.n == n and f == factorize(n)


@pytest.mark.parametrize("cls", [c for c in CLASSES if c != "super"])
def test_scan_class_matches_predicate(cls, backend):
    lo, hi = 2, 12000
    want = [f.n for f in factored_range(lo, hi) if PREDICATES[cls](f)]
    assert members(ScanConfig(lo, hi, cls, segment_size=4096)) == want


def test_scan_super_empty():
    assert members(ScanConfig(1, 5000, "super")) == []


def test_scan_factor_count_and_window():
    cfg = ScanConfig(1, 10**5, "weak", factor_count=3, max_prime_window=(100, 1000))
    got = scan(cfg)
    assert got
    for n, f in got:
        assert f.omega == 3 and 100 <= f.largest_prime <= 1000 and is_weak_carmichael(f)
    every = [n for n, f in scan(ScanConfig(1, 10**5)) if f.omega == 3 and 100 <= f.largest_prime <= 1000]
    assert [n for n, _ in got] == every


def test_class_containment():
    weak = set(members(ScanConfig(1, 2 * 10**5)))
    cn = set(members(ScanConfig(1, 2 * 10**5, "carmichael")))
    sup = set(members(ScanConfig(1, 2 * 10**4, "super")))
    assert cn <= weak and sup <= weak
    assert all(n % 2 for n in weak)


@pytest.mark.parametrize("split", [2, 561, 4097, 77777])
@pytest.mark.parametrize("jobs", [1, 3])
def test_partition_determinism(split, jobs):
    whole = scan(ScanConfig(1, 10**5, segment_size=5000), jobs)
    left = scan(ScanConfig(1, split, segment_size=3000), jobs)
    right = scan(ScanConfig(split, 10**5, segment_size=7000), jobs)
    assert whole == left + right


def test_census_independent_of_jobs():
    cfg = ScanConfig(10**6, 2 * 10**6, segment_size=1 << 16)
    a, b = census(cfg, 1), census(cfg, 4)
    for x, y in zip((a.n, a.omega, a.bigomega, a.maxp, a.flags), (b.n, b.omega, b.bigomega, b.maxp, b.flags)):
        assert np.array_equal(x, y)


def test_table1_membership():
    got = scan(ScanConfig(1, 25000))
    assert [n for n, _ in got] == [n for n, _, _ in reference.TABLE1]
    for (n, f), (_, printed, kind) in zip(got, reference.TABLE1):
        if n == 23409:
            # printed entry multiplies to 23805; the recomputed form is authoritative
            assert Factorization.parse(printed).n != n
            assert f.format() == reference.ERRATA[("table1", 23409, "factorization")][1]
            continue
        assert f.format() == printed
        assert kind == ("C" if f.is_squarefree() else "P" if f.is_prime_power() else "W")


def test_distinct_prime_noncongruence_over_table2_range():
    # for every weak Carmichael number, no p_i - 1 is divisible by another p_j
    for _, f in scan(ScanConfig(1, 10**6)):
        ps = f.primes
        assert not any((p - 1) % q == 0 for p in ps for q in ps if p != q), f


# -- counting


def test_prime_power_count():
    assert prime_power_count(1, 30) == 3
    assert prime_power_count(1, 10**6) == 218
    assert prime_power_count(10**6, 2 * 10**6) == 65


def test_prime_power_count_matches_scan():
    assert prime_power_count(1, 10**5) == len(members(ScanConfig(1, 10**5, "prime_power")))


def test_table1_summary():
    (row,) = count_table(25000, "table1_summary")
    assert row.tallies == {"total": 102, "C": 9, "P": 57, "other": 36}


def test_table4_at_1e6():
    rows = {r.label: r for r in count_table(10**6, "table4")}
    assert rows["(10^6,2)"]["C"] == 43 and rows["(10^6,2)"]["W'"] == 192
    assert [rows[f"(10^6,{k})"]["W_k'"] for k in (2, 3, 4, 5)] == [107, 68, 17, 0]


def test_table4_totals_consistent():
    rows = count_table(10**6, "table4")
    by = {r.label: r for r in rows}
    for N in ("10^5", "10^6"):
        ks = [k for k in (2, 3, 4, 5) if f"({N},{k})" in by]
        assert by[f"({N},2)"]["W'"] == sum(by[f"({N},{k})"]["W_k'"] for k in ks)


def test_table3_first_block():
    rows = count_table(10**6, "table3")
    first = rows[0]
    assert (first["W_2"], first["P"], first["C"]) == (107, 218, 43)
    assert first["w_2"].p == 463 and first["w_2"].witness.format() == "43^2·463"


def test_table5_small_rows():
    rows = {r.label: r for r in count_table(10**6, "table5")}
    for N, (c3, w3, ww, wc) in reference.TABLE5.items():
        if N > 10**6:
            continue
        from wcn.enumeration import _label
        r = rows[_label(N)]
        assert (r["C_3"], r["W_3'"]) == (c3, w3)
        assert (r.extremal["C_3"].witness.n if r.extremal["C_3"] else None) == wc
        assert (r.extremal["W_3'"].witness.n if r.extremal["W_3'"] else None) == ww


def test_count_table_rejects_unsupported_bound():
    with pytest.raises(ValueError):
        count_table(12345, "table4")
    with pytest.raises(ValueError):
        count_table(10**6, "table9")
    assert supported_bounds("table1_summary") is None


# -- twins


def test_twin_pairs_small():
    pairs = twin_carmichael_pairs(1, 10**4)
    assert (2465, 2821) in pairs
    assert (561, 1105) not in pairs  # 637 = 7^2*13 lies between


def test_twin_pairs_inclusive_reading_splits_first_pair():
    # 2809 = 53^2 is a weak Carmichael number between 2465 and 2821
    assert (2465, 2821) not in twin_carmichael_pairs(1, 10**4, prime_powers_separate=True)
    assert 2465 < 53**2 < 2821 and is_weak_carmichael(53**2)


def test_twin_pairs_brute():
    weak = members(ScanConfig(1, 10**5))
    cn = [n for n in weak if is_carmichael(n)]
    sep = [n for n in weak if not is_carmichael(n) and not factorize(n).is_prime_power()]
    want = [(a, b) for a, b in zip(cn, cn[1:]) if not any(a < s < b for s in sep)]
    assert twin_carmichael_pairs(1, 10**5) == want


def test_super_class_brute_small():
    for f in factored_range(9, 3000):
        if is_weak_carmichael(f):
            assert not is_super_carmichael(f)
