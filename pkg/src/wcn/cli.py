"""wcn: classify, scan, tabulate and construct weak Carmichael numbers.

Exit codes: 0 success, 1 table --verify mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
from fractions import Fraction
from math import gcd

from . import reference
from .arith import Factorization, U64, factorize
from .classify import fermat_liar_count, profile
from .construct import (
    ConstructionError,
    chernick,
    extended_chernick,
    k_number_power,
    lift_carmichael,
    lift_member,
    prime_power_pair_family,
    wong_family,
    wong_member,
)
from .enumeration import CLASSES, ScanConfig, census, count_table, factorizations, supported_bounds
from .records import OutputRecord

CACHE_MAGIC = "#wcn-cache v1"
SCHEMA_NAMES = {"1": "table1_summary", "3": "table3", "4": "table4", "5": "table5"}
_MATERIALIZE_BITS = 256


class UsageError(Exception):
    pass


def parse_int(text: str) -> int:
    """Accept 2000000, 2e6, 2*10^6 or 10**6."""
    s = text.strip().replace("_", "").replace("**", "^")
    m = re.fullmatch(r"(\d+)(?:[eE](\d+))?", s) or re.fullmatch(r"(?:(\d+)\*)?10\^(\d+)", s)
    if not m:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if "^" in s:
        lead = int(m.group(1) or 1)
        return lead * 10 ** int(m.group(2))
    return int(m.group(1)) * 10 ** int(m.group(2) or 0)


def _u64(text: str) -> int:
    n = parse_int(text)
    if not 1 <= n < U64:
        raise argparse.ArgumentTypeError(f"{text} is not a positive 64-bit integer")
    return n


def _pos(text: str) -> int:
    n = parse_int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"{text} must be positive")
    return n


def _prime_list(text: str) -> list[int]:
    try:
        return [int(x) for x in re.split(r"[,\s]+", text.strip()) if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated prime list: {text!r}") from None


def _default_jobs() -> int:
    env = os.environ.get("WCN_JOBS", "").strip()
    if not env:
        return 1
    try:
        return max(1, int(env))
    except ValueError:
        raise UsageError(f"WCN_JOBS must be an integer, got {env!r}") from None


def _out(line: str = "") -> None:
    sys.stdout.write(line + "\n")


def _show(f: Factorization, sep: str = "·") -> str:
    if f.n.bit_length() <= _MATERIALIZE_BITS:
        return f"{f.n} = {f.format(sep)}"
    return f"{f.format(sep)} ({f.n.bit_length()}-bit)"


# ---------------------------------------------------------------------------
# classify


def cmd_classify(args) -> int:
    if args.n < 2:
        raise UsageError("classify needs n >= 2")
    p = profile(args.n)
    rec = OutputRecord.from_profile(p)
    if args.json:
        d = rec.to_dict()
        d["lehmer_index"] = p.lehmer_index
        d["almost_order"] = p.almost_order
        _out(json.dumps(d, ensure_ascii=False))
        return 0
    _out(f"{p.n} = {p.factorization}")
    _out("tags: " + (" ".join(p.tags()) or "none"))
    _out(f"F={p.liar_count} f={p.liar_fraction} lambda={p.lam}" + ("" if p.cw is None else f" c_w={p.cw}"))
    if p.lehmer_index is not None:
        _out(f"lehmer_index={p.lehmer_index}")
    return 0


# ---------------------------------------------------------------------------
# scan and its cache


def _read_cache(path: str, query: str) -> list[str] | None:
    """Rows cached for ``query``, or None when absent or truncated."""
    if not os.path.exists(path):
        return None
    rows: list[str] | None = None
    want = 0
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if line.startswith(CACHE_MAGIC):
                if rows is not None:
                    break
                head = line[len(CACHE_MAGIC):].split()
                if len(head) == 2 and head[0] == query:
                    rows, want = [], int(head[1])
            elif rows is not None and line:
                rows.append(line)
    if rows is None or len(rows) != want:
        return None
    return rows


def _append_cache(path: str, query: str, records: list[OutputRecord]) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(f"{CACHE_MAGIC} {query} {len(records)}\n")
        for r in records:
            fh.write(r.to_tsv() + "\n")


def _emit(records: list[OutputRecord], fmt: str) -> None:
    if fmt == "md":
        _out("| n | factorization | tags |")
        _out("|---|---|---|")
    for r in records:
        _out(r.to_tsv() if fmt == "tsv" else r.to_json() if fmt == "json" else r.to_md())


def cmd_scan(args) -> int:
    if (args.max_prime_lo is None) != (args.max_prime_hi is None):
        raise UsageError("--max-prime-lo and --max-prime-hi go together")
    window = None if args.max_prime_lo is None else (args.max_prime_lo, args.max_prime_hi)
    cfg = ScanConfig(args.lo, args.hi, args.cls, args.exclude_prime_powers, args.factors,
                     window, args.segment_size)
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    if jobs < 1:
        raise UsageError("--jobs must be >= 1")
    if args.cache:
        cached = _read_cache(args.cache, cfg.query())
        if cached is not None:
            _emit([OutputRecord.from_tsv(r) for r in cached], args.format)
            return 0
    c = census(cfg, jobs)
    records = [OutputRecord.from_member(n, f) for n, f in zip(c.n.tolist(), factorizations(c.n))]
    if args.cache:
        _append_cache(args.cache, cfg.query(), records)
    _emit(records, args.format)
    return 0


# ---------------------------------------------------------------------------
# table


def _cell(x, sep: str) -> str:
    if x is None:
        return "-"
    if isinstance(x, Factorization):
        return f"{x.n}={x.format(sep)}"
    return str(x)


def _table_grid(schema: str, bound: int, jobs: int, sep: str) -> tuple[list[str], list[list[str]]]:
    if schema == "table1_summary":
        c = census(ScanConfig(1, bound, "weak"), jobs)
        head = ["n", "factorization", "kind"]
        grid = []
        for f in factorizations(c.n):
            kind = "C" if f.is_squarefree() else "P" if f.is_prime_power() else "W"
            grid.append([str(f.n), f.format(sep), kind])
        (row,) = count_table(bound, schema, jobs)
        t = row.tallies
        grid.append([f"total {t['total']}", f"C={t['C']} P={t['P']}", f"other={t['other']}"])
        return head, grid
    rows = count_table(bound, schema, jobs)
    if schema == "table3":
        head = ["(a,b;c,d)", "W_2", "p_2", "w_2", "P(a,b)", "C(a,b)"]
        grid = []
        for r in rows:
            ex = r.extremal.get("w_2")
            grid.append([r.label, _cell(r["W_2"], sep), _cell(ex and ex.p, sep),
                         _cell(ex and ex.witness, sep), _cell(r["P"], sep), _cell(r["C"], sep)])
        return head, grid
    if schema == "table4":
        head = ["(N,k)", "C_k(N)", "C(N)", "W_k'(N)", "W'(N)"]
        return head, [[r.label] + [_cell(r.tallies[k], sep) for k in ("C_k", "C", "W_k'", "W'")] for r in rows]
    head = ["N", "C_3(N)", "W_3'(N)", "W_3' max r", "C_3 max r"]
    grid = []
    for r in rows:
        w, c = r.extremal["W_3'"], r.extremal["C_3"]
        grid.append([r.label, str(r["C_3"]), str(r["W_3'"]), _cell(w and w.witness, sep), _cell(c and c.witness, sep)])
    return head, grid


def _verify(schema: str, bound: int, jobs: int) -> tuple[list[str], list[str]]:
    """(mismatches, known-erratum notes) against the published values."""
    bad, notes = [], []

    def check(where, got, want, erratum_key=None):
        if want is None or got == want:
            return
        err = reference.ERRATA.get(erratum_key) if erratum_key else None
        if err and err[1] == got:
            notes.append(f"{where}: printed {want}, recomputed {got} (known erratum: {err[2]})")
        else:
            bad.append(f"{where}: expected {want}, got {got}")

    if schema == "table1_summary":
        c = census(ScanConfig(1, bound, "weak"), jobs)
        got = {f.n: f for f in factorizations(c.n)}
        printed = {n: (fac, kind) for n, fac, kind in reference.TABLE1 if n < bound}
        check("members", sorted(got), sorted(printed))
        for n, (fac, kind) in printed.items():
            if n in got:
                check(f"{n} factorization", got[n].format(), fac, ("table1", n, "factorization"))
                k = "C" if got[n].is_squarefree() else "P" if got[n].is_prime_power() else "W"
                check(f"{n} kind", k, kind)
        if bound == 25000:
            (row,) = count_table(bound, schema, jobs)
            for key, want in reference.TABLE1_SUMMARY.items():
                check(f"summary {key}", row[key], want)
    elif schema == "table3":
        rows = [r for r in count_table(bound, schema, jobs) if r.label.startswith("(")]
        keys = [k for k in reference.TABLE3 if k[1] <= bound]
        for r, key in zip(rows, keys):
            ex = r.extremal["w_2"]
            want = reference.TABLE3[key]
            got = (r["W_2"], ex and ex.p, ex and ex.witness.n, r["P"], r["C"])
            for name, g, w in zip(("W_2", "p_2", "w_2", "P", "C"), got, want):
                check(f"{r.label} {name}", g, w)
    elif schema == "table4":
        for r in count_table(bound, schema, jobs):
            m = re.fullmatch(r"\((.+),(\d)\)", r.label)
            if not m:
                continue
            key = (parse_int(m.group(1)), int(m.group(2)))
            want = reference.TABLE4.get(key)
            if want is None:
                bad.append(f"{r.label}: no published row")
                continue
            got = tuple(r.tallies[k] for k in ("C_k", "C", "W_k'", "W'"))
            for name, g, w in zip(("C_k", "C", "W_k'", "W'"), got, want):
                check(f"{r.label} {name}", g, w)
    else:
        for r in count_table(bound, schema, jobs):
            N = parse_int(r.label)
            c3, w3, ww, wc = reference.TABLE5[N]
            check(f"{r.label} C_3", r["C_3"], c3)
            check(f"{r.label} W_3'", r["W_3'"], w3)
            w, c = r.extremal["W_3'"], r.extremal["C_3"]
            check(f"{r.label} W_3' witness", w and w.witness.n, ww, ("table5", N, "W_3' witness"))
            check(f"{r.label} C_3 witness", c and c.witness.n, wc)
    return bad, notes


def cmd_table(args) -> int:
    schema = SCHEMA_NAMES[args.schema]
    allowed = supported_bounds(schema)
    if allowed is not None and args.to not in allowed:
        raise UsageError(f"table {args.schema} is available for --to in {{{', '.join(map(str, allowed))}}}")
    if args.to < 2:
        raise UsageError("--to must be >= 2")
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    sep = "*" if args.format == "tsv" else "·"
    head, grid = _table_grid(schema, args.to, jobs, sep)
    if args.format == "tsv":
        _out("\t".join(head))
        for row in grid:
            _out("\t".join(row))
    else:
        _out("| " + " | ".join(head) + " |")
        _out("|" + "---|" * len(head))
        for row in grid:
            _out("| " + " | ".join(row) + " |")
    if not args.verify:
        return 0
    bad, notes = _verify(schema, args.to, jobs)
    for line in notes:
        print(f"note: {line}", file=sys.stderr)
    for line in bad:
        print(f"mismatch: {line}", file=sys.stderr)
    print(f"verify: {'FAIL' if bad else 'ok'} ({len(bad)} mismatches, {len(notes)} known errata)", file=sys.stderr)
    return 1 if bad else 0


# ---------------------------------------------------------------------------
# construct


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "chernick":
        c = chernick(args.m)
        expr = "·".join(map(str, c.components))
        if c.is_carmichael:
            _out(f"{c.n} = {expr} [carmichael]")
        else:
            bad = [str(x) for x, ok in zip(c.components, c.prime_flags) if not ok]
            _out(f"{c.n} = {expr} [not carmichael: {', '.join(bad)} composite]")
        return 0
    if kind == "extended":
        x = extended_chernick(args.m, args.d, args.l)
        _out(str(x.descriptor()))
        verdict = "weak-carmichael" if x.member else f"not weak-carmichael: {x.w}^{x.l} != 1 mod {36 * x.m}"
        _out(f"{_show(x.factorization)} [{verdict}]")
        return 0
    if kind == "lift":
        f = factorize(args.n)
        lifts = lift_carmichael(f)
        _out(" ".join(f"({p},{d})" for p, d in lifts))
        for p, _ in lifts:
            _out(f"  smallest via {p}: {_show(lift_member(f, p, 1))} [weak-carmichael]")
        return 0
    if kind == "pair":
        fam = prime_power_pair_family(args.p, args.q)
        if fam is None:
            p, q = sorted((args.p, args.q))
            raise ConstructionError(f"{p} divides q-1", f"no weak Carmichael number {p}^a {q}^b exists")
        _out(str(fam.descriptor()))
        _out(f"  smallest: {_show(fam.member())} [weak-carmichael]")
        return 0
    if kind == "wong":
        es = wong_family(args.primes)
        _out("exponents " + " ".join(f"({p},{e})" for p, e in zip(sorted(args.primes), es)))
        _out(f"  smallest: {_show(wong_member(args.primes, [1] * len(es)))} [weak-carmichael]")
        return 0
    f = k_number_power(factorize(args.n), args.d)
    _out(f"{_show(f)} [weak-carmichael]")
    return 0


# ---------------------------------------------------------------------------
# fermat


def cmd_fermat(args) -> int:
    n = args.n
    if n < 2:
        raise UsageError("fermat needs n >= 2")
    st = fermat_liar_count(n)
    if factorize(n).is_prime():
        print(f"notice: {n} is prime; every base is a liar and F = n-1", file=sys.stderr)
    _out(f"F={st.F} f={st.f}")
    if args.sample:
        rng = random.Random(args.seed)
        hits = drawn = 0
        while drawn < args.sample:
            a = rng.randrange(1, n) if n > 2 else 1
            if gcd(a, n) != 1:
                continue
            drawn += 1
            hits += pow(a, n - 1, n) == 1
        emp = Fraction(hits, drawn)
        _out(f"sample={drawn} seed={args.seed} liars={hits} empirical={float(emp):.6f} exact={float(st.f):.6f}")
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wcn", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one integer")
    p.add_argument("n", type=_u64)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("scan", help="list class members in [from, to)")
    p.add_argument("--from", dest="lo", type=_pos, required=True)
    p.add_argument("--to", dest="hi", type=_pos, required=True)
    p.add_argument("--class", dest="cls", choices=CLASSES, default="weak")
    p.add_argument("--exclude-prime-powers", action="store_true")
    p.add_argument("--factors", type=_pos, default=None, help="exact number of distinct primes")
    p.add_argument("--max-prime-lo", type=_pos, default=None)
    p.add_argument("--max-prime-hi", type=_pos, default=None)
    p.add_argument("--format", choices=("tsv", "json", "md"), default="tsv")
    p.add_argument("--jobs", type=int, default=None, help="worker threads (default: $WCN_JOBS or 1)")
    p.add_argument("--cache", default=None, help="TSV cache file to replay or append to")
    p.add_argument("--segment-size", type=_pos, default=1 << 20)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("table", help="reproduce a counting table")
    p.add_argument("--schema", choices=sorted(SCHEMA_NAMES), required=True)
    p.add_argument("--to", type=parse_int, required=True)
    p.add_argument("--format", choices=("md", "tsv"), default="md")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--verify", action="store_true", help="compare with published values; exit 1 on mismatch")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("construct", help="build family members")
    csub = p.add_subparsers(dest="kind", required=True)
    c = csub.add_parser("chernick")
    c.add_argument("--m", type=_pos, required=True)
    c = csub.add_parser("extended")
    c.add_argument("--m", type=_pos, required=True)
    c.add_argument("--d", type=_pos, required=True)
    c.add_argument("--l", type=_pos, required=True)
    c = csub.add_parser("lift")
    c.add_argument("--n", type=_u64, required=True)
    c = csub.add_parser("pair")
    c.add_argument("--p", type=_pos, required=True)
    c.add_argument("--q", type=_pos, required=True)
    c = csub.add_parser("wong")
    c.add_argument("--primes", type=_prime_list, required=True)
    c = csub.add_parser("kpower")
    c.add_argument("--n", type=_u64, required=True)
    c.add_argument("--d", type=_pos, default=1)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("fermat", help="exact and sampled Fermat liar fractions")
    p.add_argument("--n", type=_u64, required=True)
    p.add_argument("--sample", type=_pos, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_fermat)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:  # ConstructionError is a ValueError
        print(f"wcn: error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # downstream closed early (e.g. `| head`); not an error
        sys.stderr.close()
        return 0


if __name__ == "__main__":
    sys.exit(main())
