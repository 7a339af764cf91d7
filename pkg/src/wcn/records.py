"""Flat output records shared by the TSV, JSON and Markdown emitters."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .arith import Factorization
from .classify import (
    NumberProfile,
    is_carmichael,
    is_giuga,
    is_k_number,
    is_weak_carmichael,
    is_weak_giuga,
)

TSV_FIELDS = ("n", "factorization", "flags", "F", "f", "c_w", "lambda")
_MISSING = "-"


def tags_for(f: Factorization) -> tuple[str, ...]:
    """Cheap class tags (no Lehmer index, no liar counts)."""
    out = []
    if f.is_prime():
        out.append("prime")
    if f.is_prime_power():
        out.append("prime-power")
    if is_weak_carmichael(f):
        out.append("weak-carmichael")
    if is_carmichael(f):
        out.append("carmichael")
    if is_k_number(f):
        out.append("k-number")
    if is_giuga(f):
        out.append("giuga")
    if is_weak_giuga(f):
        out.append("weak-giuga")
    return tuple(out)


@dataclass(frozen=True)
class OutputRecord:
    n: int
    factorization: Factorization
    flags: tuple[str, ...] = ()
    F: int | None = None
    f: Fraction | None = None
    c_w: int | None = None
    lam: int | None = None

    @classmethod
    def from_member(cls, n: int, fac: Factorization) -> "OutputRecord":
        return cls(n, fac, tags_for(fac))

    @classmethod
    def from_profile(cls, p: NumberProfile) -> "OutputRecord":
        return cls(p.n, p.factorization, tuple(p.tags()), p.liar_count, p.liar_fraction, p.cw, p.lam)

    # -- JSON

    def to_dict(self) -> dict:
        return {
            "n": str(self.n),
            "factorization": self.factorization.format(),
            "flags": list(self.flags),
            "F": self.F,
            "f": None if self.f is None else f"{self.f.numerator}/{self.f.denominator}",
            "c_w": self.c_w,
            "lambda": self.lam,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    @classmethod
    def from_dict(cls, d: dict) -> "OutputRecord":
        return cls(
            int(d["n"]),
            Factorization.parse(d["factorization"]),
            tuple(d.get("flags", ())),
            d.get("F"),
            None if d.get("f") is None else Fraction(d["f"]),
            d.get("c_w"),
            d.get("lambda"),
        )

    @classmethod
    def from_json(cls, line: str) -> "OutputRecord":
        return cls.from_dict(json.loads(line))

    # -- TSV: trailing empty columns are dropped

    def to_tsv(self) -> str:
        d = self.to_dict()
        cols = [d["n"], self.factorization.format("*"), ",".join(self.flags) or _MISSING]
        cols += [_MISSING if d[k] is None else str(d[k]) for k in TSV_FIELDS[3:]]
        while len(cols) > 3 and cols[-1] == _MISSING:
            cols.pop()
        return "\t".join(cols)

    @classmethod
    def from_tsv(cls, line: str) -> "OutputRecord":
        cols = line.rstrip("\n").split("\t")
        cols += [_MISSING] * (len(TSV_FIELDS) - len(cols))
        val = lambda s: None if s == _MISSING else s  # noqa: E731
        flags = () if cols[2] == _MISSING else tuple(cols[2].split(","))
        num = lambda s: None if s == _MISSING else int(s)  # noqa: E731
        f = val(cols[4])
        return cls(int(cols[0]), Factorization.parse(cols[1]), flags, num(cols[3]),
                   None if f is None else Fraction(f), num(cols[5]), num(cols[6]))

    def to_md(self) -> str:
        return f"| {self.n} | {self.factorization} | {', '.join(self.flags)} |"
