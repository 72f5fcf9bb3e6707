"""Range-scale verification, residue statistics, and set-identity audits.

coverage_report() is the only concurrent entry point: it fans solve() out
over disjoint contiguous blocks (worker processes, since the work is pure
CPU) and merges the immutable partial tallies. The set machinery at the
bottom materializes arithmetic-progression expressions over a finite range
so that claimed residue-set identities can be checked rather than trusted.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import isqrt
from typing import Iterator, NamedTuple

from . import identities
from .core import UnsolvedError
from .solver import (
    DEFAULT_CONFIG,
    METHOD_ORACLE,
    PROFILE_MODULI,
    SolveConfig,
    solve,
)

MORDELL_RESIDUES = frozenset({1, 121, 169, 289, 361, 529})

DEFAULT_BLOCK_SIZE = 1 << 16


def mordell_class(n: int) -> bool:
    """True iff n falls in one of the six classes mod 840 that no known
    polynomial identity eliminates. Every such class is 1 mod 24."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return n % 840 in MORDELL_RESIDUES


@dataclass(frozen=True)
class CoverageReport:
    """Tally of one scanned range: who solved what, and what fell through.

    residue_histogram counts oracle-solved n by (modulus, residue);
    eq5_histogram does the same for n that needed the eq5 inverse matcher.
    Together they locate the hard class empirically (everything outside
    n = 1 mod 24 should be absent from both).
    """

    lo: int
    hi: int
    per_method_counts: dict[str, int]
    unsolved: tuple[int, ...]
    residue_histogram: dict[tuple[int, int], int]
    eq5_histogram: dict[tuple[int, int], int]
    elapsed: float

    def total(self) -> int:
        return sum(self.per_method_counts.values()) + len(self.unsolved)

    def check_conservation(self) -> None:
        size = self.hi - self.lo + 1
        if self.total() != size:
            raise AssertionError(
                f"count conservation violated: {self.total()} != {size}"
            )

    def merge(self, other: CoverageReport) -> CoverageReport:
        """Combine two partial reports (order-independent in all counts)."""
        counts = Counter(self.per_method_counts)
        counts.update(other.per_method_counts)
        res_hist = Counter(self.residue_histogram)
        res_hist.update(other.residue_histogram)
        eq5_hist = Counter(self.eq5_histogram)
        eq5_hist.update(other.eq5_histogram)
        return CoverageReport(
            lo=min(self.lo, other.lo),
            hi=max(self.hi, other.hi),
            per_method_counts=dict(counts),
            unsolved=tuple(sorted(self.unsolved + other.unsolved)),
            residue_histogram=dict(res_hist),
            eq5_histogram=dict(eq5_hist),
            elapsed=self.elapsed + other.elapsed,
        )

    def to_dict(self, include_elapsed: bool = False) -> dict:
        """JSON-ready form with deterministic key order."""
        out = {
            "range": [self.lo, self.hi],
            "per_method_counts": {
                m: self.per_method_counts[m] for m in sorted(self.per_method_counts)
            },
            "unsolved": list(self.unsolved),
            "residue_histogram": {
                f"{m}:{r}": c for (m, r), c in sorted(self.residue_histogram.items())
            },
            "eq5_histogram": {
                f"{m}:{r}": c for (m, r), c in sorted(self.eq5_histogram.items())
            },
        }
        if include_elapsed:
            out["elapsed_seconds"] = self.elapsed
        return out


def _scan_block(args: tuple[int, int, SolveConfig]) -> CoverageReport:
    lo, hi, cfg = args
    t0 = time.perf_counter()
    counts: Counter[str] = Counter()
    unsolved: list[int] = []
    res_hist: Counter[tuple[int, int]] = Counter()
    eq5_hist: Counter[tuple[int, int]] = Counter()
    for n in range(lo, hi + 1):
        try:
            d = solve(n, cfg)
        except UnsolvedError:
            unsolved.append(n)
            continue
        counts[d.method] += 1
        if d.method == METHOD_ORACLE:
            for m in PROFILE_MODULI:
                res_hist[(m, n % m)] += 1
        elif d.method == identities.METHOD_EQ5:
            for m in PROFILE_MODULI:
                eq5_hist[(m, n % m)] += 1
    return CoverageReport(
        lo=lo,
        hi=hi,
        per_method_counts=dict(counts),
        unsolved=tuple(unsolved),
        residue_histogram=dict(res_hist),
        eq5_histogram=dict(eq5_hist),
        elapsed=time.perf_counter() - t0,
    )


def _blocks(lo: int, hi: int, block_size: int) -> Iterator[tuple[int, int]]:
    start = lo
    while start <= hi:
        yield start, min(start + block_size - 1, hi)
        start += block_size


def coverage_report(
    lo: int,
    hi: int,
    cfg: SolveConfig | None = None,
    *,
    workers: int = 1,
    block_size: int = DEFAULT_BLOCK_SIZE,
) -> CoverageReport:
    """Run solve() on every n in [lo, hi] and tally the outcome per method.

    An unsolved n is recorded, never raised. Contiguous blocks of
    block_size values go to each worker; the merged report is independent
    of worker count and block boundaries (elapsed aggregates worker time,
    so it exceeds wall time when workers overlap).
    """
    if lo < 2 or hi < lo:
        raise ValueError(f"need 2 <= lo <= hi, got lo={lo}, hi={hi}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    cfg = cfg or DEFAULT_CONFIG
    wall0 = time.perf_counter()
    tasks = [(b_lo, b_hi, cfg) for b_lo, b_hi in _blocks(lo, hi, block_size)]
    if workers == 1 or len(tasks) == 1:
        partials = [_scan_block(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(_scan_block, tasks))
    report = partials[0]
    for p in partials[1:]:
        report = report.merge(p)
    report = CoverageReport(
        lo=report.lo,
        hi=report.hi,
        per_method_counts=report.per_method_counts,
        unsolved=report.unsolved,
        residue_histogram=report.residue_histogram,
        eq5_histogram=report.eq5_histogram,
        elapsed=time.perf_counter() - wall0,
    )
    report.check_conservation()
    return report


@dataclass(frozen=True)
class ProgressionSet:
    """One arithmetic progression {s*i + t : i >= n0}, its squares, or an
    explicit finite set. Membership is exact: integer arithmetic only, with
    isqrt for the squared kind (no float near-square misclassification).
    """

    kind: str  # "linear" | "squared-linear" | "explicit"
    stride: int = 0
    offset: int = 0
    start: int = 1
    values: frozenset[int] = frozenset()

    @classmethod
    def linear(cls, stride: int, offset: int, start: int = 1) -> ProgressionSet:
        if stride < 1:
            raise ValueError(f"stride must be >= 1, got {stride}")
        return cls(kind="linear", stride=stride, offset=offset, start=start)

    @classmethod
    def squared_linear(cls, stride: int, offset: int, start: int = 1) -> ProgressionSet:
        if stride < 1:
            raise ValueError(f"stride must be >= 1, got {stride}")
        return cls(kind="squared-linear", stride=stride, offset=offset, start=start)

    @classmethod
    def explicit(cls, values) -> ProgressionSet:
        return cls(kind="explicit", values=frozenset(values))

    def _linear_contains(self, v: int) -> bool:
        return v >= self.stride * self.start + self.offset and (
            (v - self.offset) % self.stride == 0
        )

    def contains(self, v: int) -> bool:
        if self.kind == "linear":
            return self._linear_contains(v)
        if self.kind == "squared-linear":
            if v < 0:
                return False
            r = isqrt(v)
            # either root of v may be the progression member
            return r * r == v and (self._linear_contains(r) or self._linear_contains(-r))
        return v in self.values

    def members_up_to(self, limit: int) -> set[int]:
        if self.kind == "linear":
            first = self.stride * self.start + self.offset
            return set(range(first, limit + 1, self.stride))
        if self.kind == "squared-linear":
            out = set()
            bound = isqrt(limit)
            i = self.start
            while (v := self.stride * i + self.offset) <= bound:
                if v * v <= limit:
                    out.add(v * v)
                i += 1
            return out
        return {v for v in self.values if v <= limit}


@dataclass(frozen=True)
class SetExpr:
    """Union/difference tree over ProgressionSet leaves.

    Finite-range evaluation materializes the exact member set up to a
    limit; that is all the identity checker needs.
    """

    op: str  # "leaf" | "union" | "difference"
    progression: ProgressionSet | None = None
    parts: tuple[SetExpr, ...] = ()

    @classmethod
    def leaf(cls, p: ProgressionSet) -> SetExpr:
        return cls(op="leaf", progression=p)

    @classmethod
    def union(cls, *exprs: SetExpr) -> SetExpr:
        if not exprs:
            raise ValueError("union needs at least one operand")
        return cls(op="union", parts=tuple(exprs))

    @classmethod
    def difference(cls, left: SetExpr, right: SetExpr) -> SetExpr:
        return cls(op="difference", parts=(left, right))

    def members_up_to(self, limit: int) -> set[int]:
        if self.op == "leaf":
            return self.progression.members_up_to(limit)
        if self.op == "union":
            out: set[int] = set()
            for part in self.parts:
                out |= part.members_up_to(limit)
            return out
        left, right = self.parts
        return left.members_up_to(limit) - right.members_up_to(limit)


class Counterexample(NamedTuple):
    value: int
    side: str  # "lhs-only" | "rhs-only"


def check_set_identity(lhs: SetExpr, rhs: SetExpr, limit: int) -> list[Counterexample]:
    """Materialize both sides up to limit and report the symmetric difference.

    Empty means the claimed identity holds on [.., limit]. Elements are
    tagged with the side they appear on, sorted by value.
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    left = lhs.members_up_to(limit)
    right = rhs.members_up_to(limit)
    out = [Counterexample(v, "lhs-only") for v in left - right]
    out += [Counterexample(v, "rhs-only") for v in right - left]
    return sorted(out)


class IdentityCheck(NamedTuple):
    """A named residue-set identity claim with an expectation attached."""

    name: str
    lhs: SetExpr
    rhs: SetExpr
    expect_holds: bool


def builtin_identity_checks() -> list[IdentityCheck]:
    """The three residue-set claims the identity families lean on.

    sixfold-union: {6i-1} u {6i+1} vs all odd numbers >= 5. As stated this
    fails (odd multiples of 3 appear only on the right); the checker
    reports that honestly rather than encoding a false identity.

    eight-exclusion: {6i+1} minus {8i+1} vs the union of the 4k-1 and 8k-3
    progressions and their squares. The right side reaches many values the
    left never contains, so containment only holds left-to-right.

    unit-digit-partition: every n >= 2 is even or has odd unit digit
    1/3/5/7/9. The unit-digit-1 progression starts at index 2 so both
    sides share the n >= 2 domain (index 1 would contribute the value 1).
    """
    lin = ProgressionSet.linear
    sq = ProgressionSet.squared_linear
    return [
        IdentityCheck(
            name="sixfold-union",
            lhs=SetExpr.union(SetExpr.leaf(lin(6, -1)), SetExpr.leaf(lin(6, 1))),
            rhs=SetExpr.leaf(lin(2, -1, start=3)),
            expect_holds=False,
        ),
        IdentityCheck(
            name="eight-exclusion",
            lhs=SetExpr.difference(
                SetExpr.leaf(lin(6, 1)), SetExpr.leaf(lin(8, 1))
            ),
            rhs=SetExpr.union(
                SetExpr.leaf(lin(4, -1)),
                SetExpr.leaf(sq(4, -1)),
                SetExpr.leaf(lin(8, -3)),
                SetExpr.leaf(sq(8, -3)),
            ),
            expect_holds=False,
        ),
        IdentityCheck(
            name="unit-digit-partition",
            lhs=SetExpr.leaf(lin(1, 0, start=2)),
            rhs=SetExpr.union(
                SetExpr.leaf(lin(2, 0)),
                SetExpr.leaf(lin(10, -1)),
                SetExpr.leaf(lin(10, -3)),
                SetExpr.leaf(lin(10, -5)),
                SetExpr.leaf(lin(10, -7)),
                SetExpr.leaf(lin(10, -9, start=2)),
            ),
            expect_holds=True,
        ),
    ]
