"""Command-line front end.

Machine-readable by default where it matters: records stream one JSON
object or CSV row per line, so million-row sweeps pipe cleanly. Exit
codes: 0 success, 1 mathematical failure (unsolved n or a set identity
with counterexamples), 2 usage error.
"""

from __future__ import annotations

import csv
import json
import sys
from dataclasses import dataclass

import click

from .core import Decomposition, UnsolvedError
from .coverage import builtin_identity_checks, check_set_identity, coverage_report, mordell_class
from .solver import (
    DEFAULT_CONFIG,
    SolveConfig,
    greedy_expand,
    oracle_search,
    solve,
    solve_all,
)

CSV_HEADER = ["n", "method", "x", "y", "z"]


@dataclass(frozen=True)
class OutputRecord:
    """Flat, serialization-ready view of one decomposition."""

    n: int
    method: str
    params: dict
    x: int
    y: int
    z: int

    @classmethod
    def from_decomposition(cls, d: Decomposition) -> OutputRecord:
        t = d.triple
        return cls(n=d.n, method=d.method, params=d.params.to_dict(), x=t.x, y=t.y, z=t.z)

    def to_json(self) -> str:
        obj = {
            "n": self.n,
            "method": self.method,
            "params": self.params,
            "x": self.x,
            "y": self.y,
            "z": self.z,
        }
        return json.dumps(obj, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> OutputRecord:
        obj = json.loads(line)
        return cls(
            n=obj["n"], method=obj["method"], params=obj["params"],
            x=obj["x"], y=obj["y"], z=obj["z"],
        )

    def to_csv_row(self) -> list:
        return [self.n, self.method, self.x, self.y, self.z]

    def to_text(self) -> str:
        frac = f"4/{self.n} = 1/{self.x} + 1/{self.y} + 1/{self.z}"
        if self.params:
            ps = ", ".join(f"{k}={v}" for k, v in self.params.items())
            return f"{frac}  [{self.method}: {ps}]"
        return f"{frac}  [{self.method}]"


def _emit_records(records, fmt: str, out) -> None:
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in records:
            writer.writerow(r.to_csv_row())
    elif fmt == "json":
        for r in records:
            out.write(r.to_json() + "\n")
    else:
        for r in records:
            out.write(r.to_text() + "\n")


class BigInt(click.ParamType):
    """Arbitrary-width decimal integer with an optional lower bound."""

    name = "integer"

    def __init__(self, min: int | None = None):
        self.min = min

    def convert(self, value, param, ctx):
        try:
            v = int(value)
        except (TypeError, ValueError):
            self.fail(f"{value!r} is not a valid integer", param, ctx)
        if self.min is not None and v < self.min:
            self.fail(f"{v} is smaller than the minimum {self.min}", param, ctx)
        return v


N_ARG = BigInt(min=2)


@click.group()
def main():
    """Decompose 4/n into three positive unit fractions, exactly."""


@main.command("solve")
@click.argument("n", type=N_ARG)
@click.option("--all", "show_all", is_flag=True, help="Emit every identity-layer solution, not just the first.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "text"]), default="text", show_default=True)
@click.option("--k-max", type=BigInt(min=1), default=DEFAULT_CONFIG.k_max, show_default=True,
              help="Bound for the scaled-identity inverse matcher.")
def cmd_solve(n: int, show_all: bool, fmt: str, k_max: int):
    """Print a verified decomposition of 4/N."""
    cfg = SolveConfig(k_max=k_max)
    try:
        decs = solve_all(n, cfg) if show_all else [solve(n, cfg)]
    except UnsolvedError as e:
        click.echo(f"unsolved: {e}", err=True)
        sys.exit(1)
    _emit_records([OutputRecord.from_decomposition(d) for d in decs], fmt, sys.stdout)


@main.command("range")
@click.argument("lo", type=N_ARG)
@click.argument("hi", type=N_ARG)
@click.option("--stats", is_flag=True, help="Emit one coverage report instead of per-n records.")
@click.option("--out", "out_path", type=click.Path(dir_okay=False, writable=True), default=None,
              help="Write output to a file instead of stdout.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--threads", type=BigInt(min=1), default=1, show_default=True,
              help="Worker processes for --stats mode.")
@click.option("--k-max", type=BigInt(min=1), default=DEFAULT_CONFIG.k_max, show_default=True)
@click.option("--block-size", type=BigInt(min=1), default=1 << 16, show_default=True,
              help="Values per worker task in --stats mode.")
def cmd_range(lo, hi, stats, out_path, fmt, threads, k_max, block_size):
    """Solve every n in [LO, HI]; stream records or aggregate statistics.

    Exits 1 if any n in the range is left unsolved.
    """
    if hi < lo:
        raise click.UsageError(f"empty range: lo={lo} > hi={hi}")
    cfg = SolveConfig(k_max=k_max)
    out = open(out_path, "w", newline="") if out_path else sys.stdout
    try:
        if stats:
            report = coverage_report(lo, hi, cfg, workers=threads, block_size=block_size)
            out.write(json.dumps(report.to_dict(), separators=(",", ":")) + "\n")
            click.echo(f"elapsed: {report.elapsed:.2f}s", err=True)
            unsolved = list(report.unsolved)
        else:
            unsolved = []

            def records():
                for n in range(lo, hi + 1):
                    try:
                        yield OutputRecord.from_decomposition(solve(n, cfg))
                    except UnsolvedError:
                        unsolved.append(n)

            _emit_records(records(), fmt, out)
    except OSError as e:
        click.echo(f"I/O error: {e}", err=True)
        sys.exit(2)
    finally:
        if out_path:
            out.close()
    if unsolved:
        click.echo(f"unsolved values: {unsolved}", err=True)
        sys.exit(1)


@main.command("oracle")
@click.argument("n", type=N_ARG)
@click.option("--all", "show_all", is_flag=True, help="Enumerate every canonical solution.")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text", show_default=True)
@click.option("--x-max", type=BigInt(min=1), default=None, help="Cap on the smallest denominator.")
def cmd_oracle(n: int, show_all: bool, fmt: str, x_max: int | None):
    """Exhaustive search for solutions of 4/N (ground truth for small N)."""
    cfg = SolveConfig(oracle_x_max=x_max, oracle_first_only=not show_all)
    triples = oracle_search(n, cfg)
    if fmt == "json":
        for t in triples:
            click.echo(json.dumps({"n": n, "x": t.x, "y": t.y, "z": t.z}, separators=(",", ":")))
    else:
        for t in triples:
            click.echo(f"4/{n} = 1/{t.x} + 1/{t.y} + 1/{t.z}")
    if not triples:
        click.echo(f"no solution with the given bounds for n={n}", err=True)
        sys.exit(1)


@main.command("greedy")
@click.argument("n", type=N_ARG)
@click.option("--max-terms", type=BigInt(min=1), default=10, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text", show_default=True)
def cmd_greedy(n: int, max_terms: int, fmt: str):
    """Greedy (largest-fitting-unit-fraction) expansion of 4/N."""
    exp = greedy_expand(4, n, max_terms=max_terms)
    if fmt == "json":
        click.echo(json.dumps(
            {"numerator": 4, "denominator": n, "terms": list(exp.terms)},
            separators=(",", ":"),
        ))
    else:
        click.echo(f"4/{n} = " + " + ".join(f"1/{d}" for d in exp.terms))


@main.command("lemma1")
@click.option("--limit", type=BigInt(min=1), default=10_000, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text", show_default=True)
@click.option("--max-list", type=BigInt(min=1), default=10, show_default=True,
              help="How many counterexamples to print per identity.")
def cmd_lemma1(limit: int, fmt: str, max_list: int):
    """Audit the built-in residue-set identities up to --limit.

    Exits 1 if any identity has counterexamples (the sixfold union does).
    """
    any_fail = False
    for chk in builtin_identity_checks():
        cex = check_set_identity(chk.lhs, chk.rhs, limit)
        if cex:
            any_fail = True
        if fmt == "json":
            click.echo(json.dumps({
                "identity": chk.name,
                "limit": limit,
                "holds": not cex,
                "counterexamples": [{"value": c.value, "side": c.side} for c in cex[:max_list]],
                "counterexample_count": len(cex),
            }, separators=(",", ":")))
        else:
            if cex:
                shown = ", ".join(f"{c.value} ({c.side})" for c in cex[:max_list])
                more = "" if len(cex) <= max_list else f" ... (+{len(cex) - max_list} more)"
                click.echo(f"{chk.name}: FAILS up to {limit}: {shown}{more}")
            else:
                click.echo(f"{chk.name}: holds up to {limit}")
    if any_fail:
        sys.exit(1)


@main.command("mordell")
@click.argument("n", type=N_ARG)
def cmd_mordell(n: int):
    """Is N in one of the six unresolved residue classes mod 840?"""
    click.echo("true" if mordell_class(n) else "false")


if __name__ == "__main__":
    main()
