"""Dispatcher: classify n, match it to an identity, fall back to search.

The default method order runs O(1) closed forms first, then the
factoring-based matchers, then composite reduction, and only then the
exhaustive oracle. Everything here is a pure function of its inputs, so
the range runner can fan solve() out over worker processes freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterator

from . import identities
from .core import (
    Decomposition,
    IdentityParams,
    MaxTermsExceededError,
    UnitTriple,
    UnsolvedError,
    scale_decomposition,
)

PROFILE_MODULI = (2, 3, 4, 6, 8, 10, 24, 840)

METHOD_ORACLE = "oracle_search"
METHOD_COMPOSITE = "composite-reduction"

DEFAULT_METHOD_ORDER = (
    identities.METHOD_TRIVIAL,
    identities.METHOD_MOD3,
    identities.METHOD_6K1,
    identities.METHOD_4K1,
    identities.METHOD_8K3,
    identities.METHOD_EQ8,
    METHOD_COMPOSITE,
    identities.METHOD_EQ5,
    METHOD_ORACLE,
)


@dataclass(frozen=True)
class ResidueProfile:
    """Residues of n modulo the dispatch-relevant moduli, plus unit digit."""

    n: int
    residues: dict[int, int]
    unit_digit: int


def classify(n: int) -> ResidueProfile:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return ResidueProfile(
        n=n, residues={m: n % m for m in PROFILE_MODULI}, unit_digit=n % 10
    )


@dataclass(frozen=True)
class SolveConfig:
    """Knobs for solve()/solve_all()/oracle_search().

    k_max bounds the scaled-identity inverse matcher; oracle_x_max caps the
    smallest denominator the brute-force oracle will try (None = the full
    3n/4 bound); oracle_first_only stops the oracle at its first hit.
    """

    k_max: int = 100
    oracle_x_max: int | None = None
    oracle_first_only: bool = False
    method_order: tuple[str, ...] = DEFAULT_METHOD_ORDER

    def __post_init__(self):
        if self.k_max < 1:
            raise ValueError(f"k_max must be >= 1, got {self.k_max}")


DEFAULT_CONFIG = SolveConfig()


def match_eq5(n: int, k_max: int = 100) -> IdentityParams | None:
    """Invert the scaled product identity: find (k, a, b) with 4kab - a - b = n.

    Since (4ka - 1)(4kb - 1) = 4kn + 1, it suffices to find, for some
    k <= k_max, a divisor pair of 4kn + 1 with both factors = -1 (mod 4k).
    Trial division only needs to visit candidates in that residue class,
    and only up to sqrt(4kn + 1). Returns the match with smallest k, then
    smallest first factor; None if no k works.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    for k in range(1, k_max + 1):
        step = 4 * k
        target = step * n + 1
        want = step - 1
        f1 = want
        while f1 * f1 <= target:
            if target % f1 == 0 and (target // f1) % step == want:
                f2 = target // f1
                return IdentityParams(k=k, a=(f1 + 1) // step, b=(f2 + 1) // step)
            f1 += step
    return None


def match_eq8(n: int) -> IdentityParams | None:
    """Factor n as (4c1+1)(4c2-1) with 4c1+1 >= 5 and 4c2-1 >= 3.

    Only n = 3 (mod 4) can factor this way. Among qualifying
    factorizations the one with the smallest 4c1+1 factor is returned.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n % 4 != 3:
        return None
    best: tuple[int, int] | None = None
    d = 1
    while d * d <= n:
        if n % d == 0:
            e = n // d
            for f1, f2 in ((d, e), (e, d)):
                if f1 % 4 == 1 and f1 >= 5 and f2 % 4 == 3 and f2 >= 3:
                    if best is None or f1 < best[0]:
                        best = (f1, f2)
        d += 1
    if best is None:
        return None
    return IdentityParams(c1=(best[0] - 1) // 4, c2=(best[1] + 1) // 4)


def _identity_match(n: int) -> Decomposition | None:
    """First hit among the closed-form layers (no composite step, no eq5, no oracle)."""
    for tag in (
        identities.METHOD_TRIVIAL,
        identities.METHOD_MOD3,
        identities.METHOD_6K1,
        identities.METHOD_4K1,
        identities.METHOD_8K3,
        identities.METHOD_EQ8,
    ):
        d = _LAYERS[tag](n, DEFAULT_CONFIG)
        if d is not None:
            return d
    return None


def composite_reduce(n: int) -> tuple[int, int] | None:
    """Smallest nontrivial divisor d of n whose 4/d has a closed-form
    decomposition, paired with the cofactor m = n/d. None if n is prime or
    no divisor is identity-solvable.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    large: list[int] = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            if _identity_match(d) is not None:
                return d, n // d
            e = n // d
            if e != d:
                large.append(e)
        d += 1
    for e in sorted(large):
        if _identity_match(e) is not None:
            return e, n // e
    return None


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (fine for n up to ~10^12)."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _divisors_of_square(factors: dict[int, int], bound: int) -> list[int]:
    """Sorted divisors of (prod p^e)^2 that are <= bound."""
    divs = [1]
    for p, e in factors.items():
        powers = []
        pe = 1
        for _ in range(2 * e):
            pe *= p
            if pe > bound:
                break
            powers.append(pe)
        divs = [d * q for d in divs for q in [1] + powers if d * q <= bound]
    return sorted(divs)


def _pairs_for_x(n: int, x: int, n_factors: dict[int, int]) -> Iterator[tuple[int, int]]:
    """All (y, z) with x <= y <= z and 1/y + 1/z = 4/n - 1/x, y ascending.

    With p/q the reduced remainder, solutions correspond one-to-one to
    divisors d of q^2 with d <= q and d = -q (mod p), via y = (d + q)/p and
    z = (q^2/d + q)/p; the cofactor's congruence is automatic because
    gcd(p, q) = 1. Divisor enumeration beats scanning the whole y interval
    by orders of magnitude for large n.
    """
    p = 4 * x - n
    if p <= 0:
        return
    q = n * x
    g = gcd(p, q)
    p //= g
    q //= g
    # factors(q) = factors(n) + factors(x) - factors(g), all exact
    factors = dict(n_factors)
    for prime, e in _factorize(x).items():
        factors[prime] = factors.get(prime, 0) + e
    rem = g
    for prime in list(factors):
        while rem % prime == 0 and factors[prime] > 0:
            rem //= prime
            factors[prime] -= 1
        if factors[prime] == 0:
            del factors[prime]
    assert rem == 1  # g divides n*x, so its primes all appear
    q_sq = q * q
    d_min = p * x - q  # enforces y >= x
    for d in _divisors_of_square(factors, q):
        if d < d_min:
            continue
        if (d + q) % p == 0:
            yield (d + q) // p, (q_sq // d + q) // p


def oracle_search(n: int, cfg: SolveConfig | None = None) -> list[UnitTriple]:
    """Exhaustively enumerate canonical solutions x <= y <= z of 4/n.

    x runs over ceil(n/4) <= x <= floor(3n/4); for each x every valid
    (y, z) is recovered exactly (see _pairs_for_x), never by floating
    point. Output is lexicographically sorted by construction; with
    cfg.oracle_first_only only the lexicographically smallest solution is
    returned. An empty list is legal (it never happens for n >= 2 at any
    scanned scale).
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    cfg = cfg or DEFAULT_CONFIG
    first_only = cfg.oracle_first_only
    solutions: list[UnitTriple] = []
    x_lo = -(-n // 4)
    x_hi = (3 * n) // 4
    if cfg.oracle_x_max is not None:
        x_hi = min(x_hi, cfg.oracle_x_max)
    n_factors = _factorize(n)
    for x in range(x_lo, x_hi + 1):
        for y, z in _pairs_for_x(n, x, n_factors):
            solutions.append(UnitTriple(x, y, z))
            if first_only:
                return solutions
    return solutions


def _layer_trivial(n: int, cfg: SolveConfig) -> Decomposition | None:
    return identities.trivial_small_factor(n)


def _layer_mod3(n: int, cfg: SolveConfig) -> Decomposition | None:
    if n % 3 == 2:
        return identities.mod3_identity(n)
    return None


def _layer_6k1(n: int, cfg: SolveConfig) -> Decomposition | None:
    if n % 6 == 5:
        return identities.family_6k_minus_1((n + 1) // 6)
    return None


def _layer_4k1(n: int, cfg: SolveConfig) -> Decomposition | None:
    if n % 4 == 3:
        return identities.family_4k_minus_1((n + 1) // 4)
    r = isqrt(n)
    if r * r == n and r % 4 == 3:
        return identities.family_4k_minus_1((r + 1) // 4, squared=True)
    return None


def _layer_8k3(n: int, cfg: SolveConfig) -> Decomposition | None:
    if n % 8 == 5:
        return identities.family_8k_minus_3((n + 3) // 8)
    r = isqrt(n)
    if r * r == n and r % 8 == 5:
        return identities.family_8k_minus_3((r + 3) // 8, squared=True)
    return None


def _layer_eq8(n: int, cfg: SolveConfig) -> Decomposition | None:
    params = match_eq8(n)
    if params is None:
        return None
    return identities.eq8(params.c1, params.c2)


def _layer_composite(n: int, cfg: SolveConfig) -> Decomposition | None:
    found = composite_reduce(n)
    if found is None:
        return None
    d, m = found
    inner = _identity_match(d)
    assert inner is not None  # composite_reduce only returns solvable divisors
    return scale_decomposition(inner, m)


def _layer_eq5(n: int, cfg: SolveConfig) -> Decomposition | None:
    params = match_eq5(n, cfg.k_max)
    if params is None:
        return None
    return identities.eq5_general(params.k, params.a, params.b)


def _layer_oracle(n: int, cfg: SolveConfig) -> Decomposition | None:
    hits = oracle_search(n, SolveConfig(
        k_max=cfg.k_max, oracle_x_max=cfg.oracle_x_max, oracle_first_only=True
    ))
    if not hits:
        return None
    return Decomposition(n=n, triple=hits[0], method=METHOD_ORACLE)


_LAYERS = {
    identities.METHOD_TRIVIAL: _layer_trivial,
    identities.METHOD_MOD3: _layer_mod3,
    identities.METHOD_6K1: _layer_6k1,
    identities.METHOD_4K1: _layer_4k1,
    identities.METHOD_8K3: _layer_8k3,
    identities.METHOD_EQ8: _layer_eq8,
    METHOD_COMPOSITE: _layer_composite,
    identities.METHOD_EQ5: _layer_eq5,
    METHOD_ORACLE: _layer_oracle,
}


def solve(n: int, cfg: SolveConfig | None = None) -> Decomposition:
    """First verified decomposition of 4/n under cfg.method_order.

    Deterministic for a fixed (n, cfg). Raises UnsolvedError if every layer
    fails, which at desk scale means a bound is too small, not that a
    counterexample was found.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    cfg = cfg or DEFAULT_CONFIG
    for tag in cfg.method_order:
        d = _LAYERS[tag](n, cfg)
        if d is not None:
            return d
    raise UnsolvedError(n)


def solve_all(n: int, cfg: SolveConfig | None = None) -> list[Decomposition]:
    """Every identity-layer decomposition of 4/n, one per canonical triple.

    Runs all layers except the oracle. The composite layer scales the
    closed-form decompositions of every nontrivial divisor. Duplicate
    canonical triples keep the earliest layer's decomposition; the result
    is sorted by canonical triple for reproducible reports.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    cfg = cfg or DEFAULT_CONFIG
    found: dict[UnitTriple, Decomposition] = {}

    def add(d: Decomposition | None) -> None:
        if d is not None and d.triple not in found:
            found[d.triple] = d

    for tag in cfg.method_order:
        if tag == METHOD_ORACLE:
            continue
        if tag == METHOD_COMPOSITE:
            for d, m in _all_divisor_pairs(n):
                for inner in _all_identity_matches(d):
                    add(scale_decomposition(inner, m))
        else:
            add(_LAYERS[tag](n, cfg))
    return [found[t] for t in sorted(found)]


def _all_divisor_pairs(n: int) -> list[tuple[int, int]]:
    """Nontrivial (divisor, cofactor) pairs of n, divisor ascending."""
    divs = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            divs.append(d)
            if d != n // d:
                divs.append(n // d)
        d += 1
    return [(d, n // d) for d in sorted(divs)]


def _all_identity_matches(n: int) -> list[Decomposition]:
    """All closed-form decompositions of 4/n (each layer at most once)."""
    out = []
    for tag in (
        identities.METHOD_TRIVIAL,
        identities.METHOD_MOD3,
        identities.METHOD_6K1,
        identities.METHOD_4K1,
        identities.METHOD_8K3,
        identities.METHOD_EQ8,
    ):
        d = _LAYERS[tag](n, DEFAULT_CONFIG)
        if d is not None:
            out.append(d)
    return out


@dataclass(frozen=True)
class GreedyExpansion:
    """Egyptian-fraction expansion produced by the greedy rule.

    The term sum is re-checked exactly at construction. Denominators
    strictly increase except for a run of leading 1s carrying an integer
    part larger than one (only 4/2 triggers this among 4/n inputs).
    """

    numerator: int
    denominator: int
    terms: tuple[int, ...]

    def __post_init__(self):
        total = sum(Fraction(1, d) for d in self.terms)
        if total != Fraction(self.numerator, self.denominator):
            raise ValueError(
                f"terms {self.terms} do not sum to {self.numerator}/{self.denominator}"
            )
        for prev, cur in zip(self.terms, self.terms[1:]):
            if not (cur > prev or prev == cur == 1):
                raise ValueError(f"denominators not increasing: {self.terms}")


def greedy_expand(num: int, den: int, max_terms: int = 10) -> GreedyExpansion:
    """Expand num/den by always taking the largest unit fraction that fits.

    Each step emits ceil(den/num) and updates the remainder exactly; the
    remainder's numerator strictly decreases, so at most num terms are ever
    needed (4 for 4/n). MaxTermsExceededError guards the budget anyway.
    """
    if num < 1 or den < 1:
        raise ValueError(f"need a positive fraction, got {num}/{den}")
    a, b = num, den
    terms: list[int] = []
    while a != 0:
        if len(terms) >= max_terms:
            raise MaxTermsExceededError(
                f"{num}/{den} not exhausted after {max_terms} greedy terms"
            )
        d = -(-b // a)
        terms.append(d)
        a, b = a * d - b, b * d
        if a:
            g = gcd(a, b)
            a //= g
            b //= g
    return GreedyExpansion(numerator=num, denominator=den, terms=tuple(terms))
