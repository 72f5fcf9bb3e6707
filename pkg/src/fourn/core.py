"""Exact arithmetic core: unit-fraction triples and verified decompositions.

Everything here is plain integer arithmetic on Python ints, which are
arbitrary precision, so results are exact at any magnitude and there is
no overflow path to guard. No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from typing import NamedTuple


class FournError(Exception):
    """Base class for package errors."""


class UnsolvedError(FournError):
    """Every configured solver layer failed for some n.

    At desk scale this signals a bug or an over-tight search bound, not a
    genuine counterexample: exhaustive computer searches have confirmed
    solutions exist far beyond anything this package scans.
    """

    def __init__(self, n: int, message: str | None = None):
        self.n = n
        super().__init__(message or f"no decomposition found for 4/{n}")


class MaxTermsExceededError(FournError):
    """Greedy expansion hit its term budget before the remainder reached zero."""


class UnitTriple(NamedTuple):
    """Denominators (x, y, z) of a candidate 1/x + 1/y + 1/z sum.

    Canonical form is sorted ascending; two triples are the same solution
    exactly when their canonical forms are equal.
    """

    x: int
    y: int
    z: int

    def canonical(self) -> UnitTriple:
        """The same multiset of denominators, sorted ascending."""
        return UnitTriple(*sorted(self))


def canonicalize(t: UnitTriple | tuple[int, int, int]) -> UnitTriple:
    """Sort a triple's denominators ascending (solutions are compared up to permutation)."""
    x, y, z = t
    if not (x >= 1 and y >= 1 and z >= 1):
        raise ValueError(f"denominators must be positive, got {t!r}")
    return UnitTriple(*sorted((x, y, z)))


def verify_triple(n: int, t: UnitTriple | tuple[int, int, int]) -> bool:
    """Check exactly whether 4/n = 1/x + 1/y + 1/z.

    Uses the cleared-denominator form 4xyz = n(xy + xz + yz), so the test
    is pure integer arithmetic. Permutation-invariant in (x, y, z).
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    x, y, z = t
    if x < 1 or y < 1 or z < 1:
        raise ValueError(f"denominators must be positive, got {t!r}")
    return 4 * x * y * z == n * (x * y + x * z + y * z)


@dataclass(frozen=True)
class IdentityParams:
    """Parameters that fed the producing identity or search method.

    Only the fields meaningful for that method are set; the rest stay None.
    ``m`` and ``inner_method`` record how a composite decomposition was
    scaled up from a divisor's decomposition.
    """

    k: int | None = None
    a: int | None = None
    b: int | None = None
    c1: int | None = None
    c2: int | None = None
    seq_index: int | None = None
    squared: bool | None = None
    m: int | None = None
    inner_method: str | None = None

    def to_dict(self) -> dict:
        """Present fields only, in declaration order."""
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if v is not None:
                out[f.name] = v
        return out


EMPTY_PARAMS = IdentityParams()


@dataclass(frozen=True)
class Decomposition:
    """A verified solution 4/n = 1/x + 1/y + 1/z with provenance.

    The triple is stored in canonical (ascending) order; construction
    re-verifies the identity exactly and raises ValueError on any triple
    that does not satisfy it, so no invalid Decomposition can exist.
    """

    n: int
    triple: UnitTriple
    method: str
    params: IdentityParams = field(default=EMPTY_PARAMS)

    def __post_init__(self):
        t = canonicalize(self.triple)
        if not verify_triple(self.n, t):
            raise ValueError(
                f"invalid decomposition: 4/{self.n} != 1/{t.x} + 1/{t.y} + 1/{t.z}"
                f" (method {self.method})"
            )
        object.__setattr__(self, "triple", t)

    def as_unit_fractions(self) -> str:
        t = self.triple
        return f"4/{self.n} = 1/{t.x} + 1/{t.y} + 1/{t.z}"


def scale_decomposition(d: Decomposition, m: int) -> Decomposition:
    """Decomposition of 4/(n*m) obtained by scaling every denominator by m.

    This is the composite-reduction step: a solution for a divisor lifts to
    one for any multiple.
    """
    if m < 1:
        raise ValueError(f"scale factor must be >= 1, got {m}")
    t = d.triple
    return Decomposition(
        n=d.n * m,
        triple=UnitTriple(t.x * m, t.y * m, t.z * m),
        method="composite-reduction",
        params=IdentityParams(m=m, inner_method=d.method),
    )
