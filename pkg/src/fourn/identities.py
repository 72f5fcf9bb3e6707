"""Closed-form identity constructors.

Each constructor takes small positive integer parameters and returns a
verified Decomposition of 4/n for the n that the identity generates. The
families cover, in particular, every n that is even, divisible by 3,
congruent to 2 mod 3, 3 mod 4, or 5 mod 8, and the squares of the last
two classes; the general two-parameter forms reach many n = 1 mod 24 as
well once an inverse match is found (see fourn.solver).

Validity is not taken on faith: every constructor output passes the exact
verify_triple check at construction time, and the test suite sweeps the
parameter grids exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Decomposition, IdentityParams, UnitTriple

METHOD_EQ5 = "eq5_general"
METHOD_EQ6 = "eq6_corrected"
METHOD_EQ7 = "eq7"
METHOD_EQ8 = "eq8"
METHOD_6K1 = "family_6k_minus_1"
METHOD_4K1 = "family_4k_minus_1"
METHOD_8K3 = "family_8k_minus_3"
METHOD_TRIVIAL = "trivial_small_factor"
METHOD_MOD3 = "mod3_identity"


def _check_positive(**kwargs: int) -> None:
    for name, v in kwargs.items():
        if v < 1:
            raise ValueError(f"{name} must be >= 1, got {v}")


def eq5_general(k: int, a: int, b: int) -> Decomposition:
    """Scaled product identity: n = 4kab - a - b, triple (kab, ka*n, kb*n).

    With k = 1 this is the plain two-parameter form
        4/(4ab - a - b) = 1/(ab) + 1/(a(4ab-a-b)) + 1/(b(4ab-a-b)),
    and the k-scaled version reproduces the whole unit-digit family of
    identities (a = 10*n1, b = 10*n2 - 1 gives denominators ending in 1,
    and so on). Underlying algebra:
        (4ka - 1)(4kb - 1) = 4k*n + 1.
    """
    _check_positive(k=k, a=a, b=b)
    n = 4 * k * a * b - a - b
    if n < 2:
        raise ValueError(f"4kab - a - b = {n} < 2 for k={k}, a={a}, b={b}")
    kab = k * a * b
    return Decomposition(
        n=n,
        triple=UnitTriple(kab, k * a * n, k * b * n),
        method=METHOD_EQ5,
        params=IdentityParams(k=k, a=a, b=b),
    )


def eq6_corrected(c1: int, c2: int) -> Decomposition:
    """Odd-product identity n = (2c1+1)(2c2-1)(4(c1-c2)+1), for c1 >= c2.

    Derived from 8*c1*c2 = 2*(2c1+1)(2c2-1) + (4(c1-c2)+1) + 1 by dividing
    through by 2*c1*c2*(2c1+1)(2c2-1)*(4(c1-c2)+1). The first denominator
    is c1*c2*(4(c1-c2)+1) in full (c1*c2 alone fails already at (2, 1)),
    and c1 >= c2 keeps that trailing factor positive.
    """
    _check_positive(c1=c1, c2=c2)
    if c1 < c2:
        raise ValueError(f"need c1 >= c2 for positive denominators, got c1={c1} < c2={c2}")
    odd_prod = (2 * c1 + 1) * (2 * c2 - 1)
    gap = 4 * (c1 - c2) + 1
    n = odd_prod * gap
    cc = c1 * c2
    return Decomposition(
        n=n,
        triple=UnitTriple(cc * gap, 2 * cc * odd_prod, 2 * cc * odd_prod * gap),
        method=METHOD_EQ6,
        params=IdentityParams(c1=c1, c2=c2),
    )


def eq7(c1: int, c2: int) -> Decomposition:
    """Four-factor identity n = (2c1-1)(2c2-1)(4c1-1)(4c2-1)."""
    _check_positive(c1=c1, c2=c2)
    p1, p2 = 2 * c1 - 1, 2 * c2 - 1
    q1, q2 = 4 * c1 - 1, 4 * c2 - 1
    n = p1 * p2 * q1 * q2
    cc = c1 * c2
    return Decomposition(
        n=n,
        triple=UnitTriple(cc * q1 * q2, 2 * cc * p1 * p2 * q2, 2 * cc * p1 * p2 * q1),
        method=METHOD_EQ7,
        params=IdentityParams(c1=c1, c2=c2),
    )


def eq8(c1: int, c2: int) -> Decomposition:
    """Split-factor identity n = (4c1+1)(4c2-1), with a repeated term:

        4/n = 1/((c1+c2)(4c2-1)) + 2/(2(c1+c2)(4c1+1))
    """
    _check_positive(c1=c1, c2=c2)
    f1, f2 = 4 * c1 + 1, 4 * c2 - 1
    s = c1 + c2
    return Decomposition(
        n=f1 * f2,
        triple=UnitTriple(s * f2, 2 * s * f1, 2 * s * f1),
        method=METHOD_EQ8,
        params=IdentityParams(c1=c1, c2=c2),
    )


def family_6k_minus_1(k: int) -> Decomposition:
    """n = 6k - 1: triple (2k, 6k-1, 2k(6k-1)). Specializes eq5_general(1, 1, 2k)."""
    _check_positive(k=k)
    n = 6 * k - 1
    return Decomposition(
        n=n,
        triple=UnitTriple(2 * k, n, 2 * k * n),
        method=METHOD_6K1,
        params=IdentityParams(k=k),
    )


def family_4k_minus_1(k: int, squared: bool = False) -> Decomposition:
    """n = 4k - 1 (or its square): 4/(4k-1) = 1/k + 2/(2k(4k-1)).

    Valid for every k >= 1 by direct algebra: 1/k + 1/(k(4k-1)) = 4/(4k-1);
    no perfect-square restriction on k is needed. The squared variant
    multiplies the first denominator by 4k-1 and the repeated pair by
    (4k-1)^2.
    """
    _check_positive(k=k)
    r = 4 * k - 1
    if squared:
        n = r * r
        triple = UnitTriple(k * r, 2 * k * n, 2 * k * n)
    else:
        n = r
        triple = UnitTriple(k, 2 * k * r, 2 * k * r)
    return Decomposition(
        n=n, triple=triple, method=METHOD_4K1, params=IdentityParams(k=k, squared=squared)
    )


def family_8k_minus_3(k: int, squared: bool = False) -> Decomposition:
    """n = 8k - 3 (or its square): 4/(8k-3) = 1/(3k-1) + 1/(2(3k-1)) + 1/(2(3k-1)(8k-3)).

    8k - 3 is the index-1 value of the b-sequence (see sequence_value).
    """
    _check_positive(k=k)
    j = 3 * k - 1
    r = 8 * k - 3
    if squared:
        n = r * r
        triple = UnitTriple(j * r, 2 * j * r, 2 * j * n)
    else:
        n = r
        triple = UnitTriple(j, 2 * j, 2 * j * r)
    return Decomposition(
        n=n, triple=triple, method=METHOD_8K3, params=IdentityParams(k=k, squared=squared)
    )


def trivial_small_factor(n: int) -> Decomposition | None:
    """Decomposition for n divisible by 2 or 3, absent otherwise.

    4/(2k) = 1/(2k) + 1/(2k) + 1/k and 4/(3k) = 1/(2k) + 1/(2k) + 1/(3k).
    The even rule is tried first, so multiples of 6 use it.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n % 2 == 0:
        k = n // 2
        triple = UnitTriple(n, n, k)
    elif n % 3 == 0:
        k = n // 3
        triple = UnitTriple(2 * k, 2 * k, n)
    else:
        return None
    return Decomposition(
        n=n, triple=triple, method=METHOD_TRIVIAL, params=IdentityParams(k=k)
    )


def mod3_identity(n: int) -> Decomposition:
    """For n = 2 (mod 3): 4/n = 1/n + 1/((n+1)/3) + 1/(n(n+1)/3)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n % 3 != 2:
        raise ValueError(f"identity requires n = 2 (mod 3), got n={n} = {n % 3} (mod 3)")
    q = (n + 1) // 3
    return Decomposition(
        n=n, triple=UnitTriple(n, q, n * q), method=METHOD_MOD3, params=IdentityParams()
    )


@dataclass(frozen=True)
class SequenceSpec:
    """Selects one value from the auxiliary doubling sequences.

    kind "a": a_i = ((3k+1) * 2^(2i+2) - 1) / 3, so a_0 = 4k + 1.
    kind "b": b_i = ((3k-1) * 2^(2i+1) - 1) / 3, so b_0 = 2k - 1 and
    b_1 = 8k - 3, the generator of family_8k_minus_3.
    """

    kind: str
    k: int
    index: int

    def __post_init__(self):
        if self.kind not in ("a", "b"):
            raise ValueError(f"kind must be 'a' or 'b', got {self.kind!r}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.index < 0:
            raise ValueError(f"index must be >= 0, got {self.index}")


def sequence_value(spec: SequenceSpec) -> int:
    """Evaluate the selected sequence term exactly.

    The numerator is always divisible by 3 (2^(2i+2) = 1 and 2^(2i+1) = 2
    mod 3); this is asserted rather than assumed.
    """
    if spec.kind == "a":
        numerator = (3 * spec.k + 1) * (1 << (2 * spec.index + 2)) - 1
    else:
        numerator = (3 * spec.k - 1) * (1 << (2 * spec.index + 1)) - 1
    q, rem = divmod(numerator, 3)
    if rem != 0:
        raise AssertionError(f"sequence numerator {numerator} not divisible by 3")
    return q
