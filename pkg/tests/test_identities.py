"""Identity constructors: frozen examples, parameter grids, consistency."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fourn.core import UnitTriple, canonicalize, verify_triple
from fourn.identities import (
    SequenceSpec,
    eq5_general,
    eq6_corrected,
    eq7,
    eq8,
    family_4k_minus_1,
    family_6k_minus_1,
    family_8k_minus_3,
    mod3_identity,
    sequence_value,
    trivial_small_factor,
)

small = st.integers(min_value=1, max_value=50)


def test_eq5_general_examples():
    d = eq5_general(1, 1, 2)
    assert (d.n, d.triple) == (5, UnitTriple(2, 5, 10))

    d = eq5_general(1, 10, 9)
    assert d.n == 341
    assert d.triple == canonicalize((90, 3410, 3069))

    d = eq5_general(2, 2, 5)
    assert d.n == 73
    assert d.triple == UnitTriple(20, 292, 730)


def test_eq5_general_domain():
    # 4kab - a - b = 4 - 2 = 2 is the smallest legal n
    assert eq5_general(1, 1, 1).n == 2
    with pytest.raises(ValueError):
        eq5_general(1, 0, 1)


@given(small, small, small)
@settings(max_examples=300, deadline=None)
def test_eq5_product_form(k, a, b):
    # the search identity behind the inverse matcher
    n = 4 * k * a * b - a - b
    assert (4 * k * a - 1) * (4 * k * b - 1) == 4 * k * n + 1
    assert verify_triple(n, eq5_general(k, a, b).triple)


def test_eq6_corrected_examples():
    d = eq6_corrected(1, 1)
    assert (d.n, d.triple) == (3, UnitTriple(1, 6, 6))

    d = eq6_corrected(2, 1)
    assert (d.n, d.triple) == (25, UnitTriple(10, 20, 100))

    d = eq6_corrected(3, 2)
    assert d.n == 7 * 3 * 5
    assert d.triple == UnitTriple(30, 252, 1260)


def test_eq6_first_denominator_needs_gap_factor():
    # c1*c2 alone does not satisfy the identity at (2, 1); the full
    # first denominator c1*c2*(4(c1-c2)+1) does
    assert not verify_triple(25, (2, 20, 100))
    assert verify_triple(25, (10, 20, 100))


def test_eq6_requires_c1_ge_c2():
    with pytest.raises(ValueError):
        eq6_corrected(1, 2)


def test_eq7_examples():
    assert (eq7(1, 1).n, eq7(1, 1).triple) == (9, UnitTriple(6, 6, 9))
    assert (eq7(2, 1).n, eq7(2, 1).triple) == (63, UnitTriple(36, 42, 84))
    assert (eq7(2, 2).n, eq7(2, 2).triple) == (441, UnitTriple(196, 504, 504))


def test_eq8_examples():
    assert (eq8(1, 1).n, eq8(1, 1).triple) == (15, UnitTriple(6, 20, 20))
    assert (eq8(1, 2).n, eq8(1, 2).triple) == (35, UnitTriple(21, 30, 30))
    assert (eq8(2, 1).n, eq8(2, 1).triple) == (27, UnitTriple(9, 54, 54))


def test_family_6k_minus_1_examples():
    assert family_6k_minus_1(1).triple == UnitTriple(2, 5, 10)
    assert family_6k_minus_1(2).triple == UnitTriple(4, 11, 44)
    d = family_6k_minus_1(10)
    assert (d.n, d.triple) == (59, UnitTriple(20, 59, 1180))


@given(small)
@settings(max_examples=50, deadline=None)
def test_family_6k_minus_1_specializes_eq5(k):
    assert family_6k_minus_1(k).triple == eq5_general(1, 1, 2 * k).triple


def test_family_4k_minus_1_examples():
    assert (family_4k_minus_1(1).n, family_4k_minus_1(1).triple) == (3, UnitTriple(1, 6, 6))
    assert (family_4k_minus_1(2).n, family_4k_minus_1(2).triple) == (7, UnitTriple(2, 28, 28))
    d = family_4k_minus_1(1, squared=True)
    assert (d.n, d.triple) == (9, UnitTriple(3, 18, 18))


def test_family_8k_minus_3_examples():
    assert (family_8k_minus_3(1).n, family_8k_minus_3(1).triple) == (5, UnitTriple(2, 4, 20))
    assert (family_8k_minus_3(2).n, family_8k_minus_3(2).triple) == (13, UnitTriple(5, 10, 130))
    d = family_8k_minus_3(1, squared=True)
    assert (d.n, d.triple) == (25, UnitTriple(10, 20, 100))


def test_trivial_small_factor():
    assert trivial_small_factor(2).triple == UnitTriple(1, 2, 2)
    assert trivial_small_factor(9).triple == UnitTriple(6, 6, 9)
    assert trivial_small_factor(6).triple == UnitTriple(3, 6, 6)  # even rule wins
    assert trivial_small_factor(7) is None
    assert trivial_small_factor(25) is None


def test_mod3_identity_examples():
    assert mod3_identity(2).triple == UnitTriple(1, 2, 2)
    assert mod3_identity(5).triple == UnitTriple(2, 5, 10)
    assert mod3_identity(11).triple == UnitTriple(4, 11, 44)
    with pytest.raises(ValueError):
        mod3_identity(7)
    with pytest.raises(ValueError):
        mod3_identity(9)


def test_sequence_values():
    assert sequence_value(SequenceSpec("a", k=1, index=0)) == 5
    assert sequence_value(SequenceSpec("b", k=1, index=1)) == 5
    assert sequence_value(SequenceSpec("b", k=3, index=0)) == 5
    assert sequence_value(SequenceSpec("a", k=2, index=0)) == 9
    with pytest.raises(ValueError):
        SequenceSpec("c", k=1, index=0)
    with pytest.raises(ValueError):
        SequenceSpec("a", k=0, index=0)


@given(st.integers(min_value=1, max_value=1000), st.integers(min_value=0, max_value=12))
@settings(max_examples=200, deadline=None)
def test_sequence_closed_forms(k, i):
    a = sequence_value(SequenceSpec("a", k=k, index=i))
    b = sequence_value(SequenceSpec("b", k=k, index=i))
    assert 3 * a == (3 * k + 1) * 2 ** (2 * i + 2) - 1
    assert 3 * b == (3 * k - 1) * 2 ** (2 * i + 1) - 1
    if i == 0:
        assert a == 4 * k + 1
        assert b == 2 * k - 1
    if i == 1:
        assert b == 8 * k - 3
        assert a == 16 * k + 5


@given(small)
@settings(max_examples=50, deadline=None)
def test_8k_minus_3_is_b_sequence_at_index_1(k):
    assert family_8k_minus_3(k).n == sequence_value(SequenceSpec("b", k=k, index=1))


@given(
    st.integers(min_value=1, max_value=10),
    st.integers(min_value=1, max_value=10),
    st.integers(min_value=1, max_value=10),
)
@settings(max_examples=200, deadline=None)
def test_unit_digit_family_reproduction(k, n1, n2):
    # the scaled form reproduces the unit-digit family denominators
    d = eq5_general(k, 10 * n1, 10 * n2 - 1)
    assert d.n == 4 * k * (10 * n1) * (10 * n2 - 1) - 10 * (n1 + n2) + 1
    d = eq5_general(k, 10 * n1, 10 * n2 - 3)
    assert d.n == 4 * k * (10 * n1) * (10 * n2 - 3) - 10 * (n1 + n2) + 3
    d = eq5_general(k, 10 * n1 - 9, 10 * n2 - 2)
    assert d.n == 4 * k * (10 * n1 - 9) * (10 * n2 - 2) - 10 * (n1 + n2) + 11


def test_grid_totality_smoke():
    # the acceptance suite runs the full 50-grid; keep a fast slice here
    for k in range(1, 13):
        for a in range(1, 13):
            for b in range(1, 13):
                if 4 * k * a * b - a - b >= 2:
                    assert verify_triple(4 * k * a * b - a - b, eq5_general(k, a, b).triple)
    for c1 in range(1, 13):
        for c2 in range(1, 13):
            assert verify_triple(eq7(c1, c2).n, eq7(c1, c2).triple)
            assert verify_triple(eq8(c1, c2).n, eq8(c1, c2).triple)
            if c1 >= c2:
                assert verify_triple(eq6_corrected(c1, c2).n, eq6_corrected(c1, c2).triple)
    for k in range(1, 13):
        for squared in (False, True):
            assert verify_triple(
                family_4k_minus_1(k, squared).n, family_4k_minus_1(k, squared).triple
            )
            assert verify_triple(
                family_8k_minus_3(k, squared).n, family_8k_minus_3(k, squared).triple
            )
