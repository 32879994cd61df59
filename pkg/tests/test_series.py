from fractions import Fraction

import pytest

from heunpoly import IncompatibleOffsetsError, OffsetSeries, series_combine, series_sum


def test_zero_coefficients_dropped():
    s = OffsetSeries(Fraction(0), {0: Fraction(1), 1: Fraction(0), 2: Fraction(3)})
    assert s.indices() == [0, 2]


def test_combine_monomials():
    a = OffsetSeries.monomial(Fraction(0))
    b = OffsetSeries.monomial(Fraction(1))
    out = series_combine(a, b, Fraction(1))
    assert out.exponent_map() == {Fraction(0): Fraction(1), Fraction(1): Fraction(1)}


def test_combine_cancels_to_zero():
    s = OffsetSeries(Fraction(1, 2), {0: Fraction(2), 3: Fraction(-1)})
    assert series_combine(s, s, Fraction(-1)).is_zero()


def test_combine_rejects_non_integer_gap():
    a = OffsetSeries.monomial(Fraction(0))
    b = OffsetSeries.monomial(Fraction(1, 2))
    with pytest.raises(IncompatibleOffsetsError):
        series_combine(a, b)


def test_combine_reindexes_to_smaller_offset():
    a = OffsetSeries(Fraction(3), {0: Fraction(1)})
    b = OffsetSeries(Fraction(1), {0: Fraction(5)})
    out = series_combine(a, b)
    assert out.offset == Fraction(1)
    assert out.coeffs == {0: Fraction(5), 2: Fraction(1)}


def test_zero_series_is_neutral_even_off_lattice():
    zero = OffsetSeries.zero(Fraction(0))
    s = OffsetSeries.monomial(Fraction(1, 2), Fraction(3))
    assert series_combine(zero, s) == s
    assert series_combine(s, zero) == s


def test_semantic_equality_across_offsets():
    a = OffsetSeries(Fraction(1), {0: Fraction(2), 1: Fraction(3)})
    b = OffsetSeries(Fraction(0), {1: Fraction(2), 2: Fraction(3)})
    assert a == b
    assert hash(a) == hash(b)


def test_rebase_and_normalize():
    s = OffsetSeries(Fraction(5, 2), {-1: Fraction(1), 2: Fraction(4)})
    r = s.rebased(Fraction(1, 2))
    assert r == s
    assert r.offset == Fraction(1, 2)
    n = s.normalized()
    assert n == s
    assert min(n.indices()) == 0
    with pytest.raises(IncompatibleOffsetsError):
        s.rebased(Fraction(0))


def test_coefficient_at():
    s = OffsetSeries(Fraction(1, 2), {0: Fraction(7), 2: Fraction(-1)})
    assert s.coefficient_at(Fraction(1, 2)) == Fraction(7)
    assert s.coefficient_at(Fraction(5, 2)) == Fraction(-1)
    assert s.coefficient_at(Fraction(3, 2)) == 0
    assert s.coefficient_at(Fraction(1)) == 0


def test_restrict_and_shift():
    s = OffsetSeries(Fraction(0), {k: Fraction(k + 10) for k in range(-2, 3)})
    assert s.restrict(lo=0).indices() == [0, 1, 2]
    assert s.restrict(hi=-1).indices() == [-2, -1]
    shifted = s.shift_exponents(Fraction(3, 2))
    assert shifted.offset == Fraction(3, 2)
    assert shifted.coeffs == s.coeffs


def test_series_sum():
    parts = [OffsetSeries.monomial(Fraction(k), Fraction(k + 1)) for k in range(3)]
    total = series_sum(parts)
    assert total.exponent_map() == {
        Fraction(0): Fraction(1),
        Fraction(1): Fraction(2),
        Fraction(2): Fraction(3),
    }


def test_json_round_trip():
    s = OffsetSeries(Fraction(-3, 7), {-2: Fraction(1, 3), 5: Fraction(-4)})
    data = s.to_json_dict()
    assert data == {"offset": "-3/7", "coeffs": {"-2": "1/3", "5": "-4"}}
    assert OffsetSeries.from_json_dict(data) == s
