from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from plimpton.pairs import ReciprocalPair
from plimpton.rows import (
    PQPair,
    XYPair,
    build_row,
    column_A,
    pair_from_pq,
    pq_to_triple,
    reduce_factorization,
    regular_part,
    xy_from_pair,
)
from plimpton.sexagesimal import (
    SexValue,
    SexagesimalError,
    add,
    from_fraction,
    mul,
    parse_sex,
    render_sex,
    sub,
)

ROW1 = ReciprocalPair.from_T_mantissa(144)       # (2 24, 25)
ROW11 = ReciprocalPair.from_T_mantissa(2)        # (2, 30)
ROW4 = ReciprocalPair.from_T_mantissa(500000)    # (2 18 53 20, 25 55 12)


class TestXY:
    def test_half_difference_half_sum(self):
        xy = xy_from_pair(ROW1)
        assert xy.x.fraction == Fraction(12, 5) / 2 - Fraction(5, 12) / 2
        assert xy.y.fraction == Fraction(12, 5) / 2 + Fraction(5, 12) / 2

    def test_defining_identity(self):
        for m in (144, 2, 500000, 512000, 108):
            xy = xy_from_pair(ReciprocalPair.from_T_mantissa(m))
            assert xy.y.fraction ** 2 - xy.x.fraction ** 2 == 1

    def test_degenerate_unit_pair_rejected(self):
        with pytest.raises(SexagesimalError):
            xy_from_pair(ReciprocalPair.from_T_mantissa(1))


class TestReduction:
    def test_regular_part(self):
        assert regular_part(13500) == 13500
        assert regular_part(7 * 12) == 12
        assert regular_part(49) == 1

    def test_row1(self):
        s, d, factor = reduce_factorization(xy_from_pair(ROW1))
        assert (s, d) == (119, 169)
        assert factor == 30
        assert gcd(s, d) == 1

    def test_row11_reduces_to_3_5(self):
        s, d, factor = reduce_factorization(xy_from_pair(ROW11))
        assert (s, d, factor) == (3, 5, 15)

    def test_degenerate_isosceles_rejected(self):
        with pytest.raises(SexagesimalError):
            reduce_factorization(XYPair(SexValue(0), SexValue(1)))

    @given(st.integers(0, 8), st.integers(0, 5), st.integers(0, 4),
           st.integers(1, 400))
    def test_invariant_under_regular_prescaling(self, a, b, c, seed):
        # scaling (X, Y) by any regular factor must not change (S, D)
        from plimpton.pairs import regular_mantissas
        ms = regular_mantissas(2)
        m = ms[seed % len(ms)]
        if m == 1:
            m = 144
        pair = ReciprocalPair.from_T_mantissa(m)
        xy = xy_from_pair(pair)
        scale = SexValue(2**a * 3**b * 5**c)
        scaled = XYPair(mul(xy.x, scale), mul(xy.y, scale))
        assert reduce_factorization(xy)[:2] == reduce_factorization(scaled)[:2]


class TestColumnA:
    def test_row4_eight_place_value(self):
        a, x2 = column_A(xy_from_pair(ROW4))
        assert render_sex(a) == "1 53 10 29 32 52 16"
        assert add(x2, SexValue(1)) == a

    def test_a_is_y_squared(self):
        xy = xy_from_pair(ROW1)
        a, _ = column_A(xy)
        assert a == mul(xy.y, xy.y)


class TestPQ:
    def test_triple_formulas(self):
        assert pq_to_triple(PQPair(12, 5)) == (120, 119, 169)
        assert pq_to_triple(PQPair(2, 1)) == (4, 3, 5)

    def test_pair_from_pq(self):
        assert pair_from_pq(PQPair(12, 5)).T.mantissa == 144
        assert pair_from_pq(PQPair(9, 5)).T.mantissa == 108

    def test_pq_validation(self):
        with pytest.raises(ValueError):
            PQPair(5, 12)
        with pytest.raises(SexagesimalError):
            pair_from_pq(PQPair(7, 2))

    @given(st.integers(1, 60), st.integers(1, 60))
    def test_pq_route_matches_xy_route(self, p, q):
        from plimpton.sexagesimal import factor_2_3_5
        if p <= q or factor_2_3_5(p) is None or factor_2_3_5(q) is None:
            return
        pair = pair_from_pq(PQPair(p, q))
        s, d, _ = reduce_factorization(xy_from_pair(pair))
        l, ps, pd = pq_to_triple(PQPair(p, q))
        g = gcd(ps, pd)
        assert (s, d) == (ps // g, pd // g)
        assert ps * ps + l * l == pd * pd


class TestBuildRow:
    def test_full_always_reduces(self):
        row = build_row(ROW11, 11, "full")
        assert (row.s, row.d) == (3, 5)
        assert row.reduction_factor == 15
        assert row.reduced

    def test_tablet_faithful_keeps_small_mantissas(self):
        row = build_row(ROW11, 11, "tablet_faithful")
        assert (row.s, row.d) == (45, 75)
        assert not row.reduced
        assert render_sex(SexValue(row.d)) == "1 15"

    def test_tablet_faithful_reduces_large_mantissas(self):
        row = build_row(ROW4, 4, "tablet_faithful")
        assert (row.s, row.d) == (12709, 18541)
        assert row.reduced

    def test_unknown_mode_rejected(self):
        with pytest.raises(ValueError):
            build_row(ROW1, 1, "partial")
