"""The published generation theories as row-set generators.

Each hypothesis produces an ordered list of row candidates; all of them are
parameterized either by coprime regular integer pairs (P, Q) or directly by
reciprocal pairs.  Also here: the predicted extension tables above and below
the attested fifteen rows, and the search linking any regular pair to the
standard reciprocal table by doubling/tripling/quintupling steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .pairs import (
    Correction,
    PairCriterion,
    ReciprocalPair,
    enumerate_pairs,
    mult10_criterion,
    plimpton_range,
    regular_mantissas,
)
from .rows import PQPair, RowCandidate, build_row, column_A, pair_from_pq, pq_to_triple, xy_from_pair
from .sexagesimal import (
    SexValue,
    cmp_quadratic,
    factor_2_3_5,
    from_fraction,
    render_sex,
)

HYPOTHESIS_TAGS = (
    "ns1945", "bruins1949", "price1964", "buck1980",
    "friberg1981", "friberg2007", "phillips",
)


@dataclass(frozen=True)
class Hypothesis:
    tag: str
    # Price's upper ratio bound as misprinted in his text (2;25) instead of
    # the witness-derived 12/5.
    price_g_from_text: bool = False

    def __post_init__(self) -> None:
        if self.tag not in HYPOTHESIS_TAGS:
            raise ValueError(f"unknown hypothesis {self.tag!r}")


# (P, Q) generators for the fifteen rows, as first published.
TABLE1_PQ = [
    (12, 5), (64, 27), (75, 32), (125, 54), (9, 4),
    (20, 9), (54, 25), (32, 15), (25, 12), (81, 40),
    (2, 1), (48, 25), (15, 8), (50, 27), (9, 5),
]

# The fifteen reciprocal pairs with their links to the standard table, as
# printed.  Row 12's T is misprinted ("1 55 2"); the computed value is
# 1 55 12.  Links are (first member, second member, factor applied to the
# first member) or None for pairs already in the standard table.
PLIMPTON_PAIRS_PRINTED = [
    ("1", "2 24", "25", None),
    ("2", "2 22 13 20", "25 18 45", ("1 04", "56 15", Fraction(1, 27))),
    ("3", "2 20 37 30", "25 36", ("1 15", "48", Fraction(1, 32))),
    ("4", "2 18 53 20", "25 55 12", ("54", "1 06 40", Fraction(1, 125))),
    ("5", "2 15", "26 40", ("9", "6 40", Fraction(1, 4))),
    ("6", "2 13 20", "27", None),
    ("7", "2 09 36", "27 46 40", ("54", "1 06 40", Fraction(1, 25))),
    ("8", "2 08", "28 07 30", ("1 04", "56 15", Fraction(2))),
    ("9", "2 05", "28 48", ("1 06 40", "54", Fraction(1, 32))),
    ("10", "2 01 30", "29 37 46 40", ("1 21", "44 26 40", Fraction(3, 2))),
    ("11", "2", "30", None),
    ("12", "1 55 2", "31 15", ("54", "1 06 40", Fraction(128))),
    ("13", "1 52 30", "32", None),
    ("14", "1 51 06 40", "32 24", ("16 40", "3 36", Fraction(1, 9))),
    ("15", "1 48", "33 20", ("54", "1 06 40", Fraction(2))),
]


def phillips_pairs() -> list[ReciprocalPair]:
    lower, upper = plimpton_range()
    return enumerate_pairs(PairCriterion("mult10", lower, upper))


def plimpton_pair_corrections() -> list[Correction]:
    out = []
    for (label, t_text, tbar_text, _), pair in zip(
            PLIMPTON_PAIRS_PRINTED, phillips_pairs()):
        t, tbar = render_sex(pair.T.value), render_sex(pair.Tbar.value)
        if t != t_text:
            out.append(Correction("standard-15", label, "T", t_text, t))
        if tbar != tbar_text:
            out.append(Correction("standard-15", label, "Tbar", tbar_text, tbar))
    return out


def _rows_from_pairs(pairs, reduction: str) -> list[RowCandidate]:
    return [build_row(p, n, reduction) for n, p in enumerate(pairs, 1)]


def _coprime_regular_pq(max_q: int, keep) -> list[PQPair]:
    """Coprime regular (P, Q) with Q < max_q and keep(P, Q) true."""
    regs = [m for m in regular_mantissas(4)]
    out = []
    for q in regs:
        if q >= max_q:
            break
        for p in regs:
            if p <= q:
                continue
            if Fraction(p, q) > 3:  # every surveyed ratio bound is below 3
                break
            if gcd(p, q) == 1 and keep(p, q):
                out.append(PQPair(p, q))
    return out


def _pairs_by_decreasing_t(pqs: list[PQPair]) -> list[ReciprocalPair]:
    pairs = {pair_from_pq(pq).T.mantissa: pair_from_pq(pq) for pq in pqs}
    return sorted(pairs.values(), key=lambda p: p.t_fraction, reverse=True)


def generate(h: Hypothesis | str, reduction: str = "full") -> list[RowCandidate]:
    """Row candidates under one hypothesis, ordered by decreasing T."""
    if isinstance(h, str):
        h = Hypothesis(h)
    if h.tag == "ns1945":
        rows = []
        for n, (p, q) in enumerate(TABLE1_PQ, 1):
            pq = PQPair(p, q)
            pair = pair_from_pq(pq)
            xy = xy_from_pair(pair)
            _, s, d = pq_to_triple(pq)
            a, _ = column_A(xy)
            rows.append(RowCandidate(n, pair, xy, s, d, a, 1,
                                     reduced=(gcd(s, d) == 1)))
        return rows
    if h.tag == "phillips":
        return _rows_from_pairs(phillips_pairs(), reduction)
    if h.tag == "bruins1949":
        lower, upper = plimpton_range()
        pairs = enumerate_pairs(PairCriterion("bruins", lower, upper))
        return _rows_from_pairs(pairs, reduction)
    if h.tag == "price1964":
        f = Fraction(16, 9)
        if h.price_g_from_text:
            keep = lambda p, q: q > 1 and f < Fraction(p, q) < Fraction(29, 12)
        else:
            keep = lambda p, q: q > 1 and f < Fraction(p, q) <= Fraction(12, 5)
        pqs = _coprime_regular_pq(60, keep)
        return _rows_from_pairs(_pairs_by_decreasing_t(pqs), reduction)
    if h.tag == "buck1980":
        def keep(p, q):
            if p >= 100:
                return False
            ratio = from_fraction(Fraction(p, q))
            return (cmp_quadratic(ratio, "sqrt3") > 0
                    and cmp_quadratic(ratio, "1+sqrt2") < 0)
        pqs = _coprime_regular_pq(100, keep)
        return _rows_from_pairs(_pairs_by_decreasing_t(pqs), reduction)
    if h.tag == "friberg1981":
        def keep(p, q):
            ratio = Fraction(q, p)
            if ratio > Fraction(5, 9):
                return False
            return cmp_quadratic(from_fraction(ratio), "sqrt2-1") > 0
        pqs = _coprime_regular_pq(60, keep)
        return _rows_from_pairs(_pairs_by_decreasing_t(pqs), reduction)
    if h.tag == "friberg2007":
        keep = lambda p, q: q < p < q * Fraction(29, 12)
        pqs = _coprime_regular_pq(60, keep)
        return _rows_from_pairs(_pairs_by_decreasing_t(pqs), reduction)
    raise AssertionError(h.tag)


# ---------------------------------------------------------------------------
# Extension tables

@dataclass(frozen=True)
class ExtensionRow:
    label: str
    pair: ReciprocalPair


# Printed extension tables, four places per member, trailing zero padding.
# Digit 64 appears twice in the source (a misprint of "06 4"); the affected
# rows are corrected by computation and logged, never silently fixed.
LOWER_EXTENSION_PRINTED = [
    ("-21", (3, 54, 22, 30), (15, 21, 36, 0)),
    ("i", (3, 50, 24, 0), (15, 37, 30, 0)),
    ("-20", (3, 45, 0, 0), (16, 0, 0, 0)),
    ("ii", (3, 42, 13, 20), (16, 12, 0, 0)),
    ("-19", (3, 36, 0, 0), (16, 40, 0, 0)),
    ("-18", (3, 33, 20, 0), (16, 52, 30, 0)),
    ("-17", (3, 28, 20, 0), (17, 16, 48, 0)),
    ("-16", (3, 22, 30, 0), (17, 46, 40, 0)),
    ("-15", (3, 20, 0, 0), (18, 0, 0, 0)),
    ("-14", (3, 14, 24, 0), (18, 31, 64, 0)),
    ("-13", (3, 12, 0, 0), (18, 45, 0, 0)),
    ("-12", (3, 7, 30, 0), (19, 12, 0, 0)),
    ("-11", (3, 0, 0, 0), (20, 0, 0, 0)),
    ("-10", (2, 57, 46, 40), (20, 15, 0, 0)),
    ("-9", (2, 52, 48, 0), (20, 50, 0, 0)),
    ("iii", (2, 50, 40, 0), (21, 5, 37, 30)),
    ("-8", (2, 48, 45, 0), (21, 20, 0, 0)),
    ("-7", (2, 46, 40, 0), (21, 36, 0, 0)),
    ("-6", (2, 42, 0, 0), (22, 13, 20, 0)),
    ("-5", (2, 40, 0, 0), (22, 30, 0, 0)),
    ("-4", (2, 36, 15, 0), (23, 2, 24, 0)),
    ("-3", (2, 33, 36, 0), (23, 26, 15, 0)),
    ("-2", (2, 31, 52, 30), (23, 42, 13, 20)),
    ("-1", (2, 30, 0, 0), (24, 0, 0, 0)),
]

UPPER_EXTENSION_PRINTED = [
    ("16", (1, 46, 40, 0), (33, 45, 0, 0)),
    ("iv", (1, 44, 10, 0), (34, 33, 36, 0)),
    ("v", (1, 42, 24, 0), (35, 9, 22, 30)),
    ("17", (1, 41, 15, 0), (35, 33, 20, 0)),
    ("18", (1, 40, 0, 0), (36, 0, 0, 0)),
    ("19", (1, 37, 12, 0), (37, 2, 13, 20)),
    ("20", (1, 36, 0, 0), (37, 30, 0, 0)),
    ("21", (1, 33, 45, 0), (38, 24, 0, 0)),
    ("22", (1, 30, 0, 0), (40, 0, 0, 0)),
    ("23", (1, 28, 53, 20), (40, 30, 0, 0)),
    ("24", (1, 26, 24, 0), (41, 40, 0, 0)),
    ("25", (1, 25, 20, 0), (42, 11, 15, 0)),
    ("26", (1, 24, 22, 30), (42, 40, 0, 0)),
    ("27", (1, 23, 20, 0), (43, 12, 0, 0)),
    ("28", (1, 21, 0, 0), (44, 26, 40, 0)),
    ("29", (1, 20, 0, 0), (45, 0, 0, 0)),
    ("vi", (1, 18, 7, 30), (46, 4, 48, 0)),
    ("30", (1, 16, 48, 0), (46, 52, 30, 0)),
    ("31", (1, 15, 0, 0), (48, 0, 0, 0)),
    ("32", (1, 12, 0, 0), (50, 0, 0, 0)),
    ("33", (1, 11, 64, 0), (50, 37, 30, 0)),
    ("vii", (1, 9, 26, 40), (51, 50, 24, 0)),
    ("34", (1, 7, 30, 0), (53, 20, 0, 0)),
    ("35", (1, 6, 40, 0), (54, 0, 0, 0)),
    ("36", (1, 4, 48, 0), (55, 33, 20, 0)),
    ("37", (1, 4, 0, 0), (56, 15, 0, 0)),
    ("38", (1, 2, 30, 0), (57, 36, 0, 0)),
    ("viii", (1, 0, 45, 0), (59, 15, 33, 20)),
]

# A cited earlier reconstruction gives row -17's T as 3 29 10; computation
# confirms the tabulated 3 28 20 (the reciprocal of 17 16 48).
MINUS_17_VARIANT_PRINTED = "3 29 10"

# The running text misprints the endpoint of the complete list; the first
# T is the reciprocal of 1 00 45.
FULL_LIST_TEXT_ENDPOINT_PRINTED = "59 33 33 20"

_EXTENSION_RANGES = {
    # lower: above the tablet's top row, exclusive, up to the printed top.
    "lower": (Fraction(12, 5), False, Fraction(843750, 60**3), True),
    # upper: below the tablet's bottom row, from the printed end.
    "upper": (Fraction(3645, 3600), True, Fraction(9, 5), False),
}


def extend_phillips(side: str) -> list[ExtensionRow]:
    """Continuation of the multiple-of-10 list beyond the fifteen rows,
    labeled against the printed comparison tables."""
    printed = _extension_printed(side)
    lo, lo_inc, hi, hi_inc = _EXTENSION_RANGES[side]
    pairs = []
    for m in regular_mantissas(4):
        if m == 1:
            continue
        pair = ReciprocalPair.from_T_mantissa(m)
        t = pair.t_fraction
        if not ((lo <= t if lo_inc else lo < t)
                and (t <= hi if hi_inc else t < hi)):
            continue
        if mult10_criterion(pair.T) and mult10_criterion(pair.Tbar):
            pairs.append(pair)
    pairs.sort(key=lambda p: p.t_fraction, reverse=True)
    if len(pairs) != len(printed):
        raise AssertionError(
            f"{side} extension: computed {len(pairs)} pairs, "
            f"printed table has {len(printed)}")
    return [ExtensionRow(label, pair)
            for (label, _, _), pair in zip(printed, pairs)]


def _extension_printed(side: str):
    try:
        return {"lower": LOWER_EXTENSION_PRINTED,
                "upper": UPPER_EXTENSION_PRINTED}[side]
    except KeyError:
        raise ValueError(f"side must be 'lower' or 'upper', not {side!r}")


def _padded_digits(v: SexValue) -> tuple[int, ...]:
    digits = v.digits()
    return tuple(digits + [0] * (4 - len(digits)))


def extension_corrections(side: str) -> list[Correction]:
    """Printed-vs-computed digit log for one extension table."""
    out = []
    table = f"extension-{side}"
    for (label, t_printed, tbar_printed), row in zip(
            _extension_printed(side), extend_phillips(side)):
        for column, printed, value in (
                ("T", t_printed, row.pair.T.value),
                ("Tbar", tbar_printed, row.pair.Tbar.value)):
            if _padded_digits(value) != printed:
                out.append(Correction(
                    table, label, column,
                    " ".join(str(d) for d in printed),
                    render_sex(value, pad_to=4)))
    if side == "lower":
        out.append(Correction("extension-lower(variant)", "-17", "T",
                              MINUS_17_VARIANT_PRINTED,
                              render_sex(_minus17_computed())))
    return out


def _minus17_computed() -> SexValue:
    for row in extend_phillips("lower"):
        if row.label == "-17":
            return row.pair.T.value
    raise AssertionError("row -17 missing")


# ---------------------------------------------------------------------------
# Linking to the standard reciprocal table

@dataclass(frozen=True)
class LinkChain:
    """A minimal multiplication chain from a standard-table pair.

    ``factor`` is the exponent triple (a, b, c): multiplying the start
    pair's T by 2**a 3**b 5**c (and its Tbar by the inverse) reproduces the
    target pair.  An all-zero factor means the pair is in the table.
    """

    start: ReciprocalPair
    factor: tuple[int, int, int]

    @property
    def steps(self) -> int:
        return sum(abs(e) for e in self.factor)

    @property
    def in_table(self) -> bool:
        return self.factor == (0, 0, 0)

    @property
    def factor_fraction(self) -> Fraction:
        f = Fraction(1)
        for p, e in zip((2, 3, 5), self.factor):
            f *= Fraction(p) ** e
        return f

    @property
    def factor_magnitude(self) -> Fraction:
        f = self.factor_fraction
        return max(f, 1 / f)

    def replay(self) -> ReciprocalPair:
        m = self.start.T.mantissa
        num, den = self.factor_fraction.numerator, self.factor_fraction.denominator
        m *= num
        while m % den:
            m *= 60
        return ReciprocalPair.from_T_mantissa(_strip60(m // den))

    def __str__(self) -> str:
        if self.in_table:
            return "in table"
        f = self.factor_fraction
        inv = 1 / f
        return f"{self.start} × ({f}, {inv})"


def _strip60(m: int) -> int:
    while m % 60 == 0:
        m //= 60
    return m


def _recip_mantissa(m: int) -> int:
    a, b, c = factor_2_3_5(m)
    k = max((a + 1) // 2, b, c)
    return _strip60(60**k // m)


def standard_table() -> list[ReciprocalPair]:
    """The conventional school list: regular numbers 2 through 81 with
    their reciprocals.  (60 reads as the unit and is omitted.)"""
    pairs = []
    for n in range(2, 82):
        if factor_2_3_5(n) is None or n == 60:
            continue
        pairs.append(ReciprocalPair.from_T_mantissa(n))
    return pairs


def _standard_keys() -> frozenset[int]:
    return frozenset(min(p.T.mantissa, p.Tbar.mantissa)
                     for p in standard_table())


_NEIGHBOR_STEPS = [(2, (1, 0, 0)), (3, (0, 1, 0)), (5, (0, 0, 1))]


def _neighbors(m: int):
    for prime, unit in _NEIGHBOR_STEPS:
        yield _strip60(m * prime), unit, 1
        mm = m
        while mm % prime:
            mm *= 60
        yield _strip60(mm // prime), unit, -1


def link_to_standard(p: ReciprocalPair, max_steps: int = 32) -> LinkChain:
    """Minimal-step chain of simultaneous (x, 1/x) multiplications, x in
    {2, 3, 5}, from a standard-table pair to p.

    Ties at minimal length prefer the chain using the smaller primes
    (doubling over tripling over quintupling), then the lexicographically
    largest exponent triple, then the smallest start mantissa.
    """
    std = _standard_keys()

    def key(m: int) -> int:
        return min(m, _recip_mantissa(m))

    def chain_for(state: int, vec: tuple[int, int, int],
                  member: str) -> LinkChain:
        # state * 2^-vec == the walked member of p (floating)
        if member == "T":
            start_m, factor = state, tuple(-e for e in vec)
        else:
            start_m, factor = _recip_mantissa(state), vec
        return LinkChain(ReciprocalPair.from_T_mantissa(start_m), factor)

    if key(p.T.mantissa) in std:
        return LinkChain(p, (0, 0, 0))

    frontier = [(p.T.mantissa, (0, 0, 0), "T"),
                (p.Tbar.mantissa, (0, 0, 0), "Tbar")]
    seen = {key(p.T.mantissa)}
    for depth in range(1, max_steps + 1):
        nxt = []
        hits = []
        for state, vec, member in frontier:
            for nb, unit, sign in _neighbors(state):
                k = key(nb)
                if k in seen:
                    continue
                nvec = tuple(v + sign * u for v, u in zip(vec, unit))
                if k in std:
                    hits.append(chain_for(nb, nvec, member))
                else:
                    nxt.append((nb, nvec, member))
        if hits:
            return min(hits, key=lambda c: (
                tuple(-abs(e) for e in c.factor),
                tuple(-e for e in c.factor),
                c.start.T.mantissa))
        for state, _, _ in nxt:
            seen.add(key(state))
        frontier = nxt
    raise AssertionError("no chain within the termination bound")
