"""Enumeration of regular numbers and reciprocal pairs.

The central selection rule: a reciprocal pair belongs to the table when both
members, padded with trailing zeros to four sexagesimal places, are divisible
by 10.  The older four-place and exponent-based exclusion rules are kept as
alternative criteria so the competing selections can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .sexagesimal import (
    RegularNumber,
    SexValue,
    SexagesimalError,
    parse_sex,
    place_length,
    reciprocal,
    regular_from_int,
    render_sex,
)


@dataclass(frozen=True)
class ReciprocalPair:
    """Ordered (T, Tbar) with exact fixed product 1.

    T carries its units place at the first digit; Tbar is read one
    sexagesimal place further right, so T_fixed * Tbar_fixed == 1 exactly.
    """

    T: RegularNumber
    Tbar: RegularNumber

    @classmethod
    def from_T_mantissa(cls, mantissa: int) -> "ReciprocalPair":
        while mantissa and mantissa % 60 == 0:
            mantissa //= 60
        t = regular_from_int(mantissa)
        places = place_length(t.value)
        t = regular_from_int(mantissa, exponent=-(places - 1))
        tbar = reciprocal(t)
        k = max((t.alpha + 1) // 2, t.beta, t.gamma)
        tbar = regular_from_int(tbar.mantissa, exponent=places - 1 - k)
        return cls(t, tbar)

    @property
    def t_fraction(self) -> Fraction:
        return self.T.value.fraction

    def mirror(self) -> "ReciprocalPair":
        """The pair with the roles of the two mantissas swapped."""
        return ReciprocalPair.from_T_mantissa(self.Tbar.mantissa)

    def __str__(self) -> str:
        return f"({render_sex(self.T.value)}, {render_sex(self.Tbar.value)})"


@dataclass(frozen=True)
class PairCriterion:
    """Membership rule plus an inclusive fixed-reading range for T.

    kind is one of "mult10", "bruins", "places_only".
    """

    kind: str
    lower: SexValue
    upper: SexValue
    places: int = 4

    def __post_init__(self) -> None:
        if self.kind not in ("mult10", "bruins", "places_only"):
            raise ValueError(f"unknown criterion kind {self.kind!r}")
        if self.lower.fraction > self.upper.fraction:
            raise ValueError("empty range: lower bound exceeds upper bound")


def plimpton_range() -> tuple[SexValue, SexValue]:
    """The fixed-reading T range covering the fifteen tablet rows."""
    return parse_sex("1;48", "fixed"), parse_sex("2;24", "fixed")


def mult10_criterion(r: RegularNumber) -> bool:
    """At most four places, and a four-place value ends in a multiple of 10.

    Equivalently: the mantissa padded with trailing zero digits to exactly
    four places is divisible by 10 (see :func:`padded_multiple_of_10`).
    """
    digits = r.value.digits()
    if len(digits) > 4:
        return False
    return len(digits) < 4 or digits[-1] % 10 == 0


def padded_multiple_of_10(r: RegularNumber) -> bool:
    """Arithmetic form of the rule; defined only for values of <= 4 places."""
    places = place_length(r.value)
    if places > 4:
        raise SexagesimalError("padded four-place reading needs <= 4 places")
    return (r.mantissa * 60 ** (4 - places)) % 10 == 0


def bruins_excluded(p: ReciprocalPair, conjunctive: bool = True) -> bool:
    """Exclusion by exponent counts: one member has alpha+beta+gamma > 13
    while the other has gamma > 3.

    The conjunctive reading reproduces exactly six exclusions in the tablet
    range; ``conjunctive=False`` gives the disjunctive variant for
    diagnostics.
    """

    def one_sided(a: RegularNumber, b: RegularNumber) -> bool:
        heavy = sum(a.triple) > 13
        deep = b.gamma > 3
        return (heavy and deep) if conjunctive else (heavy or deep)

    return one_sided(p.T, p.Tbar) or one_sided(p.Tbar, p.T)


def regular_mantissas(max_places: int) -> list[int]:
    """All canonical regular mantissas of at most max_places digits,
    ascending.  Exponent-sweep bounds derive from 60**max_places."""
    if max_places < 1:
        raise ValueError("max_places must be >= 1")
    limit = 60**max_places
    out = []
    p2 = 1
    while p2 < limit:
        p23 = p2
        while p23 < limit:
            p235 = p23
            while p235 < limit:
                if p235 % 60:
                    out.append(p235)
                p235 *= 5
            p23 *= 3
        p2 *= 2
    out.sort()
    return out


def enumerate_regulars(max_places: int) -> list[RegularNumber]:
    return [regular_from_int(m) for m in regular_mantissas(max_places)]


def _passes(c: PairCriterion, pair: ReciprocalPair) -> bool:
    if c.kind == "places_only":
        return (place_length(pair.T.value) <= c.places
                and place_length(pair.Tbar.value) <= c.places)
    if c.kind == "mult10":
        return mult10_criterion(pair.T) and mult10_criterion(pair.Tbar)
    # bruins: four-place pairs minus the exponent-rule exclusions
    if (place_length(pair.T.value) > 4
            or place_length(pair.Tbar.value) > 4):
        return False
    return not bruins_excluded(pair)


def enumerate_pairs(c: PairCriterion) -> list[ReciprocalPair]:
    """All pairs whose T lies in [lower, upper] (fixed reading, both ends
    inclusive) and that pass the criterion, sorted by decreasing T."""
    lo, hi = c.lower.fraction, c.upper.fraction
    pairs = []
    for m in regular_mantissas(c.places):
        pair = ReciprocalPair.from_T_mantissa(m)
        if lo <= pair.t_fraction <= hi and _passes(c, pair):
            pairs.append(pair)
    pairs.sort(key=lambda p: p.t_fraction, reverse=True)
    return pairs


def full_mult10_list() -> list[ReciprocalPair]:
    """Every pair with both members passing the multiple-of-10 rule, over
    the whole floating range, by decreasing T.

    Both orientations of each pair appear (T and Tbar trade places); the
    degenerate self-reciprocal 1 is left out since it generates no triple.
    """
    pairs = []
    for m in regular_mantissas(4):
        if m == 1:
            continue
        pair = ReciprocalPair.from_T_mantissa(m)
        if mult10_criterion(pair.T) and mult10_criterion(pair.Tbar):
            pairs.append(pair)
    pairs.sort(key=lambda p: p.t_fraction, reverse=True)
    return pairs


@dataclass(frozen=True)
class Correction:
    """A printed source value that disagrees with the computed one."""

    table: str
    label: str
    column: str
    printed: str
    computed: str

    def __str__(self) -> str:
        return (f"[{self.table}] row {self.label} {self.column}: "
                f"printed {self.printed!r}, computed {self.computed}")


# The six pairs present in a plain four-place table of the tablet's range
# but absent from the tablet, keyed by the interpolated row labels used in
# Robson's listing.  Digit strings are as printed; row 8a's second member
# is misprinted in the source (28 06 40 is not regular) and the computed
# value is 28 26 40.
EXCLUDED_PAIRS_PRINTED = [
    ("4a", "2 18 14 24", "26 02 30"),
    ("6a", "2 10 12 30", "27 38 52 48"),
    ("8a", "2 06 33 45", "28 06 40"),
    ("9a", "2 02 52 48", "29 17 48 45"),
    ("11a", "1 57 11 15", "30 43 12"),
    ("12a", "1 53 46 40", "31 38 26 15"),
]


def excluded_pairs() -> list[tuple[str, ReciprocalPair]]:
    """The six excluded pairs, computed, with their interpolation labels."""
    out = []
    for label, t_text, _ in EXCLUDED_PAIRS_PRINTED:
        m = parse_sex(t_text).mantissa
        out.append((label, ReciprocalPair.from_T_mantissa(m)))
    return out


def excluded_pair_corrections() -> list[Correction]:
    out = []
    for (label, t_text, tbar_text), (_, pair) in zip(
            EXCLUDED_PAIRS_PRINTED, excluded_pairs()):
        computed_t = render_sex(pair.T.value)
        computed_tbar = render_sex(pair.Tbar.value)
        if computed_t != t_text:
            out.append(Correction("excluded-pairs", label, "T",
                                  t_text, computed_t))
        if computed_tbar != tbar_text:
            out.append(Correction("excluded-pairs", label, "Tbar",
                                  tbar_text, computed_tbar))
    return out
