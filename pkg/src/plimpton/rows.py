"""From generating parameters to tablet rows.

Two routes produce the same rows: a reciprocal pair (T, Tbar) via
X = (T - Tbar)/2, Y = (T + Tbar)/2, or an integer pair (P, Q) via the
classical triple formulas.  The coprime short side and diagonal fall out of
casting common regular factors out of (X, Y).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .pairs import ReciprocalPair
from .sexagesimal import (
    ONE,
    RegularNumber,
    SexValue,
    SexagesimalError,
    add,
    factor_2_3_5,
    halve,
    is_regular,
    mul,
    reciprocal,
    regular_from_int,
    sub,
)


@dataclass(frozen=True)
class PQPair:
    p: int
    q: int

    def __post_init__(self) -> None:
        if not self.p > self.q >= 1:
            raise ValueError("require P > Q >= 1")


@dataclass(frozen=True)
class XYPair:
    """Fixed-reading pair with Y**2 - X**2 = 1 exactly."""

    x: SexValue
    y: SexValue


@dataclass(frozen=True)
class RowCandidate:
    n: int
    pair: ReciprocalPair
    xy: XYPair
    s: int
    d: int
    a: SexValue
    reduction_factor: int
    reduced: bool = True  # False when the scribal small-number form is kept


def xy_from_pair(p: ReciprocalPair) -> XYPair:
    """X = (T - Tbar)/2, Y = (T + Tbar)/2, exact in the fixed reading."""
    t, tbar = p.T.value, p.Tbar.value
    if tbar.fraction >= t.fraction:
        raise SexagesimalError("pair is not in T > Tbar orientation")
    return XYPair(halve(sub(t, tbar)), halve(add(t, tbar)))


def regular_part(n: int) -> int:
    """Largest 60-smooth divisor."""
    out = 1
    for p in (2, 3, 5):
        while n % p == 0:
            n //= p
            out *= p
    return out


def reduce_factorization(xy: XYPair) -> tuple[int, int, int]:
    """Cast common regular factors out of (X, Y).

    Returns (S, D, factor): the mantissas at a common exponent divided by
    the largest regular divisor of their gcd.  Any common factor of X and Y
    divides both T and Tbar and is therefore regular, so S and D end up
    coprime.
    """
    if xy.x.mantissa == 0:
        raise SexagesimalError("degenerate isosceles pair: X = 0")
    e = min(xy.x.exponent, xy.y.exponent)
    mx = xy.x.mantissa * 60 ** (xy.x.exponent - e)
    my = xy.y.mantissa * 60 ** (xy.y.exponent - e)
    factor = regular_part(gcd(mx, my))
    return mx // factor, my // factor, factor


def column_A(xy: XYPair) -> tuple[SexValue, SexValue]:
    """A = Y**2 and the check value X**2 = A - 1."""
    return mul(xy.y, xy.y), mul(xy.x, xy.x)


def pq_to_triple(pq: PQPair) -> tuple[int, int, int]:
    """(L, S, D) = (2PQ, P**2 - Q**2, P**2 + Q**2)."""
    p, q = pq.p, pq.q
    return 2 * p * q, p * p - q * q, p * p + q * q


def pair_from_pq(pq: PQPair) -> ReciprocalPair:
    """T = P * recip(Q), Tbar = Q * recip(P); floating product is 1."""
    for n in (pq.p, pq.q):
        if factor_2_3_5(n) is None:
            raise SexagesimalError(f"{n} is not regular")
    t = mul(SexValue(pq.p), reciprocal(regular_from_int(pq.q)).value)
    return ReciprocalPair.from_T_mantissa(t.mantissa)


# A scribe working in two-place cells has no reason to reduce numbers that
# already fit; row 11 keeps (45, 1 15).  This is a labeled reconstruction,
# not an attested rule.
_SCRIBAL_PLACE_LIMIT = 60**2


def build_row(p: ReciprocalPair, n: int = 0,
              reduction: str = "full") -> RowCandidate:
    """Compose the X/Y step, the factor reduction and column A.

    ``reduction="tablet_faithful"`` keeps the unreduced mantissas whenever
    both already fit in two places; ``"full"`` always reduces.
    """
    if reduction not in ("full", "tablet_faithful"):
        raise ValueError(f"unknown reduction mode {reduction!r}")
    xy = xy_from_pair(p)
    s, d, factor = reduce_factorization(xy)
    if reduction == "tablet_faithful":
        e = min(xy.x.exponent, xy.y.exponent)
        mx = xy.x.mantissa * 60 ** (xy.x.exponent - e)
        my = xy.y.mantissa * 60 ** (xy.y.exponent - e)
        if mx < _SCRIBAL_PLACE_LIMIT and my < _SCRIBAL_PLACE_LIMIT:
            a, _ = column_A(xy)
            return RowCandidate(n, p, xy, mx, my, a, 1, reduced=False)
    a, asq = column_A(xy)
    assert add(asq, ONE) == a
    return RowCandidate(n, p, xy, s, d, a, factor)
