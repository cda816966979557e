"""Exact arithmetic on terminating sexagesimal (base-60) numbers.

A value is a natural mantissa times a power of 60.  Two readings coexist:

* floating: the exponent is ignored, numbers are defined up to powers of 60
  (Old Babylonian notation has no units marker);
* fixed: the exponent places the units digit, so sums, differences and
  square roots are meaningful.

Canonical form strips factors of 60 from the mantissa into the exponent,
which makes floating equality a plain mantissa comparison.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt


class SexagesimalError(ValueError):
    """Malformed digit string or an operation leaving the domain."""


def _split_base60(mantissa: int, exponent: int) -> tuple[int, int]:
    if mantissa == 0:
        return 0, 0
    while mantissa % 60 == 0:
        mantissa //= 60
        exponent += 1
    return mantissa, exponent


@dataclass(frozen=True)
class SexValue:
    """A terminating sexagesimal number, mantissa * 60**exponent.

    Instances are always canonical: mantissa 0 implies exponent 0, and a
    nonzero mantissa is never divisible by 60.  Equality of dataclass fields
    is therefore fixed-reading equality; use :meth:`floating_eq` for the
    floating reading.
    """

    mantissa: int
    exponent: int = 0

    def __post_init__(self) -> None:
        if self.mantissa < 0:
            raise SexagesimalError("negative values are out of domain")
        m, e = _split_base60(self.mantissa, self.exponent)
        object.__setattr__(self, "mantissa", m)
        object.__setattr__(self, "exponent", e)

    @property
    def fraction(self) -> Fraction:
        """Fixed-reading value as an exact rational."""
        if self.exponent >= 0:
            return Fraction(self.mantissa * 60**self.exponent)
        return Fraction(self.mantissa, 60**-self.exponent)

    def digits(self) -> list[int]:
        """Base-60 digits of the mantissa, most significant first."""
        if self.mantissa == 0:
            return [0]
        out = []
        m = self.mantissa
        while m:
            out.append(m % 60)
            m //= 60
        return out[::-1]

    def floating_eq(self, other: "SexValue") -> bool:
        return self.mantissa == other.mantissa

    def __lt__(self, other: "SexValue") -> bool:
        return self.fraction < other.fraction

    def __le__(self, other: "SexValue") -> bool:
        return self.fraction <= other.fraction

    def __gt__(self, other: "SexValue") -> bool:
        return self.fraction > other.fraction

    def __ge__(self, other: "SexValue") -> bool:
        return self.fraction >= other.fraction

    def __str__(self) -> str:
        return render_sex(self)


ZERO = SexValue(0)
ONE = SexValue(1)


def from_fraction(value: Fraction | int) -> SexValue:
    """Exact conversion; the denominator must be 60-smooth."""
    f = Fraction(value)
    if f < 0:
        raise SexagesimalError("negative values are out of domain")
    k = 0
    num, den = f.numerator, f.denominator
    while num % den:
        num *= 60
        k += 1
        if k > 64:
            raise SexagesimalError(f"{f} has no terminating base-60 form")
    return SexValue(num // den, -k)


_TOKEN_SEP = re.compile(r"[ :]")


def _parse_digits(text: str) -> list[int]:
    if not text:
        raise SexagesimalError("empty digit string")
    digits = []
    for tok in _TOKEN_SEP.split(text):
        if not tok.isdigit():
            raise SexagesimalError(f"bad digit token {tok!r}")
        d = int(tok)
        if d >= 60:
            raise SexagesimalError(f"digit {d} out of range 0..59")
        digits.append(d)
    return digits


def parse_sex(text: str, mode: str = "floating") -> SexValue:
    """Parse space- or colon-separated base-60 digits.

    In fixed mode an optional ";" marks the units place; with no marker the
    units place is the first digit.  Floating mode strips trailing zero
    digits into the exponent.
    """
    text = text.strip()
    if not text:
        raise SexagesimalError("empty input")
    if mode == "floating":
        if ";" in text:
            raise SexagesimalError("units marker ';' is a fixed-mode notation")
        digits = _parse_digits(text)
        frac_places = 0
    elif mode == "fixed":
        if text.count(";") > 1:
            raise SexagesimalError("multiple ';' markers")
        if ";" in text:
            int_part, frac_part = text.split(";")
            int_digits = _parse_digits(int_part.strip())
            # a trailing ";" marks an integer whose units sit at the last digit
            frac_digits = _parse_digits(frac_part.strip()) if frac_part.strip() else []
            digits = int_digits + frac_digits
            frac_places = len(frac_digits)
        else:
            digits = _parse_digits(text)
            frac_places = len(digits) - 1
    else:
        raise ValueError(f"unknown mode {mode!r}")
    mantissa = 0
    for d in digits:
        mantissa = mantissa * 60 + d
    return SexValue(mantissa, -frac_places)


def _format_digits(digits: list[int]) -> str:
    return " ".join(str(d) if i == 0 else f"{d:02d}" for i, d in enumerate(digits))


def render_sex(v: SexValue, mode: str = "floating", pad_to: int | None = None) -> str:
    """Render to the canonical digit-string format.

    The leading digit is unpadded, interior digits are two characters wide.
    ``pad_to`` appends trailing zero places (floating mode only), giving the
    padded n-place reading.  Round-trips with :func:`parse_sex`.
    """
    if mode == "floating":
        digits = v.digits()
        if pad_to is not None:
            if pad_to < len(digits):
                raise SexagesimalError(
                    f"pad_to {pad_to} is smaller than natural length {len(digits)}"
                )
            digits = digits + [0] * (pad_to - len(digits))
        return _format_digits(digits)
    if mode != "fixed":
        raise ValueError(f"unknown mode {mode!r}")
    if pad_to is not None:
        raise SexagesimalError("pad_to applies to the floating rendering only")
    digits = v.digits()
    high = len(digits) - 1 + v.exponent  # place of the leading digit
    if v.exponent >= 0:
        digits = digits + [0] * v.exponent
        return _format_digits(digits)
    int_places = max(high + 1, 1)
    padded = [0] * max(0, int_places - (high + 1)) + digits
    int_digits, frac_digits = padded[:int_places], padded[int_places:]
    text = _format_digits(int_digits)
    if frac_digits:
        text += ";" + " ".join(f"{d:02d}" if i or int_digits else str(d)
                               for i, d in enumerate(frac_digits))
    return text


def mul(a: SexValue, b: SexValue) -> SexValue:
    return SexValue(a.mantissa * b.mantissa, a.exponent + b.exponent)


def _aligned(a: SexValue, b: SexValue) -> tuple[int, int, int]:
    e = min(a.exponent, b.exponent)
    return a.mantissa * 60 ** (a.exponent - e), b.mantissa * 60 ** (b.exponent - e), e


def add(a: SexValue, b: SexValue) -> SexValue:
    ma, mb, e = _aligned(a, b)
    return SexValue(ma + mb, e)


def sub(a: SexValue, b: SexValue) -> SexValue:
    ma, mb, e = _aligned(a, b)
    if ma < mb:
        raise SexagesimalError("subtraction underflow")
    return SexValue(ma - mb, e)


_HALF = SexValue(30, -1)


def halve(a: SexValue) -> SexValue:
    """Exact halving; 1/2 terminates in base 60."""
    return mul(a, _HALF)


@dataclass(frozen=True)
class RegularNumber:
    """A SexValue whose canonical mantissa is 2**alpha * 3**beta * 5**gamma."""

    value: SexValue
    alpha: int
    beta: int
    gamma: int

    @property
    def mantissa(self) -> int:
        return self.value.mantissa

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.alpha, self.beta, self.gamma)


def factor_2_3_5(n: int) -> tuple[int, int, int] | None:
    """Exponent triple of n when n is 60-smooth, else None."""
    if n <= 0:
        return None
    exps = []
    for p in (2, 3, 5):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        exps.append(e)
    return tuple(exps) if n == 1 else None


def is_regular(v: SexValue) -> RegularNumber | None:
    """The exponent triple of the canonical mantissa, or None if a prime
    factor other than 2, 3, 5 divides it."""
    if v.mantissa <= 0:
        raise SexagesimalError("regularity is defined for positive values")
    triple = factor_2_3_5(v.mantissa)
    if triple is None:
        return None
    return RegularNumber(v, *triple)


def regular_from_int(n: int, exponent: int = 0) -> RegularNumber:
    r = is_regular(SexValue(n, exponent))
    if r is None:
        raise SexagesimalError(f"{n} is not regular")
    return r


def reciprocal(r: RegularNumber) -> RegularNumber:
    """The unique regular s with floating product r*s = 1.

    The mantissa of s is 60**k / mantissa(r) for the smallest k making the
    quotient integral: k = max(ceil(alpha/2), beta, gamma).
    """
    k = max((r.alpha + 1) // 2, r.beta, r.gamma)
    m = 60**k // r.mantissa
    return regular_from_int(m)


def place_length(v: SexValue) -> int:
    """Number of base-60 digits of the canonical mantissa."""
    if v.mantissa <= 0:
        raise SexagesimalError("place length is defined for positive values")
    return len(v.digits())


def sqrt_exact(v: SexValue) -> SexValue | None:
    """Exact square root in the fixed reading, or None.

    Odd exponents are compensated by one mantissa shift; the value is a
    perfect square iff the shifted mantissa is.
    """
    if v.mantissa == 0:
        return ZERO
    m, e = v.mantissa, v.exponent
    if e % 2:
        m *= 60
        e -= 1
    root = isqrt(m)
    if root * root != m:
        return None
    return SexValue(root, e // 2)


# Quadratic-irrational bounds offset + sqrt(radicand), compared exactly by
# integer squaring; no approximation anywhere.
SQRT2 = (0, 2)
SQRT3 = (0, 3)
SQRT2_MINUS_1 = (-1, 2)
ONE_PLUS_SQRT2 = (1, 2)

QUADRATIC_BOUNDS = {
    "sqrt2": SQRT2,
    "sqrt3": SQRT3,
    "sqrt2-1": SQRT2_MINUS_1,
    "1+sqrt2": ONE_PLUS_SQRT2,
}


def cmp_quadratic(v: SexValue, bound: tuple[int, int] | str) -> int:
    """Compare the fixed value of v against offset + sqrt(radicand).

    Returns -1, 0 or 1.  v < a + sqrt(b)  iff  v - a <= 0 or (v - a)**2 < b.
    """
    if isinstance(bound, str):
        bound = QUADRATIC_BOUNDS[bound]
    offset, radicand = bound
    d = v.fraction - offset
    if d <= 0:
        return -1
    d2 = d * d
    if d2 < radicand:
        return -1
    if d2 == radicand:
        return 0
    return 1
