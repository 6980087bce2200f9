"""Certified comparisons against irrational bounds.

Every real quantity is carried as an outward-rounded enclosure [lo, hi]
(mpfr endpoints computed under RoundDown/RoundUp). A comparison with an
exact rational only reports once the whole enclosure is on one side;
otherwise the working precision doubles up to a cap and then
PrecisionExhausted is raised. A True/False answer is therefore a proof,
never a float accident.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, NamedTuple, Union

import gmpy2

from .errors import PrecisionExhausted

DEFAULT_START_BITS = 64
DEFAULT_MAX_BITS = 1 << 16

ExactLike = Union[int, Fraction]


class Enclosure(NamedTuple):
    lo: "gmpy2.mpfr"
    hi: "gmpy2.mpfr"

    def bounds(self) -> tuple[Fraction, Fraction]:
        """Exact rational endpoints (mpfr values are dyadic)."""
        return _to_fraction(self.lo), _to_fraction(self.hi)


def _to_fraction(x) -> Fraction:
    if not gmpy2.is_finite(x):
        raise OverflowError("non-finite enclosure endpoint")
    q = gmpy2.mpq(x)
    return Fraction(int(q.numerator), int(q.denominator))


class Scope:
    """Builder for enclosures at a fixed working precision."""

    def __init__(self, bits: int):
        if bits < 2:
            raise ValueError("precision must be at least 2 bits")
        self.bits = bits
        self._down = gmpy2.context(precision=bits, round=gmpy2.RoundDown)
        self._up = gmpy2.context(precision=bits, round=gmpy2.RoundUp)

    def exact(self, value: ExactLike) -> Enclosure:
        q = gmpy2.mpq(Fraction(value))
        with self._down:
            lo = gmpy2.mpfr(q)
        with self._up:
            hi = gmpy2.mpfr(q)
        return Enclosure(lo, hi)

    def add(self, x: Enclosure, y: Enclosure) -> Enclosure:
        with self._down:
            lo = x.lo + y.lo
        with self._up:
            hi = x.hi + y.hi
        return Enclosure(lo, hi)

    def sub(self, x: Enclosure, y: Enclosure) -> Enclosure:
        with self._down:
            lo = x.lo - y.hi
        with self._up:
            hi = x.hi - y.lo
        return Enclosure(lo, hi)

    def mul(self, x: Enclosure, y: Enclosure) -> Enclosure:
        with self._down:
            lo = min(x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi)
        with self._up:
            hi = max(x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi)
        return Enclosure(lo, hi)

    def div(self, x: Enclosure, y: Enclosure) -> Enclosure:
        # sign-definite divisor only; that is all the callers need
        if not (y.lo > 0 or y.hi < 0):
            raise ZeroDivisionError("divisor enclosure touches zero")
        with self._down:
            lo = min(x.lo / y.lo, x.lo / y.hi, x.hi / y.lo, x.hi / y.hi)
        with self._up:
            hi = max(x.lo / y.lo, x.lo / y.hi, x.hi / y.lo, x.hi / y.hi)
        return Enclosure(lo, hi)

    def sqrt(self, x: Enclosure) -> Enclosure:
        if x.lo < 0:
            raise ValueError("sqrt of a possibly negative enclosure")
        with self._down:
            lo = gmpy2.sqrt(x.lo)
        with self._up:
            hi = gmpy2.sqrt(x.hi)
        return Enclosure(lo, hi)

    def log(self, x: Enclosure) -> Enclosure:
        if x.lo <= 0:
            raise ValueError("log of a possibly nonpositive enclosure")
        with self._down:
            lo = gmpy2.log(x.lo)
        with self._up:
            hi = gmpy2.log(x.hi)
        return Enclosure(lo, hi)

    def exp(self, x: Enclosure) -> Enclosure:
        with self._down:
            lo = gmpy2.exp(x.lo)
        with self._up:
            hi = gmpy2.exp(x.hi)
        return Enclosure(lo, hi)

    def pi(self) -> Enclosure:
        with self._down:
            lo = gmpy2.const_pi()
        with self._up:
            hi = gmpy2.const_pi()
        return Enclosure(lo, hi)

    def pow(self, base: Enclosure, exponent: ExactLike) -> Enclosure:
        """base**exponent for positive base and exact rational exponent."""
        return self.exp(self.mul(self.exact(exponent), self.log(base)))


Builder = Callable[[Scope], Enclosure]


def compare_exact(
    value: ExactLike,
    builder: Builder,
    *,
    start_bits: int = DEFAULT_START_BITS,
    max_bits: int = DEFAULT_MAX_BITS,
) -> int:
    """Certified three-way comparison of an exact rational with a real.

    Returns -1 if value < real, +1 if value > real, both guaranteed.
    Raises PrecisionExhausted if the enclosure still straddles the value
    at max_bits (in particular whenever value equals the real exactly).
    """
    value = Fraction(value)
    bits = start_bits
    while True:
        lo, hi = builder(Scope(bits)).bounds()
        if value < lo:
            return -1
        if value > hi:
            return 1
        if bits >= max_bits:
            raise PrecisionExhausted(
                f"comparison indeterminate at {bits} bits "
                f"(value {value} inside [{lo}, {hi}])"
            )
        bits = min(2 * bits, max_bits)


def certify_le(
    value: ExactLike,
    builder: Builder,
    *,
    start_bits: int = DEFAULT_START_BITS,
    max_bits: int = DEFAULT_MAX_BITS,
) -> bool:
    """True iff value <= real, certified (strict on the True side)."""
    return compare_exact(value, builder, start_bits=start_bits, max_bits=max_bits) < 0


def certify_ge(
    value: ExactLike,
    builder: Builder,
    *,
    start_bits: int = DEFAULT_START_BITS,
    max_bits: int = DEFAULT_MAX_BITS,
) -> bool:
    """True iff value >= real, certified."""
    return compare_exact(value, builder, start_bits=start_bits, max_bits=max_bits) > 0


def certified_floor(
    builder: Builder,
    *,
    start_bits: int = DEFAULT_START_BITS,
    max_bits: int = DEFAULT_MAX_BITS,
) -> int:
    """Floor of a real, certified by enclosure agreement."""
    bits = start_bits
    while True:
        lo, hi = builder(Scope(bits)).bounds()
        flo = lo.numerator // lo.denominator
        fhi = hi.numerator // hi.denominator
        if flo == fhi:
            return flo
        if bits >= max_bits:
            raise PrecisionExhausted(
                f"floor indeterminate at {bits} bits (enclosure [{lo}, {hi}])"
            )
        bits = min(2 * bits, max_bits)
