"""Exact binomial arithmetic, parity criteria, and the identity and
inequality checks used throughout the moment pipeline.

Everything here is a pure total function over arbitrary-precision
integers; the only non-rational comparisons (against pi, powers of 3/4)
go through the certified directed-rounding layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .rounding import Scope, certify_le, compare_exact


def binom(r: int, s: int) -> int:
    """C(r, s) with the zero convention: 0 whenever s is outside 0..r."""
    if r < 0:
        raise ValueError("upper index must be nonnegative")
    if s < 0 or s > r:
        return 0
    return math.comb(r, s)


def n_monomials(d: int, ell: int) -> int:
    """Number of degree-d monomials in ell+1 variables, C(d+ell, d)."""
    if d < 0 or ell < 0:
        raise ValueError("degree and dimension must be nonnegative")
    return math.comb(d + ell, d)


def digit_sum_base2(m: int) -> int:
    if m < 0:
        raise ValueError("digit sum defined for nonnegative integers")
    return m.bit_count()


def v2_binom(e: int, ell: int) -> int:
    """2-adic valuation of n_monomials(e, ell) via binary digit sums."""
    if e < 1 or ell < 1:
        raise ValueError("both arguments must be positive")
    return digit_sum_base2(e) + digit_sum_base2(ell) - digit_sum_base2(e + ell)


def is_N_even(e: int, ell: int) -> bool:
    """True iff n_monomials(e, ell) is even, i.e. iff e and ell share a
    binary 1-digit."""
    if e < 1 or ell < 1:
        raise ValueError("both arguments must be positive")
    return (e & ell) != 0


def c_odd_monomials(d: int, ell: int, j: int) -> int:
    """Number of degree-d monomials in ell+1 variables whose total degree
    in the first j variables is odd."""
    if d < 1:
        raise ValueError("degree must be positive")
    if not 1 <= j <= ell:
        raise ValueError("need 1 <= j <= ell")
    return sum(
        binom(k + j - 1, k) * binom(d - k + ell - j, d - k)
        for k in range(1, d + 1, 2)
    )


def check_monomial_partition(d: int, ell: int, j: int) -> bool:
    """Monomial count split by the degree landing in the first j
    variables: N(d, ell) = sum_k C(k+j-1, k) C(d-k+ell-j, d-k)."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if not 1 <= j <= ell:
        raise ValueError("need 1 <= j <= ell")
    total = sum(
        binom(k + j - 1, k) * binom(d - k + ell - j, d - k)
        for k in range(d + 1)
    )
    return total == n_monomials(d, ell)


def vandermonde_check(variant: str, params: tuple[int, ...]) -> bool:
    """Exact check of one of the three convolution identities.

    basic   (r1, r2, q >= 0):    C(r1+r2, q)      = sum_a C(r1,a) C(r2,q-a)
    shifted (r1, r2 >= 0, any q): C(r1+r2, r2-q)  = sum_a C(r1,a) C(r2,q+a)
    triple  (r1, r2, r3, q >= 0): C(r1+r2+r3, q)  = sum_{a,b} C(r1,a) C(r2,b) C(r3,q-a-b)
    """
    if variant == "basic":
        r1, r2, q = params
        if min(r1, r2, q) < 0:
            raise ValueError("basic variant needs nonnegative parameters")
        rhs = sum(binom(r1, a) * binom(r2, q - a) for a in range(r1 + 1))
        return binom(r1 + r2, q) == rhs
    if variant == "shifted":
        r1, r2, q = params
        if min(r1, r2) < 0:
            raise ValueError("shifted variant needs nonnegative r1, r2")
        rhs = sum(binom(r1, a) * binom(r2, q + a) for a in range(r1 + 1))
        return binom(r1 + r2, r2 - q) == rhs
    if variant == "triple":
        r1, r2, r3, q = params
        if min(r1, r2, r3, q) < 0:
            raise ValueError("triple variant needs nonnegative parameters")
        rhs = sum(
            binom(r1, a) * binom(r2, b) * binom(r3, q - a - b)
            for a in range(r1 + 1)
            for b in range(r2 + 1)
        )
        return binom(r1 + r2 + r3, q) == rhs
    raise ValueError(f"unknown variant {variant!r}")


@dataclass(frozen=True)
class BiasDatum:
    """How far the odd-monomial count sits from half the monomial count."""

    d: int
    ell: int
    j: int
    c: int
    bias: Fraction  # |1 - 2c/N|, exact

    def __post_init__(self):
        if not 1 <= self.j <= self.ell <= self.d:
            raise ValueError("need 1 <= j <= ell <= d")
        if not 0 <= self.c <= n_monomials(self.d, self.ell):
            raise ValueError("odd-monomial count out of range")
        if not 0 <= self.bias <= 1:
            raise ValueError("bias out of range")


def bias_bound_check(d: int, ell: int, j: int) -> tuple[BiasDatum, bool]:
    """Exact bias |1 - 2c/N| plus verification of its dyadic bound
    (1/2)^min{j, ell+1-j} and of the sign fact 0 <= N - 2c <= C(d+ell-j, d)."""
    if not 1 <= j <= ell <= d:
        raise ValueError("need 1 <= j <= ell <= d")
    big_n = n_monomials(d, ell)
    c = c_odd_monomials(d, ell, j)
    bias = Fraction(abs(big_n - 2 * c), big_n)
    datum = BiasDatum(d=d, ell=ell, j=j, c=c, bias=bias)
    bound = Fraction(1, 2 ** min(j, ell + 1 - j))
    ok = bias <= bound and 0 <= big_n - 2 * c <= binom(d + ell - j, d)
    return datum, ok


@dataclass(frozen=True)
class HypergeometricBound:
    """One instance of the binomial tail bound
    sum_j C(r,j) C(s,j) 2^{-j} <= (3/4)^{rs/(r+s)} C(r+s, r)."""

    r: int
    s: int
    lhs: Fraction
    rhs_low: Fraction  # certified lower bound on the right side
    ok: bool


def hypergeometric_bound_check(
    r: int, s: int, *, max_bits: int = 1 << 16
) -> HypergeometricBound:
    if r < 0 or s < 0:
        raise ValueError("need nonnegative r, s")
    lhs = sum(
        Fraction(binom(r, j) * binom(s, j), 2**j) for j in range(min(r, s) + 1)
    )
    scale = binom(r + s, r)
    mu = Fraction(r * s, r + s) if r + s > 0 else Fraction(0)
    if mu.denominator == 1:
        # rational right side: compare exactly, no rounding involved
        rhs = Fraction(3, 4) ** int(mu) * scale
        return HypergeometricBound(r, s, lhs, rhs, lhs <= rhs)

    def rhs_builder(sc: Scope):
        return sc.mul(sc.pow(sc.exact(Fraction(3, 4)), mu), sc.exact(scale))

    ok = certify_le(lhs, rhs_builder, max_bits=max_bits)
    rhs_low = rhs_builder(Scope(128)).bounds()[0]
    return HypergeometricBound(r, s, lhs, rhs_low, ok)


def stirling_inequality_check(m: int, *, max_bits: int = 1 << 16) -> bool:
    """Certified check of both central-binomial upper bounds:
    C(2m, m) <= 2^{2m} / sqrt(pi m) and C(m, floor(m/2)) <= 2^{m+1/2} / sqrt(pi m)."""
    if m < 1:
        raise ValueError("need m >= 1")

    def bound_even(sc: Scope):
        return sc.div(sc.exact(4**m), sc.sqrt(sc.mul(sc.pi(), sc.exact(m))))

    def bound_any(sc: Scope):
        halfpow = sc.sqrt(sc.exact(2 ** (2 * m + 1)))  # 2^{m+1/2}
        return sc.div(halfpow, sc.sqrt(sc.mul(sc.pi(), sc.exact(m))))

    ok_even = compare_exact(math.comb(2 * m, m), bound_even, max_bits=max_bits) < 0
    ok_any = compare_exact(math.comb(m, m // 2), bound_any, max_bits=max_bits) < 0
    return ok_even and ok_any


def stirling_ratio(m: int) -> float:
    """Empirical ratio C(2m, m) sqrt(pi m) / 2^{2m}; reported only, no
    constant is asserted for its 1 - O(1/m) behavior."""
    if m < 1:
        raise ValueError("need m >= 1")
    log_ratio = (
        math.lgamma(2 * m + 1)
        - 2 * math.lgamma(m + 1)
        + 0.5 * math.log(math.pi * m)
        - 2 * m * math.log(2)
    )
    return math.exp(log_ratio)
