"""Algebra of linear-recurrence frequency sequences.

For terms a_k = c_1 L_1**k + ... + c_d L_d**k whose L_j are the roots of
an irreducible integer polynomial P with a dominant real root eta > 1,
the cancellation pattern of large-index tuples depends only on the
offsets of the indices from their minimum and on the signs: a subset
cancels exactly when P divides the corresponding power sum of z.  That
reduces tail behavior to a finite sweep over offset patterns and makes
the per-unit growth of 2**m * kappa_m computable without touching any
concrete term.

Everything here works with coefficient tuples low-to-high, so z**2-z-1
is (-1, -1, 1).  Reductions are exact over the rationals; numeric root
finding appears only in the dominant-root diagnostic.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial, isfinite, lcm
from typing import Sequence

import numpy as np

from .errors import RootFindingFailed, TooFewPoints, TooLarge, ZeroModulus
from .multiplicity import MAX_LATTICE_SIZE, mult_of_values
from .parallel import map_ordered

Poly = tuple[int, ...]

MAX_PATTERN_SWEEP = 50_000_000  # offset patterns times sign vectors
_RATIONAL_ROOT_SCAN_LIMIT = 10**12


@dataclass(frozen=True)
class OffsetPattern:
    """Offsets of a tuple's indices from their minimum, plus signs.

    The minimum offset is 0 by construction; repeats are allowed and
    mean repeated indices.
    """

    offsets: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.offsets) != len(self.signs):
            raise ValueError("offsets and signs must have equal length")
        if not self.offsets:
            raise ValueError("pattern must have at least one entry")
        if min(self.offsets) != 0:
            raise ValueError("smallest offset must be 0")
        if any(o < 0 for o in self.offsets):
            raise ValueError("offsets must be nonnegative")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    @property
    def order(self) -> int:
        return len(self.offsets)

    def gap(self) -> int:
        """Largest difference between consecutive sorted offsets."""
        ordered = sorted(self.offsets)
        return max((b - a for a, b in zip(ordered, ordered[1:])), default=0)


@dataclass(frozen=True)
class AffineFit:
    """Detected eventual law 2**-m * (w*n + b) for n >= n1."""

    w: int
    b: int
    n1: int
    valid: bool


def _strip(coeffs: Sequence[int | Fraction]) -> list[Fraction]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_reduce_mod(q: Sequence[int | Fraction], p: Sequence[int | Fraction]) -> tuple[Fraction, ...]:
    """Remainder of q on division by p over the rationals.

    Coefficients are low-to-high; the result is trimmed, so divisibility
    is ``poly_reduce_mod(q, p) == ()``.
    """
    divisor = _strip(p)
    if not divisor:
        raise ZeroModulus("reduction modulo the zero polynomial")
    rem = _strip(q)
    d = len(divisor) - 1
    lead = divisor[-1]
    while len(rem) - 1 >= d and rem:
        shift = len(rem) - 1 - d
        factor = rem[-1] / lead
        for i in range(d + 1):
            rem[shift + i] -= factor * divisor[i]
        while rem and rem[-1] == 0:
            rem.pop()
    return tuple(rem)


def _divisors(value: int) -> list[int]:
    value = abs(value)
    if value > _RATIONAL_ROOT_SCAN_LIMIT:
        raise TooLarge(f"rational-root scan refused for |coefficient| = {value}")
    out = []
    i = 1
    while i * i <= value:
        if value % i == 0:
            out.append(i)
            if i != value // i:
                out.append(value // i)
        i += 1
    return sorted(out)


def _poly_eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def rational_roots(p: Sequence[int]) -> list[Fraction]:
    """All rational roots of an integer polynomial, by the p/q test."""
    coeffs = _strip(p)
    if not coeffs:
        raise ZeroModulus("rational roots of the zero polynomial")
    roots: list[Fraction] = []
    low = 0
    while coeffs[low] == 0:
        low += 1
    if low:
        roots.append(Fraction(0))
        coeffs = coeffs[low:]
    if len(coeffs) <= 1:
        return roots
    for num in _divisors(int(coeffs[0])):
        for den in _divisors(int(coeffs[-1])):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in roots and _poly_eval(coeffs, cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def _validate_pattern_modulus(p: Sequence[int]) -> Poly:
    coeffs = _strip(p)
    if not coeffs:
        raise ZeroModulus("zero polynomial")
    if len(coeffs) == 1:
        raise ValueError("modulus must have degree >= 1")
    return tuple(int(c) for c in coeffs)


def eta_relation_holds(pattern: OffsetPattern, p: Sequence[int]) -> bool:
    """Whether the signed power sum of the dominant root vanishes.

    For irreducible p this holds exactly when p divides
    sum_j sign_j * z**offset_j, by conjugating the root relation through
    the Galois action.  Irreducibility is the caller's assertion; use
    ``dominant_root_check`` to flag rational factors.
    """
    modulus = _validate_pattern_modulus(p)
    coeffs = [0] * (max(pattern.offsets) + 1)
    for off, sign in zip(pattern.offsets, pattern.signs):
        coeffs[off] += sign
    return poly_reduce_mod(coeffs, modulus) == ()


@lru_cache(maxsize=None)
def _encoded_powers(p: Poly, max_offset: int) -> tuple[int, ...]:
    """Injective integer encodings of z**0 .. z**max_offset reduced mod p.

    Each reduced power is a rational vector of length deg(p); after
    clearing denominators the vectors are packed into single integers in
    a balanced base large enough that any signed sum of up to
    MAX_LATTICE_SIZE encodings is zero exactly when the vector sum is.
    """
    d = len(p) - 1
    lead = Fraction(p[-1])
    cur = [Fraction(0)] * d
    cur[0] = Fraction(1)
    vectors = [tuple(cur)]
    for _ in range(max_offset):
        shifted = [Fraction(0)] + cur
        overflow = shifted[d]
        if overflow:
            factor = overflow / lead
            shifted = [shifted[i] - factor * p[i] for i in range(d)]
        else:
            shifted = shifted[:d]
        cur = shifted
        vectors.append(tuple(cur))
    scale = 1
    for vec in vectors:
        for x in vec:
            scale = lcm(scale, x.denominator)
    ints = [[int(x * scale) for x in vec] for vec in vectors]
    largest = max((abs(x) for vec in ints for x in vec), default=0) or 1
    base = 2 * MAX_LATTICE_SIZE * largest + 1
    encoded = []
    for vec in ints:
        packed = 0
        weight = 1
        for x in vec:
            packed += x * weight
            weight *= base
        encoded.append(packed)
    return tuple(encoded)


def pattern_multiplicity(pattern: OffsetPattern, p: Sequence[int]) -> int:
    """Multiplicity of a pattern with cancellation read off the modulus.

    Same Moebius calculus as for concrete tuples, but a subset counts as
    zero-sum when p divides its signed power sum.  The packed encodings
    make the subset sums single integers, so the tuple machinery is
    reused unchanged.
    """
    if pattern.order > MAX_LATTICE_SIZE:
        raise TooLarge(f"pattern order {pattern.order} exceeds {MAX_LATTICE_SIZE}")
    modulus = _validate_pattern_modulus(p)
    encoded = _encoded_powers(modulus, max(pattern.offsets))
    values = [sign * encoded[off] for off, sign in zip(pattern.offsets, pattern.signs)]
    return mult_of_values(values)


def _slope_contribution(gaps: tuple[int, ...], m: int, encoded: Sequence[int], fact: Sequence[int]) -> int:
    offsets = [0]
    for g in gaps:
        offsets.append(offsets[-1] + g)
    groups: list[tuple[int, int]] = []
    i = 0
    while i < m:
        j = i
        while j < m and offsets[j] == offsets[i]:
            j += 1
        groups.append((offsets[i], j - i))
        i = j
    total = 0
    for split in product(*(range(mu + 1) for _, mu in groups)):
        signed_total = 0
        for (off, mu), plus in zip(groups, split):
            signed_total += (2 * plus - mu) * encoded[off]
        if signed_total:
            continue
        values: list[int] = []
        weight = fact[m]
        for (off, mu), plus in zip(groups, split):
            values.extend([encoded[off]] * plus)
            values.extend([-encoded[off]] * (mu - plus))
            weight //= fact[plus] * fact[mu - plus]
        mult = mult_of_values(values)
        if mult:
            total += weight * mult
    return total


def structural_slope(m: int, p: Sequence[int], gap_bound: int, threads: int = 1) -> int:
    """Per-unit growth w of 2**m * kappa_m for the sequence of modulus p.

    Sums pattern multiplicities over all offset patterns whose sorted
    consecutive gaps stay within ``gap_bound``, weighted by the number
    of index orderings.  Every pattern with a nonzero multiplicity
    contributes one tuple per admissible base index, hence w per unit n.
    The bound is a working cutoff, not a proven one: recompute at twice
    the bound and compare (``gap_bound_stable`` in the CLI).
    """
    if m < 1:
        raise ValueError("order must be >= 1")
    if gap_bound < 0:
        raise ValueError("gap bound must be >= 0")
    if m > MAX_LATTICE_SIZE:
        raise TooLarge(f"order {m} exceeds {MAX_LATTICE_SIZE}")
    sweep = (gap_bound + 1) ** (m - 1) * 2**m
    if sweep > MAX_PATTERN_SWEEP:
        raise TooLarge(f"pattern sweep of size {sweep} refused")
    modulus = _validate_pattern_modulus(p)
    encoded = _encoded_powers(modulus, (m - 1) * gap_bound)
    fact = [factorial(i) for i in range(m + 1)]

    if m == 1:
        return _slope_contribution((), 1, encoded, fact)

    def sweep_leading_gap(first: int) -> int:
        subtotal = 0
        for rest in product(range(gap_bound + 1), repeat=m - 2):
            subtotal += _slope_contribution((first, *rest), m, encoded, fact)
        return subtotal

    partials = map_ordered(sweep_leading_gap, range(gap_bound + 1), threads)
    return sum(partials)


def detect_affine_tail(values: Sequence[tuple[int, Fraction]], m: int) -> AffineFit:
    """Find the earliest n1 from which 2**m * kappa_m is affine in n.

    ``values`` are (n, kappa_m) pairs over consecutive n.  The scaled
    values must be exactly affine with integer slope and intercept on
    the whole tail, and the tail must cover at least three points;
    otherwise the fit is reported invalid.
    """
    if len(values) < 4:
        raise TooFewPoints("need at least 4 consecutive points")
    ns = [n for n, _ in values]
    if any(b - a != 1 for a, b in zip(ns, ns[1:])):
        raise ValueError("points must cover consecutive n")
    scaled = [Fraction(v) * 2**m for _, v in values]
    w = scaled[-1] - scaled[-2]
    start = len(scaled) - 2
    while start > 0 and scaled[start] - scaled[start - 1] == w:
        start -= 1
    if len(scaled) - start < 3:
        return AffineFit(0, 0, 0, False)
    b = scaled[-1] - w * ns[-1]
    if w.denominator != 1 or b.denominator != 1:
        return AffineFit(0, 0, 0, False)
    return AffineFit(int(w), int(b), ns[start], True)


@dataclass(frozen=True)
class RootCheck:
    """Numeric root diagnostic for a recurrence polynomial."""

    is_perron: bool
    eta_estimate: float
    roots: tuple[complex, ...]
    rational: tuple[Fraction, ...]


def dominant_root_check(p: Sequence[int], tol: float = 1e-9) -> RootCheck:
    """Check for a unique real root > 1 strictly dominating all others.

    Root finding is numeric (companion matrix) and only diagnostic; the
    exact paths never consume these values.  Rational roots found by the
    p/q test are reported, with a warning when they certify that the
    polynomial is not irreducible.
    """
    coeffs = _strip(p)
    if not coeffs:
        raise ZeroModulus("zero polynomial")
    if len(coeffs) == 1:
        raise ValueError("degree must be >= 1")
    found = np.roots([float(c) for c in reversed(coeffs)])
    if found.size == 0 or not all(isfinite(r.real) and isfinite(r.imag) for r in found):
        raise RootFindingFailed("companion-matrix roots are not finite")
    roots = tuple(sorted((complex(r) for r in found), key=lambda z: (z.real, z.imag)))
    real_above_one = [
        r.real for r in roots if abs(r.imag) <= 1e-8 * max(1.0, abs(r)) and r.real > 1.0
    ]
    if len(real_above_one) == 1:
        eta = real_above_one[0]
        others = list(roots)
        others.remove(min(others, key=lambda z: abs(z - eta)))
        perron = all(eta > abs(z) + tol for z in others)
    else:
        eta = max(abs(z) for z in roots)
        perron = False
    ratio = tuple(rational_roots([int(c) for c in coeffs]))
    if ratio and len(coeffs) - 1 >= 2:
        warnings.warn(
            f"polynomial has rational root(s) {[str(r) for r in ratio]} and is not "
            "irreducible; dominant-root conclusions assume irreducibility",
            RuntimeWarning,
            stacklevel=2,
        )
    return RootCheck(perron, float(eta), roots, ratio)
