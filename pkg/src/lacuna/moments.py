"""Exact moments and cumulants of lacunary cosine sums.

The m-th moment of S_n = sum_k cos(2 pi a_k w) over w in [0,1] is
2**-m times the number of signed zero-sum index tuples, so the
production path is constant-term extraction on a sparse Laurent
polynomial, followed by the classical moment-to-cumulant recursion.
Two independent cross-checks ride along: a pruned depth-first count of
the same tuples, and an equally-spaced quadrature rule that is exact
for trigonometric polynomials of the arising degree (up to float
rounding).

The independent comparison model replaces the shared argument w by an
i.i.d. uniform argument per summand; each summand then follows the
arcsine law, whose even moments are C(2j, j) / 4**j, and the model's
m-th cumulant over n summands is n times the single-summand cumulant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, factorial
from typing import Sequence

import numpy as np

from .errors import IndexOutOfRange, TooLarge
from .laurent import laurent_from_terms, laurent_mul, laurent_power_const_term
from .multiplicity import mult_of_values
from .sequences import SequenceSpec, generate_terms

MAX_ORACLE_SAMPLES = 10**7
MAX_SWEEP_ORDER = 6
MAX_SWEEP_TERMS = 12


def moment(terms: Sequence[int], m: int, threads: int = 1) -> Fraction:
    """E[S_n**m] exactly, via constant-term extraction."""
    count = laurent_power_const_term(laurent_from_terms(terms), m, threads=threads)
    return Fraction(count, 2**m)


def moment_vector(terms: Sequence[int], m_max: int, threads: int = 1) -> list[Fraction]:
    """E[S_n**m] for m = 1..m_max, sharing the polynomial powers."""
    if m_max < 1:
        raise ValueError("need m_max >= 1")
    poly = laurent_from_terms(terms)
    powers = {0: {0: 1}, 1: poly}
    for k in range(2, (m_max + 1) // 2 + 1):
        powers[k] = laurent_mul(powers[k - 1], poly, threads=threads)
    out = []
    for m in range(1, m_max + 1):
        a = powers[(m + 1) // 2]
        b = powers[m // 2]
        if len(b) < len(a):
            a, b = b, a
        out.append(Fraction(sum(c * b.get(-e, 0) for e, c in a.items()), 2**m))
    return out


def moment_dfs(terms: Sequence[int], m: int) -> Fraction:
    """E[S_n**m] by pruned depth-first search; independent of the Laurent route.

    Walks multisets of (term, sign) picks with terms taken in
    non-increasing order, pruning once |partial sum| exceeds
    (slots left) * (largest remaining term), which no completion can
    cancel.  Each multiset is weighted by its number of orderings.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    values = sorted(terms, reverse=True)
    n = len(values)
    fact = [factorial(i) for i in range(m + 1)]
    total = 0

    def descend(symbol: int, left: int, partial: int, weight_denom: int) -> None:
        nonlocal total
        if left == 0:
            if partial == 0:
                total += fact[m] // weight_denom
            return
        if symbol == 2 * n:
            return
        value = values[symbol // 2]
        if abs(partial) > left * value:
            return  # every remaining symbol is <= value in magnitude
        contribution = value if symbol % 2 == 0 else -value
        for copies in range(left + 1):
            descend(
                symbol + 1,
                left - copies,
                partial + copies * contribution,
                weight_denom * fact[copies],
            )

    descend(0, m, 0, 1)
    return Fraction(total, 2**m)


def moments_to_cumulants(moments: Sequence[Fraction]) -> list[Fraction]:
    """Cumulants k_1..k_M from raw moments mu_1..mu_M.

    Uses the recursion k_m = mu_m - sum_{j<m} C(m-1, j-1) k_j mu_{m-j},
    the coefficient-wise inverse of ``cumulants_to_moments``.
    """
    out: list[Fraction] = []
    for m in range(1, len(moments) + 1):
        acc = Fraction(moments[m - 1])
        for j in range(1, m):
            acc -= comb(m - 1, j - 1) * out[j - 1] * moments[m - j - 1]
        out.append(acc)
    return out


def cumulants_to_moments(cumulants: Sequence[Fraction]) -> list[Fraction]:
    """Raw moments from cumulants; inverse of ``moments_to_cumulants``."""
    out: list[Fraction] = []
    for m in range(1, len(cumulants) + 1):
        acc = Fraction(cumulants[m - 1])
        for j in range(1, m):
            acc += comb(m - 1, j - 1) * Fraction(cumulants[j - 1]) * out[m - j - 1]
        out.append(acc)
    return out


def cumulant(terms: Sequence[int], m: int, threads: int = 1) -> Fraction:
    """kappa_m(S_n) exactly, through the moment route."""
    return cumulant_vector(terms, m, threads=threads)[m - 1]


def cumulant_vector(terms: Sequence[int], m_max: int, threads: int = 1) -> list[Fraction]:
    """kappa_1..kappa_{m_max}, sharing the moment computation."""
    return moments_to_cumulants(moment_vector(terms, m_max, threads=threads))


def cumulant_via_multiplicity(terms: Sequence[int], n: int, m: int) -> Fraction:
    """kappa_m(S_n) as 2**-m times the sum of tuple multiplicities.

    Exhaustive over sorted representatives of (index, sign) multisets
    with multinomial weights; guarded to small m and n.  Must agree
    with ``cumulant`` on every input; kept as an independently coded
    route through the partition calculus.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    if m > MAX_SWEEP_ORDER or n > MAX_SWEEP_TERMS:
        raise TooLarge(
            f"tuple sweep refused for m={m}, n={n} "
            f"(limits m <= {MAX_SWEEP_ORDER}, n <= {MAX_SWEEP_TERMS})"
        )
    if n < 1 or n > len(terms):
        raise IndexOutOfRange(f"n={n} outside the materialized {len(terms)} terms")
    signed = []
    for i in range(n):
        signed.append(terms[i])
        signed.append(-terms[i])
    fact = [factorial(i) for i in range(m + 1)]
    total = 0
    for combo in combinations_with_replacement(range(2 * n), m):
        partial = 0
        for s in combo:
            partial += signed[s]
        if partial:
            continue
        mult = mult_of_values([signed[s] for s in combo])
        if not mult:
            continue
        weight = fact[m]
        run = 1
        for prev, cur in zip(combo, combo[1:]):
            if prev == cur:
                run += 1
            else:
                weight //= fact[run]
                run = 1
        weight //= fact[run]
        total += weight * mult
    return Fraction(total, 2**m)


def arcsine_moment(order: int) -> Fraction:
    """Moments of cos(2 pi U): zero at odd order, C(2j, j)/4**j at order 2j."""
    if order < 0:
        raise ValueError("order must be >= 0")
    if order % 2:
        return Fraction(0)
    j = order // 2
    return Fraction(comb(2 * j, j), 4**j)


def independent_cumulant(m: int) -> Fraction:
    """Cumulant of a single arcsine summand; zero for odd m."""
    return independent_cumulants(m)[m - 1]


def independent_cumulants(m_max: int) -> list[Fraction]:
    """Arcsine cumulants for m = 1..m_max."""
    if m_max < 1:
        raise ValueError("need m_max >= 1")
    return moments_to_cumulants([arcsine_moment(m) for m in range(1, m_max + 1)])


# 2*pi to more digits than an x86 long double holds.
_TWO_PI = np.longdouble("6.28318530717958647692528676655900576839")
_ORACLE_SLAB = 1 << 20


def moment_oracle_quadrature(
    terms: Sequence[int], m: int, sample_cap: int = MAX_ORACLE_SAMPLES
) -> float:
    """Float cross-check of E[S_n**m] by equally spaced sampling.

    With N = m * max(a_k) + 1 nodes the rule integrates the degree
    m * max(a_k) trigonometric polynomial S_n**m without aliasing, so
    the only error is float rounding.  Arguments are reduced to
    a_k * j mod N in exact integer arithmetic before the cosine, and
    evaluation runs in extended precision (long double) over bounded
    slabs of the grid.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    if not terms:
        raise ValueError("need at least one term")
    samples = m * max(terms) + 1
    if samples > sample_cap:
        raise TooLarge(f"{samples} quadrature nodes exceed the cap {sample_cap}")
    step = _TWO_PI / samples
    reduced = [a % samples for a in terms]
    total = np.longdouble(0)
    for start in range(0, samples, _ORACLE_SLAB):
        grid = np.arange(start, min(start + _ORACLE_SLAB, samples), dtype=np.int64)
        acc = np.zeros(grid.size, dtype=np.longdouble)
        for a in reduced:
            residues = a * grid % samples
            acc += np.cos(step * residues.astype(np.longdouble))
        total += (acc**m).sum(dtype=np.longdouble)
    return float(total / samples)


@dataclass(frozen=True)
class CompareRow:
    """One (n, m) cell of a comparison against the independent model."""

    n: int
    m: int
    kappa: Fraction
    independent: Fraction
    diff: Fraction


@dataclass(frozen=True)
class CumulantTable:
    """kappa_m(S_n) rows next to n * (independent cumulant) and their gap."""

    sequence: str
    n_from: int
    n_to: int
    m_max: int
    rows: tuple[CompareRow, ...]


def compare_table(
    spec: SequenceSpec, n_from: int, n_to: int, m_max: int, threads: int = 1
) -> CumulantTable:
    """Tabulate kappa_m(S_n), n * kappa independent, and the difference."""
    if not 1 <= n_from <= n_to:
        raise ValueError("need 1 <= n_from <= n_to")
    terms = generate_terms(spec, n_to)
    reference = independent_cumulants(m_max)
    rows = []
    for n in range(n_from, n_to + 1):
        kappas = cumulant_vector(terms[:n], m_max, threads=threads)
        for m in range(1, m_max + 1):
            model = n * reference[m - 1]
            rows.append(CompareRow(n, m, kappas[m - 1], model, kappas[m - 1] - model))
    return CumulantTable(spec.label(), n_from, n_to, m_max, tuple(rows))
