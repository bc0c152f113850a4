"""Krawtchouk polynomials for an arbitrary finite value distribution.

Given values ``xi_0..xi_d-1`` taken with probabilities ``p_0..p_d-1`` (mean
``mu``, variance ``sigma2``) and multiplicities ``n = (n_0, ..., n_d-1)``,
the generalized Krawtchouk polynomials are the coefficients

    prod_j (1 + v (xi_j - mu))**n_j = sum_alpha v**alpha K_alpha(n).

For ``alpha`` outside ``0..|n|`` the coefficient is taken to be 0.
Compositions of ``N`` into ``d`` parts are always enumerated in reverse
lexicographic order, starting from ``(N, 0, ..., 0)``.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from fractions import Fraction
from typing import Iterator, Sequence

from . import poly
from .errors import DomainError
from .exact import RationalMatrix
from .report import CheckReport
from .walks import pochhammer

MultiIndex = tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class SiteDistribution:
    """``P(X = xi[j]) = p[j]`` with exact rational values and probabilities."""

    xi: tuple[Fraction, ...]
    p: tuple[Fraction, ...]

    def __post_init__(self):
        xi = tuple(Fraction(x) for x in self.xi)
        p = tuple(Fraction(x) for x in self.p)
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "p", p)
        if len(xi) < 2 or len(xi) != len(p):
            raise DomainError("need d >= 2 values and one probability per value")
        if any(x <= 0 for x in p) or sum(p) != 1:
            raise DomainError("probabilities must be positive and sum to 1")
        if len(set(xi)) != len(xi):
            raise DomainError("values must be pairwise distinct")

    @classmethod
    def binary_symmetric(cls) -> "SiteDistribution":
        """Values ``+1, -1`` with probability 1/2 each."""
        return cls((1, -1), (Fraction(1, 2), Fraction(1, 2)))

    @property
    def d(self) -> int:
        return len(self.xi)

    @property
    def mean(self) -> Fraction:
        return sum((x * q for x, q in zip(self.xi, self.p)), Fraction(0))

    @property
    def variance(self) -> Fraction:
        mu = self.mean
        return sum(((x - mu) ** 2 * q for x, q in zip(self.xi, self.p)), Fraction(0))

    def centered(self) -> tuple[Fraction, ...]:
        mu = self.mean
        return tuple(x - mu for x in self.xi)


def _multi_index(n: Sequence[int], d: int) -> MultiIndex:
    n = tuple(int(c) for c in n)
    if len(n) != d:
        raise DomainError(f"multi-index {n} has {len(n)} components, expected {d}")
    if any(c < 0 for c in n):
        raise DomainError(f"multi-index components must be nonnegative, got {n}")
    return n


def compositions(N: int, d: int) -> Iterator[MultiIndex]:
    """All ``n`` with ``d`` nonnegative parts summing to ``N``, reverse lexicographic."""
    if d == 1:
        yield (N,)
        return
    for first in range(N, -1, -1):
        for rest in compositions(N - first, d - 1):
            yield (first,) + rest


def gk_generating_polynomial(n: Sequence[int], dist: SiteDistribution) -> poly.Poly:
    """Coefficients of ``prod_j (1 + v (xi_j - mu))**n_j`` in ascending powers of ``v``."""
    n = _multi_index(n, dist.d)
    g: poly.Poly = (Fraction(1),)
    for c, m in zip(dist.centered(), n):
        g = poly.mul(g, poly.power(poly.trim((Fraction(1), c)), m))
    return g


def gk_polynomial(alpha: int, n: Sequence[int], dist: SiteDistribution) -> Fraction:
    """``K_alpha(n)`` as the ``v**alpha`` coefficient of the generating product."""
    return Fraction(poly.coeff(gk_generating_polynomial(n, dist), alpha))


def gk_explicit_sum(alpha: int, n: Sequence[int], dist: SiteDistribution) -> Fraction:
    """``sum_{|k| = alpha} prod_j C(n_j, k_j) (xi_j - mu)**k_j``."""
    n = _multi_index(n, dist.d)
    if alpha < 0:
        return Fraction(0)
    total = Fraction(0)
    c = dist.centered()
    for k in itertools.product(*(range(m + 1) for m in n)):
        if sum(k) == alpha:
            term = Fraction(1)
            for nj, kj, cj in zip(n, k, c):
                term *= math.comb(nj, kj) * cj**kj
            total += term
    return total


def gk_recurrence_check(alpha: int, n: Sequence[int], j: int, dist: SiteDistribution) -> CheckReport:
    """``K_alpha(n + e_j) = K_alpha(n) + (xi_j - mu) K_{alpha-1}(n)``."""
    n = _multi_index(n, dist.d)
    if alpha < 1:
        raise DomainError("recurrence needs alpha >= 1")
    if not 0 <= j < dist.d:
        raise DomainError(f"site {j} out of range")
    bumped = tuple(m + (i == j) for i, m in enumerate(n))
    lhs = gk_polynomial(alpha, bumped, dist)
    rhs = gk_polynomial(alpha, n, dist) + dist.centered()[j] * gk_polynomial(alpha - 1, n, dist)
    if lhs != rhs:
        return CheckReport.failure("gk-recurrence", sum(n), {
            "alpha": alpha, "n": list(n), "site": j, "got": lhs, "expected": rhs})
    return CheckReport.success("gk-recurrence", sum(n))


def lauricella_fb(r: Sequence[int], b: Sequence, t, s: Sequence) -> Fraction:
    """Terminating Lauricella ``F_B``.

    ``sum_{k <= r} (-r)_k (b)_k / ((t)_{|k|} k!) s**k`` with multi-index
    Pochhammer products taken componentwise.
    """
    r = tuple(int(x) for x in r)
    if any(x < 0 for x in r):
        raise DomainError("r must be a nonnegative multi-index")
    if not len(r) == len(b) == len(s):
        raise DomainError("r, b and s must have the same length")
    b = tuple(Fraction(x) for x in b)
    s = tuple(Fraction(x) for x in s)
    t = Fraction(t)
    t_poch = [pochhammer(t, m) for m in range(sum(r) + 1)]
    total = Fraction(0)
    for k in itertools.product(*(range(x + 1) for x in r)):
        denom = t_poch[sum(k)]
        if denom == 0:
            raise DomainError(f"(t)_{sum(k)} vanishes for t={t}")
        term = Fraction(1)
        for rj, bj, sj, kj in zip(r, b, s, k):
            term *= pochhammer(-rj, kj) * pochhammer(bj, kj) * sj**kj / math.factorial(kj)
        total += term / denom
    return total


def gk_lauricella(alpha: int, n: Sequence[int], dist: SiteDistribution) -> Fraction:
    """``K_alpha(n)`` through Lauricella ``F_B``; requires ``xi_0 = 0``.

    ``(-N)_alpha sum_{|r| = alpha} prod_j (p_j xi_j)**r_j / r! F_B(-r, -n', -N; 1/p')``
    where primes drop the ``j = 0`` component.
    """
    n = _multi_index(n, dist.d)
    if dist.xi[0] != 0:
        raise DomainError("the Lauricella form needs xi_0 = 0")
    N = sum(n)
    if not 0 <= alpha <= N:
        return Fraction(0)
    delta = dist.d - 1
    b = [-n[j] for j in range(1, dist.d)]
    s = [1 / dist.p[j] for j in range(1, dist.d)]
    total = Fraction(0)
    for r in compositions(alpha, delta):
        weight = Fraction(1)
        for j, rj in enumerate(r, start=1):
            weight *= (dist.p[j] * dist.xi[j]) ** rj / math.factorial(rj)
        if weight:
            total += weight * lauricella_fb(r, b, -N, s)
    return pochhammer(-N, alpha) * total


def multinomial_weight(n: Sequence[int], dist: SiteDistribution) -> Fraction:
    """``N! / prod n_j! * prod p_j**n_j``."""
    w = Fraction(math.factorial(sum(n)))
    for m, q in zip(n, dist.p):
        w = w / math.factorial(m) * q**m
    return w


def gk_table(N: int, dist: SiteDistribution) -> RationalMatrix:
    """Rows ``alpha = 0..N``, columns the compositions of ``N`` in reverse lexicographic order."""
    cols = [gk_generating_polynomial(n, dist) for n in compositions(N, dist.d)]
    return RationalMatrix([[poly.coeff(g, a) for g in cols] for a in range(N + 1)])


def multinomial_gram(N: int, dist: SiteDistribution, table: RationalMatrix | None = None) -> RationalMatrix:
    """``<K_a K_b>`` under the multinomial law of ``n``, for all ``a, b <= N``."""
    comps = list(compositions(N, dist.d))
    table = gk_table(N, dist) if table is None else table
    if table.shape != (N + 1, len(comps)):
        raise DomainError(f"table shape {table.shape} does not match ({N + 1}, {len(comps)})")
    weights = [multinomial_weight(n, dist) for n in comps]
    rows = table.tolist()
    return RationalMatrix([
        [sum((w * x * y for w, x, y in zip(weights, ra, rb)), Fraction(0)) for rb in rows]
        for ra in rows
    ])


def multinomial_orthogonality_check(
    N: int, dist: SiteDistribution, table: RationalMatrix | None = None
) -> CheckReport:
    """``<K_a K_b> = delta_ab sigma2**a C(N, a)``; ``table`` overrides the computed values."""
    try:
        gram = multinomial_gram(N, dist, table)
    except DomainError as exc:
        return CheckReport.failure("ortho-multinomial", N, {"reason": str(exc)})
    s2 = dist.variance
    expected = RationalMatrix([
        [s2**a * math.comb(N, a) if a == b else 0 for b in range(N + 1)] for a in range(N + 1)
    ])
    mismatch = gram.first_mismatch(expected)
    if mismatch is not None:
        a, b, got, want = mismatch
        return CheckReport.failure("ortho-multinomial", N, {"alpha": a, "beta": b, "got": got, "expected": want})
    if any(expected[a, a] <= 0 for a in range(N + 1)):
        return CheckReport.failure("ortho-multinomial", N, {"reason": "nonpositive squared norm"})
    return CheckReport.success("ortho-multinomial", N, (N + 1) ** 2)


def lauricella_check(N: int, dist: SiteDistribution, table: RationalMatrix | None = None) -> CheckReport:
    """The Lauricella form must reproduce ``K_alpha(n)`` for every ``|n| = N``."""
    comps = list(compositions(N, dist.d))
    table = gk_table(N, dist) if table is None else table
    if table.shape != (N + 1, len(comps)):
        return CheckReport.failure("lauricella", N, {"reason": "shape", "shape": list(table.shape)})
    for col, n in enumerate(comps):
        for alpha in range(N + 1):
            v = gk_lauricella(alpha, n, dist)
            if v != table[alpha, col]:
                return CheckReport.failure("lauricella", N, {
                    "alpha": alpha, "n": list(n), "got": table[alpha, col], "expected": v})
    return CheckReport.success("lauricella", N, (N + 1) * len(comps))
