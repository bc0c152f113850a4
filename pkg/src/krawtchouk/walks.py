"""Ehrenfest urn dynamics and the symmetric Bernoulli walk.

Urn states are the number ``k`` of gold balls among ``N``. One step picks a
ball uniformly and flips it, so the chain moves ``k -> k-1`` with
probability ``k/N`` and ``k -> k+1`` with probability ``(N-k)/N``. The
transition matrix is ``A^(N) / N`` (column-stochastic, acting on column
state vectors), and its eigenvectors are the Krawtchouk columns.

For a path ``X_1..X_N`` of ``±1`` signs with ``j`` minus signs,
``prod (1 + v X_i) = (1+v)**(N-j) (1-v)**j``, so the elementary symmetric
functions of the path are the entries of column ``j`` of ``K^(N)``.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from fractions import Fraction
from math import comb
from typing import Sequence

from .config import check_order
from .core import kac_matrix, krawtchouk_matrix, lambda_matrix
from .errors import ConsistencyError, DomainError
from .exact import ExactMatrix, RationalMatrix, commutator
from .report import CheckReport
from .rng import SplitMix64


# -- Ehrenfest urn ----------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class FiniteDistribution:
    """Exact probability vector over the urn states ``0..N``."""

    N: int
    probs: tuple[Fraction, ...]

    def __post_init__(self):
        probs = tuple(Fraction(p) for p in self.probs)
        object.__setattr__(self, "probs", probs)
        if len(probs) != self.N + 1:
            raise DomainError(f"need {self.N + 1} probabilities, got {len(probs)}")
        if any(p < 0 for p in probs) or sum(probs) != 1:
            raise DomainError("probabilities must be nonnegative and sum to 1")

    @classmethod
    def delta(cls, N: int, k: int) -> "FiniteDistribution":
        if not 0 <= k <= N:
            raise DomainError(f"state {k} out of range for N={N}")
        return cls(N, tuple(Fraction(int(i == k)) for i in range(N + 1)))

    @classmethod
    def binomial(cls, N: int) -> "FiniteDistribution":
        """The stationary law ``C(N,k) / 2**N``."""
        return cls(N, tuple(Fraction(comb(N, k), 2**N) for k in range(N + 1)))


def urn_step_matrix(N: int) -> RationalMatrix:
    """``A^(N) / N``; column ``k`` is the law of the next state from state ``k``."""
    N = check_order(N, minimum=1)
    return RationalMatrix.scaled(kac_matrix(N), Fraction(1, N))


def evolve_distribution(d: FiniteDistribution, steps: int) -> FiniteDistribution:
    if steps < 0:
        raise DomainError("steps must be nonnegative")
    if steps == 0:
        return d
    P = urn_step_matrix(d.N)
    probs = d.probs
    for _ in range(steps):
        probs = P.apply(probs)
    return FiniteDistribution(d.N, probs)


@dataclasses.dataclass(frozen=True)
class UrnTrajectory:
    N: int
    seed: int
    states: tuple[int, ...]

    def __post_init__(self):
        if any(not 0 <= s <= self.N for s in self.states):
            raise DomainError("state outside 0..N")
        if any(abs(b - a) != 1 for a, b in zip(self.states, self.states[1:])):
            raise DomainError("consecutive states must differ by exactly one")

    @property
    def steps(self) -> int:
        return len(self.states) - 1

    def occupancy(self) -> list[int]:
        """Visit counts per state over the states after each step (initial state excluded)."""
        counts = [0] * (self.N + 1)
        for s in self.states[1:]:
            counts[s] += 1
        return counts


def simulate_urn(N: int, steps: int, seed: int, start: int = 0) -> UrnTrajectory:
    """Draw a ball index in ``[0, N)`` each step; balls ``0..k-1`` are the gold ones."""
    N = check_order(N, minimum=1)
    if steps < 0:
        raise DomainError("steps must be nonnegative")
    if not 0 <= start <= N:
        raise DomainError(f"start state {start} out of range")
    rng = SplitMix64(seed)
    k = start
    states = [k]
    for _ in range(steps):
        k = k - 1 if rng.below(N) < k else k + 1
        states.append(k)
    return UrnTrajectory(N, seed & ((1 << 64) - 1), tuple(states))


def occupancy_test(traj: UrnTrajectory, sigmas: float = 3.0) -> CheckReport:
    """Compare visit counts with ``n C(N,k)/2**N`` using per-state binomial standard deviations."""
    n = traj.steps
    pi = FiniteDistribution.binomial(traj.N).probs
    counts = traj.occupancy()
    for k, (c, p) in enumerate(zip(counts, pi)):
        sd = math.sqrt(n * p * (1 - p))
        z = (c - n * p) / sd
        if abs(z) > sigmas:
            return CheckReport.failure("urn-occupancy", traj.N, {
                "state": k, "count": c, "expected": n * p, "z": float(z)})
    return CheckReport.success("urn-occupancy", traj.N, traj.N + 1)


# -- spectral and Lie structure ---------------------------------------------

def abar_matrix(N: int, A: ExactMatrix | None = None) -> ExactMatrix:
    """``[A, Λ] / 2``, computed with an exactness check on the halving."""
    N = check_order(N, minimum=1)
    A = kac_matrix(N) if A is None else A
    try:
        return commutator(A, lambda_matrix(N)).exact_divide(2)
    except ConsistencyError as exc:
        raise ConsistencyError(f"[A, Λ] has an odd entry: {exc}") from None


def spectral_check(N: int, K: ExactMatrix | None = None) -> CheckReport:
    """``A K = K Λ`` and ``K A = Λ K``."""
    N = check_order(N, minimum=1)
    K = krawtchouk_matrix(N) if K is None else K
    A, L = kac_matrix(N), lambda_matrix(N)
    if K.shape != A.shape:
        return CheckReport.failure("spectral", N, {"reason": "shape", "shape": list(K.shape)})
    return CheckReport.combine("spectral", N, [
        CheckReport.compare("AK=KL", N, A @ K, K @ L),
        CheckReport.compare("KA=LK", N, K @ A, L @ K),
    ])


def so21_check(N: int, A: ExactMatrix | None = None) -> CheckReport:
    """``[A, Ā] = 2Λ``, ``[Ā, Λ] = 2A``, ``[Λ, A] = -2Ā`` for the Kac matrix (or a supplied ``A``)."""
    N = check_order(N, minimum=1)
    A = kac_matrix(N) if A is None else A
    L = lambda_matrix(N)
    if A.shape != L.shape:
        return CheckReport.failure("so21", N, {"reason": "shape", "shape": list(A.shape)})
    try:
        Ab = abar_matrix(N, A)
    except ConsistencyError as exc:
        return CheckReport.failure("so21", N, {"reason": str(exc)})
    return CheckReport.combine("so21", N, [
        CheckReport.compare("[A,Abar]=2L", N, commutator(A, Ab), L * 2),
        CheckReport.compare("[Abar,L]=2A", N, commutator(Ab, L), A * 2),
        CheckReport.compare("[L,A]=-2Abar", N, commutator(L, A), Ab * -2),
    ])


# -- Bernoulli walk ----------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class SignPath:
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if any(v not in (1, -1) for v in values):
            raise DomainError("sign path entries must be +1 or -1")

    @property
    def N(self) -> int:
        return len(self.values)

    @property
    def position(self) -> int:
        """``x_N``, the sum of the signs."""
        return sum(self.values)

    @property
    def minus_count(self) -> int:
        """``j_N = (N - x_N) / 2``."""
        return self.values.count(-1)


def elementary_symmetric_eval(path: SignPath | Sequence[int], k: int) -> int:
    """``e_k(X_1..X_N)`` via ``a_k^(n+1) = a_k^(n) + a_{k-1}^(n) X_{n+1}``."""
    if not isinstance(path, SignPath):
        path = SignPath(tuple(path))
    if not 0 <= k <= path.N:
        raise DomainError(f"k={k} out of range for a path of length {path.N}")
    a = [1] + [0] * k
    for x in path.values:
        for m in range(k, 0, -1):
            a[m] += a[m - 1] * x
    return a[k]


def sign_paths(N: int):
    """All ``2**N`` sign paths of length ``N``."""
    return (SignPath(v) for v in itertools.product((1, -1), repeat=N))


def _order_of(K: ExactMatrix | None, N: int) -> ExactMatrix:
    return krawtchouk_matrix(N) if K is None else K


def pascal_check(N: int, K: ExactMatrix | None = None) -> CheckReport:
    """``K^(N)[i-1][j] + K^(N)[i][j] = K^(N+1)[i][j]`` (out-of-range rows read as 0)."""
    N = check_order(N)
    K, K1 = _order_of(K, N), krawtchouk_matrix(N + 1)
    for i in range(N + 2):
        for j in range(N + 1):
            lhs = (K[i - 1, j] if i >= 1 else 0) + (K[i, j] if i <= N else 0)
            if lhs != K1[i, j]:
                return CheckReport.failure("pascal", N, {"row": i, "col": j, "got": lhs, "expected": K1[i, j]})
    return CheckReport.success("pascal", N, (N + 2) * (N + 1))


def reverse_pascal_check(N: int, K: ExactMatrix | None = None) -> CheckReport:
    """``K^(N)[i][j] = (K^(N+1)[i][j+1] + K^(N+1)[i][j]) / 2``."""
    N = check_order(N)
    K, K1 = _order_of(K, N), krawtchouk_matrix(N + 1)
    for i in range(N + 1):
        for j in range(N + 1):
            rhs = Fraction(K1[i, j + 1] + K1[i, j], 2)
            if K[i, j] != rhs:
                return CheckReport.failure("reverse-pascal", N, {"row": i, "col": j, "got": K[i, j], "expected": rhs})
    return CheckReport.success("reverse-pascal", N, (N + 1) ** 2)


def martingale_enumeration_check(N: int, K: ExactMatrix | None = None) -> CheckReport:
    """Exhaustive conditional expectation over all ``2**(N+1)`` paths.

    For each prefix of length ``N`` the average of ``K^(N+1)[i][j_{N+1}]``
    over the last sign must equal ``K^(N)[i][j_N]``.
    """
    N = check_order(N)
    K, K1 = _order_of(K, N), krawtchouk_matrix(N + 1)
    sums: dict[tuple[int, ...], list[int]] = {}
    for path in itertools.product((1, -1), repeat=N + 1):
        j1 = path.count(-1)
        acc = sums.setdefault(path[:N], [0] * (N + 1))
        for i in range(N + 1):
            acc[i] += K1[i, j1]
    for prefix, acc in sums.items():
        j = prefix.count(-1)
        for i in range(N + 1):
            expected = Fraction(acc[i], 2)
            if K[i, j] != expected:
                return CheckReport.failure("martingale-enumeration", N, {
                    "row": i, "col": j, "prefix": list(prefix), "got": K[i, j], "expected": expected})
    return CheckReport.success("martingale-enumeration", N, len(sums) * (N + 1))


def iterated_sum_check(N: int, K: ExactMatrix | None = None) -> CheckReport:
    """``e_k(path) = K^(N)[k][#minus signs]`` for every path of length ``N`` and every ``k``."""
    N = check_order(N)
    K = _order_of(K, N)
    count = 0
    for path in sign_paths(N):
        j = path.minus_count
        for k in range(N + 1):
            e = elementary_symmetric_eval(path, k)
            if e != K[k, j]:
                return CheckReport.failure("iterated-sum", N, {
                    "path": list(path.values), "k": k, "got": K[k, j], "expected": e})
            count += 1
    return CheckReport.success("iterated-sum", N, count)


def martingale_check(N: int, K: ExactMatrix | None = None) -> CheckReport:
    if K is not None and K.shape != (N + 1, N + 1):
        return CheckReport.failure("martingale", N, {"reason": "shape", "shape": list(K.shape)})
    return CheckReport.combine("martingale", N, [
        pascal_check(N, K),
        reverse_pascal_check(N, K),
        martingale_enumeration_check(N, K),
    ])


# -- hypergeometric form and orthogonality ----------------------------------

def pochhammer(q, n: int) -> Fraction:
    """Rising factorial ``q (q+1) ... (q+n-1)`` as an exact rational."""
    if n < 0:
        raise DomainError("Pochhammer index must be nonnegative")
    q = Fraction(q)
    out = Fraction(1)
    for i in range(n):
        out *= q + i
    return out


def gauss_2f1_terminating(a: int, b, c, z) -> Fraction:
    """Terminating ``2F1(a, b; c; z) = sum_{n<=-a} (a)_n (b)_n / ((c)_n n!) z**n`` with ``a <= 0``."""
    if Fraction(a).denominator != 1 or a > 0:
        raise DomainError(f"a must be a nonpositive integer, got {a}")
    alpha = -int(a)
    b, c, z = Fraction(b), Fraction(c), Fraction(z)
    total = Fraction(0)
    term = Fraction(1)  # (a)_n (b)_n / ((c)_n n!) z^n, updated incrementally
    for n in range(alpha + 1):
        if n:
            denom = (c + n - 1) * n
            if denom == 0:
                raise DomainError(f"(c)_{n} vanishes for c={c}")
            term = term * (a + n - 1) * (b + n - 1) * z / denom
        total += term
    return total


def krawtchouk_via_2f1(alpha: int, j: int, N: int) -> Fraction:
    """``C(N, alpha) 2F1(-alpha, (x-N)/2; -N; 2)`` at walk position ``x = N - 2j``."""
    N = check_order(N)
    x = N - 2 * j
    return comb(N, alpha) * gauss_2f1_terminating(-alpha, Fraction(x - N, 2), -N, 2)


def hypergeo_check(N: int, K: ExactMatrix | None = None) -> CheckReport:
    N = check_order(N)
    K = _order_of(K, N)
    if K.shape != (N + 1, N + 1):
        return CheckReport.failure("hypergeo", N, {"reason": "shape", "shape": list(K.shape)})
    for alpha in range(N + 1):
        for j in range(N + 1):
            v = krawtchouk_via_2f1(alpha, j, N)
            if v != K[alpha, j]:
                return CheckReport.failure("hypergeo", N, {"row": alpha, "col": j, "got": K[alpha, j], "expected": v})
    return CheckReport.success("hypergeo", N, (N + 1) ** 2)


def binomial_gram(N: int, K: ExactMatrix | None = None) -> ExactMatrix:
    """``sum_j C(N,j) K[a][j] K[b][j]`` for all ``a, b``, i.e. ``K B Kᵀ``."""
    N = check_order(N)
    K = _order_of(K, N)
    B = ExactMatrix.diagonal([comb(N, j) for j in range(N + 1)])
    return K @ B @ K.T


def binomial_orthogonality_check(N: int, K: ExactMatrix | None = None) -> CheckReport:
    """The Gram matrix must be ``diag(2**N C(N, a))``."""
    N = check_order(N)
    K = _order_of(K, N)
    if K.shape != (N + 1, N + 1):
        return CheckReport.failure("ortho-binomial", N, {"reason": "shape", "shape": list(K.shape)})
    expected = ExactMatrix.diagonal([2**N * comb(N, a) for a in range(N + 1)])
    return CheckReport.compare("ortho-binomial", N, binomial_gram(N, K), expected)
