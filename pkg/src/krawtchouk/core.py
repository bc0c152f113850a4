"""Krawtchouk, symmetric Krawtchouk, Sylvester-Hadamard, Kac and spectral matrices.

All constructors return :class:`~krawtchouk.exact.ExactMatrix` with 0-based
indices. Column ``j`` of the order-``N`` Krawtchouk matrix holds the
coefficients of ``(1+v)**(N-j) * (1-v)**j`` in ascending powers of ``v``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Literal, Sequence

import numpy as np

from . import poly
from .config import check_order
from .errors import DomainError
from .exact import ExactMatrix
from .report import CheckReport

H1 = ExactMatrix([[1, 1], [1, -1]])


def krawtchouk_entry(N: int, i: int, j: int) -> int:
    """Closed-form entry ``sum_k (-1)^k C(j,k) C(N-j,i-k)``."""
    N = check_order(N)
    if not (0 <= i <= N and 0 <= j <= N):
        raise DomainError(f"indices ({i}, {j}) out of range for N={N}")
    lo, hi = max(0, i - (N - j)), min(i, j)
    return sum((-1) ** k * comb(j, k) * comb(N - j, i - k) for k in range(lo, hi + 1))


def krawtchouk_matrix(N: int) -> ExactMatrix:
    """Order-``N`` Krawtchouk matrix, built by expanding the generating function."""
    N = check_order(N)
    columns = [poly.linear_power_product(1, 1, N - j, 1, -1, j) for j in range(N + 1)]
    return ExactMatrix([[poly.coeff(columns[j], i) for j in range(N + 1)] for i in range(N + 1)])


def binomial_diag(N: int) -> ExactMatrix:
    N = check_order(N)
    return ExactMatrix.diagonal([comb(N, i) for i in range(N + 1)])


def symmetric_krawtchouk(N: int) -> ExactMatrix:
    """``K^(N) B^(N)``: each Krawtchouk column scaled by its binomial coefficient."""
    return krawtchouk_matrix(N) @ binomial_diag(N)


def kronecker(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    return A.kron(B)


def sylvester_hadamard(N: int, *, method: Literal["kron", "sign"] = "kron") -> ExactMatrix:
    """The ``2**N x 2**N`` matrix ``H^{⊗N}``.

    ``method="kron"`` iterates Kronecker products (the reference construction);
    ``method="sign"`` fills entry ``(a, b)`` with ``(-1)**popcount(a & b)``.
    """
    N = check_order(N, minimum=1, hadamard=True)
    if method == "kron":
        H = H1
        for _ in range(N - 1):
            H = H.kron(H1)
        return H
    if method == "sign":
        idx = np.arange(2**N, dtype=np.uint64)
        return ExactMatrix(hadamard_sign_rows(idx, idx))
    raise DomainError(f"unknown method {method!r}")


def hadamard_sign_rows(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Block ``H[a][:, b]`` of a Sylvester-Hadamard matrix from the popcount sign rule."""
    parity = np.bitwise_count(a[:, None] & b[None, :]) & 1
    return (1 - 2 * parity.astype(np.int64)).astype(np.int64)


def kac_matrix(N: int) -> ExactMatrix:
    """Tridiagonal Kac matrix: superdiagonal ``1..N``, subdiagonal ``N..1``."""
    N = check_order(N, minimum=1)
    out = np.zeros((N + 1, N + 1), dtype=np.int64)
    for k in range(N):
        out[k, k + 1] = k + 1
        out[k + 1, k] = N - k
    return ExactMatrix(out)


def lambda_matrix(N: int) -> ExactMatrix:
    """``diag(N, N-2, ..., -N)``."""
    N = check_order(N)
    return ExactMatrix.diagonal([N - 2 * i for i in range(N + 1)])


def krawtchouk_transform(
    x: Sequence, N: int, direction: Literal["forward", "inverse"] = "forward"
) -> tuple[Fraction, ...]:
    """Forward ``K x`` or inverse ``2**-N K x``; the two are mutually inverse since ``K² = 2**N I``."""
    N = check_order(N)
    x = [Fraction(v) for v in x]
    if len(x) != N + 1:
        raise DomainError(f"vector of length {len(x)} does not match order {N}")
    K = krawtchouk_matrix(N).tolist()
    y = [sum((K[i][j] * x[j] for j in range(N + 1)), Fraction(0)) for i in range(N + 1)]
    if direction == "forward":
        return tuple(y)
    if direction == "inverse":
        return tuple(v / 2**N for v in y)
    raise DomainError(f"direction must be 'forward' or 'inverse', got {direction!r}")


def square_check(N: int, K: ExactMatrix | None = None) -> CheckReport:
    """Check ``K² = 2**N I`` for the generated (or supplied) ``K^(N)``."""
    N = check_order(N)
    K = krawtchouk_matrix(N) if K is None else K
    expected = ExactMatrix.identity(N + 1) * 2**N
    if K.shape != expected.shape:
        return CheckReport.failure("square", N, {"reason": "shape", "shape": list(K.shape)})
    return CheckReport.compare("square", N, K @ K, expected)
