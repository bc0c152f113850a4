"""Binary shuffling function and the Hadamard-to-Krawtchouk condensations.

The binary weight ``w(a)`` groups the ``2**N`` row and column indices of a
Sylvester-Hadamard matrix into ``N+1`` classes. Summing each block of
``H^(N)`` over a pair of classes yields the symmetric Krawtchouk matrix
``S^(N)``. The square contraction ``r`` gives the same family recursively:
``S^(N+1) = r(S^(N) ⊗ H)``.
"""

from __future__ import annotations

import dataclasses
import operator
from concurrent.futures import ThreadPoolExecutor
from math import comb
from typing import Literal

import numpy as np

from .config import check_order
from .core import H1, binomial_diag, hadamard_sign_rows, krawtchouk_matrix, symmetric_krawtchouk, sylvester_hadamard
from .errors import ConsistencyError, DomainError
from .exact import ExactMatrix, _INT64_SAFE, _wide
from .report import CheckReport


def binary_weight(n: int) -> int:
    """Number of ones in the binary expansion of ``n``."""
    n = operator.index(n)
    if n < 0:
        raise DomainError(f"binary weight is defined for n >= 0, got {n}")
    return n.bit_count()


def weight_sequence(N: int) -> np.ndarray:
    """``[w(0), ..., w(2**N - 1)]`` built by the doubling rule ``w(2**k + j) = w(j) + 1``."""
    seq = np.zeros(1, dtype=np.int64)
    for _ in range(N):
        seq = np.concatenate([seq, seq + 1])
    return seq


@dataclasses.dataclass(frozen=True)
class WeightClassPartition:
    N: int
    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.classes) != self.N + 1:
            raise DomainError("one class per weight 0..N required")
        members = sorted(a for c in self.classes for a in c)
        if members != list(range(2**self.N)):
            raise DomainError("classes do not partition 0..2**N-1")
        for i, c in enumerate(self.classes):
            if any(binary_weight(a) != i for a in c):
                raise DomainError(f"class {i} contains an index of the wrong weight")

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)


def weight_classes(N: int) -> WeightClassPartition:
    N = check_order(N, hadamard=True)
    w = weight_sequence(N)
    return WeightClassPartition(N, tuple(tuple(int(a) for a in np.flatnonzero(w == i)) for i in range(N + 1)))


def _row_blocks(size: int, jobs: int) -> list[tuple[int, int]]:
    block = max(1, min(size, 2**16 // max(size, 1) or 1))
    if jobs > 1:
        block = max(1, min(block, -(-size // jobs)))
    return [(s, min(s + block, size)) for s in range(0, size, block)]


def _accumulate(rows_of, w: np.ndarray, N: int, blocks, dtype) -> np.ndarray:
    onehot = (w[:, None] == np.arange(N + 1)[None, :]).astype(dtype)
    acc = np.zeros((N + 1, N + 1), dtype=dtype)
    if dtype == object:
        acc[...] = 0
    for start, stop in blocks:
        class_sums = rows_of(start, stop) @ onehot
        np.add.at(acc, w[start:stop], class_sums)
    return acc


def _condense(rows_of, N: int, int64_ok: bool, jobs: int) -> ExactMatrix:
    w = weight_sequence(N)
    dtype = np.int64 if int64_ok else object
    blocks = _row_blocks(2**N, jobs)
    if jobs <= 1:
        return ExactMatrix(_accumulate(rows_of, w, N, blocks, dtype))
    chunks = [blocks[k::jobs] for k in range(jobs)]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        partials = list(pool.map(lambda bs: _accumulate(rows_of, w, N, bs, dtype), chunks))
    # merge with exact Python-integer addition
    return ExactMatrix(sum((_wide(p) for p in partials[1:]), _wide(partials[0])))


def weight_condense(M: ExactMatrix, *, jobs: int = 1) -> ExactMatrix:
    """Sum a ``2**N x 2**N`` matrix over blocks of equal row and column weight.

    Rows are streamed in blocks: each block's column-class sums are added into
    the ``(N+1) x (N+1)`` accumulator at the row-weight positions.
    """
    if not M.is_square() or M.rows & (M.rows - 1):
        raise DomainError(f"expected a 2**N x 2**N matrix, got {M.shape}")
    N = M.rows.bit_length() - 1
    a = M.to_numpy()
    int64_ok = a.dtype != object and M.max_abs() * M.rows * M.rows < _INT64_SAFE
    if not int64_ok:
        a = _wide(a)
    return _condense(lambda s, e: a[s:e], N, int64_ok, jobs)


def condense_hadamard(N: int, *, method: Literal["matrix", "sign"] = "matrix", jobs: int = 1) -> ExactMatrix:
    """Entry ``(i, j)`` is the sum of ``H^(N)[a][b]`` over ``w(a) = i``, ``w(b) = j``.

    ``method="matrix"`` condenses the materialized Kronecker power;
    ``method="sign"`` generates each row block from the popcount sign rule
    and never builds ``H^(N)``.
    """
    N = check_order(N, minimum=1, hadamard=True)
    if method == "matrix":
        return weight_condense(sylvester_hadamard(N), jobs=jobs)
    if method == "sign":
        idx = np.arange(2**N, dtype=np.uint64)
        return _condense(lambda s, e: hadamard_sign_rows(idx[s:e], idx), N, True, jobs)
    raise DomainError(f"unknown method {method!r}")


def square_contraction(M: ExactMatrix) -> ExactMatrix:
    """Square contraction of a ``2n x 2n`` matrix to ``(n+1) x (n+1)``.

    The input is read 1-based and surrounded by a border of zeros, so output
    cell ``(i, j)`` sums the input cells ``(a-1, b-1)`` for
    ``a in {2i, 2i+1}``, ``b in {2j, 2j+1}`` that fall inside the matrix.
    """
    if not M.is_square() or M.rows % 2:
        raise DomainError(f"square contraction needs a 2n x 2n matrix, got {M.shape}")
    n = M.rows // 2
    a = _wide(M.to_numpy())
    padded = np.zeros((2 * n + 2, 2 * n + 2), dtype=object)
    padded[...] = 0
    padded[1:-1, 1:-1] = a
    return ExactMatrix(padded.reshape(n + 1, 2, n + 1, 2).sum(axis=(1, 3)))


def symmetric_recursion_step(S: ExactMatrix) -> ExactMatrix:
    """``r(S ⊗ H)``: maps ``S^(N)`` to ``S^(N+1)``."""
    if not S.is_square() or S.rows < 2:
        raise DomainError(f"expected an (N+1) x (N+1) matrix with N >= 1, got {S.shape}")
    return square_contraction(S.kron(H1))


def krawtchouk_recursion_step(K: ExactMatrix, N: int | None = None) -> ExactMatrix:
    """``r(K B^(N) ⊗ H) (B^(N+1))^{-1}``: maps ``K^(N)`` to ``K^(N+1)``.

    The column divisions by ``C(N+1, i)`` must all be exact; a remainder
    raises :class:`ConsistencyError`.
    """
    if not K.is_square():
        raise DomainError(f"expected a square matrix, got {K.shape}")
    if N is None:
        N = K.rows - 1
    N = check_order(N)
    if K.rows != N + 1:
        raise DomainError(f"matrix of shape {K.shape} is not of order {N}")
    contracted = square_contraction((K @ binomial_diag(N)).kron(H1))
    return contracted.exact_divide_columns([comb(N + 1, i) for i in range(N + 2)])


def binomial_via_contraction(N: int) -> ExactMatrix:
    """Iterate ``I^(k+1) = r(I^(k) ⊗ I)`` from ``I^(1) = I_2``."""
    N = check_order(N, minimum=1)
    I2 = ExactMatrix.identity(2)
    out = I2
    for _ in range(N - 1):
        out = square_contraction(out.kron(I2))
    return out


def condense_check(
    N: int, S: ExactMatrix | None = None, *, method: Literal["matrix", "sign"] = "matrix", jobs: int = 1
) -> CheckReport:
    """Weight condensation of ``H^(N)`` against ``S^(N)`` (generated or supplied)."""
    expected = symmetric_krawtchouk(N) if S is None else S
    return CheckReport.compare("condense", N, condense_hadamard(N, method=method, jobs=jobs), expected)


def recursion_s_check(N: int, S: ExactMatrix | None = None) -> CheckReport:
    """One recursion step from ``S^(N)`` (generated or supplied) must give ``S^(N+1)``."""
    S = symmetric_krawtchouk(N) if S is None else S
    try:
        got = symmetric_recursion_step(S)
    except DomainError as exc:
        return CheckReport.failure("recursion-s", N, {"reason": str(exc)})
    return CheckReport.compare("recursion-s", N, got, symmetric_krawtchouk(N + 1))


def recursion_k_check(N: int, K: ExactMatrix | None = None) -> CheckReport:
    """One recursion step from ``K^(N)`` must divide exactly and give ``K^(N+1)``."""
    K = krawtchouk_matrix(N) if K is None else K
    try:
        got = krawtchouk_recursion_step(K, N)
    except (ConsistencyError, DomainError) as exc:
        return CheckReport.failure("recursion-k", N, {"reason": str(exc)})
    return CheckReport.compare("recursion-k", N, got, krawtchouk_matrix(N + 1))
