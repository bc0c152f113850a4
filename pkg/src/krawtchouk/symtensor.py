"""Symmetric representations of 2x2 operators on degree-N binary forms.

A 2x2 matrix ``A`` acts on the variables by ``x -> a00 x + a01 y`` and
``y -> a10 x + a11 y``. In degree ``N`` row ``k`` of the induced matrix holds
the coefficients of ``(a00 x + a01 y)**(N-k) * (a10 x + a11 y)**k`` in the
monomial basis ``x**(N-l) y**l``, ``l = 0..N``. The map is multiplicative:
``sym(A @ B) == sym(A) @ sym(B)``.

Operators that are not pure tensor powers (the flip sum ``X_F`` and the
sign sum ``X_G``) are obtained as the ``t``-linear coefficient of the
representation of ``I + tF`` and ``I + tG``, computed over integer
polynomials in ``t``.
"""

from __future__ import annotations

from math import comb
from typing import Sequence

from . import poly
from .condensation import binary_weight
from .config import check_order
from .core import H1, krawtchouk_matrix, lambda_matrix
from .errors import ConsistencyError, DomainError
from .exact import ExactMatrix
from .poly import Poly, PolyMatrix
from .report import CheckReport

F = ExactMatrix([[0, 1], [1, 0]])
G = ExactMatrix([[1, 0], [0, -1]])

I_PLUS_TF = PolyMatrix([[poly.ONE, poly.T], [poly.T, poly.ONE]])
I_PLUS_TG = PolyMatrix([[(1, 1), ()], [(), (1, -1)]])


def _as_2x2(A) -> ExactMatrix:
    A = A if isinstance(A, ExactMatrix) else ExactMatrix(A)
    if A.shape != (2, 2):
        raise DomainError(f"expected a 2x2 operator, got shape {A.shape}")
    return A


def _forms_power_product(p0: Sequence[Poly], p1: Sequence[Poly], m: int, k: int) -> list[Poly]:
    """Expand ``(p0[0] + p0[1] y)**m (p1[0] + p1[1] y)**k`` with t-polynomial coefficients.

    Returns the list of y-coefficients (each a polynomial in t), ``m + k + 1`` long.
    """

    def ymul(f, g):
        out = [poly.ZERO] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if a:
                for j, b in enumerate(g):
                    out[i + j] = poly.add(out[i + j], poly.mul(a, b))
        return out

    def ypow(f, e):
        result = [poly.ONE]
        for _ in range(e):
            result = ymul(result, f)
        return result

    return ymul(ypow(list(p0), m), ypow(list(p1), k))


def symmetric_representation_poly(A: PolyMatrix, N: int) -> PolyMatrix:
    """Degree-``N`` symmetric representation of a 2x2 matrix of t-polynomials."""
    N = check_order(N)
    if A.shape != (2, 2):
        raise DomainError(f"expected a 2x2 operator, got shape {A.shape}")
    rows = []
    for k in range(N + 1):
        coeffs = _forms_power_product(A.row(0), A.row(1), N - k, k)
        rows.append([coeffs[l] if l < len(coeffs) else poly.ZERO for l in range(N + 1)])
    return PolyMatrix(rows)


def symmetric_representation(A, N: int) -> ExactMatrix:
    """Degree-``N`` symmetric representation ``Ā_N`` of an integer 2x2 matrix.

    Setting ``x = 1`` turns each homogeneous form into a polynomial in ``y``,
    so row ``k`` is the coefficient list of
    ``(a00 + a01 y)**(N-k) (a10 + a11 y)**k``.
    """
    A = _as_2x2(A)
    N = check_order(N)
    (a00, a01), (a10, a11) = A.tolist()
    rows = []
    for k in range(N + 1):
        p = poly.linear_power_product(a00, a01, N - k, a10, a11, k)
        rows.append([poly.coeff(p, l) for l in range(N + 1)])
    return ExactMatrix(rows)


def hbar_equals_k_transpose(N: int, K: ExactMatrix | None = None) -> CheckReport:
    """Check that the symmetric representation of ``H`` is ``K^(N)`` transposed."""
    N = check_order(N)
    K = krawtchouk_matrix(N) if K is None else K
    return CheckReport.compare("hbar", N, symmetric_representation(H1, N), K.T)


def xf_bar(N: int) -> ExactMatrix:
    """Induced flip sum: row ``k`` has ``k`` at column ``k-1`` and ``N-k`` at column ``k+1``."""
    N = check_order(N, minimum=1)
    return symmetric_representation_poly(I_PLUS_TF, N).coefficient(1)


def xg_bar(N: int) -> ExactMatrix:
    """Induced sign sum ``diag(N - 2k)``."""
    N = check_order(N)
    return symmetric_representation_poly(I_PLUS_TG, N).coefficient(1)


def tensor_power_row(M: PolyMatrix, N: int, row: int = 0) -> list[Poly]:
    """Row ``row`` of the ``N``-fold Kronecker power of a 2x2 ``M``, without building the power.

    Row ``a`` of ``M^{⊗N}`` is the Kronecker product of the rows of ``M``
    selected by the binary digits of ``a`` (most significant first).
    """
    N = check_order(N, hadamard=True)
    if M.shape != (2, 2):
        raise DomainError("expected a 2x2 polynomial matrix")
    if not 0 <= row < 2**N:
        raise DomainError(f"row {row} out of range for N={N}")
    out: list[Poly] = [poly.ONE]
    for bit in reversed(range(N)):
        r = M.row((row >> bit) & 1)
        out = [poly.mul(p, q) for p in out for q in r]
    return out


def top_row_generating(N: int) -> Poly:
    """``(1+t)**N`` obtained two ways and checked for agreement.

    (a) the top row of ``(I+tF)^{⊗N}`` consists of monomials ``t**w(k)``;
    their sum is taken. (b) the top row of the symmetric representation of
    ``I+tF`` has entries ``C(N,k) t**k``; their sum is taken.
    """
    N = check_order(N, hadamard=True)
    full_row = tensor_power_row(I_PLUS_TF, N)
    for k, p in enumerate(full_row):
        if p != poly.trim([0] * binary_weight(k) + [1]):
            raise ConsistencyError(f"top-row entry {k} is {p}, expected t^{binary_weight(k)}")
    from_full: Poly = poly.ZERO
    for p in full_row:
        from_full = poly.add(from_full, p)
    sym_row = symmetric_representation_poly(I_PLUS_TF, N).row(0)
    for k, p in enumerate(sym_row):
        if p != poly.trim([0] * k + [comb(N, k)]):
            raise ConsistencyError(f"symmetric top-row entry {k} is {p}, expected C(N,k) t^{k}")
    from_sym: Poly = poly.ZERO
    for p in sym_row:
        from_sym = poly.add(from_sym, p)
    if from_full != from_sym:
        raise ConsistencyError(f"top-row sums disagree: {from_full} vs {from_sym}")
    return from_full


def diagonalize_xf_bar(N: int) -> ExactMatrix:
    """``H̄ X̄_F H̄ / 2**N``, which is the diagonal matrix of the spectrum ``N, N-2, ..., -N``.

    The division is exact because ``H̄² = 2**N I``; a remainder raises
    :class:`ConsistencyError`.
    """
    N = check_order(N, minimum=1)
    Hb = symmetric_representation(H1, N)
    return (Hb @ xf_bar(N) @ Hb).exact_divide(2**N)


def xf_bar_spectrum(N: int) -> tuple[int, ...]:
    D = diagonalize_xf_bar(N)
    if not D.is_diagonal():
        raise ConsistencyError("conjugated flip operator is not diagonal")
    return D.diagonal_entries()


def intertwining_check(N: int) -> CheckReport:
    """``X̄_F H̄ = H̄ X̄_G``, ``X̄_G H̄ = H̄ X̄_F`` and ``H̄ X̄_F H̄ = 2**N X̄_G``."""
    N = check_order(N, minimum=1)
    Hb = symmetric_representation(H1, N)
    XF, XG = xf_bar(N), xg_bar(N)
    return CheckReport.combine("intertwining", N, [
        CheckReport.compare("xf-h", N, XF @ Hb, Hb @ XG),
        CheckReport.compare("xg-h", N, XG @ Hb, Hb @ XF),
        CheckReport.compare("spectrum", N, Hb @ XF @ Hb, lambda_matrix(N) * 2**N),
    ])
