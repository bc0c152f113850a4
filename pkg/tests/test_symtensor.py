from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from krawtchouk import (
    DomainError,
    ExactMatrix,
    PolyMatrix,
    diagonalize_xf_bar,
    hbar_equals_k_transpose,
    kac_matrix,
    krawtchouk_matrix,
    lambda_matrix,
    sylvester_hadamard,
    symmetric_representation,
    symmetric_representation_poly,
    top_row_generating,
    xf_bar,
    xg_bar,
)
from krawtchouk.core import H1
from krawtchouk.condensation import weight_sequence
from krawtchouk.symtensor import F, G, I_PLUS_TF, intertwining_check, tensor_power_row, xf_bar_spectrum

from tables import HBAR_4, XF_BAR_4, XG_BAR_4

I2 = ExactMatrix.identity(2)


def two_by_two():
    return st.lists(st.lists(st.integers(-6, 6), min_size=2, max_size=2), min_size=2, max_size=2).map(ExactMatrix)


@settings(max_examples=150, deadline=None)
@given(two_by_two(), two_by_two(), st.integers(0, 8))
def test_homomorphism(A, B, N):
    assert symmetric_representation(A @ B, N) == symmetric_representation(A, N) @ symmetric_representation(B, N)


@settings(max_examples=40, deadline=None)
@given(two_by_two(), st.integers(0, 6))
def test_poly_and_integer_routes_agree(A, N):
    assert symmetric_representation_poly(PolyMatrix.constant(A), N).coefficient(0) == symmetric_representation(A, N)


def test_representation_examples():
    for N in range(6):
        assert symmetric_representation(I2, N) == ExactMatrix.identity(N + 1)
    assert symmetric_representation(H1, 4).tolist() == HBAR_4
    assert symmetric_representation(G, 3) == ExactMatrix.diagonal([1, -1, 1, -1])
    with pytest.raises(DomainError):
        symmetric_representation(ExactMatrix.identity(3), 2)


@pytest.mark.parametrize("N", range(11))
def test_hbar_is_k_transpose(N):
    assert hbar_equals_k_transpose(N).passed
    assert symmetric_representation(H1, N) == krawtchouk_matrix(N).T


def test_hbar_check_reports_corruption():
    K = krawtchouk_matrix(4).tolist()
    K[2][3] = 7
    report = hbar_equals_k_transpose(4, ExactMatrix(K))
    assert not report.passed
    assert report.counterexample["row"] == 3 or report.counterexample["col"] == 3


def test_two_by_two_relations():
    assert F @ F == I2 and G @ G == I2
    assert H1 @ H1 == 2 * I2
    assert F @ H1 == H1 @ G and G @ H1 == H1 @ F
    assert F + G == H1


def test_xf_xg_examples():
    assert xf_bar(4).tolist() == XF_BAR_4
    assert xf_bar(1) == F
    assert xf_bar(3).T == kac_matrix(3)
    assert xg_bar(4).tolist() == XG_BAR_4
    assert xg_bar(0).tolist() == [[0]]
    assert xg_bar(5) == ExactMatrix.diagonal([5, 3, 1, -1, -3, -5])


@pytest.mark.parametrize("N", range(1, 11))
def test_xf_closed_form(N):
    expected = [[(N - k if l == k + 1 else 0) + (k if l == k - 1 else 0) for l in range(N + 1)] for k in range(N + 1)]
    assert xf_bar(N).tolist() == expected
    assert xf_bar(N).T == kac_matrix(N)
    assert xg_bar(N) == lambda_matrix(N)


@pytest.mark.parametrize("N", range(1, 11))
def test_intertwining_and_spectrum(N):
    Hb, XF, XG = symmetric_representation(H1, N), xf_bar(N), xg_bar(N)
    assert XF @ Hb == Hb @ XG
    assert XG @ Hb == Hb @ XF
    assert diagonalize_xf_bar(N) == ExactMatrix.diagonal([N - 2 * k for k in range(N + 1)])
    assert xf_bar_spectrum(N) == tuple(N - 2 * k for k in range(N + 1))
    assert intertwining_check(N).passed


def flip_sum(M, N):
    """sum_i f_i M where f_i flips tensor factor i; f_i permutes rows a -> a xor 2**i."""
    a = np.arange(2**N)
    return sum(M[a ^ (1 << i)] for i in range(N))


@pytest.mark.parametrize("N", range(1, 13))
def test_full_space_intertwining(N):
    H = sylvester_hadamard(N).to_numpy()
    signs = N - 2 * weight_sequence(N).astype(np.int64)  # X_G = diag(N - 2 w(a))
    # X_F H = H X_G  and  X_G H = H X_F (X_F symmetric, so H X_F = (X_F H)^T)
    xf_h = flip_sum(H, N)
    assert np.array_equal(xf_h, H * signs[None, :])
    assert np.array_equal(signs[:, None] * H, xf_h.T)


@pytest.mark.parametrize("N", range(1, 7))
def test_full_space_operators_materialized(N):
    I = ExactMatrix.identity(2)

    def site_sum(op):
        total = ExactMatrix.zeros(2**N, 2**N)
        for i in range(N):
            term = ExactMatrix.identity(1)
            for k in range(N):
                term = term.kron(op if k == i else I)
            total = total + term
        return total

    XF, XG, H = site_sum(F), site_sum(G), sylvester_hadamard(N)
    assert XF @ H == H @ XG
    assert XG @ H == H @ XF


def test_top_row_generating():
    assert top_row_generating(1) == (1, 1)
    assert top_row_generating(4) == (1, 4, 6, 4, 1)
    assert top_row_generating(9) == tuple(comb(9, k) for k in range(10))


def test_tensor_power_row_exponents():
    row = tensor_power_row(I_PLUS_TF, 3)
    assert [len(p) - 1 for p in row] == [0, 1, 1, 2, 1, 2, 2, 3]
    with pytest.raises(DomainError):
        tensor_power_row(I_PLUS_TF, 3, row=8)


def test_xf_bar_needs_positive_order():
    with pytest.raises(DomainError):
        xf_bar(0)
