import itertools
from fractions import Fraction
from math import comb

import pytest

from krawtchouk import (
    DomainError,
    ExactMatrix,
    FiniteDistribution,
    RationalMatrix,
    SignPath,
    UrnTrajectory,
    abar_matrix,
    binomial_orthogonality_check,
    elementary_symmetric_eval,
    evolve_distribution,
    gauss_2f1_terminating,
    kac_matrix,
    krawtchouk_matrix,
    lambda_matrix,
    simulate_urn,
    urn_step_matrix,
)
from krawtchouk.exact import commutator
from krawtchouk.rng import SplitMix64
from krawtchouk.walks import (
    binomial_gram,
    hypergeo_check,
    iterated_sum_check,
    krawtchouk_via_2f1,
    martingale_check,
    martingale_enumeration_check,
    pascal_check,
    pochhammer,
    reverse_pascal_check,
    so21_check,
    spectral_check,
)

from tables import ABAR_3, KAC_3, LAMBDA_3, TABLE_K

third = Fraction(1, 3)


def test_urn_step_matrix_examples():
    P = urn_step_matrix(3)
    assert P == RationalMatrix.scaled(ExactMatrix(KAC_3), third)
    assert P.tolist()[0] == [0, third, 0, 0]
    assert [r[1] for r in P.tolist()] == [third, 0, 2 * third, 0]
    assert urn_step_matrix(1) == ExactMatrix([[0, 1], [1, 0]])
    assert all(s == 1 for s in urn_step_matrix(4).column_sums())


def test_evolve_examples():
    assert evolve_distribution(FiniteDistribution.delta(1, 0), 1).probs == (0, 1)
    by_hand = urn_step_matrix(3).apply(urn_step_matrix(3).apply([1, 0, 0, 0]))
    d = evolve_distribution(FiniteDistribution.delta(3, 0), 2)
    assert d.probs == by_hand == (third, 0, 2 * third, 0)


@pytest.mark.parametrize("N", range(1, 13))
def test_binomial_law_is_stationary(N):
    pi = FiniteDistribution.binomial(N)
    assert pi.probs == tuple(Fraction(comb(N, k), 2**N) for k in range(N + 1))
    assert evolve_distribution(pi, 1) == pi
    assert evolve_distribution(pi, 5) == pi


def test_distribution_validation():
    with pytest.raises(DomainError):
        FiniteDistribution(1, (Fraction(1, 2), Fraction(1, 3)))
    with pytest.raises(DomainError):
        FiniteDistribution.delta(3, 4)


@pytest.mark.parametrize("seed", [0, 1, 99, 2**64 - 1])
def test_single_ball_alternates(seed):
    traj = simulate_urn(1, 20, seed)
    assert traj.states == tuple(k % 2 for k in range(21))
    traj = simulate_urn(1, 5, seed, start=1)
    assert traj.states == (1, 0, 1, 0, 1, 0)


def test_trajectory_invariants():
    traj = simulate_urn(7, 5000, 3)
    assert traj.steps == 5000
    assert all(abs(b - a) == 1 for a, b in zip(traj.states, traj.states[1:]))
    assert all(0 <= s <= 7 for s in traj.states)
    assert sum(traj.occupancy()) == 5000
    with pytest.raises(DomainError):
        UrnTrajectory(3, 0, (0, 2))


def test_simulation_is_deterministic():
    assert simulate_urn(6, 2000, 17) == simulate_urn(6, 2000, 17)
    assert simulate_urn(6, 2000, 17) != simulate_urn(6, 2000, 18)


def test_splitmix_reference_vector():
    g = SplitMix64(0)
    assert [g.next_u64() for _ in range(3)] == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_below_is_in_range_and_covers_values():
    g = SplitMix64(5)
    draws = [g.below(7) for _ in range(2000)]
    assert set(draws) == set(range(7))
    with pytest.raises(ValueError):
        g.below(0)


def test_abar_examples():
    assert abar_matrix(3).tolist() == ABAR_3
    assert abar_matrix(1).tolist() == [[0, -1], [1, 0]]
    assert [abar_matrix(4)[k, k + 1] for k in range(4)] == [-1, -2, -3, -4]


def test_n3_displays():
    A, K, L = kac_matrix(3), krawtchouk_matrix(3), lambda_matrix(3)
    assert A.tolist() == KAC_3 and L.tolist() == LAMBDA_3 and K.tolist() == TABLE_K[3]
    assert A @ K == K @ L


@pytest.mark.parametrize("N", range(1, 13))
def test_spectral_identity(N):
    A, K, L = kac_matrix(N), krawtchouk_matrix(N), lambda_matrix(N)
    assert A @ K == K @ L
    assert K @ A == L @ K
    assert spectral_check(N).passed


@pytest.mark.parametrize("N", range(1, 11))
def test_so21_brackets(N):
    A, L = kac_matrix(N), lambda_matrix(N)
    Ab = abar_matrix(N)
    assert 2 * Ab == commutator(A, L)
    assert commutator(A, Ab) == 2 * L
    assert commutator(Ab, L) == 2 * A
    assert commutator(L, A) == -2 * Ab
    assert so21_check(N).passed


def test_elementary_symmetric_examples():
    assert elementary_symmetric_eval((1, 1, 1), 2) == 3 == TABLE_K[3][2][0]
    assert elementary_symmetric_eval((1, -1, -1, 1), 2) == -2 == TABLE_K[4][2][2]
    assert all(elementary_symmetric_eval(p, 0) == 1 for p in itertools.product((1, -1), repeat=4))
    with pytest.raises(DomainError):
        elementary_symmetric_eval((1, -1), 3)
    with pytest.raises(DomainError):
        SignPath((1, 0))


def test_sign_path_statistics():
    p = SignPath((1, -1, -1, 1, -1))
    assert (p.N, p.position, p.minus_count) == (5, -1, 3)
    assert p.minus_count == (p.N - p.position) // 2


@pytest.mark.parametrize("N", range(13))
def test_pascal_recurrences(N):
    assert pascal_check(N).passed
    assert reverse_pascal_check(N).passed


@pytest.mark.parametrize("N", range(11))
def test_martingale_enumeration_and_iterated_sums(N):
    assert martingale_enumeration_check(N).passed
    assert iterated_sum_check(N).passed


def test_martingale_check_flags_corruption():
    K = krawtchouk_matrix(4).tolist()
    K[3][1] -= 2
    report = martingale_check(4, ExactMatrix(K))
    assert not report.passed
    assert report.counterexample is not None


def test_pochhammer():
    assert pochhammer(3, 0) == 1
    assert pochhammer(3, 4) == 3 * 4 * 5 * 6
    assert pochhammer(-2, 3) == 0
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)


def test_gauss_2f1_examples():
    assert gauss_2f1_terminating(0, 5, 7, 3) == 1
    assert gauss_2f1_terminating(-1, 1, 2, 1) == Fraction(1, 2)
    # Chu-Vandermonde: 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
    assert gauss_2f1_terminating(-4, 2, 7, 1) == pochhammer(5, 4) / pochhammer(7, 4)
    with pytest.raises(DomainError):
        gauss_2f1_terminating(-3, 1, -1, 1)


@pytest.mark.parametrize("N", range(9))
def test_hypergeometric_form(N):
    for a in range(N + 1):
        for j in range(N + 1):
            assert krawtchouk_via_2f1(a, j, N) == TABLE_K.get(N, krawtchouk_matrix(N).tolist())[a][j]
    assert hypergeo_check(N).passed


def test_binomial_orthogonality_examples():
    G2 = binomial_gram(2)
    assert G2[1, 1] == 1 * 4 + 2 * 0 + 1 * 4 == 8
    assert G2[0, 1] == 0
    assert binomial_gram(0).tolist() == [[1]]


@pytest.mark.parametrize("N", range(13))
def test_binomial_orthogonality(N):
    expected = ExactMatrix.diagonal([2**N * comb(N, a) for a in range(N + 1)])
    assert binomial_gram(N) == expected
    assert binomial_orthogonality_check(N).passed
