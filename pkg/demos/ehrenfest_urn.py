"""
The Ehrenfest urn
=================

N balls, each gold or lead; every step one ball chosen uniformly flips.
The columns of K^(N) are the eigenvectors of the transition matrix and the
binomial law is its stationary distribution.
"""

from krawtchouk import (
    FiniteDistribution,
    abar_matrix,
    evolve_distribution,
    kac_matrix,
    krawtchouk_matrix,
    lambda_matrix,
    simulate_urn,
    urn_step_matrix,
)
from krawtchouk.exact import commutator
from krawtchouk.serialization import matrix_to_pretty
from krawtchouk.walks import occupancy_test

N = 5
print("transition matrix (1/N) A for N=3:")
print(matrix_to_pretty(urn_step_matrix(3)))

# exact evolution from "no gold balls"; the chain has period 2, so the law
# alternates between even and odd states and never converges pointwise
d = FiniteDistribution.delta(N, 0)
for steps in (1, 2, 10, 11):
    print(f"after {steps:2d} steps:", [str(p) for p in evolve_distribution(d, steps).probs])
pi = FiniteDistribution.binomial(N)
print("binomial law is fixed:", evolve_distribution(pi, 1) == pi)

# spectral identity and the so(2,1) triple
A, K, L = kac_matrix(N), krawtchouk_matrix(N), lambda_matrix(N)
Ab = abar_matrix(N)
print("A K == K Lambda:", A @ K == K @ L)
print("[A, Abar] == 2 Lambda:", commutator(A, Ab) == 2 * L)

# a reproducible simulation; the trajectory depends only on (N, steps, seed)
traj = simulate_urn(N, 100_000, seed=42)
print("occupancy:", traj.occupancy())
print("expected: ", [round(float(p) * traj.steps) for p in pi.probs])
print("3-sigma test:", occupancy_test(traj).passed)
