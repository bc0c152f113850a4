"""
From Hadamard to symmetric Krawtchouk
=====================================

Collapsing a Sylvester-Hadamard matrix by binary weight lands exactly on
the symmetric Krawtchouk matrix. The same matrices also come out of a
Kronecker-then-contract recursion.
"""

import time

from krawtchouk import (
    ExactMatrix,
    binary_weight,
    condense_hadamard,
    krawtchouk_matrix,
    krawtchouk_recursion_step,
    square_contraction,
    symmetric_krawtchouk,
    symmetric_recursion_step,
    weight_classes,
)
from krawtchouk.core import H1
from krawtchouk.serialization import matrix_to_pretty

# the binary weights of 0..15 and how they group
print("w(0..15):", [binary_weight(n) for n in range(16)])
print("weight classes for N=3:", weight_classes(3).classes)

# summing H^(4) over weight classes
print(matrix_to_pretty(condense_hadamard(4)))

# the sweep over all 4^N entries stays cheap well past N = 10
for N in (8, 10, 12):
    t0 = time.perf_counter()
    ok = condense_hadamard(N) == symmetric_krawtchouk(N)
    print(f"N={N:2d}: condensation matches S^(N): {ok}  ({time.perf_counter() - t0:.3f} s)")

# recursion: S^(N+1) = r(S^(N) kron H), seeded at S^(1) = H
S = H1
for N in range(2, 7):
    S = symmetric_recursion_step(S)
print("S^(6) by recursion matches:", S == symmetric_krawtchouk(6))

# the Krawtchouk version divides each column by a binomial coefficient; the
# division is exact, and a remainder would raise ConsistencyError
print("K^(7) from K^(6):", krawtchouk_recursion_step(krawtchouk_matrix(6), 6) == krawtchouk_matrix(7))

# contracting an identity matrix yields binomial coefficients
print("r(I_4) =", square_contraction(ExactMatrix.identity(4)).diagonal_entries())
