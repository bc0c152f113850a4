"""
Krawtchouk matrices at a glance
===============================

Builds the three matrix families and checks the basic identities by hand.
Run with ``python demos/matrices_tour.py``.
"""

from krawtchouk import ExactMatrix, binomial_diag, krawtchouk_matrix, sylvester_hadamard, symmetric_krawtchouk
from krawtchouk.serialization import matrix_to_pretty

# column j of K holds the coefficients of (1+v)^(N-j) (1-v)^j
K = krawtchouk_matrix(4)
print("K^(4)")
print(matrix_to_pretty(K))

# K squares to a multiple of the identity, so it is its own inverse up to 2^N
print("K @ K == 16 I:", K @ K == ExactMatrix.identity(5) * 16)

# multiplying by the binomial diagonal gives a symmetric matrix
S = symmetric_krawtchouk(4)
print("S^(4) = K B")
print(matrix_to_pretty(S))
print("symmetric:", S.is_symmetric(), " equals K @ B:", S == K @ binomial_diag(4))

# entries outgrow 64 bits long before the default order cap
big = symmetric_krawtchouk(64)
print("largest |entry| of S^(64) has", big.max_abs().bit_length(), "bits")

# Sylvester-Hadamard: entry (a, b) is (-1)^popcount(a & b)
H = sylvester_hadamard(3)
print("H^(3)")
print(matrix_to_pretty(H))
print("kron and sign constructions agree:", H == sylvester_hadamard(3, method="sign"))
