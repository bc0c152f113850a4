"""
Krawtchouk polynomials for other site laws
==========================================

Replace the fair +-1 coin by any finite law with rational values. The
coefficients of prod_j (1 + v (xi_j - mu))^(n_j) stay orthogonal under the
multinomial law, with squared norms sigma^(2 alpha) C(N, alpha).
"""

from fractions import Fraction

from krawtchouk import SiteDistribution, gk_explicit_sum, gk_lauricella, gk_polynomial
from krawtchouk.multivariate import gk_table, multinomial_gram
from krawtchouk.serialization import matrix_to_pretty

dist = SiteDistribution((0, 1, 2), (Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)))
print("mean", dist.mean, "variance", dist.variance)

n = (2, 1, 1)
for alpha in range(5):
    values = gk_polynomial(alpha, n, dist), gk_explicit_sum(alpha, n, dist), gk_lauricella(alpha, n, dist)
    print(f"K_{alpha}{n}:", ", ".join(str(v) for v in values))

# columns are the compositions of N = 3 in reverse lexicographic order
print(matrix_to_pretty(gk_table(3, dist)))

# the Gram matrix is diagonal with entries sigma^(2a) C(3, a)
print(matrix_to_pretty(multinomial_gram(3, dist)))
