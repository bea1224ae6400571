"""
Orthogonal polynomials of the Hadamard measure
==============================================
"""

import numpy as np

from qwortho.density import Symmetric
from qwortho.jacobi import jacobi_symmetric
from qwortho.orthopoly import genfun_residual, monic_coeffs, orthogonality_matrix, zeros_by_bisection

r = 1 / np.sqrt(2)
seq = jacobi_symmetric(r)
np.set_printoptions(precision=6, suppress=True)

for P in monic_coeffs(seq, 6):
    print(P.degree, P.coeffs)

gram = orthogonality_matrix(seq, Symmetric(r), 5)
print(gram)

# the zeros interlace and stay inside [-r, r]
polys = monic_coeffs(seq, 6)
for n in range(1, 7):
    print(n, zeros_by_bisection(polys[n], -r, r))

for N in (5, 10, 20, 40):
    print(N, genfun_residual(0.4, 0.3, r, N))
