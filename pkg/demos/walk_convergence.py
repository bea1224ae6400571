"""
Hadamard walk and its weak limit
================================

Run the exact amplitude recursion, rescale by n and compare the
empirical CDF with the limit measure.
"""

import numpy as np

from qwortho import hadamard, limit_params, make_state
from qwortho.density import cdf_mu
from qwortho.walk import distribution, evolve, interior_grid, rescaled_cdf_distance

coin = hadamard()
state = make_state(1 / np.sqrt(2), 1j / np.sqrt(2))
params = limit_params(coin, state)
print("r =", params.r, " c =", params.c)

# the distribution at n = 100 has its mass near +-r n, not near 0
dist = distribution(evolve(coin, state, 100))
top = np.argsort(dist.probs)[-4:]
print("most likely positions at n=100:", dist.positions[top])

grid = interior_grid(params.r)
for n in (50, 100, 200, 500, 1000, 2000):
    d = rescaled_cdf_distance(distribution(evolve(coin, state, n)), params, grid)
    print(f"n={n:5d}  sup |F_n - F| = {d:.5f}")

# a left-moving state: c = 1 and the limit drifts to the left
left = make_state(1, 0)
p_left = limit_params(coin, left)
dist = distribution(evolve(coin, left, 2000))
print("mean X_n / n:", dist.mean() / 2000)
print("limit mean  :", -(1 - np.sqrt(1 - p_left.r**2)) * p_left.c)
print("P(X/n <= 0) limit:", cdf_mu(0.0, p_left.measure()))
