"""
Moments and Jacobi parameters
=============================

Closed-form moments of the walk measures, the Hankel check and the
recovery of the three-term recurrence from moments.
"""

import numpy as np

from qwortho.density import Asymmetric, Symmetric
from qwortho.errors import IllConditionedError
from qwortho.jacobi import jacobi_asym, jacobi_from_moments, jacobi_head_general
from qwortho.moments import hankel_min_eigenvalue, moment_closed, moment_quadrature, moment_sequence

r = 1 / np.sqrt(2)
for m in range(0, 11, 2):
    print(m, moment_closed(m, r), moment_quadrature(m, Symmetric(r)))

seq = moment_sequence(17, Symmetric(r))
print("smallest Hankel eigenvalue by order:",
      [f"{hankel_min_eigenvalue(seq, k):.1e}" for k in range(9)])

# recovered gammas settle at r^2 / 4 after two levels
rec = jacobi_from_moments(moment_sequence(12, Symmetric(r)), 5)
print("gamma:", rec.gamma_array(5))
print("r^2/4 =", r * r / 4)

# error against the closed form as the depth grows
for r, c in [(r, 1.0), (0.6, 1 / 0.6), (0.3, 1 / 0.3)]:
    exact = jacobi_asym(r, c)
    for count in (4, 6, 8, 10):
        try:
            got = jacobi_from_moments(moment_sequence(2 * count + 2, Asymmetric(r, c)), count)
        except IllConditionedError as exc:
            print(f"r={r:.3f} c={c:.3f} count={count:2d}  failed: {exc}")
            continue
        err = max(np.max(np.abs(got.beta_array(count) - exact.beta_array(count))),
                  np.max(np.abs(got.gamma_array(count) - exact.gamma_array(count))))
        print(f"r={r:.3f} c={c:.3f} count={count:2d}  max error {err:.1e}")

# generic tilt: only the first two levels have closed forms
print("head for c=0.5:", jacobi_head_general(0.6, 0.5))
print("recovered     :", jacobi_from_moments(moment_sequence(14, Asymmetric(0.6, 0.5)), 6).gamma_array(6))
