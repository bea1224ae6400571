"""
Stieltjes transforms and inversion
==================================
"""

import numpy as np

from qwortho.acceptance import GENERAL_FAMILIES
from qwortho.density import Asymmetric, density_mu
from qwortho.jacobi import jacobi_asym
from qwortho.stieltjes import cf_eval, g_measure, g_quadrature, invert, rho_closed

spec = Asymmetric(1 / np.sqrt(2), 1.0)
seq = jacobi_asym(spec.r, spec.c)
z = 0.3 + 0.5j
print("closed    ", g_measure(z, spec))
print("quadrature", g_quadrature(z, spec))
for depth in (2, 5, 10, 20, 40):
    print(f"CF depth {depth:2d}", abs(cf_eval(z, seq, depth) - g_measure(z, spec)))
print("CF depth 2 with the tail closed:", abs(cf_eval(z, seq, 2, closure=True) - g_measure(z, spec)))

# recover the density from the transform just above the real axis
for x in np.linspace(-0.6, 0.6, 7):
    est = invert(lambda w: g_measure(w, spec), x, support=(-spec.r, spec.r))
    print(f"x={x:+.2f}  inverted {est:.10f}  closed {density_mu(x, spec):.10f}")

# the general-case families
for label, fam in GENERAL_FAMILIES.items():
    kind = "2asym" if label == "rho2asym" else fam.n
    lo, hi = fam.support
    xs = np.linspace(lo, hi, 9)[1:-1]
    err = max(abs(invert(lambda w: g_measure(w, fam), x) - rho_closed(kind, fam, x)) for x in xs)
    print(label, "max inversion error", f"{err:.1e}")
