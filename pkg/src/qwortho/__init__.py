"""Discrete-time quantum walks on the line and the orthogonal polynomials of their limit measures."""
from .coin import Coin, LimitParams, QubitState, hadamard, limit_params, make_coin, make_state, split
from .density import Asymmetric, GeneralJacobi, Symmetric, cdf_mu, density_k, density_limit, density_mu
from .jacobi import (
    JacobiSeq,
    jacobi_asym,
    jacobi_c1,
    jacobi_c_inv_r,
    jacobi_from_moments,
    jacobi_general,
    jacobi_head_general,
    jacobi_symmetric,
)
from .moments import mgf, moment_asym, moment_closed, moment_quadrature, moment_sequence
from .orthopoly import MonicPoly, eval_polys, genfun_residual, monic_coeffs, orthogonality_residual
from .stieltjes import (
    a_function,
    cf_eval,
    g_asym,
    g_general,
    g_general_asym,
    g_general_closed,
    g_measure,
    g_symmetric,
    invert,
    rho_closed,
)
from .walk import AmplitudeField, Distribution, distribution, evolve, rescaled_cdf_distance, step

__version__ = "0.1.0"
