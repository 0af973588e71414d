"""Computational toolkit for the 15-parameter extended Poincare group.

Layers, bottom up: exact structure constants and the exp(adjoint) oracle
(`algebra`); 4x4 Lorentz matrices (`lorentz`); the extended Lorentz group as
5x5 matrices with Dirac boosts (`xlorentz`); full group composition,
inversion, the 15x15 fundamental representation and Lie structure matrices
(`poincare`); a JSON command-line front end (`cli`).

All values are immutable after construction and every operation is a pure
function; the package is safe for concurrent use.
"""

from .algebra import (EPS3, ETA, GENERATOR_NAMES, STRUCTURE_CONSTANTS,
                      GeneratorIndex, JacobiReport, StructureConstants,
                      ad_matrix, adjoint_of, casimir_lambda, casimir_mu,
                      commutator, exp_ad, invariance_residual, jacobi_check,
                      jacobi_residual)
from .lorentz import (DecompositionError, axis_angle_of_rotation3,
                      boost_matrix, lorentz_decompose, lorentz_inverse_params,
                      lorentz_matrix, metric_residual, rapidity,
                      rotation_matrix, u0_of, velocity_of_rapidity)
from .xlorentz import (BFORM, XLParams, b_residual, dirac_boost_mat5,
                       dirac_generator5, embed_lorentz5, omega_branch,
                       omega_square, xl_compose, xl_decompose, xl_inverse,
                       xl_matrix)
from .poincare import (AffineRep, GroupParams, PARAM_NAMES, compose,
                       compose_via_affine, from_affine, inverse, oplus,
                       params_to_vector, theta_claimed_mask, theta_closed,
                       theta_numeric, to_affine, translation_action,
                       vector_to_params)

__version__ = "0.1.0"
