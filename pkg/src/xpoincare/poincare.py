"""The full 15-parameter group: composition, inversion, the 15x15
fundamental representation, and the Lie structure matrices.

A group element carries parameters (alpha, a, omega, u, theta) and realizes

    M(g) = C(alpha) V(a) W(omega) L(u) R(theta)

scalar translation, spacetime translation, Dirac boost, Lorentz boost,
rotation, in that order.  The parameter 15-vector used by the structure
matrices lists the parameters in the order conjugate to the generator
ordering:

    index  0..2    theta^1..theta^3   (J)
    index  3..5    u^1..u^3           (K)
    index  6..9    omega_0..omega_3   (Gam)
    index 10..13   a^0..a^3           (P)
    index 14       alpha              (Gs)

Semidirect structure: the extended-Lorentz sector acts on the translation
5-vector t = (a, alpha) through T(g) = B D(g) B, where D is the 5x5 matrix of
the extended-Lorentz part and B the invariant form.  T is the action on
translation parameters (contravariant index placement); composition is then
the textbook affine rule (T2, t2)(T1, t1) = (T2 T1, t2 + T2 t1).  The closed
translation-composition formulas in `compose` are algebraically identical to
that affine rule; the test suite verifies both routes against each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import EPS3, ETA, STRUCTURE_CONSTANTS
from .lorentz import rapidity
from .xlorentz import (BFORM, XLParams, dirac_boost_mat5, embed_lorentz5,
                       xl_compose, xl_decompose, xl_inverse, xl_matrix)

PARAM_NAMES = (
    "theta1", "theta2", "theta3", "u1", "u2", "u3",
    "omega0", "omega1", "omega2", "omega3",
    "a0", "a1", "a2", "a3", "alpha",
)


@dataclass(frozen=True)
class GroupParams:
    """Canonical parameters (alpha, a, xl) of one group element."""

    alpha: float = 0.0
    a: np.ndarray = field(default_factory=lambda: np.zeros(4))
    xl: XLParams = field(default_factory=XLParams)

    def __post_init__(self):
        a = np.asarray(self.a, dtype=float).copy()
        if a.shape != (4,):
            raise ValueError(f"a must have shape (4,), got {a.shape}")
        if not (np.all(np.isfinite(a)) and np.isfinite(self.alpha)):
            raise ValueError("parameters must be finite")
        a.flags.writeable = False
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "alpha", float(self.alpha))

    @classmethod
    def identity(cls) -> "GroupParams":
        return cls()


def params_to_vector(g: GroupParams) -> np.ndarray:
    """15-vector (theta, u, omega, a, alpha) in generator-conjugate order."""
    return np.concatenate([g.xl.theta, g.xl.u, g.xl.omega, g.a, [g.alpha]])


def vector_to_params(v) -> GroupParams:
    v = np.asarray(v, dtype=float)
    if v.shape != (15,):
        raise ValueError(f"parameter vector must have shape (15,), got {v.shape}")
    return GroupParams(alpha=float(v[14]), a=v[10:14],
                       xl=XLParams(omega=v[6:10], u=v[3:6], theta=v[0:3]))


# --- affine (semidirect) realization ----------------------------------------

@dataclass(frozen=True)
class AffineRep:
    """Faithful affine form: x -> M x + t on translation-parameter 5-vectors.

    t is (a^0..a^3, alpha); M = B D B preserves B.
    """

    M: np.ndarray
    t: np.ndarray

    def __post_init__(self):
        M = np.asarray(self.M, dtype=float).copy()
        t = np.asarray(self.t, dtype=float).copy()
        if M.shape != (5, 5) or t.shape != (5,):
            raise ValueError("AffineRep needs a 5x5 matrix and a 5-vector")
        M.flags.writeable = False
        t.flags.writeable = False
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "t", t)


def translation_action(xl: XLParams) -> np.ndarray:
    """Action of the extended-Lorentz part on translation parameters: B D B."""
    return BFORM @ xl_matrix(xl) @ BFORM


def to_affine(g: GroupParams) -> AffineRep:
    return AffineRep(translation_action(g.xl), np.concatenate([g.a, [g.alpha]]))


def from_affine(rep: AffineRep) -> GroupParams:
    """Recover canonical parameters; propagates xl_decompose rejection."""
    xl = xl_decompose(BFORM @ rep.M @ BFORM)
    return GroupParams(alpha=float(rep.t[4]), a=rep.t[:4], xl=xl)


# --- group operations --------------------------------------------------------

def compose(g2: GroupParams, g1: GroupParams) -> GroupParams:
    """Canonical parameters of the product g2 g1.

    Translation sector by the closed formulas: with Pi the product of the
    single-argument factors R(-theta2) L(-u2) W(-omega2) (equal to the inverse
    of the extended-Lorentz 5x5 of g2),

        alpha = alpha2 + alpha1 W(-omega2)[Gs,Gs] + a1^n Pi[P_n, Gs]
        a^m   = a2^m   + alpha1 W(-omega2)[Gs,P_m] + a1^n Pi[P_n, P_m]

    The extended-Lorentz sector delegates to xl_compose, which fails (and this
    function with it) when the product leaves the factorizable set.
    """
    w_inv = dirac_boost_mat5(-g2.xl.omega)
    pi = (embed_lorentz5(np.zeros(3), -g2.xl.theta)
          @ embed_lorentz5(-g2.xl.u, np.zeros(3)) @ w_inv)
    alpha = g2.alpha + g1.alpha * w_inv[4, 4] + g1.a @ pi[:4, 4]
    a = g2.a + g1.alpha * w_inv[4, :4] + g1.a @ pi[:4, :4]
    return GroupParams(alpha=float(alpha), a=a, xl=xl_compose(g2.xl, g1.xl))


def compose_via_affine(g2: GroupParams, g1: GroupParams) -> GroupParams:
    """Independent composition route through the affine realization."""
    r2, r1 = to_affine(g2), to_affine(g1)
    return from_affine(AffineRep(r2.M @ r1.M, r2.t + r2.M @ r1.t))


def inverse(g: GroupParams) -> GroupParams:
    """Closed-form inverse.

    Extended-Lorentz part from xl_inverse; the translation 5-vector is
    t' = -D(g)^T t, the closed form of -T(g)^{-1} t.
    """
    d = xl_matrix(g.xl)
    t = np.concatenate([g.a, [g.alpha]])
    t_inv = -(d.T @ t)
    return GroupParams(alpha=float(t_inv[4]), a=t_inv[:4], xl=xl_inverse(g.xl))


# --- fundamental representation ----------------------------------------------

# The ten extended-Lorentz generators act faithfully on the (P, Gs) block;
# their images G_A there form a basis of the B-antisymmetric matrices with
# disjoint supports (Frobenius-orthogonal, squared norm 2), so the 10x10
# sector of the representation is read off exactly by expanding D^{-1} G_A D
# as coefficients 0.5 <G_B, .>.
_G5 = [STRUCTURE_CONSTANTS.dense[a][10:, 10:].astype(float) for a in range(10)]
_G5_DUAL = 0.5 * np.stack([g.ravel() for g in _G5], axis=0)


def _xl_adjoint10(d5: np.ndarray) -> np.ndarray:
    d_inv = BFORM @ d5.T @ BFORM
    return np.array([_G5_DUAL @ (d_inv @ g @ d5).ravel() for g in _G5])


def oplus(g: GroupParams) -> np.ndarray:
    """15x15 fundamental representation matrix of g in generator order.

    Rows index the transformed generator, columns the expansion: conjugation
    by g sends X_r to sum_s O[r, s] X_s.  Product of the translation factor
    and the block-diagonal extended-Lorentz factor.  The translation factor
    is exactly I + alpha F_Gs + a^m F_Pm (the adjoint matrices of the abelian
    sector are commuting and nilpotent of order two); its Gam rows carry
    entry(Gam^m, P_b) = alpha eta^{mb} and entry(Gam^m, Gs) = a^m, its J and
    K rows the orbital couplings into the P columns.
    """
    fd = STRUCTURE_CONSTANTS.dense
    tfac = np.eye(15) + g.alpha * fd[14] + np.einsum("m,mrs->rs", g.a,
                                                     fd[10:14].astype(float))
    d5 = xl_matrix(g.xl)
    xlo = np.zeros((15, 15))
    xlo[:10, :10] = _xl_adjoint10(d5)
    xlo[10:, 10:] = d5
    return tfac @ xlo


def oplus_pure_factor_vector(g: GroupParams) -> list[np.ndarray]:
    """Algebra coefficient vectors of the five canonical factors of g.

    Order C(alpha), V(a), W(omega), L(u), R(theta); exp_ad of each vector is
    the oracle for the corresponding factor of oplus.
    """
    vs = []
    for sl, coeffs in ((slice(14, 15), [g.alpha]), (slice(10, 14), g.a),
                       (slice(6, 10), g.xl.omega), (slice(3, 6), rapidity(g.xl.u)),
                       (slice(0, 3), g.xl.theta)):
        v = np.zeros(15)
        v[sl] = coeffs
        vs.append(v)
    return vs


# --- Lie structure matrices ----------------------------------------------------

def theta_numeric(g: GroupParams, step: float = 1e-5) -> np.ndarray:
    """Structure matrix by central differences of the composition map.

    Entry [r, s] is the derivative of composed parameter s with respect to
    primed parameter r at the identity, for the primed element on the left.
    Requires compose to succeed near the identity in the primed slot.
    """
    out = np.zeros((15, 15))
    for r in range(15):
        dv = np.zeros(15)
        dv[r] = step
        plus = params_to_vector(compose(vector_to_params(dv), g))
        minus = params_to_vector(compose(vector_to_params(-dv), g))
        out[r, :] = (plus - minus) / (2.0 * step)
    return out


def theta_claimed_mask() -> np.ndarray:
    """True where theta_closed makes a claim (everything outside the 10x10
    extended-Lorentz block, whose entries have no closed form here)."""
    m = np.ones((15, 15), dtype=bool)
    m[:10, :10] = False
    return m


def theta_closed(g: GroupParams) -> np.ndarray:
    """Closed-form structure-matrix entries; NaN on the unclaimed block.

    Claimed region: all rows of the a- and alpha-columns, and the a/alpha
    rows of every column.  Entries without a listed formula are exact zeros
    of the composition rule and are claimed as 0.
    """
    t = np.full((15, 15), np.nan)
    t[:, 10:] = 0.0
    t[10:, :10] = 0.0
    t[14, 14] = 1.0                                   # alpha-alpha
    t[6:10, 14] = g.a                                 # omega_m row, alpha col: a^m
    t[10:14, 10:14] = np.eye(4)                       # a^b row, a^m col: delta
    t[6:10, 10:14] = g.alpha * ETA                    # omega_b row, a^m col: alpha eta^{mb}
    for j in range(3):
        t[3 + j, 10] = g.a[1 + j]                     # u^j row, a^0 col: a^j
        t[3 + j, 11 + j] += g.a[0]                    # u^j row, a^j col: a^0
        for k in range(3):
            # theta^j row, a^k col: eps_jkm a^m (finite-difference verified)
            t[j, 11 + k] = sum(
                EPS3[j, k, m] * g.a[1 + m] for m in range(3))
    return t
