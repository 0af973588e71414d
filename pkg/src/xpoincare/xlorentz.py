"""Extended Lorentz group as 5x5 matrices acting on the (P0..P3, Gs) block.

Every group matrix here preserves the bilinear form

    B(x, y) = x_Gs y_Gs - eta^{bn} x_Pb y_Pn,     B = diag(+1, -1, -1, -1, +1)

and factors as W(omega) L(u) R(theta): Dirac boost times embedded Lorentz
transformation.  The Dirac boost closed form is

    W_P^P  = delta + (c(q) - 1) omega_mu omega^beta / q
    W_P^Gs = -s(q) omega_mu          W_Gs^P = -s(q) omega^beta
    W_Gs^Gs = c(q)

with q = omega_nu omega^nu; trig branch for q < 0 (c = cos, s = sin r / r of
r = sqrt(-q)), hyperbolic continuation for q > 0, entire through q = 0.  The
trig sector is compact: W is 2pi-periodic in r, and the canonical range after
decomposition is r in [0, pi].

Geometry note for decomposition: W(omega) L R maps e_Gs to the Gs-column
(-s(q) omega, c(q)); matrices whose (Gs, Gs) entry is below -1 lie outside
the image of this factorization (the group is larger than one chart) and are
rejected, not approximated.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import ETA
from .lorentz import (DecompositionError, lorentz_decompose,
                      lorentz_inverse_params, lorentz_matrix, trig_h, trig_s)

BFORM = np.zeros((5, 5))
BFORM[:4, :4] = -ETA
BFORM[4, 4] = 1.0
BFORM.flags.writeable = False

NULL_BRANCH_TOL = 1e-12


def omega_square(omega) -> float:
    """q = omega_nu omega^nu under eta = diag(-1, 1, 1, 1)."""
    omega = np.asarray(omega, dtype=float)
    return float(omega @ (ETA @ omega))


def omega_branch(omega, null_tol: float = NULL_BRANCH_TOL) -> str:
    """Branch label of omega: 'trig', 'hyperbolic', or 'null'."""
    q = omega_square(omega)
    if abs(q) < null_tol:
        return "null"
    return "hyperbolic" if q > 0 else "trig"


def dirac_generator5(omega) -> np.ndarray:
    """Infinitesimal Dirac boost on the (P, Gs) block."""
    omega = np.asarray(omega, dtype=float)
    g = np.zeros((5, 5))
    g[:4, 4] = -omega
    g[4, :4] = -(ETA @ omega)
    return g


def dirac_boost_mat5(omega) -> np.ndarray:
    """Closed-form Dirac boost W(omega) = exp(dirac_generator5(omega))."""
    g = dirac_generator5(omega)
    q = omega_square(omega)
    return np.eye(5) + trig_s(q) * g + trig_h(q) * (g @ g)


def embed_lorentz5(u, theta) -> np.ndarray:
    """Lorentz transformation on the P block, identity on the Gs slot."""
    e = np.eye(5)
    e[:4, :4] = lorentz_matrix(u, theta)
    return e


@dataclass(frozen=True)
class XLParams:
    """Extended-Lorentz parameters (omega, u, theta) of W(omega) L(u) R(theta)."""

    omega: np.ndarray = field(default_factory=lambda: np.zeros(4))
    u: np.ndarray = field(default_factory=lambda: np.zeros(3))
    theta: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        for name, n in (("omega", 4), ("u", 3), ("theta", 3)):
            v = np.asarray(getattr(self, name), dtype=float).copy()
            if v.shape != (n,):
                raise ValueError(f"{name} must have shape ({n},), got {v.shape}")
            if not np.all(np.isfinite(v)):
                raise ValueError(f"{name} must be finite")
            v.flags.writeable = False
            object.__setattr__(self, name, v)

    @classmethod
    def identity(cls) -> "XLParams":
        return cls()


def xl_matrix(p: XLParams) -> np.ndarray:
    """5x5 matrix W(omega) L(u) R(theta)."""
    return dirac_boost_mat5(p.omega) @ embed_lorentz5(p.u, p.theta)


def b_residual(M) -> float:
    """max |M^T B M - B|."""
    M = np.asarray(M, dtype=float)
    return float(np.abs(M.T @ BFORM @ M - BFORM).max())


def _canonical_sign(v: np.ndarray) -> np.ndarray:
    nz = np.nonzero(np.abs(v) > 1e-9)[0]
    if len(nz) and v[nz[0]] < 0:
        return -v
    return v


def _omega_from_gs_column(v: np.ndarray) -> np.ndarray:
    """Invert (-s(q) omega, c(q)) for omega; canonical trig range [0, pi].

    The magnitude is recovered from the sine side (pseudo-norm of the P part
    via arcsinh / atan2), which stays accurate where arccos/arccosh lose
    digits.  Near the trig branch point r = pi the column carries no usable
    direction; the direction is then taken from the vanishing P part when it
    has signal and from a canonical unit direction at the exact point, which
    is valid because at r = pi the residual factor is absorbed into the
    Lorentz block.
    """
    vP = v[:4]
    c = float(v[4])
    qv = float(vP @ (ETA @ vP))  # = -sin^2 r (trig) or +sinh^2 chi (hyperbolic)
    if qv > 0.0 and c > 1.0:
        chi = float(np.arcsinh(np.sqrt(qv)))
        return -vP / trig_s(chi * chi)
    if qv < 0.0:
        sphi = float(np.sqrt(-qv))
        phi = float(np.arctan2(sphi, c))
        if sphi >= 1e-4 or phi < 2.0:
            return -vP / trig_s(-phi * phi)
        d = -vP
        qd = float(d @ (ETA @ d))
        if sphi > 1e-12 and qd < 0.0:
            w = phi * d / np.sqrt(-qd)
        else:
            w = _canonical_sign(phi * np.array([1.0, 0.0, 0.0, 0.0]))
        return w
    # |q| ~ 0: s ~ 1, one self-consistency refinement of q = qv / s(q)^2
    q = qv / trig_s(qv) ** 2
    return -vP / trig_s(q)


def xl_decompose(M, b_tol: float = 1e-8, block_tol: float = 1e-7) -> XLParams:
    """Factor a 5x5 matrix as W(omega) L(u) R(theta) and return the parameters.

    Preconditions: M preserves B within b_tol and lies in the image of
    xl_matrix.  Matrices outside the reachable set (including any with
    M[Gs, Gs] < -1) fail the block-diagonality gate after the Dirac boost is
    stripped and are rejected with a diagnostic.
    """
    M = np.asarray(M, dtype=float)
    if M.shape != (5, 5):
        raise DecompositionError(f"expected a 5x5 matrix, got {M.shape}")
    res = b_residual(M)
    if res >= b_tol:
        raise DecompositionError(
            f"B-form residual {res:.3e} exceeds {b_tol:.1e}: not in the group")
    omega = _omega_from_gs_column(M[:, 4].copy())
    E = dirac_boost_mat5(-omega) @ M
    off = max(float(np.abs(E[:4, 4]).max()), float(np.abs(E[4, :4]).max()),
              abs(float(E[4, 4]) - 1.0))
    if off > block_tol:
        raise DecompositionError(
            f"residual {off:.3e} after Dirac-boost stripping "
            f"(branch '{omega_branch(omega)}'): matrix outside the reachable set")
    u, theta = lorentz_decompose(E[:4, :4])
    return XLParams(omega, u, theta)


def xl_compose(p2: XLParams, p1: XLParams) -> XLParams:
    """Canonical parameters of the product: matrix multiply, then factor."""
    return xl_decompose(xl_matrix(p2) @ xl_matrix(p1))


def xl_inverse(p: XLParams) -> XLParams:
    """Closed-form parameters of the inverse element.

    theta' = -theta, u' = -R3(-theta) u, and omega transforms as a covector
    under the Lorentz part: omega' = -Lambda(u, theta)^{-1} omega (column
    action), so that W(omega') = E^{-1} W(-omega) E.
    """
    lam = lorentz_matrix(p.u, p.theta)
    u_inv, theta_inv = lorentz_inverse_params(p.u, p.theta)
    omega_inv = -np.linalg.solve(lam, p.omega)
    return XLParams(omega_inv, u_inv, theta_inv)
