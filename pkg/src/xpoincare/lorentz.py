"""4x4 Lorentz machinery: rotations R(theta), boosts L(u), Lambda = L R.

Parameterization: boosts carry the spatial part u of a four-velocity with
u0 = sqrt(1 + |u|^2); rapidity beta = artanh(|u|/u0) along u-hat.  Rotations
carry an axis-angle vector theta, canonical range |theta| <= pi.

Generator conventions (normative, they fix every sign downstream):

    (J_m)^j_k = eps_mjk          spatial block only
    (K_m)^0_k = (K_m)^k_0 = -delta_mk

so R(theta) = exp(theta . J) and L(u) = exp(beta . K).  Consequently
L(u) e0 = (u0, -u) and R((0,0,pi/2)) has R^1_2 = +1, R^2_1 = -1.
"""

from __future__ import annotations

import numpy as np

from .algebra import ETA, EPS3


class DecompositionError(ValueError):
    """Input matrix violates a decomposition precondition."""


# --- analytic scalar coefficients -----------------------------------------
# c(q), s(q), h(q) are cos/ sinc/ versine-like functions of the signed
# squared angle q: trig for q < 0, hyperbolic for q > 0, entire in q.
# Series taken below |q| = 1e-3 so that h avoids the (c-1)/q cancellation;
# truncation error there is < 1e-18.

_SERIES_WINDOW = 1e-3


def trig_c(q: float) -> float:
    if abs(q) < _SERIES_WINDOW:
        return 1.0 + q * (1 / 2 + q * (1 / 24 + q * (1 / 720 + q / 40320)))
    r = np.sqrt(abs(q))
    return float(np.cosh(r) if q > 0 else np.cos(r))


def trig_s(q: float) -> float:
    if abs(q) < _SERIES_WINDOW:
        return 1.0 + q * (1 / 6 + q * (1 / 120 + q * (1 / 5040 + q / 362880)))
    r = np.sqrt(abs(q))
    return float(np.sinh(r) / r if q > 0 else np.sin(r) / r)


def trig_h(q: float) -> float:
    if abs(q) < _SERIES_WINDOW:
        return 0.5 + q * (1 / 24 + q * (1 / 720 + q * (1 / 40320 + q / 3628800)))
    return (trig_c(q) - 1.0) / q


# --- generators ------------------------------------------------------------

def rotation_generators() -> np.ndarray:
    """(3, 4, 4) array of J_m."""
    g = np.zeros((3, 4, 4))
    g[:, 1:, 1:] = EPS3.astype(float)
    return g


def boost_generators() -> np.ndarray:
    """(3, 4, 4) array of K_m."""
    g = np.zeros((3, 4, 4))
    for m in range(3):
        g[m, 0, 1 + m] = -1.0
        g[m, 1 + m, 0] = -1.0
    return g


_JGEN = rotation_generators()


# --- basic maps ------------------------------------------------------------

def u0_of(u) -> float:
    u = np.asarray(u, dtype=float)
    return float(np.sqrt(1.0 + u @ u))


def rapidity(u) -> np.ndarray:
    """Rapidity 3-vector beta with u = u-hat * sinh|beta|."""
    u = np.asarray(u, dtype=float)
    nu = np.linalg.norm(u)
    if nu == 0.0:
        return np.zeros(3)
    return u / nu * float(np.arcsinh(nu))


def velocity_of_rapidity(beta) -> np.ndarray:
    beta = np.asarray(beta, dtype=float)
    nb = np.linalg.norm(beta)
    if nb == 0.0:
        return np.zeros(3)
    return beta / nb * float(np.sinh(nb))


def rotation_matrix(theta) -> np.ndarray:
    """4x4 rotation exp(theta . J); time row and column untouched."""
    theta = np.asarray(theta, dtype=float)
    a = np.einsum("m,mjk->jk", theta, _JGEN)
    q = -float(theta @ theta)
    return np.eye(4) + trig_s(q) * a + trig_h(q) * (a @ a)


def rotation3(theta) -> np.ndarray:
    """Spatial 3x3 block of rotation_matrix."""
    return rotation_matrix(theta)[1:, 1:]


def boost_matrix(u) -> np.ndarray:
    """4x4 pure boost exp(beta . K), written in closed form in u.

    Symmetric; L^0_0 = u0 and L e0 = (u0, -u).
    """
    u = np.asarray(u, dtype=float)
    u0 = u0_of(u)
    L = np.eye(4)
    L[0, 0] = u0
    L[0, 1:] = -u
    L[1:, 0] = -u
    L[1:, 1:] += np.outer(u, u) / (1.0 + u0)
    return L


def lorentz_matrix(u, theta) -> np.ndarray:
    """General transformation Lambda = L(u) R(theta), boost times rotation."""
    return boost_matrix(u) @ rotation_matrix(theta)


def metric_residual(M) -> float:
    """max |M^T eta M - eta|."""
    M = np.asarray(M, dtype=float)
    return float(np.abs(M.T @ ETA @ M - ETA).max())


def lorentz_inverse_params(u, theta):
    """Parameters of the inverse element: (-R3(-theta) u, -theta)."""
    u = np.asarray(u, dtype=float)
    theta = np.asarray(theta, dtype=float)
    return -(rotation3(-theta) @ u), -theta


# --- parameter recovery -----------------------------------------------------

def _canonical_sign(v: np.ndarray) -> np.ndarray:
    nz = np.nonzero(np.abs(v) > 1e-9)[0]
    if len(nz) and v[nz[0]] < 0:
        return -v
    return v


def axis_angle_of_rotation3(R3) -> np.ndarray:
    """Axis-angle vector of a 3x3 rotation in the exp(theta . J) convention.

    Canonical output: |theta| in [0, pi]; at |theta| = pi the axis sign is
    normalized (first nonzero component positive).  The angle is recovered
    from atan2 of the antisymmetric and trace parts, which stays accurate at
    the pi branch point; there the axis comes from the symmetric part.
    """
    R3 = np.asarray(R3, dtype=float)
    # w = sin(phi) * axis in this convention
    w = 0.5 * np.array([R3[1, 2] - R3[2, 1],
                        R3[2, 0] - R3[0, 2],
                        R3[0, 1] - R3[1, 0]])
    c = (np.trace(R3) - 1.0) / 2.0
    s = float(np.linalg.norm(w))
    phi = float(np.arctan2(s, c))
    if s >= 1e-4 or phi < 2.0:
        return w / trig_s(-phi * phi)
    # near pi: axis^2 from the symmetric part, sign from w when resolvable
    nn = ((R3 + R3.T) / 2.0 - c * np.eye(3)) / (1.0 - c)
    i = int(np.argmax(np.diag(nn)))
    ax = nn[:, i] / np.sqrt(max(nn[i, i], 1e-300))
    ax = ax / np.linalg.norm(ax)
    d = float(w @ ax)
    if abs(d) > 1e-13:
        ax = ax * np.sign(d)
    else:
        ax = _canonical_sign(ax)
    return phi * ax


def lorentz_decompose(M, tol: float = 1e-8):
    """Recover (u, theta) with lorentz_matrix(u, theta) = M.

    Rejects input that is not a proper orthochronous Lorentz matrix:
    metric residual >= tol, M^0_0 < 1, or det != +1.
    """
    M = np.asarray(M, dtype=float)
    if M.shape != (4, 4):
        raise DecompositionError(f"expected a 4x4 matrix, got {M.shape}")
    res = metric_residual(M)
    if res >= tol:
        raise DecompositionError(
            f"metric residual {res:.3e} exceeds {tol:.1e}: not a Lorentz matrix")
    if M[0, 0] < 1.0 - 1e-9:
        raise DecompositionError(
            f"M^0_0 = {M[0, 0]:.6g} < 1: not orthochronous")
    det = float(np.linalg.det(M))
    if abs(det - 1.0) > 1e-6:
        raise DecompositionError(f"det = {det:.6g} != +1: improper")
    u = -M[1:, 0].copy()
    R = boost_matrix(-u) @ M
    off = max(float(np.abs(R[0, 1:]).max()), float(np.abs(R[1:, 0]).max()),
              abs(float(R[0, 0]) - 1.0))
    if off > 1e-7:
        raise DecompositionError(
            f"boost stripping left time-space coupling {off:.3e}")
    theta = axis_angle_of_rotation3(R[1:, 1:])
    return u, theta
