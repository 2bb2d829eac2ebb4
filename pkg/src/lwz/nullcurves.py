"""Timelike minimal surfaces as sums of two null curves, ``f(u, v) = phi(u) + psi(v)``.

Null coordinates are ``u = x + y`` and ``v = x - y``.  The first fundamental
form is ``I = 2 Lambda du dv`` with ``Lambda = <phi', psi'>`` and the second is
``II = Q du^2 + R dv^2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from ._tol import tol
from .errors import Degenerate, Inconclusive, NotNull
from .paracomplex import lorentz_cross, lorentz_dot

NULL_TOL = 1e-9
INDEPENDENCE_TOL = 1e-8
FLAT_TOL = 1e-8
COLLINEAR_TOL = 1e-8
SAMPLES = 41


@dataclass(frozen=True)
class NullCurve:
    """A curve ``s -> R^3_1`` with first and second derivative channels."""

    value: Callable
    d1: Callable
    d2: Callable
    name: str = ""

    def __call__(self, s):
        return self.value(np.asarray(s, dtype=float))

    def jet(self, s):
        s = np.asarray(s, dtype=float)
        return self.value(s), self.d1(s), self.d2(s)

    def scaled(self, c: float, name: str | None = None) -> "NullCurve":
        return NullCurve(
            lambda s: c * self.value(s), lambda s: c * self.d1(s), lambda s: c * self.d2(s),
            name if name is not None else f"{c}*{self.name}",
        )

    def nullity_residual(self, s) -> float:
        d = self.d1(np.asarray(s, dtype=float))
        scale = np.maximum(1.0, np.sum(d * d, axis=-1))
        return float(np.max(np.abs(lorentz_dot(d, d)) / scale))


def polynomial_curve(coeffs, name: str = "") -> NullCurve:
    """Null curve from per-axis polynomial coefficients (highest power first)."""
    polys = [np.poly1d(c) for c in coeffs]
    d1 = [p.deriv() for p in polys]
    d2 = [p.deriv(2) for p in polys]

    def ev(ps):
        return lambda s: np.stack([p(s) for p in ps], axis=-1)

    return NullCurve(ev(polys), ev(d1), ev(d2), name)


@dataclass(frozen=True)
class NullPatch:
    phi: NullCurve
    psi: NullCurve
    domain: tuple = (-1.0, 1.0, -1.0, 1.0)

    def position(self, u, v):
        return self.phi(u) + self.psi(v)

    def at_xy(self, x, y):
        """Position at the parameter point ``x + j y``."""
        x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
        return self.position(x + y, x - y)

    def sample(self, n: int = SAMPLES, region=None):
        u0, u1, v0, v1 = self.domain if region is None else region
        U, V = np.meshgrid(np.linspace(u0, u1, n), np.linspace(v0, v1, n), indexing="ij")
        return U, V


class NullForms(NamedTuple):
    Lambda: np.ndarray
    Q: np.ndarray
    R: np.ndarray
    K: np.ndarray
    S: np.ndarray
    nu: np.ndarray


def from_null_curves(phi: NullCurve, psi: NullCurve, domain=(-1.0, 1.0, -1.0, 1.0),
                     n: int = SAMPLES) -> NullPatch:
    """Validate two null curves on a sample grid and return the patch."""
    u0, u1, v0, v1 = domain
    us, vs = np.linspace(u0, u1, n), np.linspace(v0, v1, n)
    for curve, s, label in ((phi, us, "phi"), (psi, vs, "psi")):
        res = curve.nullity_residual(s)
        if res > tol(NULL_TOL):
            raise NotNull(f"{label} is not null: max |<c', c'>| = {res:.3g}")
    dphi = phi.d1(us)[:, None, :]
    dpsi = psi.d1(vs)[None, :, :]
    cross = np.linalg.norm(np.cross(dphi, dpsi), axis=-1)
    scale = np.linalg.norm(dphi, axis=-1) * np.linalg.norm(dpsi, axis=-1)
    if np.any(~(cross > tol(INDEPENDENCE_TOL) * scale)):
        raise Degenerate("phi' and psi' are linearly dependent somewhere on the domain")
    return NullPatch(phi, psi, tuple(float(d) for d in domain))


def null_forms(patch: NullPatch, u, v) -> NullForms:
    """``Lambda, Q, R, K`` and the shape operator ``S`` at ``(u, v)``."""
    _, dphi, d2phi = patch.phi.jet(u)
    _, dpsi, d2psi = patch.psi.jet(v)
    dphi, dpsi = np.broadcast_arrays(dphi, dpsi)
    lam = lorentz_dot(dphi, dpsi)
    if np.any(np.abs(lam) <= tol(INDEPENDENCE_TOL) * np.linalg.norm(dphi, axis=-1)
              * np.linalg.norm(dpsi, axis=-1)):
        raise Degenerate("Lambda vanishes: the induced metric is degenerate")
    nu = lorentz_cross(dphi, dpsi) / np.asarray(lam)[..., None]
    Q = lorentz_dot(d2phi, nu)
    R = lorentz_dot(d2psi, nu)
    K = -Q * R / lam**2
    zero = np.zeros_like(lam)
    S = np.stack([np.stack([zero, R / lam], -1), np.stack([Q / lam, zero], -1)], -2)
    return NullForms(lam, Q, R, K, S, nu)


ASSOCIATED = "associated"
CONJUGATE = "conjugate"


def deform(patch: NullPatch, mode: str, theta: float = 0.0) -> NullPatch:
    """Associated family member ``e^t phi + e^-t psi`` or conjugate ``phi - psi``."""
    if mode == ASSOCIATED:
        a, b = np.exp(theta), np.exp(-theta)
    elif mode == CONJUGATE:
        a, b = 1.0, -1.0
    else:
        raise ValueError(f"unknown deformation {mode!r}")
    phi = patch.phi if a == 1.0 else patch.phi.scaled(a)
    psi = patch.psi if b == 1.0 else patch.psi.scaled(b)
    return NullPatch(phi, psi, patch.domain)


@dataclass(frozen=True)
class FlatClass:
    kind: str
    direction: np.ndarray | None = None

    PLANE = "totally-umbilic-plane"
    CYLINDER = "lightlike-cylinder"
    NOT_FLAT = "not-flat"


def flat_classify(patch: NullPatch, region=None, n: int = SAMPLES) -> FlatClass:
    """Decide plane / lightlike cylinder / not flat on a sample grid.

    Hopf coefficients are compared after division by ``sqrt|Lambda|`` and
    ``K`` after multiplication by ``|Lambda|``.
    """
    U, V = patch.sample(n, region)
    forms = null_forms(patch, U, V)
    root = np.sqrt(np.abs(forms.Lambda))
    q = np.abs(forms.Q) / root
    r = np.abs(forms.R) / root
    kn = np.abs(forms.K * forms.Lambda)
    if np.max(kn) > tol(FLAT_TOL):
        return FlatClass(FlatClass.NOT_FLAT)
    q_zero = np.max(q) <= tol(FLAT_TOL)
    r_zero = np.max(r) <= tol(FLAT_TOL)
    if q_zero and r_zero:
        return FlatClass(FlatClass.PLANE)
    if q_zero == r_zero:
        raise Inconclusive("K vanishes but neither Hopf coefficient does")
    curve, s = (patch.psi, V[0, :]) if r_zero else (patch.phi, U[:, 0])
    return FlatClass(FlatClass.CYLINDER, _ruling(curve, s))


def _ruling(curve: NullCurve, s) -> np.ndarray:
    d1, d2 = curve.d1(s), curve.d2(s)
    n1 = np.linalg.norm(d1, axis=-1)
    n2 = np.linalg.norm(d2, axis=-1)
    cross = np.linalg.norm(np.cross(d1, d2), axis=-1)
    if np.any(cross > tol(COLLINEAR_TOL) * n1 * n2):
        raise Inconclusive("ruling curve is not a straight line")
    ref = d1[np.argmax(n1)]
    direction = ref / ref[np.argmax(np.abs(ref))]
    return direction
