"""Line integrals of split-complex vector fields along polylines."""
from __future__ import annotations

import numpy as np
from scipy.integrate import quad_vec

from ._tol import tol
from .errors import DomainError, PathError, QuadratureFailure, ZeroDivisor
from .paracomplex import SplitComplex, as_split

EPSABS = 1e-10


def axis_path(z0, z1, order: str = "xy") -> list[SplitComplex]:
    """Vertices of the axis-aligned polyline from ``z0`` to ``z1``.

    ``order="xy"`` walks the x-leg first, ``"yx"`` the y-leg first.
    """
    z0, z1 = as_split(z0), as_split(z1)
    shape = np.broadcast_shapes(np.shape(z0.re), np.shape(z1.re))
    x0 = np.broadcast_to(z0.re, shape)
    y0 = np.broadcast_to(z0.im, shape)
    x1 = np.broadcast_to(z1.re, shape)
    y1 = np.broadcast_to(z1.im, shape)
    if order == "xy":
        corner = SplitComplex(x1, y0)
    elif order == "yx":
        corner = SplitComplex(x0, y1)
    else:
        raise ValueError(f"unknown path order {order!r}")
    return [SplitComplex(x0, y0), corner, SplitComplex(x1, y1)]


def line_integral(field, vertices, epsabs: float = EPSABS) -> SplitComplex:
    """Integrate ``field(z) dz`` along the polyline through ``vertices``.

    ``field`` maps a split-complex point (scalar or array) to a split-complex
    vector whose last axis has length 3.  Each leg is integrated with
    adaptive Gauss-Kronrod quadrature on the vectorised integrand.
    """
    total = None
    for a, b in zip(vertices[:-1], vertices[1:]):
        leg = _leg(field, as_split(a), as_split(b), tol(epsabs))
        total = leg if total is None else total + leg
    return total


def _leg(field, a: SplitComplex, b: SplitComplex, epsabs: float) -> SplitComplex:
    delta = b - a
    d = SplitComplex(np.asarray(delta.re)[..., None], np.asarray(delta.im)[..., None])
    shape = None

    def integrand(t):
        nonlocal shape
        z = SplitComplex(a.re + t * delta.re, a.im + t * delta.im)
        try:
            w = field(z) * d
        except (ZeroDivisor, DomainError) as exc:
            raise PathError(f"integrand undefined on the path at t={t:.6g}: {exc}") from exc
        re, im = np.asarray(w.re, dtype=float), np.asarray(w.im, dtype=float)
        shape = re.shape
        out = np.concatenate([re.ravel(), im.ravel()])
        if not np.all(np.isfinite(out)):
            raise PathError(f"integrand is not finite on the path at t={t:.6g}")
        return out

    res, err, info = quad_vec(
        integrand, 0.0, 1.0, epsabs=epsabs, epsrel=1e-13, norm="max", limit=20000,
        full_output=True,
    )
    if info.status != 0 and err > epsabs:
        raise QuadratureFailure(f"{info.message} (error estimate {err:.3g})")
    n = res.size // 2
    return SplitComplex(res[:n].reshape(shape), res[n:].reshape(shape))
