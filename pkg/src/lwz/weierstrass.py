"""Timelike minimal surfaces from split-complex Weierstrass data.

A surface is ``f = Re int (-(1 + h^2), j (1 - h^2), 2 h) eta_hat dz`` in
Lorentz-Minkowski space with signature ``(-, +, +)``.  The integrand only
involves the three products ``eta_hat``, ``h eta_hat`` and ``h^2 eta_hat``,
which may be supplied directly when ``h`` has poles that the products do not.

:class:`Surface` also carries an optional split-complex matrix ``A`` so that a
Goursat transform ``Re(A int omega)`` is a surface like any other; its
Weierstrass data are then recovered pointwise from ``A omega``.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import NamedTuple, Optional

import numpy as np

from ._tol import tol
from .errors import FlatRegion, GaussMapMismatch, NotSingular, SingularPoint, ZeroDivisor
from .expr import Node, as_expr, eval_jet, mul, to_text
from .integrate import axis_path, line_integral
from .paracomplex import (
    J,
    Jet2,
    PCMatrix,
    SplitComplex,
    as_split,
    component,
    lorentz_dot,
    lorentz_dot_pc,
    pc_div,
    stack,
)

TAU_SINGULAR = 1e-8
TAU_K = 1e-8
TAU_HOPF = 1e-8
TAU_RATIO = 1e-7
TAU_IMAGE = 1e-6
# points with metric_conditioning below this count as numerically singular
REGULAR_MIN = 0.05


class PointClass(str, Enum):
    REAL_DIAGONALIZABLE = "real-diag"
    COMPLEX_PRINCIPAL = "complex"
    UMBILIC = "umbilic"
    QUASI_UMBILIC = "quasi-umbilic"
    SINGULAR = "singular"


class SingularityClass(str, Enum):
    SHRINKING = "shrinking"
    FOLDING = "folding"
    OTHER = "other"


@dataclass(frozen=True)
class WeierstrassData:
    """Weierstrass data ``(h, eta_hat dz)`` plus the integration constant.

    ``h_eta`` and ``h2_eta`` override the products ``h * eta_hat`` and
    ``h**2 * eta_hat``; supply them in pole-free form when ``h`` is only
    parameromorphic.
    """

    h: Node
    eta_hat: Node
    base_point: SplitComplex = SplitComplex(0.0, 0.0)
    base_value: tuple = (0.0, 0.0, 0.0)
    h_eta: Optional[Node] = None
    h2_eta: Optional[Node] = None

    def __post_init__(self):
        object.__setattr__(self, "h", as_expr(self.h))
        object.__setattr__(self, "eta_hat", as_expr(self.eta_hat))
        object.__setattr__(self, "base_point", as_split(self.base_point))
        object.__setattr__(self, "base_value", tuple(float(c) for c in self.base_value))
        if self.h_eta is not None:
            object.__setattr__(self, "h_eta", as_expr(self.h_eta))
        if self.h2_eta is not None:
            object.__setattr__(self, "h2_eta", as_expr(self.h2_eta))

    @property
    def products(self) -> tuple[Node, Node, Node]:
        h_eta = self.h_eta if self.h_eta is not None else mul(self.h, self.eta_hat)
        h2_eta = (
            self.h2_eta if self.h2_eta is not None else mul(mul(self.h, self.h), self.eta_hat)
        )
        return self.eta_hat, h_eta, h2_eta

    def scaled(self, factor) -> "WeierstrassData":
        """Data ``(h, factor * eta_hat)``; e.g. ``e^{j theta}`` or ``j``."""
        c = as_split(factor)
        eta, h_eta, h2_eta = self.products
        return replace(self, eta_hat=mul(c, eta), h_eta=mul(c, h_eta), h2_eta=mul(c, h2_eta))

    def describe(self) -> dict:
        eta, h_eta, h2_eta = self.products
        return {
            "h": to_text(self.h),
            "eta": to_text(eta),
            "h_eta": to_text(h_eta),
            "h2_eta": to_text(h2_eta),
        }


class GaussJet(NamedTuple):
    eta: Jet2
    h: Jet2


@dataclass
class SurfaceJet:
    """Local geometry at one point or an array of points.

    ``Lambda`` is the null-metric coefficient (``I = 2 Lambda du dv``),
    ``E`` the conformal factor (``I = E (dx^2 - dy^2)``, so ``E = 2 Lambda``),
    ``Q`` and ``R`` the Hopf coefficients (``II = Q du^2 + R dv^2``).
    """

    position: Optional[np.ndarray]
    omega: SplitComplex
    nu: np.ndarray
    E: np.ndarray
    Lambda: np.ndarray
    Q: np.ndarray
    R: np.ndarray
    K: np.ndarray
    H: np.ndarray
    III_residual: np.ndarray
    cls: object
    singular: np.ndarray = field(repr=False, default=None)

    @property
    def shape_operator(self) -> np.ndarray:
        """``S = I^{-1} II`` in null coordinates ``(u, v)``."""
        zero = np.zeros_like(self.Lambda)
        return np.stack(
            [np.stack([zero, self.R / self.Lambda], -1), np.stack([self.Q / self.Lambda, zero], -1)],
            -2,
        )


class Surface:
    """A timelike minimal surface ``Re(A int omega) + const``."""

    def __init__(self, data: WeierstrassData, matrix: Optional[PCMatrix] = None,
                 base_value=None, name: str | None = None):
        self.data = data
        self.matrix = matrix
        if base_value is None:
            base = np.asarray(data.base_value, dtype=float)
            if matrix is not None:
                base = matrix.apply(SplitComplex(base, np.zeros(3))).re
            base_value = base
        self.base_value = np.asarray(base_value, dtype=float)
        self.name = name

    def __repr__(self):
        return f"Surface(name={self.name!r}, data={self.data.describe()}, matrix={self.matrix!r})"

    # -- integrand -------------------------------------------------------

    def _data_products(self, z):
        return tuple(eval_jet(node, z) for node in self.data.products)

    def omega_jets(self, z) -> tuple[SplitComplex, SplitComplex, SplitComplex]:
        """``omega`` and its first two z-derivatives as split-complex 3-vectors."""
        z = as_split(z)
        p0, p1, p2 = self._data_products(z)
        out = []
        for k in ("f", "df", "d2f"):
            a, b, c = getattr(p0, k), getattr(p1, k), getattr(p2, k)
            vec = stack([-(a + c), J * (a - c), 2.0 * b])
            if self.matrix is not None:
                vec = self.matrix.apply(vec)
            out.append(vec)
        return tuple(out)

    def omega(self, z) -> SplitComplex:
        z = as_split(z)
        p0, p1, p2 = (eval_jet(node, z).f for node in self.data.products)
        vec = stack([-(p0 + p2), J * (p0 - p2), 2.0 * p1])
        if self.matrix is not None:
            vec = self.matrix.apply(vec)
        return vec

    def product_jets(self, z) -> tuple[Jet2, Jet2, Jet2]:
        """Jets of ``(eta_hat, h eta_hat, h^2 eta_hat)`` of this surface."""
        z = as_split(z)
        if self.matrix is None:
            return self._data_products(z)
        om, dom, d2om = self.omega_jets(z)
        jets = []
        for vec in (om, dom, d2om):
            o1, o2, o3 = (component(vec, k) for k in range(3))
            jets.append(((-o1 + J * o2) * 0.5, o3 * 0.5, (-o1 - J * o2) * 0.5))
        return tuple(Jet2(jets[0][i], jets[1][i], jets[2][i]) for i in range(3))

    def gauss_jet(self, z) -> GaussJet:
        """Jets of ``eta_hat`` and of the Gauss map ``h``."""
        z = as_split(z)
        if self.matrix is None:
            return GaussJet(eval_jet(self.data.eta_hat, z), eval_jet(self.data.h, z))
        p0, p1, _ = self.product_jets(z)
        return GaussJet(p0, p1 / p0)

    def gauss_map(self, z) -> SplitComplex:
        return self.gauss_jet(z).h.f

    # -- positions -------------------------------------------------------

    def evaluate(self, z, order: str = "xy", waypoints=None) -> np.ndarray:
        """Position ``base + Re int_{z0}^{z} A omega`` along a polyline.

        The default path is axis aligned (x-leg, then y-leg); ``order="yx"``
        reverses the legs.  ``waypoints`` (scalar ``z`` only) inserts extra
        vertices after the base point.
        """
        z = as_split(z)
        if waypoints is not None:
            vertices = [self.data.base_point, *(as_split(w) for w in waypoints), z]
        else:
            vertices = axis_path(self.data.base_point, z, order)
        integral = line_integral(self.omega, vertices)
        return integral.re + self.base_value

    def period(self, z_from, z_to, order: str = "xy") -> SplitComplex:
        """Split-complex integral of ``A omega`` from ``z_from`` to ``z_to``."""
        return line_integral(self.omega, axis_path(z_from, z_to, order))

    # -- first fundamental form ------------------------------------------

    def metric_factor(self, z) -> np.ndarray:
        """Conformal factor ``E`` with ``I = E dz dz_bar = E (dx^2 - dy^2)``.

        Equals ``-(1 - |h|^2)^2 |eta_hat|^2``, written through the
        pole-free products.
        """
        p0, p1, p2 = (j.f for j in self.product_jets(z))
        return -(p0.modulus_sq() - 2.0 * p1.modulus_sq() + p2.modulus_sq())

    def metric_from_omega(self, z) -> np.ndarray:
        """``<omega, conj(omega)> / 2``; the factor of ``dz dz_bar`` in ``I``."""
        om = self.omega(z)
        return 0.5 * lorentz_dot_pc(om, om.conj()).re

    def singular_measure(self, z) -> np.ndarray:
        """``|1 - |h|^2|``, zero on the singular set.

        Where ``h`` itself is undefined (0/0 in ``h eta / eta``) the value
        falls back to ``sqrt(|E| / scale)`` from the pole-free products.
        """
        z = as_split(z)
        try:
            return np.abs(1.0 - self.gauss_map(z).modulus_sq())
        except ZeroDivisor:
            if np.ndim(z.re) == 0:
                return self._measure_from_products(z)
        flat = SplitComplex(np.ravel(z.re).astype(float), np.ravel(z.im).astype(float))
        out = np.empty(flat.re.shape)
        for i in range(out.size):
            zi = SplitComplex(float(flat.re[i]), float(flat.im[i]))
            try:
                out[i] = abs(1.0 - self.gauss_map(zi).modulus_sq())
            except ZeroDivisor:
                out[i] = self._measure_from_products(zi)
        return out.reshape(np.shape(z.re))

    def _measure_from_products(self, z) -> float:
        p = [j.f for j in self.product_jets(z)]
        E = -(p[0].modulus_sq() - 2.0 * p[1].modulus_sq() + p[2].modulus_sq())
        scale = sum(float(q.re) ** 2 + float(q.im) ** 2 for q in p)
        if scale == 0.0:
            raise ZeroDivisor("all Weierstrass products vanish")
        return float(np.sqrt(abs(E) / scale))

    def metric_conditioning(self, z) -> np.ndarray:
        """``sqrt(|E| / sum |P_k|^2)`` with ``P = (eta, h eta, h^2 eta)``.

        Compares the Lorentzian size of the tangent vectors with their
        Euclidean size.  It vanishes on the singular set and is small where
        the tangent plane is nearly lightlike; there any curvature residual
        is dominated by roundoff.
        """
        p = [j.f for j in self.product_jets(z)]
        E = -(p[0].modulus_sq() - 2.0 * p[1].modulus_sq() + p[2].modulus_sq())
        scale = sum(np.asarray(q.re, dtype=float) ** 2 + np.asarray(q.im, dtype=float) ** 2 for q in p)
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.where(scale > 0, np.sqrt(np.abs(E) / scale), 0.0)

    def is_regular(self, z) -> np.ndarray:
        return self.metric_conditioning(z) >= REGULAR_MIN

    # -- normal and curvature --------------------------------------------

    def unit_normal(self, z) -> np.ndarray:
        g = self.gauss_jet(z)
        m = 1.0 - g.h.f.modulus_sq()
        if np.any(np.abs(m) <= tol(TAU_SINGULAR)):
            raise SingularPoint("unit normal undefined where |h|^2 = 1")
        return _normal_from_h(g.h.f, m)

    def curvature_jet(self, z, with_position: bool = True, on_singular: str = "raise") -> SurfaceJet:
        """Fundamental forms, Hopf coefficients, curvatures and point class.

        ``on_singular="mark"`` returns NaN curvature and class ``SINGULAR``
        at singular points instead of raising :class:`SingularPoint`.  It
        does the same at poles of the Gauss map.
        """
        z = as_split(z)
        try:
            g = self.gauss_jet(z)
        except ZeroDivisor:
            if on_singular != "mark" or np.ndim(z.re) == 0:
                raise
            return self._curvature_jet_masked(z, with_position)
        h, dh, eta = g.h.f, g.h.df, g.eta.f
        m = np.asarray(1.0 - h.modulus_sq(), dtype=float)
        singular = np.abs(m) <= tol(TAU_SINGULAR)
        if np.any(singular) and on_singular == "raise":
            raise SingularPoint("point on the singular set |h|^2 = 1")

        with np.errstate(divide="ignore", invalid="ignore"):
            nu = _normal_from_h(h, m)
            # II = Re(c dz^2) for the normal above
            c = -2.0 * (eta * dh)
            Q = 0.5 * (c.re + c.im)
            R = 0.5 * (c.re - c.im)
            E = -(m**2) * eta.modulus_sq()
            Lam = 0.5 * E
            K = -Q * R / Lam**2

            om, dom, _ = self.omega_jets(z)
            fx, fy = np.asarray(om.re), np.asarray(om.im)
            fxx, fxy = np.asarray(dom.re), np.asarray(dom.im)
            fyy = np.asarray((J * (J * dom)).re)
            E1, F1, G1 = lorentz_dot(fx, fx), lorentz_dot(fx, fy), lorentz_dot(fy, fy)
            e2, f2, g2 = lorentz_dot(fxx, nu), lorentz_dot(fxy, nu), lorentz_dot(fyy, nu)
            H = (e2 * G1 - 2.0 * f2 * F1 + g2 * E1) / (2.0 * (E1 * G1 - F1**2))

            # with K = det(S) = -QR/Lambda^2 and tr S = 0, Cayley-Hamilton
            # gives III = <S., S.> = -K I
            nu_x, nu_y = _normal_partials(h, m, dh)
            r1 = lorentz_dot(nu_x, nu_x) + K * E1
            r2 = lorentz_dot(nu_x, nu_y) + K * F1
            r3 = lorentz_dot(nu_y, nu_y) + K * G1
            scale = np.abs(K * E1) + np.finfo(float).tiny
            III_res = np.maximum(np.maximum(np.abs(r1), np.abs(r2)), np.abs(r3)) / scale

        cls = classify(K, Q, R, Lam, m)
        if np.any(singular):
            K, H, Q, R, III_res = (np.where(singular, np.nan, a) for a in (K, H, Q, R, III_res))
        position = self.evaluate(z) if with_position else None
        return SurfaceJet(position, om, nu, E, Lam, Q, R, K, H, III_res, cls, singular)

    def _curvature_jet_masked(self, z: SplitComplex, with_position: bool) -> SurfaceJet:
        # poles of h found point by point, then swapped for a regular sample
        re, im = np.asarray(z.re, dtype=float), np.asarray(z.im, dtype=float)
        pole = np.zeros(re.shape, dtype=bool)
        for idx in np.ndindex(re.shape):
            try:
                self.gauss_jet(SplitComplex(re[idx], im[idx]))
            except ZeroDivisor:
                pole[idx] = True
        if pole.all():
            raise ZeroDivisor("Gauss map undefined at every sample point")
        k = np.flatnonzero(~pole.ravel())[0]
        safe = SplitComplex(np.where(pole, re.ravel()[k], re), np.where(pole, im.ravel()[k], im))
        jet = self.curvature_jet(safe, with_position=False, on_singular="mark")
        for name in ("E", "Lambda", "Q", "R", "K", "H", "III_residual"):
            setattr(jet, name, np.where(pole, np.nan, getattr(jet, name)))
        jet.nu = np.where(pole[..., None], np.nan, jet.nu)
        cls = np.asarray(jet.cls, dtype=object).copy()
        cls[pole] = PointClass.SINGULAR
        jet.cls = cls
        jet.singular = jet.singular | pole
        jet.omega = self.omega(z)
        jet.position = self.evaluate(z) if with_position else None
        return jet


def _normal_from_h(h: SplitComplex, m) -> np.ndarray:
    # sign of the last entry chosen so that the normal is orthogonal to
    # omega and stereographic projection from (0, 0, 1) returns h
    p, q = np.asarray(h.re, dtype=float), np.asarray(h.im, dtype=float)
    return np.stack([2 * p / m, 2 * q / m, -(2.0 - m) / m], axis=-1)


def _normal_partials(h: SplitComplex, m, dh: SplitComplex):
    p, q = np.asarray(h.re, dtype=float), np.asarray(h.im, dtype=float)
    m2 = m * m
    d_p = np.stack([2 / m + 4 * p * p / m2, 4 * p * q / m2, -4 * p / m2], axis=-1)
    d_q = np.stack([-4 * p * q / m2, 2 / m - 4 * q * q / m2, 4 * q / m2], axis=-1)
    hx = dh
    hy = J * dh
    nu_x = d_p * np.asarray(hx.re)[..., None] + d_q * np.asarray(hx.im)[..., None]
    nu_y = d_p * np.asarray(hy.re)[..., None] + d_q * np.asarray(hy.im)[..., None]
    return nu_x, nu_y


def classify(K, Q, R, Lam, m):
    """Point class from curvature data; vectorised over arrays.

    Hopf coefficients are compared after dividing by ``sqrt|Lambda|`` and
    the curvature after multiplying by ``|Lambda|``, so the class does not
    change when ``eta_hat`` is scaled by a constant.
    """
    K, Q, R, Lam, m = np.broadcast_arrays(*(np.asarray(a, dtype=float) for a in (K, Q, R, Lam, m)))
    out = np.empty(K.shape, dtype=object)
    tau_s, tau_k, tau_h = tol(TAU_SINGULAR), tol(TAU_K), tol(TAU_HOPF)
    with np.errstate(divide="ignore", invalid="ignore"):
        root = np.sqrt(np.abs(Lam))
        qn, rn = np.abs(Q) / root, np.abs(R) / root
        kn = K * np.abs(Lam)
    for idx in np.ndindex(K.shape):
        if not np.abs(m[idx]) > tau_s:
            out[idx] = PointClass.SINGULAR
        elif qn[idx] <= tau_h and rn[idx] <= tau_h:
            out[idx] = PointClass.UMBILIC
        elif abs(kn[idx]) <= tau_k and ((qn[idx] > tau_h) != (rn[idx] > tau_h)):
            out[idx] = PointClass.QUASI_UMBILIC
        elif kn[idx] <= 0:
            out[idx] = PointClass.REAL_DIAGONALIZABLE
        else:
            out[idx] = PointClass.COMPLEX_PRINCIPAL
    return out[()] if out.ndim == 0 else out


def as_surface(obj) -> Surface:
    if isinstance(obj, Surface):
        return obj
    if isinstance(obj, WeierstrassData):
        return Surface(obj)
    raise TypeError(f"expected Surface or WeierstrassData, got {type(obj).__name__}")


# -- module-level operations ------------------------------------------------

def omega_at(data, z) -> SplitComplex:
    return as_surface(data).omega(z)


def evaluate(data, z, order: str = "xy", waypoints=None) -> np.ndarray:
    return as_surface(data).evaluate(z, order=order, waypoints=waypoints)


def metric_factor(data, z) -> np.ndarray:
    return as_surface(data).metric_factor(z)


def unit_normal(data, z) -> np.ndarray:
    return as_surface(data).unit_normal(z)


def curvature_jet(data, z, **kwargs) -> SurfaceJet:
    return as_surface(data).curvature_jet(z, **kwargs)


def grid(domain, nx: int, ny: int) -> SplitComplex:
    """Parameter grid over ``(x0, x1, y0, y1)``, shape ``(nx, ny)``."""
    x0, x1, y0, y1 = domain
    xs, ys = np.linspace(x0, x1, nx), np.linspace(y0, y1, ny)
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    return SplitComplex(X, Y)


def singularity_classify(data, curve) -> SingularityClass:
    """Classify a curve of singular points as shrinking, folding or other.

    ``curve`` is an ordered 1-d array of parameter points on the singular set.
    Shrinking: the image of the curve is a single point (diameter below
    ``1e-6`` of the size of a neighbouring strip).  Folding: the derivative
    of the surface across the curve vanishes while the image is a curve.
    """
    surf = as_surface(data)
    curve = as_split(curve)
    xs, ys = np.atleast_1d(curve.re).astype(float), np.atleast_1d(curve.im).astype(float)
    if xs.size < 3:
        raise ValueError("need at least three curve samples")
    pts = SplitComplex(xs, ys)
    try:
        measure = surf.singular_measure(pts)
    except ZeroDivisor as exc:
        raise NotSingular(f"Gauss map undefined on the curve: {exc}") from exc
    if np.any(measure > tol(TAU_SINGULAR)):
        raise NotSingular(f"curve leaves the singular set (max |1-|h|^2| = {measure.max():.3g})")

    tx, ty = np.gradient(xs), np.gradient(ys)
    tn = np.hypot(tx, ty)
    tx, ty = tx / tn, ty / tn
    nx, ny = -ty, tx

    image = surf.evaluate(pts)
    diam = _diameter(image)
    length = float(np.sum(np.hypot(np.diff(xs), np.diff(ys))))
    delta = 0.1 * length
    strip = [surf.evaluate(SplitComplex(xs + s * delta * nx, ys + s * delta * ny)) for s in (-1, 1)]
    reference = _diameter(np.concatenate([image, *strip]))
    if diam <= tol(TAU_IMAGE) * reference:
        return SingularityClass.SHRINKING

    om = surf.omega(pts)
    fx, fy = np.asarray(om.re), np.asarray(om.im)
    d_normal = fx * nx[:, None] + fy * ny[:, None]
    d_tangent = fx * tx[:, None] + fy * ty[:, None]
    if np.max(np.linalg.norm(d_normal, axis=-1)) <= tol(TAU_IMAGE) * np.max(
        np.linalg.norm(d_tangent, axis=-1)
    ):
        return SingularityClass.FOLDING
    return SingularityClass.OTHER


def _diameter(points: np.ndarray) -> float:
    pts = np.asarray(points).reshape(-1, 3)
    diff = pts[:, None, :] - pts[None, :, :]
    return float(np.max(np.linalg.norm(diff, axis=-1)))


@dataclass(frozen=True)
class IsometryClass:
    """Outcome of comparing two surfaces with the same Gauss map.

    For ``ISOMETRIC`` the ratio ``eta2 / eta1`` equals ``sign * e^{j theta}``;
    for ``ANTI_ISOMETRIC`` it equals ``sign * j e^{j theta}``.
    """

    kind: str
    theta: float = float("nan")
    sign: int = 0
    ratio: Optional[SplitComplex] = None

    ISOMETRIC = "isometric"
    ANTI_ISOMETRIC = "anti-isometric"
    UNRELATED = "unrelated"


def isometry_class_compare(d1, d2, region) -> IsometryClass:
    """Decide whether two surfaces sharing ``h`` are (anti-)isometric.

    The ratio of the ``eta_hat`` coefficients must be constant with squared
    modulus ``+1`` (isometric) or ``-1`` (anti-isometric).  The criterion is
    only valid without flat points, so a flat sample raises
    :class:`FlatRegion`.
    """
    s1, s2 = as_surface(d1), as_surface(d2)
    pts = as_split(region)
    pts = SplitComplex(np.ravel(pts.re).astype(float), np.ravel(pts.im).astype(float))
    for s in (s1, s2):
        jet = s.curvature_jet(pts, with_position=False)
        kn = np.abs(jet.K * jet.Lambda)
        if np.any(~(kn > tol(TAU_K))):
            raise FlatRegion("surface has flat points (K = 0) in the region")
    g1, g2 = s1.gauss_jet(pts), s2.gauss_jet(pts)
    dh = g2.h.f - g1.h.f
    size = 1.0 + np.hypot(g1.h.f.re, g1.h.f.im)
    if np.any(np.hypot(dh.re, dh.im) > tol(1e-8) * size):
        raise GaussMapMismatch("the Gauss maps differ on the region")
    r = pc_div(g2.eta.f, g1.eta.f)
    mean = SplitComplex(float(np.mean(r.re)), float(np.mean(r.im)))
    dev = float(np.max(np.hypot(r.re - mean.re, r.im - mean.im)))
    tau_c = tol(TAU_RATIO)
    if dev >= tau_c:
        return IsometryClass(IsometryClass.UNRELATED)
    m = mean.modulus_sq()
    if abs(m - 1.0) <= tau_c:
        sign = 1 if mean.re > 0 else -1
        return IsometryClass(IsometryClass.ISOMETRIC, float(np.arctanh(mean.im / mean.re)), sign, mean)
    if abs(m + 1.0) <= tau_c:
        sign = 1 if mean.im > 0 else -1
        return IsometryClass(
            IsometryClass.ANTI_ISOMETRIC, float(np.arctanh(mean.re / mean.im)), sign, mean
        )
    return IsometryClass(IsometryClass.UNRELATED, ratio=mean)
