"""Named example surfaces with closed forms and known symmetries."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .expr import Call, Var, add, lit, mul, sub
from .goursat import dual_data, lopez_ros_data, lopez_ros_matrix
from .nullcurves import NullCurve, NullPatch, from_null_curves, polynomial_curve
from .paracomplex import E_MINUS, E_PLUS, J, SplitComplex, pcirc, stack
from .weierstrass import Surface, WeierstrassData

SQRT3 = float(np.sqrt(3.0))
PI = float(np.pi)


@dataclass
class CatalogEntry:
    name: str
    surface: Surface
    default_domain: tuple
    closed_form: Optional[Callable] = None
    null_patch: Optional[NullPatch] = None
    # (domain map name, expected linear part, expected translation or None)
    symmetries: list = field(default_factory=list)
    description: str = ""

    @property
    def data(self) -> WeierstrassData:
        return self.surface.data


def enneper_closed(x, y):
    return np.stack([-x - x**3 / 3 - x * y**2, y - x**2 * y - y**3 / 3, x**2 + y**2], axis=-1)


def helicoid_closed(x, y):
    return np.stack([-y - x**2 * y - y**3 / 3, y - x**2 * y - y**3 / 3, x**2 + y**2], axis=-1)


def parabolic_catenoid_closed(x, y):
    return np.stack([-x - x**3 / 3 - x * y**2, x - x**3 / 3 - x * y**2, 2 * x * y], axis=-1)


def catenoid_closed(x, y):
    return np.stack(
        [-x / 2, 0.25 * np.cos(2 * x) * np.sin(2 * y), -0.25 * np.cos(2 * x) * np.cos(2 * y)],
        axis=-1,
    )


def bonnet_closed(lam: float):
    A = lopez_ros_matrix(lam)

    def f(x, y):
        z2 = SplitComplex(2 * np.asarray(x, dtype=float), 2 * np.asarray(y, dtype=float))
        z = SplitComplex(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
        phi = stack([z * -0.5, J * pcirc("psin", z2).f * 0.25, pcirc("pcos", z2).f * -0.25])
        return A.apply(phi).re

    return f


def _z():
    return Var()


def _pexp(scale: float = 1.0):
    arg = _z() if scale == 1.0 else mul(scale, _z())
    return Call("pexp", arg)


def enneper_data() -> WeierstrassData:
    return WeierstrassData("z", "1")


def catenoid_data() -> WeierstrassData:
    return WeierstrassData(
        "ptan(z)", "0.5*pcos(z)^2", base_value=(0.0, 0.0, -0.25),
        h_eta="0.5*psin(z)*pcos(z)", h2_eta="0.5*psin(z)^2",
    )


# f1 / f2: the flat pair with equal metrics.  In idempotent components
# (e = (1+j)/2 carries u, e_bar carries v) the products are
# phi'(u)-parts on e and psi'(v)-parts on e_bar.

def flat_plane_data() -> WeierstrassData:
    eta = sub(mul(E_PLUS, mul((2 + SQRT3) / 2, _pexp())), E_MINUS)
    h_eta = add(mul(E_PLUS, mul(0.5, _pexp())), E_MINUS)
    h2_eta = sub(mul(E_PLUS, mul((2 - SQRT3) / 2, _pexp())), E_MINUS)
    hu, hv = 1.0 / (2.0 + SQRT3), -1.0
    h = lit(SplitComplex.from_null(hu, hv))
    return WeierstrassData(h, eta, base_value=(-1.0, SQRT3 / 2, 0.5), h_eta=h_eta, h2_eta=h2_eta)


def flat_bscroll_data() -> WeierstrassData:
    e_eta = add(add(1.0, mul(0.75, _pexp())), mul(SQRT3, _pexp(0.5)))
    e_h2 = sub(add(1.0, mul(0.75, _pexp())), mul(SQRT3, _pexp(0.5)))
    e_h = add(-1.0, mul(0.75, _pexp()))
    eta = sub(mul(E_PLUS, e_eta), E_MINUS)
    h_eta = add(mul(E_PLUS, e_h), E_MINUS)
    h2_eta = sub(mul(E_PLUS, e_h2), E_MINUS)
    from .expr import div

    return WeierstrassData(
        div(h_eta, eta), eta, base_value=(-0.75, 2 * SQRT3, 0.75), h_eta=h_eta, h2_eta=h2_eta
    )


def _ruling_curve() -> NullCurve:
    return NullCurve(
        lambda s: np.stack([s, 0 * s, s], axis=-1),
        lambda s: np.stack([1 + 0 * s, 0 * s, 1 + 0 * s], axis=-1),
        lambda s: np.zeros(np.shape(s) + (3,)),
        "psi",
    )


def flat_plane_patch(domain=(-1.0, 1.0, -1.0, 1.0)) -> NullPatch:
    d = np.array([-2.0, SQRT3, 1.0]) / 2
    phi = NullCurve(
        lambda s: np.exp(s)[..., None] * d,
        lambda s: np.exp(s)[..., None] * d,
        lambda s: np.exp(s)[..., None] * d,
        "phi1",
    )
    return from_null_curves(phi, _ruling_curve(), domain)


def flat_bscroll_patch(domain=(-1.0, 1.0, -1.0, 1.0)) -> NullPatch:
    phi = NullCurve(
        lambda s: np.stack(
            [-s - 0.75 * np.exp(s), 2 * SQRT3 * np.exp(s / 2), -s + 0.75 * np.exp(s)], axis=-1
        ),
        lambda s: np.stack(
            [-1 - 0.75 * np.exp(s), SQRT3 * np.exp(s / 2), -1 + 0.75 * np.exp(s)], axis=-1
        ),
        lambda s: np.stack(
            [-0.75 * np.exp(s), 0.5 * SQRT3 * np.exp(s / 2), 0.75 * np.exp(s)], axis=-1
        ),
        "phi2",
    )
    return from_null_curves(phi, _ruling_curve(), domain)


def enneper_patch(domain=(-0.9, 0.9, -0.9, 0.9)) -> NullPatch:
    # u-curve  (-u - u^3/3, u - u^3/3, u^2) / 2, v-curve with the middle sign flipped
    phi = polynomial_curve([[-1 / 6, 0, -0.5, 0], [-1 / 6, 0, 0.5, 0], [0.5, 0, 0]], "phi")
    psi = polynomial_curve([[-1 / 6, 0, -0.5, 0], [1 / 6, 0, -0.5, 0], [0.5, 0, 0]], "psi")
    return from_null_curves(phi, psi, domain)


UNIT = (-1.0, 1.0, -1.0, 1.0)
CATENOID_DOMAIN = (-0.7, 0.7, -0.7, 0.7)

NEG_Z = np.diag([-1.0, -1.0, 1.0])
Z_BAR = np.diag([1.0, -1.0, 1.0])
NEG_Z_BAR = np.diag([-1.0, 1.0, 1.0])


def bonnet(lam: float) -> CatalogEntry:
    data = lopez_ros_data(catenoid_data(), lam)
    return CatalogEntry(
        f"bonnet:{lam:g}", Surface(data, name=f"bonnet:{lam:g}"), CATENOID_DOMAIN, bonnet_closed(lam),
        symmetries=[
            ("shift:3.141592653589793", np.eye(3), [-PI / 4 * (lam + 1 / lam), 0.0, 0.0]),
            ("shift:3.141592653589793j", np.eye(3), [0.0, -PI / 4 * (lam - 1 / lam), 0.0]),
            ("negz", NEG_Z, [0.0, 0.0, 0.0]),
        ],
        description="Lopez-Ros deformation of the elliptic catenoid",
    )


def _build() -> dict:
    en = enneper_data()
    dual = dual_data(en)
    entries = [
        CatalogEntry(
            "enneper", Surface(en, name="enneper"), UNIT, enneper_closed, enneper_patch(),
            symmetries=[("negz", NEG_Z, None), ("zbar", Z_BAR, None), ("negzbar", NEG_Z_BAR, None)],
            description="Lorentzian Enneper surface, (h, eta) = (z, dz)",
        ),
        CatalogEntry(
            "parabolic-helicoid", Surface(dual, name="parabolic-helicoid"), UNIT, helicoid_closed,
            symmetries=[("zbar", NEG_Z, None), ("negzbar", np.eye(3), None), ("negz", NEG_Z, None)],
            description="dual of the Enneper surface",
        ),
        CatalogEntry(
            "parabolic-catenoid", Surface(dual.scaled(J), name="parabolic-catenoid"), UNIT,
            parabolic_catenoid_closed,
            symmetries=[("zbar", -NEG_Z, None), ("negzbar", -np.eye(3), None), ("negz", NEG_Z, None)],
            description="conjugate of the dual of the Enneper surface",
        ),
        CatalogEntry(
            "elliptic-catenoid", Surface(catenoid_data(), name="elliptic-catenoid"),
            CATENOID_DOMAIN, catenoid_closed,
            symmetries=[
                ("shift:3.141592653589793", np.eye(3), [-PI / 2, 0.0, 0.0]),
                ("shift:3.141592653589793j", np.eye(3), [0.0, 0.0, 0.0]),
                ("negz", NEG_Z, [0.0, 0.0, 0.0]),
            ],
            description="(h, eta) = (ptan z, pcos^2 z dz / 2)",
        ),
        CatalogEntry(
            "flat-plane", Surface(flat_plane_data(), name="flat-plane"), UNIT,
            lambda x, y: flat_plane_patch().at_xy(x, y), flat_plane_patch(),
            description="timelike plane f1 = phi1(u) + (v, 0, v)",
        ),
        CatalogEntry(
            "flat-bscroll", Surface(flat_bscroll_data(), name="flat-bscroll"), UNIT,
            lambda x, y: flat_bscroll_patch().at_xy(x, y), flat_bscroll_patch(),
            description="flat B-scroll f2 = phi2(u) + (v, 0, v), isometric to f1",
        ),
    ]
    return {e.name: e for e in entries}


_CACHE: dict = {}

NAMES = (
    "enneper", "parabolic-helicoid", "parabolic-catenoid", "elliptic-catenoid",
    "bonnet(λ)", "flat-plane", "flat-bscroll",
)


def entries() -> dict:
    if not _CACHE:
        _CACHE.update(_build())
    return _CACHE


def get(name: str) -> CatalogEntry:
    """Look up an entry; ``bonnet:1.5`` or ``bonnet(1.5)`` select the Bonnet member."""
    key = name.strip().lower()
    for prefix in ("bonnet:", "bonnet(", "bonnet="):
        if key.startswith(prefix):
            lam = float(key[len(prefix):].rstrip(")"))
            return bonnet(lam)
    if key == "bonnet":
        return bonnet(1.5)
    try:
        return entries()[key]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}") from None


def all_entries(bonnet_params=(1.5,)) -> list:
    return list(entries().values()) + [bonnet(lam) for lam in bonnet_params]
