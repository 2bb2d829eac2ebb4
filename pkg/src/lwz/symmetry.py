"""Space-group elements ``f(g z) = O f(z) + t`` and how Goursat transforms move them.

A domain isometry ``g`` is an affine map ``a z + b`` (orientation preserving)
or ``a conj(z) + b`` (reversing).  Differentiating the symmetry relation gives
a relation between integrands::

    preserving:  omega(g z) a = O omega(z)
    reversing:   omega(g z) a = O conj(omega(z))

``detect`` solves that relation for ``O`` by least squares and then fits the
translation from positions; ``propagate`` predicts the linear part on a
transformed surface as ``A O A^-1`` or ``A O conj(A)^-1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ._tol import tol
from .errors import IllConditioned, NotALineSymmetry, Singular
from .goursat import ConformalMatrix, conformal_check, is_lorentz, special, transform
from .paracomplex import I12, J, PCMatrix, SplitComplex, as_split, is_zero_divisor
from .weierstrass import Surface, as_surface

PRESERVING = "preserving"
REVERSING = "reversing"

TAU_SYM = 1e-6
TAU_OMEGA = 1e-8
TAU_REAL = 1e-8
SAMPLE_POINTS = 8


@dataclass(frozen=True)
class DomainIsometry:
    a: SplitComplex = SplitComplex(1.0, 0.0)
    b: SplitComplex = SplitComplex(0.0, 0.0)
    conjugating: bool = False
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "a", as_split(self.a))
        object.__setattr__(self, "b", as_split(self.b))

    def __call__(self, z) -> SplitComplex:
        z = as_split(z)
        return self.a * (z.conj() if self.conjugating else z) + self.b

    @property
    def orientation(self) -> str:
        return REVERSING if self.conjugating else PRESERVING

    @classmethod
    def from_name(cls, name: str) -> "DomainIsometry":
        """``zbar``, ``negz``, ``negzbar`` or ``shift:a+bj``."""
        from .goursat import parse_literal

        if name == "zbar":
            return cls(1.0, 0.0, True, "zbar")
        if name == "negz":
            return cls(-1.0, 0.0, False, "negz")
        if name == "negzbar":
            return cls(-1.0, 0.0, True, "negzbar")
        if name.startswith("shift:"):
            return cls(1.0, parse_literal(name[6:]), False, name)
        raise ValueError(f"unknown domain map {name!r}")


@dataclass
class SpaceGroupElement:
    g: DomainIsometry
    O: np.ndarray
    t: np.ndarray
    orientation: str
    omega_residual: float = float("nan")
    position_residual: float = float("nan")
    label: str = ""

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "map": self.g.label,
            "orientation": self.orientation,
            "O": self.O.tolist(),
            "t": self.t.tolist(),
            "omega_residual": self.omega_residual,
            "position_residual": self.position_residual,
        }


def sample_points(region=(-0.9, 0.9, -0.9, 0.9), n: int = SAMPLE_POINTS, seed: int = 7) -> SplitComplex:
    """Generic (non-symmetric) sample points in a rectangle."""
    x0, x1, y0, y1 = region
    rng = np.random.default_rng(seed)
    return SplitComplex(rng.uniform(x0, x1, n), rng.uniform(y0, y1, n))


def _pullback_pairs(surf: Surface, g: DomainIsometry, pts: SplitComplex):
    lhs = surf.omega(g(pts)) * g.a
    rhs = surf.omega(pts)
    if g.conjugating:
        rhs = rhs.conj()
    return lhs, rhs


def pullback_residual(data, g: DomainIsometry, O, points=None) -> float:
    """Max norm of ``omega(g z) a - O omega(z)`` (or ``O conj(omega)``)."""
    surf = as_surface(data)
    pts = sample_points() if points is None else as_split(points)
    O = np.asarray(O, dtype=float)
    lhs, rhs = _pullback_pairs(surf, g, pts)
    dre = lhs.re - rhs.re @ O.T
    dim = lhs.im - rhs.im @ O.T
    return float(np.max(np.sqrt(np.sum(dre**2 + dim**2, axis=-1))))


def detect(data, g: DomainIsometry, points=None, label: str = "") -> Optional[SpaceGroupElement]:
    """Find ``(O, t)`` with ``f(g z) = O f(z) + t``, or ``None`` if none fits."""
    surf = as_surface(data)
    pts = sample_points() if points is None else as_split(points)
    if np.size(pts.re) < 6:
        raise IllConditioned("need at least six sample points")
    lhs, rhs = _pullback_pairs(surf, g, pts)
    X = np.concatenate([rhs.re.reshape(-1, 3), rhs.im.reshape(-1, 3)])
    Y = np.concatenate([lhs.re.reshape(-1, 3), lhs.im.reshape(-1, 3)])
    sol, _, rank, sv = np.linalg.lstsq(X, Y, rcond=None)
    if rank < 3 or sv[-1] <= 1e-10 * sv[0]:
        raise IllConditioned("sample covectors do not determine the linear part")
    O = sol.T
    scale = max(1.0, float(np.max(np.abs(Y))))
    om_res = pullback_residual(surf, g, O, pts)
    if om_res > tol(TAU_OMEGA) * scale or not is_lorentz(O, atol=1e-8):
        return None
    p = surf.evaluate(pts)
    q = surf.evaluate(g(pts))
    diff = q - p @ O.T
    t = diff.mean(axis=0)
    pos_res = float(np.max(np.linalg.norm(diff - t, axis=-1)))
    allpts = np.concatenate([p, q])
    diag = float(np.linalg.norm(allpts.max(axis=0) - allpts.min(axis=0)))
    if pos_res > tol(TAU_SYM) * max(diag, 1.0):
        return None
    return SpaceGroupElement(g, O, t, g.orientation, om_res, pos_res, label)


def propagate(M, O, orientation: str) -> Optional[np.ndarray]:
    """Linear part of the same domain map on ``f_A``, or ``None`` if it does not survive."""
    A = conformal_check(M).A
    O = np.asarray(O, dtype=float)
    if is_zero_divisor(A.det()):
        raise Singular("A is not invertible over the split-complex numbers")
    if orientation == PRESERVING:
        right = A.inv()
    elif orientation == REVERSING:
        Abar = A.conj()
        if is_zero_divisor(Abar.det()):
            raise Singular("conj(A) is not invertible")
        right = Abar.inv()
    else:
        raise ValueError(f"unknown orientation {orientation!r}")
    out = A @ PCMatrix.real(O) @ right
    if not out.is_real(TAU_REAL):
        return None
    if not is_lorentz(out.re, atol=1e-9):
        return None
    return out.re.copy()


def translation_lift(data, shift, M=None, z0=0.0) -> np.ndarray:
    """Translation of ``f_A`` under ``z -> z + shift`` as ``Re(A P)``.

    ``P`` is the split-complex period ``int_{z0}^{z0 + shift} omega``; the
    orientation-preserving symmetry ``O = I`` survives every transform with
    this translation.
    """
    surf = as_surface(data)
    z0 = as_split(z0)
    period = surf.period(z0, z0 + as_split(shift))
    if M is not None:
        period = conformal_check(M).apply(period)
    return np.asarray(period.re, dtype=float)


@dataclass
class FamilyRow:
    theta: float
    family: str
    predicted: Optional[np.ndarray]
    detected: Optional[SpaceGroupElement]

    @property
    def survives(self) -> bool:
        return self.detected is not None

    def to_dict(self) -> dict:
        return {
            "theta": self.theta,
            "family": self.family,
            "predicted_O": None if self.predicted is None else self.predicted.tolist(),
            "detected_O": None if self.detected is None else self.detected.O.tolist(),
            "survives": self.survives,
        }


@dataclass
class FamilyReport:
    base: SpaceGroupElement
    rows: list = field(default_factory=list)
    pattern_holds: bool = True
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "base": self.base.to_dict(),
            "rows": [r.to_dict() for r in self.rows],
            "pattern_holds": self.pattern_holds,
            "notes": self.notes,
        }


DEFAULT_THETAS = (-1.0, -0.5, 0.0, 0.5, 1.0)


def family_report(data, g: DomainIsometry, thetas=DEFAULT_THETAS, points=None) -> FamilyReport:
    """Which members of the associated family and its conjugates keep ``g``.

    Preserving symmetries should survive on every ``f_theta`` and
    ``fhat_theta`` with unchanged ``O``; reversing ones only on ``f`` itself
    and on ``fhat`` (with ``-O``).
    """
    surf = as_surface(data)
    base = detect(surf, g, points)
    if base is None:
        raise ValueError("g is not a symmetry of the surface")
    report = FamilyReport(base)
    for theta in thetas:
        for fam, name in (("associated", "assoc"), ("anti", "anti")):
            M = special(name, theta)
            pred = propagate(M, base.O, base.orientation)
            found = detect(transform(surf, M), g, points)
            report.rows.append(FamilyRow(float(theta), fam, pred, found))
            if (pred is None) != (found is None):
                report.pattern_holds = False
                report.notes.append(f"prediction and detection disagree at {fam} theta={theta}")
            elif pred is not None and not np.allclose(pred, found.O, atol=1e-7):
                report.pattern_holds = False
                report.notes.append(f"linear parts differ at {fam} theta={theta}")
            if base.orientation == PRESERVING:
                expected = base.O
            elif theta == 0.0:
                expected = base.O if fam == "associated" else -base.O
            else:
                expected = None
            if (expected is None) != (found is None) or (
                expected is not None and not np.allclose(expected, found.O, atol=1e-7)
            ):
                report.pattern_holds = False
                report.notes.append(f"unexpected outcome at {fam} theta={theta}")
    return report


LINE = np.diag([1.0, -1.0, -1.0])


def line_frame(O) -> np.ndarray:
    """``P`` in O(1,2) with ``O = P diag(1,-1,-1) P^-1``.

    ``O`` must be an involution fixing a timelike line; the columns of ``P``
    are a Lorentz-orthonormal basis adapted to it.
    """
    O = np.asarray(O, dtype=float)
    atol = 1e-7
    if not is_lorentz(O, atol=1e-8) or not np.allclose(O @ O, np.eye(3), atol=atol):
        raise NotALineSymmetry("linear part is not a Lorentz involution")
    plus = 0.5 * (np.eye(3) + O)
    if abs(np.trace(plus) - 1.0) > atol:
        raise NotALineSymmetry("linear part does not fix exactly a line")
    col = plus[:, np.argmax(np.linalg.norm(plus, axis=0))]
    norm = col @ I12 @ col
    if not norm < -atol:
        raise NotALineSymmetry("fixed line is not timelike")
    e0 = col / np.sqrt(-norm)
    minus = 0.5 * (np.eye(3) - O)
    basis = []
    for k in np.argsort(-np.linalg.norm(minus, axis=0)):
        w = minus[:, k].copy()
        for b in basis:
            w = w - (w @ I12 @ b) * b
        n2 = w @ I12 @ w
        if n2 > atol:
            basis.append(w / np.sqrt(n2))
        if len(basis) == 2:
            break
    if len(basis) < 2:
        raise NotALineSymmetry("could not build an adapted frame")
    P = np.column_stack([e0, *basis])
    return P


def quadruple(data, g: DomainIsometry, points=None) -> list[SpaceGroupElement]:
    """Line, planar, point and folded symmetries of ``f``, ``f_J``, ``f_D``, ``f_JD``.

    ``g`` must be a reversing symmetry of ``f`` whose linear part fixes a
    timelike line.  ``D`` is taken in the frame adapted to that line
    (``P D P^-1``), which is what makes the point and fold cases appear.
    """
    if not g.conjugating:
        raise NotALineSymmetry("the map must reverse orientation")
    surf = as_surface(data)
    base = detect(surf, g, points, label="line")
    if base is None:
        raise NotALineSymmetry("g is not a symmetry of the surface")
    P = line_frame(base.O)
    D = PCMatrix.real(P) @ special("D").A @ PCMatrix.real(np.linalg.inv(P))
    D = conformal_check(D, "D")
    Jm = special("J")
    out = [base]
    for label, M, expected in (
        ("planar", Jm, -base.O),
        ("point", D, -np.eye(3)),
        ("folded", Jm @ D, np.eye(3)),
    ):
        pred = propagate(M, base.O, REVERSING)
        found = detect(transform(surf, M), g, points, label=label)
        if pred is None or found is None:
            raise NotALineSymmetry(f"{label} symmetry did not survive")
        if not (np.allclose(pred, expected, atol=1e-7) and np.allclose(found.O, expected, atol=1e-7)):
            raise NotALineSymmetry(f"{label} symmetry has an unexpected linear part")
        out.append(found)
    return out
