"""Goursat transformations ``f_A = Re(A int omega)`` for ``A`` in CO(1,2; C').

``A`` is conformal when ``A^t I12 A = c I12`` for a split-complex ``c`` with
``|c|^2 != 0``.  Such ``A`` maps null vectors to null vectors, so ``A omega``
is again the integrand of a timelike minimal surface.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._tol import tol
from .errors import DomainError, LightlikeFactor, NotConformal
from .expr import mul, sub
from .paracomplex import (
    E_MINUS,
    E_PLUS,
    I12,
    J,
    PCMatrix,
    SplitComplex,
    as_split,
    is_zero_divisor,
    pexp,
)
from .weierstrass import Surface, WeierstrassData, as_surface

CONFORMAL_TOL = 1e-10
LORENTZ_TOL = 1e-10


@dataclass(frozen=True)
class ConformalMatrix:
    A: PCMatrix
    c: SplitComplex
    name: str = ""

    def __matmul__(self, other: "ConformalMatrix") -> "ConformalMatrix":
        name = f"{self.name}{other.name}" if self.name and other.name else ""
        return ConformalMatrix(self.A @ other.A, self.c * other.c, name)

    def apply(self, v: SplitComplex) -> SplitComplex:
        return self.A.apply(v)


@dataclass(frozen=True)
class LorentzMatrix:
    O: np.ndarray

    def __post_init__(self):
        O = np.asarray(self.O, dtype=float).reshape(3, 3)
        object.__setattr__(self, "O", O)
        if not is_lorentz(O):
            raise ValueError("matrix does not preserve the Lorentz product")

    def __array__(self, dtype=None, copy=None):
        return self.O if dtype is None else self.O.astype(dtype)


def is_lorentz(O, atol: float = LORENTZ_TOL) -> bool:
    O = np.asarray(O, dtype=float)
    scale = max(1.0, float(np.max(np.abs(O))) ** 2)
    return bool(np.max(np.abs(O.T @ I12 @ O - I12)) <= tol(atol) * scale)


def _as_pcmatrix(A) -> PCMatrix:
    if isinstance(A, ConformalMatrix):
        return A.A
    if isinstance(A, PCMatrix):
        return A
    return PCMatrix.real(np.asarray(A, dtype=float))


def conformal_check(A, name: str = "") -> ConformalMatrix:
    """Verify ``A^t I12 A = c I12`` and return ``A`` with its factor ``c``."""
    if isinstance(A, ConformalMatrix):
        return A
    A = _as_pcmatrix(A)
    G = A.T @ PCMatrix.real(I12) @ A
    diag = [G.entry(0, 0) * -1.0, G.entry(1, 1), G.entry(2, 2)]
    c = SplitComplex(
        float(np.mean([d.re for d in diag])), float(np.mean([d.im for d in diag]))
    )
    scale = max(1.0, A.norm() ** 2)
    atol = tol(CONFORMAL_TOL) * scale
    off = np.abs(np.concatenate([G.re[~np.eye(3, dtype=bool)], G.im[~np.eye(3, dtype=bool)]]))
    if off.size and np.max(off) > atol:
        raise NotConformal(f"A^t I12 A has off-diagonal entries up to {np.max(off):.3g}")
    for d in diag:
        if abs(d.re - c.re) > atol or abs(d.im - c.im) > atol:
            raise NotConformal("A^t I12 A is not a multiple of I12")
    if is_zero_divisor(c) or c.re == 0.0 and c.im == 0.0:
        raise LightlikeFactor(f"conformal factor {c!r} is lightlike")
    return ConformalMatrix(A, c, name)


def _scalar_matrix(s: SplitComplex) -> PCMatrix:
    return PCMatrix.diag([s, s, s])


def lopez_ros_matrix(lam: float) -> PCMatrix:
    if not lam > 0:
        raise DomainError(f"Lopez-Ros parameter must be positive, got {lam}")
    a = 0.5 * (lam + 1.0 / lam)
    b = 0.5 * (lam - 1.0 / lam)
    return PCMatrix(
        [[a, 0.0, 0.0], [0.0, a, 0.0], [0.0, 0.0, 1.0]],
        [[0.0, b, 0.0], [b, 0.0, 0.0], [0.0, 0.0, 0.0]],
    )


def special(name: str, param: float | None = None) -> ConformalMatrix:
    """One of ``J``, ``D``, ``AssocJ(theta)``, ``AntiJ(theta)``, ``LopezRos(lambda)``."""
    key = name.lower()
    if key == "j":
        return conformal_check(_scalar_matrix(J), "J")
    if key == "d":
        return conformal_check(PCMatrix.diag([J, 1.0, 1.0]), "D")
    if key in ("assocj", "assoc"):
        rot = pexp(SplitComplex(0.0, float(param))).f
        return conformal_check(_scalar_matrix(rot), f"J({param})")
    if key in ("antij", "anti"):
        rot = J * pexp(SplitComplex(0.0, float(param))).f
        return conformal_check(_scalar_matrix(rot), f"Jhat({param})")
    if key in ("lopezros", "lopez-ros"):
        return conformal_check(lopez_ros_matrix(float(param)), f"A({param})")
    raise ValueError(f"unknown special matrix {name!r}")


def parse_matrix_spec(text: str) -> ConformalMatrix:
    """``J``, ``D``, ``assoc:t``, ``anti:t``, ``lopezros:l`` or nine ``a+bj`` entries."""
    text = text.strip()
    if ":" in text:
        name, _, arg = text.partition(":")
        return special(name, float(arg))
    if text in ("J", "D", "j", "d"):
        return special(text)
    entries = [parse_literal(e) for e in text.split(",")]
    return conformal_check(PCMatrix.from_entries(entries))


def parse_literal(text: str) -> SplitComplex:
    """A constant split-complex literal such as ``1``, ``-0.5j`` or ``1-0.5j``."""
    from .expr import eval_jet, parse

    node = parse(text.strip())
    val = eval_jet(node, SplitComplex(0.0, 0.0))
    if not (val.df.re == 0 and val.df.im == 0):
        raise ValueError(f"{text!r} is not a constant")
    return SplitComplex(float(val.f.re), float(val.f.im))


def transform(data, M, name: str | None = None) -> Surface:
    """The Goursat transform ``Re(M A int omega) + Re(M A base)``.

    Transforms compose: applying ``M`` to a surface that already carries a
    matrix ``A`` multiplies the matrices.  The new base value is ``Re`` of
    the total matrix applied to the original (real) base value.
    """
    M = conformal_check(M)
    surf = as_surface(data)
    total = M.A if surf.matrix is None else M.A @ surf.matrix
    return Surface(surf.data, total, name=name)


def dual_expressions(h, eta_hat):
    """``(h_D, eta_hat_D)`` in the quotient form, requiring ``1/h``."""
    from .expr import add, as_expr, div

    h, eta_hat = as_expr(h), as_expr(eta_hat)
    h_d = sub(mul(E_PLUS, h), div(E_MINUS, h))
    eta_d = mul(sub(div(E_PLUS, h), mul(E_MINUS, h)), mul(h, eta_hat))
    return h_d, eta_d


def dual_data(data: WeierstrassData) -> WeierstrassData:
    """Weierstrass data of the dual surface, in pole-free product form.

    In idempotent components ``h_D = (h, -1/h)``, so ``eta_D = e eta - e_bar h^2 eta``,
    ``h_D eta_D = h eta`` and ``h_D^2 eta_D = e h^2 eta - e_bar eta``.  The
    base value is ``Re(D base)`` so that the result coincides with
    ``transform(data, D)``.
    """
    eta, h_eta, h2_eta = data.products
    h_d, _ = dual_expressions(data.h, data.eta_hat)
    eta_d = sub(mul(E_PLUS, eta), mul(E_MINUS, h2_eta))
    h2_eta_d = sub(mul(E_PLUS, h2_eta), mul(E_MINUS, eta))
    b = data.base_value
    return WeierstrassData(h_d, eta_d, data.base_point, (0.0, b[1], b[2]), h_eta, h2_eta_d)


def lopez_ros_data(data: WeierstrassData, lam: float) -> WeierstrassData:
    """Data ``(lam h, eta / lam)``; ``h eta`` is unchanged, so is ``II``."""
    if not lam > 0:
        raise DomainError(f"Lopez-Ros parameter must be positive, got {lam}")
    if lam == 1.0:
        return data
    eta, h_eta, h2_eta = data.products
    base = lopez_ros_matrix(lam).apply(SplitComplex(np.asarray(data.base_value), np.zeros(3)))
    return WeierstrassData(
        mul(lam, data.h), mul(1.0 / lam, eta), data.base_point, tuple(base.re),
        h_eta, mul(lam, h2_eta),
    )
