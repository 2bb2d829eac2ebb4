"""Split-complex (paracomplex) numbers, 2-jets and 3x3 matrices over them.

A split-complex number is ``x + j y`` with ``j**2 == +1``.  Every type here
accepts either Python floats or numpy arrays for its real components, so the
same code evaluates one point or a whole parameter grid.

Besides the ``(re, im)`` components, each number has null (idempotent)
components ``u = re + im`` and ``v = re - im``.  In that basis multiplication
is componentwise, which is what the tests use as an independent oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Union

import numpy as np

from ._tol import tol
from .errors import DomainError, Singular, ZeroDivisor

Real = Union[float, np.ndarray]

ZERO_DIVISOR_TOL = 1e-12


def _is_real_scalar(x) -> bool:
    return isinstance(x, (int, float, np.floating, np.integer, np.ndarray))


@dataclass(frozen=True, eq=False)
class SplitComplex:
    re: Real = 0.0
    im: Real = 0.0

    # make ``ndarray <op> SplitComplex`` dispatch to our reflected operators
    __array_ufunc__ = None

    @classmethod
    def coerce(cls, value) -> "SplitComplex":
        if isinstance(value, SplitComplex):
            return value
        if isinstance(value, complex):
            raise TypeError("complex numbers (i**2 = -1) are not split-complex")
        if _is_real_scalar(value):
            return cls(value, 0.0 * value if isinstance(value, np.ndarray) else 0.0)
        return NotImplemented

    @classmethod
    def from_null(cls, u: Real, v: Real) -> "SplitComplex":
        return cls((u + v) / 2, (u - v) / 2)

    @property
    def u(self) -> Real:
        return self.re + self.im

    @property
    def v(self) -> Real:
        return self.re - self.im

    @property
    def shape(self):
        return np.shape(self.re)

    def conj(self) -> "SplitComplex":
        return SplitComplex(self.re, -self.im)

    def modulus_sq(self) -> Real:
        return self.re * self.re - self.im * self.im

    def __getitem__(self, index) -> "SplitComplex":
        return SplitComplex(np.asarray(self.re)[index], np.asarray(self.im)[index])

    def __add__(self, other):
        other = SplitComplex.coerce(other)
        if other is NotImplemented:
            return other
        return SplitComplex(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = SplitComplex.coerce(other)
        if other is NotImplemented:
            return other
        return SplitComplex(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = SplitComplex.coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if _is_real_scalar(other):
            return SplitComplex(self.re * other, self.im * other)
        other = SplitComplex.coerce(other)
        if other is NotImplemented:
            return other
        return SplitComplex(
            self.re * other.re + self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_real_scalar(other):
            return SplitComplex(self.re / other, self.im / other)
        other = SplitComplex.coerce(other)
        if other is NotImplemented:
            return other
        return pc_div(self, other)

    def __rtruediv__(self, other):
        other = SplitComplex.coerce(other)
        if other is NotImplemented:
            return other
        return pc_div(other, self)

    def __neg__(self) -> "SplitComplex":
        return SplitComplex(-self.re, -self.im)

    def __pos__(self) -> "SplitComplex":
        return self

    def __pow__(self, n: int) -> "SplitComplex":
        if not isinstance(n, (int, np.integer)):
            raise TypeError("only integer powers are supported")
        if n < 0:
            return pc_div(SplitComplex(1.0, 0.0), self ** (-n))
        # null components raise independently
        return SplitComplex.from_null(self.u ** n, self.v ** n)

    def __eq__(self, other) -> bool:
        other = SplitComplex.coerce(other)
        if other is NotImplemented:
            return False
        return bool(np.array_equal(self.re, other.re) and np.array_equal(self.im, other.im))

    def __hash__(self):
        return hash((float(self.re), float(self.im)))

    def __repr__(self) -> str:
        if np.ndim(self.re) == 0:
            return f"SplitComplex({float(self.re)!r}, {float(self.im)!r})"
        return f"SplitComplex(re={self.re!r}, im={self.im!r})"

    def __iter__(self):
        # tuple-like unpacking: ``x, y = z``
        yield self.re
        yield self.im


ONE = SplitComplex(1.0, 0.0)
J = SplitComplex(0.0, 1.0)
# idempotents: E_PLUS * E_PLUS == E_PLUS, E_PLUS * E_MINUS == 0
E_PLUS = SplitComplex(0.5, 0.5)
E_MINUS = SplitComplex(0.5, -0.5)


def as_split(value) -> SplitComplex:
    out = SplitComplex.coerce(value)
    if out is NotImplemented:
        if isinstance(value, (tuple, list)) and len(value) == 2:
            return SplitComplex(float(value[0]), float(value[1]))
        raise TypeError(f"cannot interpret {value!r} as a split-complex number")
    return out


def modulus_sq(z) -> Real:
    """``z * conj(z) = x**2 - y**2``; negative for timelike directions."""
    return as_split(z).modulus_sq()


def is_zero_divisor(w: SplitComplex) -> np.ndarray:
    w = as_split(w)
    m = np.abs(w.modulus_sq())
    scale = w.re * w.re + w.im * w.im
    return m <= tol(ZERO_DIVISOR_TOL) * scale


def pc_div(z, w) -> SplitComplex:
    z, w = as_split(z), as_split(w)
    bad = is_zero_divisor(w)
    if np.any(bad):
        if np.ndim(bad) == 0:
            raise ZeroDivisor(f"division by a lightlike split-complex number {w!r}")
        raise ZeroDivisor(f"division by a lightlike split-complex number at {int(np.sum(bad))} of {bad.size} points")
    m = w.modulus_sq()
    num = z * w.conj()
    return SplitComplex(num.re / m, num.im / m)


class NullPair(NamedTuple):
    u: Real
    v: Real


def null_split(z) -> NullPair:
    z = as_split(z)
    return NullPair(z.re + z.im, z.re - z.im)


def recompose(pair: NullPair) -> SplitComplex:
    u, v = pair
    return SplitComplex((u + v) / 2, (u - v) / 2)


@dataclass(frozen=True)
class Jet2:
    """Value, first and second z-derivative of a paraholomorphic function."""

    f: SplitComplex
    df: SplitComplex
    d2f: SplitComplex

    @classmethod
    def constant(cls, c) -> "Jet2":
        c = as_split(c)
        zero = c * 0.0
        return cls(c, zero, zero)

    @classmethod
    def variable(cls, z) -> "Jet2":
        z = as_split(z)
        zero = z * 0.0
        return cls(z, zero + 1.0, zero)

    @classmethod
    def coerce(cls, value) -> "Jet2":
        if isinstance(value, Jet2):
            return value
        return cls.constant(value)

    def __add__(self, other):
        o = Jet2.coerce(other)
        return Jet2(self.f + o.f, self.df + o.df, self.d2f + o.d2f)

    __radd__ = __add__

    def __sub__(self, other):
        o = Jet2.coerce(other)
        return Jet2(self.f - o.f, self.df - o.df, self.d2f - o.d2f)

    def __rsub__(self, other):
        return Jet2.coerce(other) - self

    def __neg__(self):
        return Jet2(-self.f, -self.df, -self.d2f)

    def __mul__(self, other):
        o = Jet2.coerce(other)
        return Jet2(
            self.f * o.f,
            self.df * o.f + self.f * o.df,
            self.d2f * o.f + 2.0 * (self.df * o.df) + self.f * o.d2f,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Jet2.coerce(other)
        q = pc_div(self.f, o.f)
        dq = pc_div(self.df - q * o.df, o.f)
        d2q = pc_div(self.d2f - 2.0 * (dq * o.df) - q * o.d2f, o.f)
        return Jet2(q, dq, d2q)

    def __rtruediv__(self, other):
        return Jet2.coerce(other) / self

    def __pow__(self, n: int) -> "Jet2":
        if n == 0:
            return Jet2.constant(self.f * 0.0 + 1.0)
        if n < 0:
            if _exactly_zero(self.f):
                raise DomainError("zero raised to a negative power")
            return Jet2.constant(1.0) / self ** (-n)
        if n == 1:
            return self
        p2 = self.f ** (n - 2)
        p1 = p2 * self.f
        return Jet2(
            p1 * self.f,
            n * (p1 * self.df),
            n * (n - 1) * (p2 * self.df * self.df) + n * (p1 * self.d2f),
        )

    def compose(self, outer: "Jet2") -> "Jet2":
        """Chain rule: ``outer`` holds (F, F', F'') evaluated at ``self.f``."""
        return Jet2(
            outer.f,
            outer.df * self.df,
            outer.d2f * self.df * self.df + outer.df * self.d2f,
        )


def _exactly_zero(z: SplitComplex) -> bool:
    return bool(np.any((np.asarray(z.re) == 0) & (np.asarray(z.im) == 0)))


def _exp_value(z: SplitComplex) -> SplitComplex:
    ex = np.exp(z.re)
    return SplitComplex(ex * np.cosh(z.im), ex * np.sinh(z.im))


def _cos_value(z: SplitComplex) -> SplitComplex:
    return SplitComplex(np.cos(z.re) * np.cos(z.im), -np.sin(z.re) * np.sin(z.im))


def _sin_value(z: SplitComplex) -> SplitComplex:
    return SplitComplex(np.sin(z.re) * np.cos(z.im), np.cos(z.re) * np.sin(z.im))


def pexp(z) -> Jet2:
    """Split-complex exponential ``e^x (cosh y + j sinh y)`` as a jet."""
    z = as_split(z)
    with np.errstate(over="raise"):
        try:
            value = _exp_value(z)
        except FloatingPointError:
            raise OverflowError("pexp overflow; rescale the argument") from None
    return Jet2(value, value, value)


def pcirc(kind: str, z) -> Jet2:
    z = as_split(z)
    if kind == "pcos":
        c, s = _cos_value(z), _sin_value(z)
        return Jet2(c, -s, -c)
    if kind == "psin":
        c, s = _cos_value(z), _sin_value(z)
        return Jet2(s, c, -s)
    if kind == "ptan":
        c, s = _cos_value(z), _sin_value(z)
        t = pc_div(s, c)
        sec2 = 1.0 + t * t
        return Jet2(t, sec2, 2.0 * (t * sec2))
    raise ValueError(f"unknown circular function {kind!r}")


FUNCTIONS: dict[str, Callable[[SplitComplex], Jet2]] = {
    "pexp": pexp,
    "pcos": lambda z: pcirc("pcos", z),
    "psin": lambda z: pcirc("psin", z),
    "ptan": lambda z: pcirc("ptan", z),
}


def pexp_series(z, terms: int = 20) -> SplitComplex:
    """Partial sum of the exponential series; a test oracle only."""
    z = as_split(z)
    total, term = ONE * 1.0, ONE * 1.0
    for n in range(1, terms):
        term = term * z / n
        total = total + term
    return total


def wirtinger_residual(f, z, step: float = 1e-4, refine: bool = True) -> float:
    """Norm of ``1/2 (d/dx - j d/dy) f`` at ``z`` by central differences.

    Close to zero exactly when ``f`` is paraholomorphic near ``z``.  With
    ``refine`` the estimate is Richardson-extrapolated from ``step`` and
    ``step / 10``.
    """
    z = as_split(z)

    def value(w):
        out = f(w)
        return out.f if isinstance(out, Jet2) else as_split(out)

    def dbar(h):
        fx = (value(z + h) - value(z - h)) / (2 * h)
        fy = (value(z + SplitComplex(0.0, h)) - value(z - SplitComplex(0.0, h))) / (2 * h)
        return 0.5 * (fx - J * fy)

    d = dbar(step)
    if refine:
        d_fine = dbar(step / 10)
        d = (100.0 * d_fine - d) / 99.0
    return float(np.max(np.hypot(d.re, d.im)))


# -- vectors and matrices over the split-complex numbers ---------------------

I12 = np.diag([-1.0, 1.0, 1.0])


def vec(re, im=None) -> SplitComplex:
    """A split-complex 3-vector (last axis of length 3)."""
    re = np.asarray(re, dtype=float)
    im = np.zeros_like(re) if im is None else np.asarray(im, dtype=float)
    return SplitComplex(re, im)


def stack(components) -> SplitComplex:
    """Stack three split-complex scalars (or arrays) into a 3-vector."""
    comps = [as_split(c) for c in components]
    shape = np.broadcast_shapes(*(np.shape(c.re) for c in comps))
    re = np.stack([np.broadcast_to(c.re, shape) for c in comps], axis=-1).astype(float)
    im = np.stack([np.broadcast_to(c.im, shape) for c in comps], axis=-1).astype(float)
    return SplitComplex(re, im)


def component(v: SplitComplex, k: int) -> SplitComplex:
    return SplitComplex(np.asarray(v.re)[..., k], np.asarray(v.im)[..., k])


def lorentz_dot(a, b) -> Real:
    """Indefinite inner product ``-a1 b1 + a2 b2 + a3 b3`` of real vectors."""
    a, b = np.asarray(a), np.asarray(b)
    return -a[..., 0] * b[..., 0] + a[..., 1] * b[..., 1] + a[..., 2] * b[..., 2]


def lorentz_dot_pc(a: SplitComplex, b: SplitComplex) -> SplitComplex:
    """Bilinear extension of the Lorentz product to split-complex vectors."""
    total = None
    for k, sign in enumerate((-1.0, 1.0, 1.0)):
        term = sign * (component(a, k) * component(b, k))
        total = term if total is None else total + term
    return total


def lorentz_cross(a, b) -> np.ndarray:
    """Vector orthogonal to ``a`` and ``b`` for the Lorentz product."""
    return np.cross(a, b) * np.array([-1.0, 1.0, 1.0])


@dataclass(frozen=True, eq=False)
class PCMatrix:
    """A 3x3 matrix with split-complex entries, stored as real/imag parts."""

    re: np.ndarray
    im: np.ndarray

    __array_ufunc__ = None

    def __post_init__(self):
        object.__setattr__(self, "re", np.asarray(self.re, dtype=float).reshape(3, 3))
        object.__setattr__(self, "im", np.asarray(self.im, dtype=float).reshape(3, 3))

    @classmethod
    def real(cls, m) -> "PCMatrix":
        m = np.asarray(m, dtype=float)
        return cls(m, np.zeros_like(m))

    @classmethod
    def identity(cls) -> "PCMatrix":
        return cls.real(np.eye(3))

    @classmethod
    def diag(cls, entries) -> "PCMatrix":
        entries = [as_split(e) for e in entries]
        return cls(np.diag([e.re for e in entries]), np.diag([e.im for e in entries]))

    @classmethod
    def from_entries(cls, entries) -> "PCMatrix":
        """Row-major list of nine split-complex entries."""
        entries = [as_split(e) for e in entries]
        if len(entries) != 9:
            raise ValueError("a 3x3 matrix needs exactly 9 entries")
        return cls(
            np.array([float(e.re) for e in entries]), np.array([float(e.im) for e in entries])
        )

    def entry(self, i: int, k: int) -> SplitComplex:
        return SplitComplex(float(self.re[i, k]), float(self.im[i, k]))

    @property
    def T(self) -> "PCMatrix":
        return PCMatrix(self.re.T, self.im.T)

    def conj(self) -> "PCMatrix":
        return PCMatrix(self.re, -self.im)

    def __matmul__(self, other):
        if isinstance(other, PCMatrix):
            return PCMatrix(
                self.re @ other.re + self.im @ other.im,
                self.re @ other.im + self.im @ other.re,
            )
        if isinstance(other, np.ndarray):
            return self @ PCMatrix.real(other)
        return NotImplemented

    def __rmatmul__(self, other):
        if isinstance(other, np.ndarray):
            return PCMatrix.real(other) @ self
        return NotImplemented

    def __mul__(self, scalar):
        s = as_split(scalar)
        return PCMatrix(self.re * s.re + self.im * s.im, self.re * s.im + self.im * s.re)

    __rmul__ = __mul__

    def __neg__(self):
        return PCMatrix(-self.re, -self.im)

    def __sub__(self, other: "PCMatrix") -> "PCMatrix":
        return PCMatrix(self.re - other.re, self.im - other.im)

    def __add__(self, other: "PCMatrix") -> "PCMatrix":
        return PCMatrix(self.re + other.re, self.im + other.im)

    def apply(self, v: SplitComplex) -> SplitComplex:
        """Matrix-vector product on the last axis of a split-complex vector."""
        vr, vi = np.asarray(v.re), np.asarray(v.im)
        return SplitComplex(
            vr @ self.re.T + vi @ self.im.T,
            vr @ self.im.T + vi @ self.re.T,
        )

    def det(self) -> SplitComplex:
        e = self.entry
        return (
            e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
            - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
            + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
        )

    def adjugate(self) -> "PCMatrix":
        e = self.entry
        cof = []
        for i in range(3):
            for k in range(3):
                rows = [r for r in range(3) if r != i]
                cols = [c for c in range(3) if c != k]
                minor = e(rows[0], cols[0]) * e(rows[1], cols[1]) - e(rows[0], cols[1]) * e(
                    rows[1], cols[0]
                )
                cof.append(minor if (i + k) % 2 == 0 else -minor)
        return PCMatrix.from_entries(cof).T

    def inv(self) -> "PCMatrix":
        d = self.det()
        if is_zero_divisor(d):
            raise Singular(f"determinant {d!r} is a zero divisor")
        inv_d = pc_div(ONE, d)
        return self.adjugate() * inv_d

    def norm(self) -> float:
        return float(np.sqrt(np.sum(self.re**2 + self.im**2)))

    def is_real(self, rtol: float = 1e-8) -> bool:
        return float(np.max(np.abs(self.im))) <= tol(rtol) * max(self.norm(), 1e-300)

    def allclose(self, other: "PCMatrix", atol: float = 1e-10) -> bool:
        return np.allclose(self.re, other.re, atol=atol, rtol=0) and np.allclose(
            self.im, other.im, atol=atol, rtol=0
        )

    def null_parts(self) -> tuple[np.ndarray, np.ndarray]:
        """Real matrices ``(U, V)`` with ``A = U e + V e_bar``."""
        return self.re + self.im, self.re - self.im

    def __repr__(self) -> str:
        return f"PCMatrix(re={self.re.tolist()}, im={self.im.tolist()})"
