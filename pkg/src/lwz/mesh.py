"""Grid sampling: Wavefront OBJ meshes and curvature tables."""
from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from ._tol import tol
from .errors import LWZError, ZeroDivisor
from .paracomplex import SplitComplex
from .weierstrass import TAU_SINGULAR, PointClass, Surface, as_surface, grid

FLOAT = "%.17g"
CONE_TOL = 1e-9


@dataclass(frozen=True)
class MeshGrid:
    nu: int
    nv: int
    domain: tuple
    skip_singular: bool = True

    def __post_init__(self):
        if int(self.nu) < 2 or int(self.nv) < 2:
            raise ValueError(f"mesh grid needs at least 2x2 samples, got {self.nu}x{self.nv}")
        if len(self.domain) != 4:
            raise ValueError("domain must be x0,x1,y0,y1")


def _fmt(x: float) -> str:
    # avoid "-0" so that sign noise on zeros does not change output bytes
    return FLOAT % (float(x) + 0.0)


def _surface(obj) -> Surface:
    return as_surface(getattr(obj, "surface", obj))


def _positions(surf: Surface, Z: SplitComplex) -> np.ndarray:
    try:
        return surf.evaluate(Z)
    except LWZError:
        pass
    # locate the offending grid point for the error message
    out = np.empty(Z.shape + (3,))
    for idx in np.ndindex(Z.shape):
        try:
            out[idx] = surf.evaluate(SplitComplex(float(Z.re[idx]), float(Z.im[idx])))
        except LWZError as exc:
            raise type(exc)(f"at grid index {idx}: {exc}") from exc
    return out


def sample_mesh(entry, mesh: MeshGrid, euclidean_view: bool = False) -> str:
    """OBJ text for the surface sampled on a row-major ``nu x nv`` grid.

    Vertex ``(i, j)`` has index ``i * nv + j`` before singular vertices are
    removed.  Each grid cell becomes two triangles.  With ``skip_singular``
    singular vertices are dropped together with their faces, except that
    several singular vertices sharing one image point (a cone point) are
    kept once and marked with a ``# cone`` comment.
    """
    surf = _surface(entry)
    nu, nv = int(mesh.nu), int(mesh.nv)
    Z = grid(mesh.domain, nu, nv)
    P = _positions(surf, Z).reshape(-1, 3)
    n = nu * nv
    keep = np.ones(n, dtype=bool)
    alias = np.arange(n)
    cone = np.zeros(n, dtype=bool)
    if mesh.skip_singular:
        measure = np.ravel(surf.singular_measure(Z))
        singular = measure <= tol(TAU_SINGULAR)
        keep &= ~singular
        extent = float(np.max(np.ptp(P, axis=0))) if n > 1 else 1.0
        idx = np.flatnonzero(singular)
        for a in idx:
            if alias[a] != a:
                continue
            same = [b for b in idx if b > a and np.linalg.norm(P[b] - P[a]) <= CONE_TOL * max(extent, 1.0)]
            if same:
                keep[a] = True
                cone[a] = True
                alias[same] = a
    new_index = np.full(n, -1)
    new_index[keep] = np.arange(1, int(keep.sum()) + 1)

    out = io.StringIO()
    name = getattr(entry, "name", None) or getattr(surf, "name", None) or "surface"
    out.write(f"# lwz mesh {name} {nu}x{nv}\n")
    order = [1, 2, 0] if euclidean_view else [0, 1, 2]
    for k in range(n):
        if not keep[k]:
            continue
        if cone[k]:
            out.write("# cone\n")
        p = P[k][order]
        out.write(f"v {_fmt(p[0])} {_fmt(p[1])} {_fmt(p[2])}\n")
    for i in range(nu - 1):
        for j in range(nv - 1):
            a, b, c, d = i * nv + j, (i + 1) * nv + j, (i + 1) * nv + j + 1, i * nv + j + 1
            for tri in ((a, b, c), (a, c, d)):
                mapped = [new_index[alias[t]] for t in tri]
                if min(mapped) < 1 or len(set(mapped)) < 3:
                    continue
                out.write(f"f {mapped[0]} {mapped[1]} {mapped[2]}\n")
    return out.getvalue()


def _jet_grid(surf: Surface, Z: SplitComplex):
    try:
        jet = surf.curvature_jet(Z, with_position=False, on_singular="mark")
        cls = np.asarray(jet.cls, dtype=object).reshape(Z.shape)
        return jet.K, jet.H, jet.Q, jet.R, jet.Lambda, cls
    except ZeroDivisor:
        pass
    fields = [np.full(Z.shape, np.nan) for _ in range(5)]
    cls = np.empty(Z.shape, dtype=object)
    for idx in np.ndindex(Z.shape):
        zi = SplitComplex(float(Z.re[idx]), float(Z.im[idx]))
        try:
            jet = surf.curvature_jet(zi, with_position=False, on_singular="mark")
        except ZeroDivisor:
            # pole of the Gauss map: curvature data not available here
            cls[idx] = PointClass.SINGULAR
            continue
        for arr, val in zip(fields, (jet.K, jet.H, jet.Q, jet.R, jet.Lambda)):
            arr[idx] = val
        cls[idx] = jet.cls
    return (*fields, cls)


def report_curvature(entry, mesh: MeshGrid) -> str:
    """CSV table ``x,y,K,H,Q,R,Lambda,class`` over the grid (row-major)."""
    surf = _surface(entry)
    Z = grid(mesh.domain, int(mesh.nu), int(mesh.nv))
    K, H, Q, R, Lam, cls = _jet_grid(surf, Z)
    out = io.StringIO()
    out.write("x,y,K,H,Q,R,Lambda,class\n")
    for idx in np.ndindex(Z.shape):
        vals = (Z.re[idx], Z.im[idx], K[idx], H[idx], Q[idx], R[idx], Lam[idx])
        label = PointClass(cls[idx]).value
        out.write(",".join(_fmt(v) for v in vals) + f",{label}\n")
    return out.getvalue()


def parse_obj(text: str):
    """Minimal OBJ reader (vertices, faces) used to validate emitted meshes."""
    verts, faces = [], []
    for line in text.splitlines():
        parts = line.split()
        if not parts or parts[0].startswith("#"):
            continue
        if parts[0] == "v":
            verts.append([float(p) for p in parts[1:4]])
        elif parts[0] == "f":
            faces.append([int(p) for p in parts[1:]])
    return np.array(verts).reshape(-1, 3), np.array(faces, dtype=int).reshape(-1, 3)
