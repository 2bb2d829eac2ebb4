"""Self-check suite: module invariants and catalog fixtures as JSON-ready data."""
from __future__ import annotations

import math
from typing import Callable

import numpy as np

from . import catalog
from .errors import FlatRegion, LWZError
from .expr import eval_jet, parse, to_text
from .goursat import conformal_check, dual_data, lopez_ros_data, special, transform
from .mesh import MeshGrid, parse_obj, report_curvature, sample_mesh
from .nullcurves import ASSOCIATED, FlatClass, deform, flat_classify, null_forms
from .paracomplex import SplitComplex, modulus_sq, pexp, wirtinger_residual
from .symmetry import REVERSING, DomainIsometry, detect, family_report, propagate
from .weierstrass import (
    SingularityClass,
    WeierstrassData,
    grid,
    isometry_class_compare,
    singularity_classify,
)

SCOPES = ("all", "paracomplex", "expr", "weierstrass", "nullcurves", "goursat", "symmetry", "cli")

_REGISTRY: dict[str, list] = {s: [] for s in SCOPES if s != "all"}


def case(scope: str, case_id: str, tolerance: float):
    """Register ``fn() -> measured``; the case passes when ``measured <= tolerance``."""

    def wrap(fn: Callable[[], float]):
        _REGISTRY[scope].append((case_id, tolerance, fn))
        return fn

    return wrap


def _flag(ok: bool) -> float:
    return 0.0 if ok else 1.0


# -- paracomplex -------------------------------------------------------------

@case("paracomplex", "euler-formula", 1e-12)
def _euler():
    th = np.linspace(-3, 3, 100)
    v = pexp(SplitComplex(0.0 * th, th)).f
    return float(max(np.max(np.abs(v.re - np.cosh(th))), np.max(np.abs(v.im - np.sinh(th)))))


@case("paracomplex", "modulus-multiplicative", 1e-12)
def _mult():
    rng = np.random.default_rng(1)
    z = SplitComplex(*rng.uniform(-2, 2, (2, 1000)))
    w = SplitComplex(*rng.uniform(-2, 2, (2, 1000)))
    lhs, rhs = modulus_sq(z * w), modulus_sq(z) * modulus_sq(w)
    return float(np.max(np.abs(lhs - rhs) / np.maximum(1.0, np.abs(rhs))))


@case("paracomplex", "wirtinger-z(1+j)", 1e-10)
def _wirt():
    return wirtinger_residual(lambda z: z * SplitComplex(1.0, 1.0), SplitComplex(0.3, -0.4))


# -- expr --------------------------------------------------------------------

@case("expr", "print-parse-roundtrip", 0.0)
def _roundtrip():
    texts = ["0.5*pcos(z)^2", "-z^2 + j*z/(1-0.5j)", "ptan(z)^-1 - (z - 1) - 2", "psin(pexp(z)) * -z"]
    return _flag(all(parse(to_text(parse(t))) == parse(t) for t in texts))


@case("expr", "jet-z^2", 0.0)
def _jet():
    j = eval_jet(parse("z^2"), SplitComplex(1.0, 1.0))
    return _flag((j.f.re, j.f.im, j.df.re, j.df.im, j.d2f.re, j.d2f.im) == (2, 2, 2, 2, 2, 0))


# -- weierstrass -------------------------------------------------------------

def _closed_form_error(name: str) -> float:
    e = catalog.get(name)
    Z = grid((-1, 1, -1, 1), 21, 21)
    return float(np.max(np.abs(e.surface.evaluate(Z) - e.closed_form(Z.re, Z.im))))


@case("weierstrass", "closed-form-enneper", 1e-7)
def _cf_enneper():
    return _closed_form_error("enneper")


@case("weierstrass", "closed-form-elliptic-catenoid", 1e-7)
def _cf_catenoid():
    return _closed_form_error("elliptic-catenoid")


def _regular_points(surf, n=40, seed=3, domain=(-0.9, 0.9, -0.9, 0.9)):
    rng = np.random.default_rng(seed)
    x0, x1, y0, y1 = domain
    pts = []
    while len(pts) < n:
        z = SplitComplex(float(rng.uniform(x0, x1)), float(rng.uniform(y0, y1)))
        try:
            if surf.singular_measure(z) > 1e-3 and surf.is_regular(z):
                surf.gauss_jet(z)
                pts.append(z)
        except LWZError:
            continue
    return SplitComplex(np.array([p.re for p in pts]), np.array([p.im for p in pts]))


@case("weierstrass", "metric-formula-all-entries", 1e-9)
def _metric():
    worst = 0.0
    for e in catalog.all_entries():
        Z = _regular_points(e.surface, domain=e.default_domain)
        g = e.surface.gauss_jet(Z)
        formula = -((1 - g.h.f.modulus_sq()) ** 2) * g.eta.f.modulus_sq()
        got = e.surface.metric_from_omega(Z)
        worst = max(worst, float(np.max(np.abs(got - formula) / np.maximum(1.0, np.abs(formula)))))
    return worst


@case("weierstrass", "minimality-all-entries", 1e-8)
def _minimal():
    worst = 0.0
    for e in catalog.all_entries():
        Z = _regular_points(e.surface, domain=e.default_domain)
        jet = e.surface.curvature_jet(Z, with_position=False)
        worst = max(worst, float(np.max(np.abs(jet.H))))
    return worst


@case("weierstrass", "path-independence-all-entries", 1e-7)
def _paths():
    worst = 0.0
    for e in catalog.all_entries():
        Z = grid(e.default_domain, 7, 7)
        a, b = e.surface.evaluate(Z, order="xy"), e.surface.evaluate(Z, order="yx")
        worst = max(worst, float(np.max(np.abs(a - b))))
    return worst


@case("weierstrass", "singular-classes-re-z-0", 0.0)
def _singular():
    curve = SplitComplex(np.zeros(21), np.linspace(-0.8, 0.8, 21))
    cat = singularity_classify(catalog.get("parabolic-catenoid").surface, curve)
    hel = singularity_classify(catalog.get("parabolic-helicoid").surface, curve)
    return _flag(cat == SingularityClass.SHRINKING and hel == SingularityClass.FOLDING)


@case("weierstrass", "isometry-class-checker", 1e-8)
def _isometry():
    en = catalog.enneper_data()
    region = grid((0.1, 0.5, 0.1, 0.4), 5, 5)
    res = isometry_class_compare(en, en.scaled(pexp(SplitComplex(0.0, 0.7)).f), region)
    anti = isometry_class_compare(en, en.scaled(SplitComplex(0.0, 1.0)), region)
    try:
        isometry_class_compare(catalog.flat_plane_data(), catalog.flat_plane_data(), region)
        flat_ok = False
    except FlatRegion:
        flat_ok = True
    ok = res.kind == "isometric" and anti.kind == "anti-isometric" and flat_ok
    return abs(res.theta - 0.7) if ok else math.inf


# -- nullcurves --------------------------------------------------------------

@case("nullcurves", "flat-pair-isometric", 1e-10)
def _flat_pair():
    p1, p2 = catalog.flat_plane_patch(), catalog.flat_bscroll_patch()
    U, V = p1.sample()
    l1, l2 = null_forms(p1, U, V).Lambda, null_forms(p2, U, V).Lambda
    target = 1.5 * np.exp(U)
    return float(max(np.max(np.abs(l1 / target - 1)), np.max(np.abs(l2 / target - 1))))


@case("nullcurves", "flat-classification", 1e-12)
def _flat_class():
    a = flat_classify(catalog.flat_plane_patch())
    b = flat_classify(catalog.flat_bscroll_patch())
    if a.kind != FlatClass.PLANE or b.kind != FlatClass.CYLINDER:
        return math.inf
    return float(np.max(np.abs(b.direction - np.array([1.0, 0.0, 1.0]))))


@case("nullcurves", "associated-family-identity", 1e-12)
def _assoc():
    p = catalog.enneper_patch()
    th = 0.8
    U, V = np.meshgrid(np.linspace(-0.8, 0.8, 5), np.linspace(-0.8, 0.8, 5))
    lhs = deform(p, ASSOCIATED, th).position(U, V)
    rhs = np.cosh(th) * p.position(U, V) + np.sinh(th) * deform(p, "conjugate").position(U, V)
    return float(np.max(np.abs(lhs - rhs)))


# -- goursat -----------------------------------------------------------------

@case("goursat", "conformal-factors", 1e-12)
def _factors():
    # J, D and A(2) all have conformal factor 1
    cs = [conformal_check(special(n, p)).c for n, p in (("J", None), ("D", None), ("lopezros", 2.0))]
    return float(max(max(abs(c.re - 1.0), abs(c.im)) for c in cs))


@case("goursat", "dual-data-vs-transform-D", 1e-7)
def _dual():
    en = catalog.enneper_data()
    Z = grid((-0.9, 0.9, -0.9, 0.9), 9, 9)
    a = transform(en, special("D")).evaluate(Z)
    from .weierstrass import Surface

    b = Surface(dual_data(en)).evaluate(Z)
    d = (a - b).reshape(-1, 3)
    return float(np.max(np.abs(d - d.mean(axis=0))))


@case("goursat", "lopez-ros-preserves-II", 1e-8)
def _lr():
    en = catalog.enneper_data()
    Z = grid((-0.45, 0.45, -0.45, 0.45), 9, 9)
    j0 = transform(en, special("lopezros", 1.0)).curvature_jet(Z, with_position=False)
    worst = 0.0
    from .weierstrass import Surface

    for lam in (0.5, 1.5, 2.0):
        j1 = Surface(lopez_ros_data(en, lam)).curvature_jet(Z, with_position=False)
        worst = max(worst, float(np.max(np.abs(j1.Q - j0.Q))), float(np.max(np.abs(j1.R - j0.R))))
    return worst


# -- symmetry ----------------------------------------------------------------

@case("symmetry", "thm1.2-enneper-D-conjbar", 1e-9)
def _thm12():
    pred = propagate(special("D"), np.diag([1.0, -1.0, 1.0]), REVERSING)
    if pred is None:
        return math.inf
    expected = np.diag([-1.0, -1.0, 1.0])
    found = detect(transform(catalog.enneper_data(), special("D")), DomainIsometry.from_name("zbar"))
    if found is None:
        return math.inf
    return float(max(np.max(np.abs(pred - expected)), np.max(np.abs(found.O - expected))))


@case("symmetry", "catalog-fixtures", 1e-7)
def _fixtures():
    worst = 0.0
    for e in catalog.all_entries():
        for name, O, t in e.symmetries:
            found = detect(e.surface, DomainIsometry.from_name(name))
            if found is None:
                return math.inf
            worst = max(worst, float(np.max(np.abs(found.O - O))))
            if t is not None:
                worst = max(worst, float(np.max(np.abs(found.t - np.asarray(t)))))
    return worst


@case("symmetry", "bonnet-periodicity", 1e-7)
def _bonnet():
    worst = 0.0
    for lam in (1.0, 1.5, 2.0):
        e = catalog.bonnet(lam)
        for name, _, t in e.symmetries[:2]:
            found = detect(e.surface, DomainIsometry.from_name(name))
            if found is None:
                return math.inf
            worst = max(worst, float(np.max(np.abs(found.t - np.asarray(t)))))
    return worst


@case("symmetry", "associated-family-pattern", 0.0)
def _family():
    en = catalog.enneper_data()
    a = family_report(en, DomainIsometry.from_name("negz"))
    b = family_report(en, DomainIsometry.from_name("zbar"))
    return _flag(a.pattern_holds and b.pattern_holds)


# -- cli ---------------------------------------------------------------------

@case("cli", "mesh-deterministic-and-valid", 0.0)
def _mesh():
    e = catalog.get("elliptic-catenoid")
    # x = +-pi/4 is a cone-point line of this surface, so keep singular vertices
    g = MeshGrid(3, 3, (-math.pi / 4, math.pi / 4, -math.pi / 4, math.pi / 4), skip_singular=False)
    a, b = sample_mesh(e, g), sample_mesh(e, g)
    v, f = parse_obj(a)
    ok = a == b and len(v) == 9 and np.all(np.isfinite(v)) and f.min() >= 1 and f.max() <= len(v)
    return _flag(bool(ok))


@case("cli", "curvature-table-flat-pair", 0.0)
def _table():
    g = MeshGrid(5, 5, (-1, 1, -1, 1))
    plane = report_curvature(catalog.get("flat-plane"), g).splitlines()[1:]
    scroll = report_curvature(catalog.get("flat-bscroll"), g).splitlines()[1:]
    ok = all(r.endswith(",umbilic") for r in plane) and all(r.endswith(",quasi-umbilic") for r in scroll)
    return _flag(ok)


def run_suite(scope: str = "all") -> dict:
    """Run registered cases; failures (including exceptions) are reported as data."""
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; choose from {', '.join(SCOPES)}")
    scopes = [s for s in SCOPES if s != "all"] if scope == "all" else [scope]
    cases = []
    for s in scopes:
        for case_id, tolerance, fn in _REGISTRY[s]:
            try:
                measured = float(fn())
                status = "pass" if measured <= tolerance else "fail"
            except Exception as exc:  # a crashing check is a failed check
                measured, status = math.inf, f"fail: {type(exc).__name__}: {exc}"
            cases.append({
                "id": case_id,
                "status": "pass" if status == "pass" else "fail",
                "measured": measured if math.isfinite(measured) else None,
                "tolerance": tolerance,
                **({} if status == "pass" else {"detail": status}),
            })
    passed = sum(c["status"] == "pass" for c in cases)
    return {"suite": scope, "passed": passed, "failed": len(cases) - passed, "cases": cases}
