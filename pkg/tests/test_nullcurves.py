import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lwz import catalog
from lwz.errors import Degenerate, NotNull
from lwz.nullcurves import (
    ASSOCIATED,
    CONJUGATE,
    FlatClass,
    NullCurve,
    deform,
    flat_classify,
    from_null_curves,
    null_forms,
    polynomial_curve,
)
from lwz.paracomplex import SplitComplex, lorentz_dot
from lwz.weierstrass import curvature_jet

SQRT3 = np.sqrt(3.0)


def line(direction):
    d = np.asarray(direction, dtype=float)
    return NullCurve(lambda s: s[..., None] * d, lambda s: np.ones_like(s)[..., None] * d,
                     lambda s: np.zeros(np.shape(s) + (3,)))


def test_flat_pair_patches_are_valid():
    assert catalog.flat_plane_patch() is not None
    assert catalog.flat_bscroll_patch() is not None


def test_parallel_directions_degenerate():
    with pytest.raises(Degenerate):
        from_null_curves(line([1, 1, 0]), line([1, 1, 0]))


def test_non_null_curve_rejected():
    with pytest.raises(NotNull):
        from_null_curves(line([1, 0.5, 0]), line([1, -1, 0]))


def test_flat_plane_forms():
    p = catalog.flat_plane_patch()
    U, V = p.sample()
    f = null_forms(p, U, V)
    assert np.max(np.abs(2 * f.Lambda / (3 * np.exp(U)) - 1)) < 1e-12
    assert np.max(np.abs(f.Q)) < 1e-12 and np.max(np.abs(f.R)) < 1e-12
    assert np.max(np.abs(f.K)) < 1e-12


def test_bscroll_shape_operator_hand_derivation():
    # hand computation: Lambda = 3 e^u / 2, nu = (-2/sqrt3 e^{-u/2}, 1, -2/sqrt3 e^{-u/2}),
    # Q = <phi'', nu> = -sqrt3/2 e^{u/2}, so S21 = Q / Lambda = -e^{-u/2} / sqrt3
    p = catalog.flat_bscroll_patch()
    U, V = p.sample()
    f = null_forms(p, U, V)
    assert np.max(np.abs(f.S[..., 1, 0] + np.exp(-U / 2) / SQRT3)) < 1e-12
    assert np.max(np.abs(f.S[..., 0, 1])) < 1e-12
    assert np.max(np.abs(f.S[..., 0, 0] + f.S[..., 1, 1])) < 1e-10


def test_bscroll_shape_operator_finite_difference_oracle():
    # S = I^{-1} II from positions only, in (u, v) coordinates
    p = catalog.flat_bscroll_patch()
    u, v, h = 0.3, -0.2, 1e-4
    f = p.position
    fu = (f(u + h, v) - f(u - h, v)) / (2 * h)
    fv = (f(u, v + h) - f(u, v - h)) / (2 * h)
    fuu = (f(u + h, v) - 2 * f(u, v) + f(u - h, v)) / h**2
    fvv = (f(u, v + h) - 2 * f(u, v) + f(u, v - h)) / h**2
    fuv = (f(u + h, v + h) - f(u + h, v - h) - f(u - h, v + h) + f(u - h, v - h)) / (4 * h * h)
    nu = null_forms(p, u, v).nu
    I = np.array([[lorentz_dot(fu, fu), lorentz_dot(fu, fv)], [lorentz_dot(fu, fv), lorentz_dot(fv, fv)]])
    II = np.array([[lorentz_dot(fuu, nu), lorentz_dot(fuv, nu)], [lorentz_dot(fuv, nu), lorentz_dot(fvv, nu)]])
    S = np.linalg.solve(I, II)
    # S acts on (du, dv); the shape-operator entry below the diagonal maps du to dv
    assert S[1, 0] == pytest.approx(-np.exp(-u / 2) / SQRT3, abs=1e-6)
    assert abs(S[0, 1]) < 1e-6 and abs(S[0, 0]) < 1e-6 and abs(S[1, 1]) < 1e-6


def test_flat_classification():
    assert flat_classify(catalog.flat_plane_patch()).kind == FlatClass.PLANE
    res = flat_classify(catalog.flat_bscroll_patch())
    assert res.kind == FlatClass.CYLINDER
    assert np.allclose(res.direction, [1, 0, 1], atol=1e-12)
    assert abs(lorentz_dot(res.direction, res.direction)) < 1e-12
    assert flat_classify(catalog.enneper_patch(), region=(0.1, 0.5, -0.5, -0.1)).kind == FlatClass.NOT_FLAT


def test_deform_identities():
    p = catalog.enneper_patch()
    U, V = np.meshgrid(np.linspace(-0.8, 0.8, 5), np.linspace(-0.8, 0.8, 5))
    assert np.array_equal(deform(p, ASSOCIATED, 0.0).position(U, V), p.position(U, V))
    cc = deform(deform(p, CONJUGATE), CONJUGATE)
    assert np.array_equal(cc.position(U, V), p.position(U, V))
    th = 0.8
    lhs = deform(p, ASSOCIATED, th).position(U, V)
    rhs = np.cosh(th) * p.position(U, V) + np.sinh(th) * deform(p, CONJUGATE).position(U, V)
    assert np.max(np.abs(lhs - rhs)) < 1e-12


@given(st.floats(-1, 1))
def test_associated_family_is_isometric(theta):
    p = catalog.enneper_patch()
    U, V = p.sample(9)
    a = null_forms(p, U, V).Lambda
    b = null_forms(deform(p, ASSOCIATED, theta), U, V).Lambda
    assert np.max(np.abs(a - b)) <= 1e-12 * np.max(np.abs(a))


def test_conjugate_flips_metric():
    p = catalog.enneper_patch()
    U, V = p.sample(9)
    a = null_forms(p, U, V).Lambda
    b = null_forms(deform(p, CONJUGATE), U, V).Lambda
    assert np.max(np.abs(a + b)) < 1e-12


def test_curvature_agrees_with_weierstrass_route(rng):
    p = catalog.enneper_patch()
    for x, y in rng.uniform(-0.4, 0.4, (20, 2)):
        nf = null_forms(p, x + y, x - y)
        jet = curvature_jet(catalog.enneper_data(), SplitComplex(x, y))
        assert float(nf.K) == pytest.approx(float(jet.K), rel=1e-6)
        # same point in space as well
        assert np.allclose(p.at_xy(x, y), catalog.enneper_closed(x, y), atol=1e-12)


def test_polynomial_curve_derivatives():
    c = polynomial_curve([[1, 0, 0], [0, 2, 0], [1, 0, 0]])
    s = np.array([0.5])
    v, d1, d2 = c.jet(s)
    assert np.allclose(v, [[0.25, 1.0, 0.25]]) and np.allclose(d1, [[1, 2, 1]]) and np.allclose(d2, [[2, 0, 2]])
