import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lwz import catalog
from lwz.errors import IllConditioned, NotALineSymmetry
from lwz.goursat import conformal_check, special, transform
from lwz.paracomplex import I12, PCMatrix, SplitComplex
from lwz.symmetry import (
    PRESERVING,
    REVERSING,
    DomainIsometry,
    detect,
    family_report,
    line_frame,
    propagate,
    pullback_residual,
    quadruple,
    sample_points,
    translation_lift,
)

ENNEPER = catalog.enneper_data()
NEG_Z = np.diag([-1.0, -1.0, 1.0])
Z_BAR = np.diag([1.0, -1.0, 1.0])
g = DomainIsometry.from_name


def test_domain_maps():
    z = SplitComplex(0.3, 0.2)
    assert g("zbar")(z) == SplitComplex(0.3, -0.2)
    assert g("negz")(z) == SplitComplex(-0.3, -0.2)
    assert g("negzbar")(z) == SplitComplex(-0.3, 0.2)
    assert g("shift:1-2j")(z) == SplitComplex(1.3, -1.8)
    assert g("zbar").orientation == REVERSING and g("negz").orientation == PRESERVING
    with pytest.raises(ValueError):
        g("rotate")


def test_pullback_residual_examples():
    assert pullback_residual(ENNEPER, g("negz"), NEG_Z) < 1e-8
    assert pullback_residual(ENNEPER, g("zbar"), Z_BAR) < 1e-8
    assert pullback_residual(ENNEPER, g("negz"), np.eye(3)) > 1e-2


def _residual_oracle(f, gmap, O, t):
    # direct check on a 5x5 grid of positions, independent of the solver
    xs = np.linspace(-0.7, 0.7, 5)
    X, Y = np.meshgrid(xs, xs)
    gz = gmap(SplitComplex(X, Y))
    return np.max(np.abs(f(gz.re, gz.im) - (f(X, Y) @ O.T + t)))


def test_detect_enneper_against_closed_form():
    for name, O in (("negz", NEG_Z), ("zbar", Z_BAR), ("negzbar", np.diag([-1.0, 1.0, 1.0]))):
        found = detect(ENNEPER, g(name))
        assert found is not None
        assert np.max(np.abs(found.O - O)) < 1e-9
        assert _residual_oracle(catalog.enneper_closed, g(name), found.O, found.t) < 1e-9


def test_no_shift_symmetry_on_enneper():
    assert detect(ENNEPER, g("shift:1")) is None
    oracle = _residual_oracle(catalog.enneper_closed, g("shift:1"), np.eye(3), np.zeros(3))
    assert oracle > 1e-3


def test_catenoid_periods():
    e = catalog.get("elliptic-catenoid")
    found = detect(e.surface, g("shift:3.141592653589793"))
    assert np.allclose(found.O, np.eye(3), atol=1e-9)
    assert np.allclose(found.t, [-np.pi / 2, 0, 0], atol=1e-7)
    found = detect(e.surface, g("shift:3.141592653589793j"))
    assert np.allclose(found.t, 0, atol=1e-7)
    # the translation is the real part of the period
    assert np.allclose(translation_lift(e.surface, SplitComplex(np.pi, 0.0)), [-np.pi / 2, 0, 0], atol=1e-8)


def test_catalog_fixtures():
    for e in catalog.all_entries(bonnet_params=(1.5, 2.0)):
        for name, O, t in e.symmetries:
            found = detect(e.surface, g(name))
            assert found is not None, (e.name, name)
            assert np.max(np.abs(found.O - O)) < 1e-7
            if t is not None:
                assert np.max(np.abs(found.t - np.asarray(t))) < 1e-7


def test_flat_plane_is_ill_conditioned():
    # omega of a plane spans only two directions, so O is not determined
    with pytest.raises(IllConditioned):
        detect(catalog.flat_plane_data(), g("negz"))
    with pytest.raises(IllConditioned):
        detect(ENNEPER, g("negz"), points=sample_points(n=4))


def test_propagate_examples():
    D = special("D")
    assert np.allclose(propagate(D, Z_BAR, REVERSING), NEG_Z, atol=1e-12)
    assert np.allclose(propagate(D, np.diag([-1.0, 1.0, 1.0]), REVERSING), np.eye(3), atol=1e-12)
    assert propagate(special("assoc", 0.5), Z_BAR, REVERSING) is None
    assert np.allclose(propagate(special("J"), Z_BAR, REVERSING), -Z_BAR)


@given(st.sampled_from(["J", "D"]), st.floats(-1.5, 1.5), st.floats(0.3, 3.0))
def test_identity_always_propagates(name, theta, lam):
    M = special(name) @ special("assoc", theta) @ special("lopezros", lam)
    out = propagate(M, np.eye(3), PRESERVING)
    assert out is not None and np.allclose(out, np.eye(3), atol=1e-9)


@given(st.floats(-1.0, 1.0), st.sampled_from([PRESERVING, REVERSING]))
def test_propagated_parts_are_lorentz(theta, orientation):
    M = special("D") @ special("anti", theta)
    out = propagate(M, NEG_Z, orientation)
    if out is not None:
        assert np.max(np.abs(out.T @ I12 @ out - I12)) < 1e-9


@pytest.mark.parametrize("M", [special("D"), special("J"), special("lopezros", 2.0), special("assoc", 0.4)])
@pytest.mark.parametrize("name, O", [("negz", NEG_Z), ("zbar", Z_BAR)])
def test_propagate_iff_detect(M, name, O):
    pred = propagate(M, O, g(name).orientation)
    found = detect(transform(ENNEPER, M), g(name))
    assert (pred is None) == (found is None)
    if pred is not None:
        assert np.max(np.abs(pred - found.O)) < 1e-7


def test_family_report_patterns():
    rep = family_report(ENNEPER, g("negz"))
    assert rep.pattern_holds
    assert all(r.survives and np.allclose(r.detected.O, NEG_Z) for r in rep.rows)
    rep = family_report(ENNEPER, g("zbar"))
    assert rep.pattern_holds
    for r in rep.rows:
        if r.theta == 0.0:
            want = Z_BAR if r.family == "associated" else -Z_BAR
            assert np.allclose(r.detected.O, want)
        else:
            assert not r.survives


def test_line_frame():
    O = np.diag([1.0, -1.0, -1.0])
    assert np.allclose(line_frame(O), np.eye(3))
    with pytest.raises(NotALineSymmetry):
        line_frame(Z_BAR)  # fixes a plane, not a line


def test_quadruple_on_conjugate_enneper():
    conj = transform(ENNEPER, special("J"))
    out = quadruple(conj, g("negzbar"))
    parts = [o.O for o in out]
    base = parts[0]
    assert np.allclose(base, np.diag([1.0, -1.0, -1.0]), atol=1e-9)
    assert np.allclose(parts[1], -base, atol=1e-9)
    assert np.allclose(parts[2], -np.eye(3), atol=1e-9)
    assert np.allclose(parts[3], np.eye(3), atol=1e-9)


def test_quadruple_preconditions():
    with pytest.raises(NotALineSymmetry):
        quadruple(ENNEPER, g("negz"))
    # Enneper's zbar symmetry is planar, not a line symmetry
    with pytest.raises(NotALineSymmetry):
        quadruple(ENNEPER, g("zbar"))


def test_bonnet_translation_vanishes_only_at_one():
    for lam in (1.0, 1.5, 2.0):
        s = catalog.bonnet(lam).surface
        t = detect(s, g("shift:3.141592653589793j")).t
        assert (np.linalg.norm(t) < 1e-9) == (lam == 1.0)
