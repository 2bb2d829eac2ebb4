import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lwz.errors import DomainError, Singular, ZeroDivisor
from lwz.paracomplex import (
    E_MINUS,
    E_PLUS,
    I12,
    J,
    ONE,
    Jet2,
    PCMatrix,
    SplitComplex,
    lorentz_cross,
    lorentz_dot,
    modulus_sq,
    null_split,
    pc_div,
    pcirc,
    pexp,
    pexp_series,
    recompose,
    wirtinger_residual,
)

finite = st.floats(-3, 3, allow_nan=False)
splits = st.builds(SplitComplex, finite, finite)


def null_product(z, w):
    # independent oracle: multiplication is componentwise in (u, v)
    return SplitComplex.from_null(z.u * w.u, z.v * w.v)


def close(a, b, tol=1e-12):
    return abs(a.re - b.re) <= tol and abs(a.im - b.im) <= tol


def test_j_squared_is_one():
    assert J * J == ONE


def test_idempotents():
    assert E_PLUS * E_PLUS == E_PLUS
    assert E_MINUS * E_MINUS == E_MINUS
    assert E_PLUS * E_MINUS == SplitComplex(0.0, 0.0)
    assert E_PLUS - E_MINUS == J


@pytest.mark.parametrize("z, expected", [((1, 1), 0.0), ((1, 0), 1.0), ((3, 2), 5.0)])
def test_modulus_sq_examples(z, expected):
    assert modulus_sq(z) == expected


def test_modulus_of_jz_flips_sign():
    assert modulus_sq(J * SplitComplex(3.0, 2.0)) == -5.0


def test_complex_numbers_rejected():
    with pytest.raises(TypeError):
        SplitComplex(1.0, 0.0) * (1 + 2j)


@given(splits, splits)
def test_product_matches_null_oracle(z, w):
    assert close(z * w, null_product(z, w), 1e-10)


@given(splits)
def test_conjugation_involution_and_jz(z):
    assert z.conj().conj() == z
    assert math.isclose(modulus_sq(J * z), -modulus_sq(z), abs_tol=1e-12)


def test_modulus_multiplicative_on_random_pairs(rng):
    z = SplitComplex(*rng.uniform(-2, 2, (2, 1000)))
    w = SplitComplex(*rng.uniform(-2, 2, (2, 1000)))
    lhs, rhs = modulus_sq(z * w), modulus_sq(z) * modulus_sq(w)
    assert np.all(np.abs(lhs - rhs) <= 1e-12 * np.maximum(1.0, np.abs(rhs)))


def test_division_examples():
    assert pc_div(SplitComplex(2, 0), SplitComplex(2, 0)) == ONE
    assert pc_div(ONE, J) == J
    with pytest.raises(ZeroDivisor):
        pc_div(ONE, SplitComplex(1, 1))


@given(splits, splits)
def test_division_inverts_multiplication(z, w):
    if abs(modulus_sq(w)) < 1e-3:
        return
    assert close(pc_div(z * w, w), z, 1e-8)


def test_null_split_examples():
    assert tuple(null_split(SplitComplex(1, 0))) == (1, 1)
    assert tuple(null_split(SplitComplex(0, 1))) == (1, -1)
    back = recompose(null_split(SplitComplex(0.3, -0.2)))
    assert math.isclose(back.re, 0.3, rel_tol=0, abs_tol=1e-16)
    assert math.isclose(back.im, -0.2, rel_tol=0, abs_tol=1e-16)


def test_pexp_examples():
    assert pexp(SplitComplex(0, 0)).f == ONE
    v = pexp(SplitComplex(0, 1)).f
    oracle = pexp_series(SplitComplex(0, 1), 20)
    assert close(v, oracle, 1e-12)
    assert math.isclose(v.re, 1.5430806348152437) and math.isclose(v.im, 1.1752011936438014)
    z = SplitComplex(0.3, -0.7)
    assert close(pexp(z).f * pexp(-z).f, ONE, 1e-14)


def test_pexp_euler_formula_vectorised():
    th = np.linspace(-3, 3, 100)
    v = pexp(SplitComplex(0 * th, th)).f
    assert np.max(np.abs(v.re - np.cosh(th))) < 1e-12
    assert np.max(np.abs(v.im - np.sinh(th))) < 1e-12


def test_pexp_overflow():
    with pytest.raises(OverflowError):
        pexp(SplitComplex(800.0, 10.0))


@given(splits)
def test_pexp_agrees_with_series(z):
    assert close(pexp(z).f, pexp_series(z, 40), 1e-9)


def test_pcirc_examples():
    assert pcirc("pcos", SplitComplex(0, 0)).f == ONE
    s = pcirc("psin", SplitComplex(math.pi / 2, 0)).f
    assert close(s, ONE, 1e-15)
    z = SplitComplex(0.4, 0.9)
    c, s = pcirc("pcos", z).f, pcirc("psin", z).f
    assert close(c * c + s * s, ONE, 1e-14)


def test_pcirc_series_oracle():
    # pcos and psin from the even/odd parts of the exponential series of j z:
    # with j^2 = 1, pexp(j z) = pcos(z)... does not hold, so use real series
    z = SplitComplex(0.4, 0.9)
    cos_s, sin_s, term = SplitComplex(0, 0), SplitComplex(0, 0), ONE
    for n in range(30):
        if n % 4 == 0:
            cos_s = cos_s + term
        elif n % 4 == 1:
            sin_s = sin_s + term
        elif n % 4 == 2:
            cos_s = cos_s - term
        else:
            sin_s = sin_s - term
        term = term * z / (n + 1)
    assert close(pcirc("pcos", z).f, cos_s, 1e-13)
    assert close(pcirc("psin", z).f, sin_s, 1e-13)


def test_ptan_pole_is_zero_divisor():
    # pcos(x + j y) is lightlike when cos 2x + cos 2y = 0, e.g. x = y = pi/4
    with pytest.raises(ZeroDivisor):
        pcirc("ptan", SplitComplex(math.pi / 4, math.pi / 4))


@pytest.mark.parametrize("name", ["pexp", "pcos", "psin", "ptan"])
def test_jet_derivatives_match_central_differences(name):
    fn = (lambda z: pexp(z)) if name == "pexp" else (lambda z: pcirc(name, z))
    z = SplitComplex(0.3, 0.2)
    h = 1e-5
    jet = fn(z)
    d1 = (fn(z + h).f - fn(z - h).f) / (2 * h)
    d2 = (fn(z + h).df - fn(z - h).df) / (2 * h)
    assert close(jet.df, d1, 1e-8)
    assert close(jet.d2f, d2, 1e-8)


def test_wirtinger_examples():
    assert wirtinger_residual(lambda z: z * z, SplitComplex(1, 0.5)) < 1e-6
    assert math.isclose(wirtinger_residual(lambda z: z.conj(), SplitComplex(1, 0)), 1.0, rel_tol=1e-6)
    assert wirtinger_residual(lambda z: z * SplitComplex(1, 1), SplitComplex(-0.2, 0.7)) < 1e-10


@pytest.mark.parametrize("name", ["pexp", "pcos", "psin", "ptan"])
def test_catalog_functions_are_paraholomorphic(rng, name):
    fn = (lambda z: pexp(z)) if name == "pexp" else (lambda z: pcirc(name, z))
    for _ in range(100):
        z = SplitComplex(*rng.uniform(-0.7, 0.7, 2))
        assert wirtinger_residual(fn, z) < 1e-6


def test_jet_leibniz_against_composition():
    z = SplitComplex(0.2, -0.3)
    x = Jet2.variable(z)
    prod = x.compose(pexp(z)) * x.compose(pcirc("psin", z))
    h = 1e-5

    def f(w):
        return pexp(w).f * pcirc("psin", w).f

    d1 = (f(z + h) - f(z - h)) / (2 * h)
    d2 = (f(z + h) - 2 * f(z) + f(z - h)) / (h * h)
    assert close(prod.df, d1, 1e-8)
    assert close(prod.d2f, d2, 1e-4)


def test_jet_power_and_quotient():
    z = SplitComplex(1.0, 1.0)
    sq = Jet2.variable(z) ** 2
    assert (sq.f, sq.df, sq.d2f) == (SplitComplex(2, 2), SplitComplex(2, 2), SplitComplex(2, 0))
    inv = Jet2.variable(SplitComplex(2.0, 0.5)) ** -1
    w = SplitComplex(2.0, 0.5)
    assert close(inv.df, -pc_div(ONE, w * w), 1e-14)
    with pytest.raises(DomainError):
        Jet2.variable(SplitComplex(0.0, 0.0)) ** -2


def test_lorentz_cross_is_orthogonal(rng):
    a, b = rng.normal(size=(2, 3))
    c = lorentz_cross(a, b)
    assert abs(lorentz_dot(c, a)) < 1e-12 and abs(lorentz_dot(c, b)) < 1e-12


def test_pcmatrix_inverse_and_singular():
    A = PCMatrix.from_entries([1, J, 0, SplitComplex(0, 2), 3, 0, 0, 0, SplitComplex(1, 0.5)])
    I = A @ A.inv()
    assert I.allclose(PCMatrix.identity(), 1e-12)
    lightlike = PCMatrix.diag([SplitComplex(1, 1), 1, 1])
    with pytest.raises(Singular):
        lightlike.inv()


def test_pcmatrix_apply_matches_entrywise():
    A = PCMatrix.diag([J, 1, 1])
    v = SplitComplex(np.array([1.0, 2.0, 3.0]), np.array([0.5, 0.0, 0.0]))
    out = A.apply(v)
    assert close(SplitComplex(out.re[0], out.im[0]), J * SplitComplex(1.0, 0.5))
    assert np.allclose(I12 @ I12, np.eye(3))
