import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline

from lwz import catalog
from lwz.estimator import TimelikeMinimalSurface


def points(n=12, seed=0):
    return np.random.default_rng(seed).uniform(-0.8, 0.8, (n, 2))


def test_transform_matches_closed_form():
    X = points()
    est = TimelikeMinimalSurface().fit(X)
    assert est.transform(X).shape == (12, 3)
    assert np.max(np.abs(est.transform(X) - catalog.enneper_closed(X[:, 0], X[:, 1]))) < 1e-9


def test_matrix_parameter():
    X = points()
    Y = TimelikeMinimalSurface(matrix="D").fit_transform(X)
    assert np.max(np.abs(Y - catalog.helicoid_closed(X[:, 0], X[:, 1]))) < 1e-7


def test_curvature_columns():
    X = np.array([[0.0, 0.5], [0.2, 0.1]])
    C = TimelikeMinimalSurface().fit(X).curvature(X)
    assert C.shape == (2, 5) and np.all(C[:, 0] < 0) and np.all(np.abs(C[:, 1]) < 1e-8)


def test_clone_and_params():
    est = TimelikeMinimalSurface(h="ptan(z)", eta="0.5*pcos(z)^2", base_value=(0, 0, -0.25))
    twin = clone(est)
    assert twin.get_params() == est.get_params()
    X = points(5)
    assert np.max(np.abs(twin.fit_transform(X) - catalog.catenoid_closed(X[:, 0], X[:, 1]))) < 1e-9


def test_validation():
    with pytest.raises(NotFittedError):
        TimelikeMinimalSurface().transform(points())
    with pytest.raises(ValueError):
        TimelikeMinimalSurface(path_order="zz").fit()
    with pytest.raises(ValueError):
        TimelikeMinimalSurface().fit().transform(np.zeros((3, 3)))


def test_path_orders_agree():
    X = points()
    a = TimelikeMinimalSurface(path_order="xy").fit_transform(X)
    b = TimelikeMinimalSurface(path_order="yx").fit_transform(X)
    assert np.max(np.abs(a - b)) < 1e-9


def test_in_pipeline():
    pipe = make_pipeline(TimelikeMinimalSurface())
    assert pipe.fit_transform(points(4)).shape == (4, 3)
    assert list(pipe[-1].get_feature_names_out()) == ["x1", "x2", "x3"]
