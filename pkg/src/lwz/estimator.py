"""scikit-learn style wrapper: parameter points ``(x, y)`` in, positions out."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .goursat import parse_matrix_spec, transform
from .paracomplex import SplitComplex
from .weierstrass import Surface, WeierstrassData


class TimelikeMinimalSurface(TransformerMixin, BaseEstimator):
    """Map an ``(n, 2)`` array of parameter points to ``(n, 3)`` positions.

    ``fit`` only parses and validates the Weierstrass data (there is nothing
    to learn); ``X`` is accepted for pipeline compatibility and ignored.

    Parameters
    ----------
    h, eta : str
        Expressions in ``z`` for the Gauss map and the coefficient of ``dz``.
    h_eta, h2_eta : str or None
        Optional pole-free forms of ``h*eta`` and ``h^2*eta``.
    base_point : tuple of 2 floats
    base_value : tuple of 3 floats
    matrix : str or None
        Goursat matrix as text (``J``, ``D``, ``assoc:t``, ``anti:t``,
        ``lopezros:l`` or nine comma-separated entries).
    path_order : {"xy", "yx"}
    """

    def __init__(self, h="z", eta="1", h_eta=None, h2_eta=None, base_point=(0.0, 0.0),
                 base_value=(0.0, 0.0, 0.0), matrix=None, path_order="xy"):
        self.h = h
        self.eta = eta
        self.h_eta = h_eta
        self.h2_eta = h2_eta
        self.base_point = base_point
        self.base_value = base_value
        self.matrix = matrix
        self.path_order = path_order

    def fit(self, X=None, y=None):
        if self.path_order not in ("xy", "yx"):
            raise ValueError(f"path_order must be 'xy' or 'yx', got {self.path_order!r}")
        if X is not None:
            check_array(X, ensure_min_features=2)
        bp = tuple(float(c) for c in self.base_point)
        if len(bp) != 2:
            raise ValueError("base_point needs two coordinates")
        data = WeierstrassData(self.h, self.eta, SplitComplex(*bp), tuple(self.base_value),
                               h_eta=self.h_eta, h2_eta=self.h2_eta)
        surface = Surface(data)
        if self.matrix is not None:
            surface = transform(surface, parse_matrix_spec(self.matrix))
        self.surface_ = surface
        self.n_features_in_ = 2
        return self

    def _points(self, X) -> SplitComplex:
        check_is_fitted(self, "surface_")
        X = check_array(X, dtype=np.float64)
        if X.shape[1] != 2:
            raise ValueError(f"expected 2 columns (x, y), got {X.shape[1]}")
        return SplitComplex(X[:, 0], X[:, 1])

    def transform(self, X):
        Z = self._points(X)
        return self.surface_.evaluate(Z, order=self.path_order)

    def curvature(self, X) -> np.ndarray:
        """Columns ``K, H, Q, R, Lambda`` (NaN at singular points)."""
        Z = self._points(X)
        jet = self.surface_.curvature_jet(Z, with_position=False, on_singular="mark")
        return np.column_stack([jet.K, jet.H, jet.Q, jet.R, jet.Lambda])

    def get_feature_names_out(self, input_features=None):
        return np.array(["x1", "x2", "x3"], dtype=object)
