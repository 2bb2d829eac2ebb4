"""Timelike minimal surfaces in Lorentz-Minkowski 3-space from split-complex Weierstrass data."""
from .errors import *  # noqa: F401,F403
from .expr import eval_jet, parse, to_text
from .goursat import (
    ConformalMatrix,
    LorentzMatrix,
    conformal_check,
    dual_data,
    lopez_ros_data,
    special,
    transform,
)
from .nullcurves import NullCurve, NullPatch, deform, flat_classify, from_null_curves, null_forms
from .paracomplex import (
    J,
    Jet2,
    NullPair,
    PCMatrix,
    SplitComplex,
    modulus_sq,
    null_split,
    pc_div,
    pcirc,
    pexp,
    recompose,
    wirtinger_residual,
)
from .symmetry import (
    DomainIsometry,
    SpaceGroupElement,
    detect,
    family_report,
    propagate,
    pullback_residual,
    quadruple,
)
from .weierstrass import (
    PointClass,
    SingularityClass,
    Surface,
    SurfaceJet,
    WeierstrassData,
    curvature_jet,
    evaluate,
    isometry_class_compare,
    metric_factor,
    omega_at,
    singularity_classify,
    unit_normal,
)

__version__ = "0.1.0"
