"""Curve geometry in Minkowski 3-space.

Vector algebra with the (-,+,+) metric, frame extraction and synthesis for
non-null curves, partner-curve offsets with a full set of numerical
identity audits, spherical frame images, and a command-line front end.
"""

from .lorentz import (
    AngleKind,
    CausalCharacter,
    LorentzAngle,
    Vec3L,
    angle_between,
    causal_character,
    cross,
    inner,
    norm,
)
from .curve import (
    Curve,
    CurveSamples,
    arclength,
    classify_curve,
    curve_from_samples,
    load_samples_csv,
    reparametrize_unit,
    sample,
    speed,
)
from .frenet import (
    CurveKind,
    FrenetFrame,
    frenet_apparatus,
    frenet_synthesize,
    synthesized_gram_drift,
)
from .mannheim import (
    MannheimCurveTest,
    MannheimPair,
    MannheimPairType,
    classify_pair,
    curvature_center_distances,
    curvature_center_ratio,
    exact_partner_pair,
    mannheim_curve_test,
    mannheim_residual,
    offset_along_binormal,
    offset_along_normal,
    tangent_decomposition,
    theta,
    verify_distance,
    verify_frame_relations,
    verify_linear_relation,
    verify_ratio_nonconstant,
    verify_torsion_relation,
    verify_torsion_square,
)
from .indicatrix import (
    Indicatrix,
    SphereKind,
    indicatrix_of,
    indicatrix_tangent,
    verify_indicatrix_relations,
)
from .builtins import BUILTIN_CURVE_NAMES, builtin_curve
from .expr import Expr, parse_expr
from .reports import REPORT_JSON_SCHEMA, VerificationReport, Verdict
from . import errors

__version__ = "0.1.0"
