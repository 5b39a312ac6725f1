"""Hand workspace measurement profiles, relative object sizing and a planar kinematics oracle."""

__version__ = "0.1.0"

from .errors import (
    ConstraintUnsatisfied,
    DegenerateSpanRange,
    DisjointSpanRanges,
    GraspGaugeError,
    JointLimitViolation,
    MissingGraspSet,
    NoValidConfiguration,
    OutOfRange,
    WrongShape,
)
from .ingest import (
    ParseDiagnostic,
    ParseError,
    ParseWarning,
    parse_hand_model,
    parse_hand_profile,
    parse_object_set,
    serialize_hand_model,
    serialize_hand_profile,
    serialize_object_set,
)
from .model import (
    ContactChoice,
    CylindricalPose,
    CylindricalSection,
    HandProfile,
    Method,
    ObjectSpec,
    Pose,
    PoseSample,
    PowerCylindricalSet,
    PowerSphericalSet,
    PrecisionSet,
    Provenance,
    SectionLine,
    Shape,
    SphericalPose,
    SphericalSection,
    ValidationReport,
    WidthRange,
    validate_profile,
)
from .sizing import RelativeSize, SizeClass, classify, classify_object, object_dimension_for, relative_size
from .workspace import (
    FitResult,
    SpanDepthCurve,
    build_precision_curve,
    fits_power_cylindrical,
    fits_power_spherical,
    fits_precision,
    graspable_area,
    interpolate_depth,
)
