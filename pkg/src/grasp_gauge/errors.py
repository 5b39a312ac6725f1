"""Exception hierarchy shared by the grasp_gauge modules."""


class GraspGaugeError(Exception):
    """Base class for all package errors."""


class MissingGraspSet(GraspGaugeError):
    """The profile lacks the measurement set an operation needs."""


class DegenerateSpanRange(GraspGaugeError):
    """Minimum and maximum precision span coincide."""


class OutOfRange(GraspGaugeError, ValueError):
    """Query lies outside the extent of a span-depth curve."""


class WrongShape(GraspGaugeError, ValueError):
    """Object shape does not match the grasp being tested."""


class JointLimitViolation(GraspGaugeError, ValueError):
    pass


class NoValidConfiguration(GraspGaugeError):
    """Joint grid search found no configuration meeting the grasp rules."""


class ConstraintUnsatisfied(GraspGaugeError):
    pass


class DisjointSpanRanges(GraspGaugeError, ValueError):
    pass
