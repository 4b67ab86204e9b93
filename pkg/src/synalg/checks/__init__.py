# Named check suites; importing this package registers them
from synalg.checks.base import BaseSuite
from synalg.checks.suites import (
    ConstantOperationSuite,
    LiftedDeterminingSetSuite,
    LinearizationSuite,
    OmegaPowerSuite,
    OnePointCompactificationSuite,
    OracleSuite,
    PullbackSuite,
    SparseSetSeparationSuite,
)

__all__ = [
    "BaseSuite",
    "ConstantOperationSuite",
    "LiftedDeterminingSetSuite",
    "LinearizationSuite",
    "OmegaPowerSuite",
    "OnePointCompactificationSuite",
    "OracleSuite",
    "PullbackSuite",
    "SparseSetSeparationSuite",
]
