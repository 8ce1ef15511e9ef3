"""loopsmith - finite loops, Steiner loops and Moufang's Property."""

__version__ = "0.1.0"

from .core.bose import BoseParams, bose_loop, bose_sts, mp_criterion
from .core.loop import LoopTable, associator, mul, validate_table
from .core.sts import TripleSystem, loop_to_sts, sts_to_loop, validate_sts
from .core.verdict import mp_status, property_report
from .errors import ErrorCode, LoopsmithError
from .schemas import MPKind, MPVerdict

__all__ = [
    "__version__",
    "BoseParams",
    "ErrorCode",
    "LoopTable",
    "LoopsmithError",
    "MPKind",
    "MPVerdict",
    "TripleSystem",
    "associator",
    "bose_loop",
    "bose_sts",
    "loop_to_sts",
    "mp_criterion",
    "mp_status",
    "mul",
    "property_report",
    "sts_to_loop",
    "validate_sts",
    "validate_table",
]
