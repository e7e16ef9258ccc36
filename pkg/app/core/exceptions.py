"""
Error hierarchy

Every failure raised by the services derives from MtcdefError and carries a
``detail`` payload, so the CLI can print a located diagnostic and choose the
exit code from the error class alone.
"""

from typing import Any, Dict, Optional


class MtcdefError(Exception):
    """Base error with a structured detail payload"""

    exit_code: int = 2

    def __init__(self, message: str, detail: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.detail = detail or {}


class InvalidInputError(MtcdefError):
    """Malformed input, illegal move, or division by zero"""


class TypeMismatchError(MtcdefError):
    """Boundary types of morphisms or diagram slices do not match"""

    def __init__(self, message: str, left: Any = None, right: Any = None):
        super().__init__(
            f"{message}: {left!r} vs {right!r}",
            {"left": repr(left), "right": repr(right)},
        )


class VerificationError(MtcdefError):
    """An axiom or invariant check failed"""

    exit_code = 1

    def __init__(self, message: str, report: Any = None):
        detail = {}
        if report is not None:
            detail = report.model_dump() if hasattr(report, "model_dump") else {"report": report}
        super().__init__(message, detail)
        self.report = report


class CalibrationError(VerificationError):
    """No full-center convention satisfies the calibration anchors"""
