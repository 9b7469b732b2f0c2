"""Exception hierarchy shared by all modules.

Every error carries a stable machine-readable ``code`` so the service and the
CLI can emit structured error objects without string-matching messages.
"""

from __future__ import annotations


class KirwanLabError(Exception):
    code = "error"

    def payload(self) -> dict:
        return {"type": self.code, "message": str(self)}


class ParseError(KirwanLabError):
    code = "parse_error"


class SpecValidationError(KirwanLabError):
    """Invalid manifold description; the message names the offending factor."""

    code = "validation_error"


class CustomBasisNotABasis(KirwanLabError):
    code = "custom_basis_not_a_basis"


class Inconsistent(KirwanLabError):
    """A linear system has no solution."""

    code = "inconsistent"


class Singular(KirwanLabError):
    """A matrix has no inverse over its coefficient ring."""

    code = "singular"


class DegenerateSpec(KirwanLabError):
    code = "degenerate_spec"


class CriticalLevel(KirwanLabError):
    """An integration level coincides with a critical value."""

    code = "critical_level"


class WrongDegree(KirwanLabError):
    code = "wrong_degree"


class BasisMismatch(KirwanLabError):
    code = "basis_mismatch"


class MissingBranch(KirwanLabError):
    """A weighting does not assign a value to every branch."""

    code = "missing_branch"


class InvalidWeighting(KirwanLabError):
    code = "invalid_weighting"
