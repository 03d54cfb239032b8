"""Exception hierarchy.  Every error carries a machine-readable ``code``."""


class EqEulerError(Exception):
    code = "EqEulerError"

    def __init__(self, message=""):
        super().__init__(message)
        self.message = message

    def to_json(self):
        return {"error": self.code, "message": self.message}


class InputError(EqEulerError):
    """Bad user input (CLI exit code 1)."""

    code = "InputError"


class InvalidPermutation(InputError):
    code = "InvalidPermutation"


class OrderCapExceeded(InputError):
    code = "OrderCapExceeded"


class NotSimplicialAction(InputError):
    code = "NotSimplicialAction"


class InvalidActionData(InputError):
    code = "InvalidActionData"


class NotEquivariant(InputError):
    code = "NotEquivariant"


class SchurIndexUnknown(EqEulerError):
    code = "SchurIndexUnknown"


class MathematicalInconsistency(EqEulerError):
    """An internal self-check failed: a bug, not bad input."""

    code = "MathematicalInconsistency"


class InternalInconsistency(MathematicalInconsistency):
    code = "InternalInconsistency"


class NotIrreducible(MathematicalInconsistency):
    code = "NotIrreducible"


class DecompositionNotIntegral(MathematicalInconsistency):
    code = "DecompositionNotIntegral"


class BijectionFailure(MathematicalInconsistency):
    code = "BijectionFailure"


class RelationMismatch(MathematicalInconsistency):
    code = "RelationMismatch"


class SingularMatrix(MathematicalInconsistency):
    code = "SingularMatrix"
