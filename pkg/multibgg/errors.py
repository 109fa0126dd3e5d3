from typing import Optional


class MultiBGGError(Exception):
    pass


class SchemaError(MultiBGGError, ValueError):
    """Malformed input document. `pointer` locates the offending field."""

    def __init__(self, message: str, pointer: Optional[str] = None):
        self.pointer = pointer
        super().__init__(f"{message} (at {pointer})" if pointer else message)


class InvalidRingError(SchemaError):
    pass


class AlgebraicError(MultiBGGError):
    pass


class NotSquareZero(AlgebraicError):
    pass


class Inhomogeneous(AlgebraicError):
    pass


class RelationsNotPreserved(AlgebraicError):
    pass


class NotAMorphism(AlgebraicError):
    pass


class NotPositivelyGraded(AlgebraicError):
    pass


class NotSingleDegree(AlgebraicError):
    pass


class UnsupportedGrading(AlgebraicError):
    pass


class NonzeroDegreeDifferential(AlgebraicError):
    pass


class RingMismatch(AlgebraicError):
    pass


class NotInKernel(AlgebraicError):
    pass


class NotAFlag(AlgebraicError):
    pass
