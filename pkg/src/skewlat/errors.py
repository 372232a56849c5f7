"""Exception hierarchy for skewlat.

Every error raised deliberately by the library derives from
:class:`SkewLatticeError`, so callers can catch the whole family at once.
"""

from __future__ import annotations


class SkewLatticeError(Exception):
    """Base class for all library errors."""


class IndexOutOfRange(SkewLatticeError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ParseError(SkewLatticeError, ValueError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class NotClosed(SkewLatticeError):
    """A subset is not closed under one of the operations."""

    def __init__(self, x: int, y: int, op: str):
        self.x, self.y, self.op = x, y, op
        super().__init__(f"{x} {op} {y} leaves the subset")


class NotABand(SkewLatticeError):
    def __init__(self, which: str, law: str, witness: tuple):
        self.which, self.law, self.witness = which, law, witness
        super().__init__(f"{which} reduct is not a band: {law} fails at {witness}")


class NotSkewLattice(SkewLatticeError):
    """Raised when an operation detects that its input violates the axioms."""

    def __init__(self, message: str, witness: tuple | None = None):
        self.witness = witness
        if witness is not None:
            message = f"{message} (witness {witness})"
        super().__init__(message)


class NotComparable(SkewLatticeError):
    def __init__(self, upper: int, lower: int):
        self.upper, self.lower = upper, lower
        super().__init__(f"D-class {upper} is not strictly above D-class {lower}")


class ElementNotInClass(SkewLatticeError):
    def __init__(self, element: int, cls: int):
        self.element, self.cls = element, cls
        super().__init__(f"element {element} is not in D-class {cls}")


class PartitionFailure(SkewLatticeError):
    def __init__(self, message: str, witness: tuple | None = None):
        self.witness = witness
        super().__init__(f"{message} (witness {witness})" if witness else message)


class CriteriaDisagree(SkewLatticeError):
    """Two independent routes to the same verdict disagreed."""

    def __init__(self, what: str, first, second, witness=None):
        self.what, self.first, self.second, self.witness = what, first, second, witness
        super().__init__(f"{what}: {first!r} vs {second!r} (witness {witness})")


class ClassMismatch(SkewLatticeError):
    pass


class NotAChain(SkewLatticeError):
    pass


class NotCategorical(SkewLatticeError):
    pass


class DimMismatch(SkewLatticeError):
    pass


class ScalarMismatch(SkewLatticeError):
    pass


class ShapeMismatch(SkewLatticeError):
    pass


class CapExceeded(SkewLatticeError):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"closure exceeded {cap} elements")


class NotIdempotentGenerator(SkewLatticeError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"generator {index} is not idempotent")


class NablaNotAssociative(SkewLatticeError):
    def __init__(self, witness: tuple[int, int, int]):
        self.witness = witness
        super().__init__(f"nabla is not associative at {witness}")


class InducedAlgebraInvalid(SkewLatticeError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"induced algebra is not a skew lattice: {report.failures()}")


class OrderPreconditionFailed(SkewLatticeError):
    def __init__(self, failed: list[str]):
        self.failed = failed
        super().__init__("order precondition failed: " + ", ".join(failed))


class NotASkewChain(SkewLatticeError):
    pass
