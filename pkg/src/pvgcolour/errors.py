"""Exception hierarchy shared by all modules."""


class PVGError(Exception):
    """Base class for every error raised by this package."""


class DuplicatePoints(PVGError, ValueError):
    pass


class NotHullVertex(PVGError, ValueError):
    pass


class ParseError(PVGError, ValueError):
    pass


class NotThreeSat(PVGError, ValueError):
    pass


class SizeMismatch(PVGError, ValueError):
    pass


class BudgetExceeded(PVGError, RuntimeError):
    """An exponential oracle ran out of its node budget."""


class InternalInconsistency(PVGError, RuntimeError):
    """Two independent decision routes disagreed."""


class NotReduced(PVGError, ValueError):
    pass


class PreconditionError(PVGError, ValueError):
    pass


class StructuralViolation(PVGError, RuntimeError):
    """A reduced set lacks a structural property it must have."""

    def __init__(self, lemma, detail=""):
        self.lemma = lemma
        self.detail = detail
        msg = f"{lemma}: {detail}" if detail else lemma
        super().__init__(msg)


class EnumerationOverflow(PVGError, RuntimeError):
    pass


class WitnessNotTricoloured(PVGError, RuntimeError):
    pass


class GeometryDegeneracy(PVGError, RuntimeError):
    pass
