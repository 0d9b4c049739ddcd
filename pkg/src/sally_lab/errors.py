"""Exception types shared across the package."""


class SallyLabError(Exception):
    """Base class for every error raised by this package."""


class InputError(SallyLabError):
    """Malformed input document; carries a field path for addressing."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")


class ArityMismatch(SallyLabError):
    pass


class NotInSemigroup(SallyLabError):
    pass


class NotMPrimary(SallyLabError):
    pass


class AmbientMismatch(SallyLabError):
    pass


class NotContained(SallyLabError):
    pass


class WindowTooShort(SallyLabError):
    """Hilbert table too short to stabilize; the caller must enlarge N."""


class NonIntegerCoefficient(SallyLabError):
    pass


class SemigroupAmbientUnsupported(SallyLabError):
    pass


class QNotContained(SallyLabError):
    pass


class QNotParameterShaped(SallyLabError):
    pass


class NotAReduction(SallyLabError):
    pass


class HypothesisFailed(SallyLabError):
    """A verifier precondition does not hold on the given input."""

    def __init__(self, hypothesis, message=""):
        self.hypothesis = hypothesis
        super().__init__(message or hypothesis)


class InternalInconsistency(SallyLabError):
    """Two routes that must agree disagreed; a bug or a violated precondition."""


class EmptyInterval(InternalInconsistency):
    pass


class GoldenMismatch(SallyLabError):
    pass
