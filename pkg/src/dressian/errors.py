"""Exception hierarchy shared across the package."""


class DressianError(Exception):
    """Base class for all package errors."""


class ParameterError(DressianError):
    """Invalid argument (bad (k, n), unknown label, wrong vector length, ...)."""


class MembershipError(DressianError):
    """A weight vector is not a tropical Pluecker vector.

    Carries the first failing three-term relation in ``relation``.
    """

    def __init__(self, message, relation=None):
        super().__init__(message)
        self.relation = relation


class ReconstructionError(DressianError):
    """A dissimilarity map is not a tree metric.

    ``quartet`` names a violating 4-subset of the leaf set.
    """

    def __init__(self, message, quartet=None):
        super().__init__(message)
        self.quartet = quartet


class CompatibilityError(DressianError):
    """A tree arrangement violates the overlap-distance condition.

    ``violation`` is a tuple (index_a, index_b, pair_a, pair_b).
    """

    def __init__(self, message, violation=None):
        super().__init__(message)
        self.violation = violation


class EmptyConeError(DressianError):
    """A cone signature is not realized by any weight vector."""


class NonMaximalConeError(DressianError):
    """An operation requiring an interior point of a maximal cone got something else."""


class FormatError(DressianError):
    """Malformed input document (weight / arrangement / subdivision / fan file)."""
