"""Exception hierarchy shared by all modules."""


class ChordalTIMError(Exception):
    """Base class for library errors."""


class TopologyError(ChordalTIMError, ValueError):
    """Malformed topology document or invalid graph/message data."""


class SizeLimitError(ChordalTIMError):
    """An exact search was asked to run beyond its desk-scale cap."""


class NotChordalError(ChordalTIMError):
    """Operation requires a chordal topology."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ChordalTopologyError(ChordalTIMError):
    """Operation requires a non-chordal topology."""


class KeyMismatchError(ChordalTIMError, KeyError):
    """A rate tuple is keyed by messages outside the region."""

    def __str__(self):
        return self.args[0] if self.args else ""


class InfeasibleScheduleError(ChordalTIMError):
    """No orthogonal schedule with total weight <= 1 delivers the requested rates."""

    def __init__(self, message, min_total_weight=None):
        super().__init__(message)
        self.min_total_weight = min_total_weight

    @property
    def gap(self):
        if self.min_total_weight is None:
            return None
        return self.min_total_weight - 1


class CertificateError(ChordalTIMError):
    """The orthogonal-access gap for the cited tuple is not strictly positive."""

    def __init__(self, message, n=None, claimed_sum=None, orthogonal_max_sum=None):
        super().__init__(message)
        self.n = n
        self.claimed_sum = claimed_sum
        self.orthogonal_max_sum = orthogonal_max_sum
