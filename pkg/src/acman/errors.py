"""Exception hierarchy shared by all acman modules."""


class AcmanError(Exception):
    """Base class for every error raised by acman."""


class MissingChernNumber(AcmanError, KeyError):
    def __init__(self, partition):
        super().__init__(partition)
        self.partition = partition

    def __str__(self):
        return f"no Chern number for partition {list(self.partition)}"


class IntegralityViolation(AcmanError, ValueError):
    """A quantity that must be an integer came out fractional."""


class OpenManifold(AcmanError, ValueError):
    """An operation needing a fundamental class got an open manifold."""


class NotSymmetric(AcmanError, ValueError):
    pass


class NotCharacteristic(AcmanError, ValueError):
    pass


class SignatureMismatch(AcmanError, ValueError):
    pass


class NotUnimodular(AcmanError, ValueError):
    pass


class NotDivisible(AcmanError, ValueError):
    pass


class OffSphere(AcmanError, ValueError):
    pass


class BadRotation(AcmanError, ValueError):
    pass


class DegenerateK(AcmanError, ValueError):
    """The S^3 diffeomorphism leaves both critical values on one Hopf fiber."""


class NoConvergence(AcmanError):
    """A single numerical descent stalled; reported, never fatal."""

    def __init__(self, seed_index, value, point=None):
        super().__init__(seed_index, value)
        self.seed_index = seed_index
        self.value = value
        self.point = point

    def __str__(self):
        return f"start {self.seed_index} stalled at objective {self.value:.3e}"


class DescriptorError(AcmanError, ValueError):
    """Malformed descriptor input. ``path`` locates the offending field."""

    def __init__(self, message, path=""):
        super().__init__(message)
        self.path = path

    def __str__(self):
        msg = self.args[0]
        return f"{self.path}: {msg}" if self.path else msg
