"""Exception types raised by aesmix."""


class AesMixError(Exception):
    """Base class for all library errors."""


class DomainError(AesMixError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class InputError(AesMixError, ValueError):
    """Malformed key, block or data length."""


class PaddingError(InputError):
    """PKCS#7 padding failed verification on decrypt."""


class BackendInitError(AesMixError, RuntimeError):
    """A MixColumns backend was used without complete, verified tables."""


class CorrectnessError(AesMixError, RuntimeError):
    """Backends disagreed on identical inputs."""


class VerificationError(AesMixError):
    """A known-answer test or self-test check failed."""
