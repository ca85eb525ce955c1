"""Shared exception types."""


class OtplabError(Exception):
    """Base class for all package errors."""


class ConfigError(OtplabError):
    """Invalid experiment or protocol configuration."""


class GroupError(OtplabError):
    """Group mismatch or other algebraic domain violation."""


class WrongKeyError(OtplabError):
    """Ideal-functionality operation attempted under the wrong identity."""


class ProtocolError(OtplabError):
    """A protocol step failed. Carries the name of the failing step."""

    def __init__(self, message: str, step: str | None = None):
        super().__init__(message)
        self.step = step


class IdentificationError(ProtocolError):
    """The tag could not be identified from its blinded state."""


class AuthenticationError(ProtocolError):
    """A MAC, CRC or signature check failed."""


class PositionError(ProtocolError):
    """A message arrived outside its position in the state machine."""


class GameError(OtplabError):
    """Privacy-game misuse: unknown entity, bad instance, double guess."""
