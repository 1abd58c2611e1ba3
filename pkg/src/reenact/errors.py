"""Exception types shared across the package."""


class ReenactError(Exception):
    """Base class for all package errors."""


class InvalidBoundary(ReenactError):
    """A boundary polyline or part definition is unusable (too few points, empty)."""


class InvalidParameter(ReenactError):
    """An argument violates a documented precondition."""


class DegenerateShape(ReenactError):
    """A landmark set has no spatial extent (zero variance), so no similarity fit exists."""


class NumericalError(ReenactError):
    """A forward pass or loss produced NaN/Inf."""


class InvalidState(ReenactError):
    """An object was used before the call that prepares it (e.g. unfitted projector)."""


class IngestError(ReenactError):
    """A video or corpus could not be read."""


class EmptyIngestWarning(UserWarning):
    """Ingestion completed but retained zero frames."""


class CheckpointError(ReenactError):
    """A checkpoint file is missing, corrupt, or incompatible."""


class DivergenceError(ReenactError):
    """Training loss exceeded the divergence contract; a rescue checkpoint was written."""

    def __init__(self, message, checkpoint_path=None):
        super().__init__(message)
        self.checkpoint_path = checkpoint_path


class IncompatibleBundle(ReenactError):
    """A target bundle's config/boundary-spec hashes do not match the encoder in use."""
