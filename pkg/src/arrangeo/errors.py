class ArrangeoError(Exception):
    """Base class for all library errors."""


class DimensionError(ArrangeoError, ValueError):
    pass


class SingularError(ArrangeoError, ValueError):
    pass


class RankDeficiencyError(ArrangeoError, ValueError):
    pass


class GeometryError(ArrangeoError, ValueError):
    pass


class GeneralPositionError(ArrangeoError, ValueError):
    """An arrangement (or normal set) is not in general position.

    ``witness`` holds the offending 1-based subscript set when known.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DegeneracyError(ArrangeoError, ValueError):
    pass


class CapacityError(ArrangeoError, RuntimeError):
    pass
