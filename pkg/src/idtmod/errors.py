"""Exception hierarchy shared by all idtmod modules."""


class IdtError(Exception):
    """Base class for all idtmod errors."""


class InsufficientDataError(IdtError):
    """Too few samples, points, or temperatures for the requested operation."""


class InvalidArgumentError(IdtError):
    """An argument violates a precondition or a type invariant."""


class OutOfDomainError(IdtError):
    """A kernel or function was evaluated outside its mathematical domain."""


class OutOfRangeError(IdtError):
    """A computed value falls outside its physically admissible range."""


class QuadratureFailure(IdtError):
    """Adaptive quadrature failed to converge."""


class DegenerateDisplacements(IdtError):
    """Displacement amplitudes make the modulus formula denominator vanish."""


class SingularTemperature(IdtError):
    """Temperature at (or numerically near) the WLF pole."""


class FitFailure(IdtError):
    """A least-squares or NNLS fit produced no usable solution."""


class TrainingFailure(IdtError):
    """Network training could not make progress (singular normal equations)."""


class TrainingDivergence(IdtError):
    """Network training produced a non-finite loss."""


class UndefinedCorrelation(IdtError):
    """Correlation requested on data with zero variance."""


class MeshError(IdtError):
    """Mesh generation failed or produced an invalid mesh."""


class SolverDivergence(IdtError):
    """Time stepping produced non-finite or unstable results."""


class TuningConflict(IdtError):
    """Load tuning cannot satisfy the horizontal and vertical strain windows
    simultaneously.

    Attributes carry the strains observed at the horizontal target so callers
    can decide how to proceed.
    """

    def __init__(self, message, horizontal_microstrain=None,
                 vertical_microstrain=None, suggested_load=None):
        super().__init__(message)
        self.horizontal_microstrain = horizontal_microstrain
        self.vertical_microstrain = vertical_microstrain
        self.suggested_load = suggested_load


class DegenerateStrain(IdtError):
    """Strain amplitude too small to form a stress/strain ratio."""


class IngestionError(IdtError):
    """Input file failed schema or invariant validation; message names rows."""


class DependencyError(IdtError):
    """A pipeline stage was requested before the stages it depends on."""
