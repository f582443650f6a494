"""Exception and warning types shared across the package.

Physics errors derive from ``PhysicsError`` so the CLI can map them to a
dedicated exit code; configuration problems raise ``ConfigError``.
"""


class PhysicsError(Exception):
    """A computation failed because the inputs are outside the model's domain."""


class NotPositiveDefinite(PhysicsError):
    """A matrix that must be positive definite has an eigenvalue at or below tolerance."""


class DimensionMismatch(PhysicsError):
    """Operands have incompatible dimensions."""


class DegenerateCoupling(PhysicsError):
    """Both scattering channels vanish; the pair-mixing ratio is undefined."""


class UnstableHamiltonian(PhysicsError):
    """A quadratic-form block is not positive definite (parametric instability)."""


class TooManyModes(PhysicsError):
    """Partition enumeration requested beyond the combinatorial guard."""


class NonUniqueStationaryState(PhysicsError):
    """The rate matrix has a null space of dimension larger than one."""

    def __init__(self, dimension: int):
        self.dimension = dimension
        super().__init__(f"stationary state is not unique: null-space dimension {dimension}")


class InvalidState(PhysicsError):
    """A density matrix violates its positivity tolerance."""


class CutoffNotConverged(PhysicsError):
    """Raising the Fock cutoff changed the result by more than the tolerance."""


class ConfigError(Exception):
    """An experiment configuration is missing, malformed, or inconsistent."""


class DegenerateQuasienergies(UserWarning):
    """Two Floquet eigenphases coincide within tolerance; basis choice is arbitrary there."""
