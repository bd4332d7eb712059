"""Exception hierarchy for dpencil."""


class PencilError(Exception):
    """Base class for all dpencil errors."""


class ContractViolation(PencilError, ValueError):
    """An argument breaks a documented precondition."""


class NumericRangeError(PencilError, OverflowError):
    """A requested evaluation would overflow double precision."""


class BranchPointError(ContractViolation):
    """Operation requested at a branch point of the z(lambda) map."""


class PoleError(PencilError, ZeroDivisionError):
    """Evaluation at an excluded real point where sin(zeta) = 0."""


class SpectralPointError(PencilError):
    """Resolvent-type quantity requested where Phi(z) is (numerically) zero."""

    def __init__(self, message, z=None, phi_abs=None):
        super().__init__(message)
        self.z = z
        self.phi_abs = phi_abs


class RootSearchError(PencilError):
    """Zero localization failed after contour perturbation retries."""


class DegenerateSystemError(PencilError):
    """A least-squares linkage system is too ill-conditioned to solve."""
