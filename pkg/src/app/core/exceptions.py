"""
Exception hierarchy shared by the solvers, services and the CLI.

Configuration errors subclass ValueError so that pydantic validators report
them as validation errors. Numerical errors map to CLI exit code 2.
"""
from typing import Any, Dict, Optional


class QnmLabError(Exception):
    """Root of all toolkit errors."""


class ConfigurationError(QnmLabError, ValueError):
    """Invalid user input: structure, run config or command options."""


class InvalidGeometryError(ConfigurationError):
    pass


class ProbeLocationError(ConfigurationError):
    pass


class InvalidRadiiError(ConfigurationError):
    pass


class CoincidentPointError(ConfigurationError):
    """The divergent real part of a Green's function was requested."""


class SpecialFunctionDomainError(ConfigurationError):
    pass


class NumericalError(QnmLabError):
    """A solver failed to produce an acceptable answer."""


class NoConvergenceError(NumericalError):
    def __init__(self, message: str, last_iterate: complex, residual: float, iterations: int = 0):
        super().__init__(f"{message} (last iterate {last_iterate:.12g}, |residual| {residual:.3e}, "
                         f"iterations {iterations})")
        self.last_iterate = last_iterate
        self.residual = residual
        self.iterations = iterations


class SpuriousRootError(NumericalError):
    pass


class EigenSolveError(NumericalError):
    def __init__(self, message: str, diagnostics: Optional[Dict[str, Any]] = None):
        self.diagnostics = diagnostics or {}
        details = ", ".join(f"{k}={v}" for k, v in self.diagnostics.items())
        super().__init__(f"{message} [{details}]" if details else message)


class SingularSystemError(NumericalError):
    pass


class ModeNodeError(NumericalError):
    """The reference point sits on a node of the mode."""


class NonPositiveVolumeError(NumericalError):
    pass
