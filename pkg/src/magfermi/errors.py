"""Exception types shared across the package."""


class MagfermiError(Exception):
    """Base class for all package errors."""


class DomainError(MagfermiError):
    """Input outside the mathematical domain (cut ray, pole proximity, |z| >= 1)."""


class ConvergenceError(MagfermiError):
    """An internal series or quadrature failed to meet its error target."""


class TruncationError(MagfermiError):
    """A truncated sum (Landau levels, spectrum) cannot reach the requested tail bound."""


class OrderError(MagfermiError):
    """Requested derivative order exceeds the jet cap."""


class ResolutionError(MagfermiError):
    """Grid spacing too coarse for the requested box."""


class SolverError(MagfermiError):
    """Eigensolver failed to converge or returned inconsistent results."""


class StencilError(MagfermiError):
    """Finite-difference error estimate exceeds the requested tolerance."""


class ArityError(MagfermiError):
    """Argument list length inconsistent with the declared arity."""


class QuadratureError(MagfermiError):
    """Estimated quadrature error exceeds the requested tolerance."""


class FitError(MagfermiError):
    """Rate fit impossible: too few points, non-positive data, or no spread."""


class SchemaError(MagfermiError):
    """Persisted file has the wrong magic, version, or is truncated."""
