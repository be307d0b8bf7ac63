"""Exception hierarchy shared across the package.

CLI exit-code convention: ParameterError and StructuralError map to exit
code 2, a failed verification verdict to exit code 1, anything else to 3.
"""


class CistRcubeError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(CistRcubeError):
    """Invalid or out-of-range arguments."""


class UnsupportedParametersError(ParameterError):
    """Parameters outside the scope of the CIST constructions."""


class ConfigurationError(ParameterError):
    """An experiment configuration that cannot be sampled (e.g. empty vertex class)."""


class CapExceededError(ParameterError):
    """Graph too large for the brute-force checker without an explicit override."""


class StructuralError(CistRcubeError):
    """Structurally invalid input, e.g. a tree using an edge absent from the graph."""


class NotDualCistError(StructuralError):
    """A tree pair that does not behave as a dual-CIST."""
