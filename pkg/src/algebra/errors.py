"""
Exception hierarchy shared by the models, the forms layer and the cli.
"""

from typing import Optional


class VertexFormsError(Exception):
    """Base class for every error raised by vertex_forms."""


class CutoffExceeded(VertexFormsError):
    """
    A computation needed a block outside the configured cutoffs.

    Attributes:
        required_degree: Smallest max_degree that would have sufficed, if known
        required_weight_len: Smallest max_weight_len that would have sufficed, if known
    """

    def __init__(self, message: str, required_degree: Optional[int] = None,
                 required_weight_len: Optional[int] = None):
        super().__init__(message)
        self.required_degree = required_degree
        self.required_weight_len = required_weight_len

    def extension(self) -> dict:
        return {
            "required_degree": self.required_degree,
            "required_weight_len": self.required_weight_len,
        }


class DegenerateLattice(VertexFormsError):
    """The locality matrix does not define an even nondegenerate lattice."""


class NotHomogeneous(VertexFormsError):
    """An operation that needs a single (weight, degree) block got a mixed element."""


class InvalidFunctional(VertexFormsError):
    """A scalar functional does not vanish on D*A_1."""


class ConfigError(VertexFormsError):
    """The run configuration could not be parsed or validated."""
