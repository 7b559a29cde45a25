"""Exact golden-field laboratory for the icosians, the 600-cell, E8 and D6."""

__version__ = "0.1.0"

from .golden import PHI, GoldenNum, phi  # noqa: E402
from .quaternion import GQuat, QuatSet, binary_icosahedral_group  # noqa: E402

__all__ = ["__version__", "GoldenNum", "PHI", "phi", "GQuat", "QuatSet", "binary_icosahedral_group"]
