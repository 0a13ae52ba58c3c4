"""Spherical function families and their Jacobi polynomial counterparts."""

from spherikit.family.jacobi import jacobi_in_t, jacobi_recurrence
from spherikit.family.spherical import SphericalFamily, SphericalType, build_family, build_phi

__all__ = [
    "SphericalType",
    "SphericalFamily",
    "build_phi",
    "build_family",
    "jacobi_in_t",
    "jacobi_recurrence",
]
