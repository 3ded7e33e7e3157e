"""Exact Laplace-Beltrami spectrum of the unit round p-sphere.

Eigenvalues are k(k+p-1) for integer degree k >= 0, with multiplicity
C(k+p, p) - C(k+p-2, p), the dimension of degree-k spherical harmonics.
Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class SphereSpectrumEntry:
    degree: int
    eigenvalue: int
    multiplicity: int


def _check_dim(p: int) -> None:
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"sphere dimension must be a positive integer, got {p!r}")


def _check_degree(k: int) -> None:
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"harmonic degree must be a non-negative integer, got {k!r}")


def sphere_eigenvalue(k: int, p: int) -> int:
    """Eigenvalue k(k+p-1) of the degree-k harmonics on the unit p-sphere."""
    _check_degree(k)
    _check_dim(p)
    return k * (k + p - 1)


def sphere_multiplicity(k: int, p: int) -> int:
    """Dimension of the degree-k harmonic eigenspace on the p-sphere.

    The count is C(k+p, p) - C(k+p-2, p): homogeneous degree-k polynomials
    in p+1 variables minus the image of multiplication by |x|^2.
    """
    _check_degree(k)
    _check_dim(p)
    lower = comb(k + p - 2, p) if k + p - 2 >= 0 else 0
    return comb(k + p, p) - lower


def sphere_spectrum(p: int, k_max: int) -> list[SphereSpectrumEntry]:
    """Entries for degrees 0..k_max, ascending in eigenvalue."""
    _check_dim(p)
    _check_degree(k_max)
    return [
        SphereSpectrumEntry(k, sphere_eigenvalue(k, p), sphere_multiplicity(k, p))
        for k in range(k_max + 1)
    ]
