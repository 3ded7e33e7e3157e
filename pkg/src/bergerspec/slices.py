"""Berger-sphere slices of Einstein 4-manifolds.

A slice here is a 3-sphere carrying a left-invariant metric
f (sigma_1^2 + sigma_2^2) + w^2 sigma_3^2 inside an Einstein ambient.
Dividing by the volume factor mu = (f w)^{2/3} turns it into the
unit-volume Berger metric g_B^t with t = w^{2/3} f^{-1/3}, so the slice
Laplace spectrum is t (A + B x) / mu = (A + B x) / f per branch, with
x = t^{-3} = f / w^2.

The concrete family implemented in this module is the geodesic spheres of
the complex projective plane (f = r^2/(1+r^2), w = r/(1+r^2), shift 3/2).
A synthetic family (round equatorial spheres in the round 4-sphere) ships
for exercising the machinery with independently known answers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .berger import SpectrumEntry, spectrum_with_multiplicity, tanno_lambda1, scale_spectrum
from .jacobi import (
    EinsteinAmbient,
    IndexNullityReport,
    index_nullity,
    jacobi_shift,
    jacobi_spectrum,
)

CP2_AMBIENT = EinsteinAmbient(n=4, s=6.0, validity="hypersurface", name="CP^2")
ROUND_S4_AMBIENT = EinsteinAmbient(n=4, s=12.0, validity="constant-curvature", name="round S^4")

DEFAULT_DEPTH = 25


@dataclass(frozen=True)
class SliceGeometry:
    """One slice f (sigma_1^2 + sigma_2^2) + w^2 sigma_3^2 at parameter r."""

    r: float
    f: float
    w: float
    ambient: EinsteinAmbient

    def __post_init__(self) -> None:
        if not (math.isfinite(self.f) and self.f > 0):
            raise ValueError(f"coefficient f must be finite and positive, got {self.f!r}")
        if not (math.isfinite(self.w) and self.w > 0):
            raise ValueError(f"coefficient w must be finite and positive, got {self.w!r}")

    @property
    def w2(self) -> float:
        return self.w * self.w

    @property
    def x(self) -> float:
        """Squash coordinate x = t^{-3} = f / w^2."""
        return self.f / self.w2

    def exact_x(self) -> Fraction:
        """x as the exact ratio of the stored binary floats."""
        return Fraction(self.f) / Fraction(self.w2)

    @property
    def t(self) -> float:
        """Berger squash parameter of the unit-volume normalization."""
        return self.w ** (2.0 / 3.0) * self.f ** (-1.0 / 3.0)

    @property
    def mu(self) -> float:
        """Volume normalization factor (f w)^{2/3}."""
        return (self.f * self.w) ** (2.0 / 3.0)


def slice_spectrum(geom: SliceGeometry, depth: int = DEFAULT_DEPTH) -> list[SpectrumEntry]:
    """First `depth` distinct Laplace eigenvalues of the slice metric.

    Branch values are grouped exactly in the coordinate A + B x before the
    single division by f, so equal eigenvalues merge with summed
    multiplicities and no floating-point tolerance is involved.
    """
    if depth < 1:
        raise ValueError(f"depth must be a positive integer, got {depth!r}")
    x = geom.exact_x()
    entries = []
    for value, mult, modes in spectrum_with_multiplicity(x, depth):
        source = "constant" if value == 0 else modes[0]
        entries.append(SpectrumEntry(float(value) / geom.f, mult, source))
    return entries


def slice_index_nullity(
    geom: SliceGeometry,
    depth: int = DEFAULT_DEPTH,
    zero_tolerance: float | None = None,
    notes: tuple[str, ...] = (),
) -> IndexNullityReport:
    """Index and nullity of the slice's Jacobi operator, strict counts."""
    shift = jacobi_shift(geom.ambient)
    if zero_tolerance is None:
        zero_tolerance = 1e-9 * max(1.0, abs(shift))
    shifted = jacobi_spectrum(slice_spectrum(geom, depth), shift)
    report = index_nullity(
        shifted, zero_tolerance, parameter=geom.r, shift=shift, notes=notes
    )
    if report.truncation_bound <= zero_tolerance:
        raise ValueError(
            f"depth {depth} does not reach past the shift {shift}; "
            "increase depth so the index count is certified complete"
        )
    return report


def cp2_slice(r: float) -> SliceGeometry:
    """Geodesic sphere of radius parameter r in the complex projective plane."""
    if not (math.isfinite(r) and r > 0):
        raise ValueError(f"radius must be finite and positive, got {r!r}")
    one_plus = 1.0 + r * r
    return SliceGeometry(r=r, f=r * r / one_plus, w=r / one_plus, ambient=CP2_AMBIENT)


def cp2_lambda1(r: float) -> float:
    """First nonzero Laplace eigenvalue of the geodesic sphere at radius r.

    Computed through the normalization pipeline (Tanno's first eigenvalue
    of g_B^t, unscaled by mu); algebraically this is
    (3 + r^2)(1 + r^2)/r^2 for r <= sqrt(5) and 8(1 + r^2)/r^2 beyond.
    """
    geom = cp2_slice(r)
    entry = SpectrumEntry(tanno_lambda1(geom.t), 1)
    return scale_spectrum([entry], geom.mu)[0].value


def cp2_lambda1_exact(r_squared: Fraction) -> Fraction:
    """Closed form of cp2_lambda1 as an exact rational in r^2."""
    r2 = Fraction(r_squared)
    if r2 <= 0:
        raise ValueError(f"r^2 must be positive, got {r_squared!r}")
    if r2 <= 5:
        return (3 + r2) * (1 + r2) / r2
    return 8 * (1 + r2) / r2


def cp2_index_nullity(r: float, depth: int = DEFAULT_DEPTH) -> IndexNullityReport:
    """Jacobi index and nullity of the geodesic sphere at radius r."""
    return slice_index_nullity(cp2_slice(r), depth)


def synthetic_slice(r: float) -> SliceGeometry:
    """Round sphere of latitude r in the round 4-sphere (f = sin^2 r, w = sin r).

    This degenerates at r = 0 and pi like the Page family and has a fully
    known spectrum (the round 3-sphere of radius sin r), making it a
    machinery check that is independent of any coefficient transcription.
    """
    if not 0 < r < math.pi:
        raise ValueError(f"latitude must lie in (0, pi), got {r!r}")
    s = math.sin(r)
    return SliceGeometry(r=r, f=s * s, w=s, ambient=ROUND_S4_AMBIENT)


def find_root_bisection(
    fn: Callable[[float], float], lo: float, hi: float, tol: float
) -> float:
    """Bisection root of fn on [lo, hi] to interval width tol.

    Requires a strict sign change between finite endpoint values.
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol!r}")
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo!r}, {hi!r}]")
    flo, fhi = fn(lo), fn(hi)
    if not (math.isfinite(flo) and math.isfinite(fhi)):
        raise ValueError(f"endpoint values must be finite, got f(lo)={flo!r}, f(hi)={fhi!r}")
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise ValueError(f"no sign change on [{lo!r}, {hi!r}]: f(lo)={flo!r}, f(hi)={fhi!r}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # interval at floating-point resolution
        fmid = fn(mid)
        if not math.isfinite(fmid):
            raise ValueError(f"non-finite value f({mid!r})={fmid!r} during bisection")
        if fmid == 0.0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
