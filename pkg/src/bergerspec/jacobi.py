"""Jacobi operators of totally geodesic submanifolds of Einstein spaces.

For a totally geodesic hypersurface M of an Einstein manifold with scalar
curvature s and dimension n, the second variation of volume is governed by
J = Delta_M - (s/n) I, so the Jacobi spectrum is the Laplace spectrum
shifted down by s/n.  The same holds in higher codimension when the
ambient has constant curvature.  All spectra here use the positive
Laplacian convention, so Jacobi eigenvalues are lambda_k - s/n.

Index and nullity are strict counts: eigenvalues below -tol and within
tol of zero respectively.  Reports carry the witnesses and the largest
value seen, so a truncated spectrum certifies its own completeness
(anything unseen lies above the truncation bound).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .berger import SpectrumEntry

_SUPPORTED_VALIDITY = ("hypersurface", "constant-curvature")


class RicPerpUnsupportedError(ValueError):
    """Normal Ricci curvature is not computed outside the two shift cases."""


@dataclass(frozen=True)
class EinsteinAmbient:
    """An Einstein ambient space, carrying just what the shift needs."""

    n: int
    s: float
    validity: str
    name: str = ""

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"ambient dimension must be a positive integer, got {self.n!r}")
        if self.validity not in _SUPPORTED_VALIDITY + ("general",):
            raise ValueError(
                f"validity must be one of {_SUPPORTED_VALIDITY + ('general',)}, got {self.validity!r}"
            )


def jacobi_shift(ambient: EinsteinAmbient) -> float:
    """The spectral shift s/n of the Jacobi operator.

    Only the hypersurface and constant-curvature cases reduce the normal
    Ricci term to s/n; anything else is refused rather than guessed.
    """
    if ambient.validity not in _SUPPORTED_VALIDITY:
        raise RicPerpUnsupportedError(
            f"Ric_perp unsupported for ambient {ambient.name or ambient.validity!r}: "
            "the s/n shift needs a hypersurface or a constant-curvature ambient"
        )
    return ambient.s / ambient.n


def jacobi_spectrum(laplace: list[SpectrumEntry], shift: float) -> list[SpectrumEntry]:
    """Shift a Laplace spectrum down by `shift`, preserving order and sources."""
    values = [e.value for e in laplace]
    if values != sorted(values):
        raise ValueError("laplace spectrum must be sorted ascending")
    if not any(v == 0 for v in values):
        raise ValueError("laplace spectrum must contain the zero eigenvalue")
    return [replace(e, value=e.value - shift) for e in laplace]


@dataclass(frozen=True)
class IndexNullityReport:
    """Strict index/nullity counts with their witnesses.

    witnesses lists (eigenvalue, multiplicity, shifted value) for every
    entry counted in the index or the nullity.  truncation_bound is the
    largest shifted value present in the input, certifying that no entry
    below it was missed by truncation.
    """

    parameter: float
    index: int
    nullity: int
    witnesses: tuple[tuple[float, int, float], ...]
    zero_tolerance: float
    truncation_bound: float
    notes: tuple[str, ...] = field(default=())


def index_nullity(
    jacobi: list[SpectrumEntry],
    zero_tolerance: float,
    *,
    parameter: float = 0.0,
    shift: float = 0.0,
    notes: tuple[str, ...] = (),
) -> IndexNullityReport:
    """Count negative and zero Jacobi eigenvalues with multiplicity.

    `jacobi` holds the shifted values.  The optional `shift` is used only
    to reconstruct the unshifted eigenvalue column of the witnesses; pass
    the ambient's s/n when available.
    """
    if zero_tolerance <= 0:
        raise ValueError(f"zero_tolerance must be positive, got {zero_tolerance!r}")
    if not jacobi:
        raise ValueError("empty Jacobi spectrum")
    values = [e.value for e in jacobi]
    if values != sorted(values):
        raise ValueError("Jacobi spectrum must be sorted ascending")
    index = 0
    nullity = 0
    witnesses: list[tuple[float, int, float]] = []
    for e in jacobi:
        if e.value < -zero_tolerance:
            index += e.multiplicity
            witnesses.append((e.value + shift, e.multiplicity, e.value))
        elif abs(e.value) <= zero_tolerance:
            nullity += e.multiplicity
            witnesses.append((e.value + shift, e.multiplicity, e.value))
    return IndexNullityReport(
        parameter=parameter,
        index=index,
        nullity=nullity,
        witnesses=tuple(witnesses),
        zero_tolerance=zero_tolerance,
        truncation_bound=values[-1],
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class InstabilityVerdict:
    """Outcome of the instability criterion, with its certificate."""

    unstable: bool
    certificate: float | None
    note: str

    def __bool__(self) -> bool:
        return self.unstable


def is_unstable(ambient: EinsteinAmbient) -> InstabilityVerdict:
    """Instability of a closed totally geodesic slice from positive s.

    The constant function is always a Jacobi eigenfunction with eigenvalue
    -s/n (the zero Laplace eigenvalue has multiplicity one), which is
    negative exactly when s > 0.  For s <= 0 the criterion is silent.
    """
    shift = jacobi_shift(ambient)
    if ambient.s > 0:
        return InstabilityVerdict(
            unstable=True,
            certificate=-shift,
            note="constant function has Jacobi eigenvalue -s/n < 0 (multiplicity 1)",
        )
    return InstabilityVerdict(unstable=False, certificate=None, note="not implied")


def adjunction_genus(C_self: int, c1_dot_C: int) -> int:
    """Genus from the adjunction formula 2g - 2 = [C]^2 - c1.[C]."""
    rhs = C_self - c1_dot_C
    if rhs % 2 != 0:
        raise ValueError(
            f"adjunction parity violated: [C]^2 - c1.[C] = {rhs} must be even"
        )
    g = (rhs + 2) // 2
    if g < 0:
        raise ValueError(f"adjunction gives negative genus {g}")
    return g


_COMPLEX_CURVE_TABLE = {
    "degree-1": (0, 1),
    "degree-2": (0, 4),
    "linear": (0, 1),
}


def complex_curve_index_nullity(case: str) -> tuple[int, int]:
    """Index and nullity of the classical complex-submanifold cases.

    degree-1 and degree-2 are the rational curves in the complex
    projective plane; "linear" is the totally geodesic hyperplane
    CP(n-1) in CP(n).  These counts are recorded results, not re-derived.
    """
    try:
        return _COMPLEX_CURVE_TABLE[case]
    except KeyError:
        raise ValueError(
            f"unknown case {case!r}; expected one of {sorted(_COMPLEX_CURVE_TABLE)}"
        ) from None
