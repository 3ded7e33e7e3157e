"""Exact Berger sphere spectra and Jacobi index profiles of geodesic slices."""

from .berger import (
    AffineBranch,
    Mode,
    PiecewiseCell,
    SpectrumEntry,
    alpha_branch,
    beta_branch,
    branch_crossing,
    branch_of,
    distinct_spectrum_at,
    eleven_slot_table,
    enumerate_modes,
    epsilon_lambda1,
    gamma_branch,
    kth_distinct_piecewise,
    mode_multiplicity,
    mode_value,
    scale_spectrum,
    slot_value_at,
    spectrum_with_multiplicity,
    tanno_lambda1,
)
from .jacobi import (
    EinsteinAmbient,
    IndexNullityReport,
    InstabilityVerdict,
    RicPerpUnsupportedError,
    adjunction_genus,
    complex_curve_index_nullity,
    index_nullity,
    is_unstable,
    jacobi_shift,
    jacobi_spectrum,
)
from .page import (
    PageConfigError,
    PageConstants,
    PageStructureError,
    page_constants,
    page_index_nullity,
    page_shifted_lambda1,
    page_slice,
    page_transition_roots,
    page_x,
)
from .slices import (
    CP2_AMBIENT,
    SliceGeometry,
    cp2_index_nullity,
    cp2_lambda1,
    cp2_lambda1_exact,
    cp2_slice,
    find_root_bisection,
    slice_index_nullity,
    slice_spectrum,
    synthetic_slice,
)
from .spheres import SphereSpectrumEntry, sphere_eigenvalue, sphere_multiplicity, sphere_spectrum

__all__ = [
    "AffineBranch",
    "CP2_AMBIENT",
    "EinsteinAmbient",
    "IndexNullityReport",
    "InstabilityVerdict",
    "Mode",
    "PageConfigError",
    "PageConstants",
    "PageStructureError",
    "PiecewiseCell",
    "RicPerpUnsupportedError",
    "SliceGeometry",
    "SpectrumEntry",
    "SphereSpectrumEntry",
    "adjunction_genus",
    "alpha_branch",
    "beta_branch",
    "branch_crossing",
    "branch_of",
    "complex_curve_index_nullity",
    "cp2_index_nullity",
    "cp2_lambda1",
    "cp2_lambda1_exact",
    "cp2_slice",
    "distinct_spectrum_at",
    "eleven_slot_table",
    "enumerate_modes",
    "epsilon_lambda1",
    "find_root_bisection",
    "gamma_branch",
    "index_nullity",
    "is_unstable",
    "jacobi_shift",
    "jacobi_spectrum",
    "kth_distinct_piecewise",
    "mode_multiplicity",
    "mode_value",
    "page_constants",
    "page_index_nullity",
    "page_shifted_lambda1",
    "page_slice",
    "page_transition_roots",
    "page_x",
    "scale_spectrum",
    "slice_index_nullity",
    "slice_spectrum",
    "slot_value_at",
    "sphere_eigenvalue",
    "sphere_multiplicity",
    "sphere_spectrum",
    "spectrum_with_multiplicity",
    "synthetic_slice",
    "tanno_lambda1",
]

__version__ = "0.1.0"
