"""Asymptotic Floquet-Bloch band structure of a stiff disk-perforated plane.

Leading eigenvalues come from Bessel zeros (Lambda0 = 4 j_{n,k}^2 for the
Dirichlet disk of radius 1/2), first-order corrections Lambda1(eta) from the
boundary compatibility conditions, and spectral bands with certified error
pads from sweeping eta over [-pi, pi)^2.  Everything closed-form is
cross-checked by independent numerics in `diskbands.oracles`.
"""

from ._core import BACKEND
from .bessel import BesselZero, ZeroFindingError, bessel_j, bessel_j_prime, bessel_zero
from .spectrum import (
    DISK_RADIUS,
    DiskEigenfunction,
    LimitEigenpair,
    ModeIndex,
    Parity,
    eigenfunction_eval,
    enumerate_spectrum,
    limit_eigenvalue,
    mode,
)
from .corrections import (
    SOFT_CELL_AREA,
    Branch,
    CorrectionValue,
    Expansion,
    ExpansionParams,
    FloquetPoint,
    MultipleCorrection,
    Quadrant,
    QuadratureConvergenceError,
    UndeterminedCorrectionError,
    branch_for,
    c0_multiple,
    c0_simple,
    cell_map_T,
    correction_for,
    correction_matrix,
    lambda1_multiple,
    lambda1_simple,
    lambda_expansion,
    quadrant_of,
    quadrant_phase,
)
from .bands import (
    BandInterval,
    BandLength,
    GapReport,
    InternalConsistencyError,
    band_interval,
    band_length,
    brillouin_sweep,
    detect_gaps,
    floquet_axis,
    swept_band_width,
)
from .oracles import (
    OracleConvergenceError,
    RadialMesh,
    boundary_arc_length,
    c0_quadrature,
    convergence_ratios,
    disk_dirichlet_eigenvalues,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BandInterval",
    "BandLength",
    "BesselZero",
    "Branch",
    "CorrectionValue",
    "DISK_RADIUS",
    "DiskEigenfunction",
    "Expansion",
    "ExpansionParams",
    "FloquetPoint",
    "GapReport",
    "InternalConsistencyError",
    "LimitEigenpair",
    "ModeIndex",
    "MultipleCorrection",
    "OracleConvergenceError",
    "Parity",
    "Quadrant",
    "QuadratureConvergenceError",
    "RadialMesh",
    "SOFT_CELL_AREA",
    "UndeterminedCorrectionError",
    "ZeroFindingError",
    "band_interval",
    "band_length",
    "bessel_j",
    "bessel_j_prime",
    "bessel_zero",
    "boundary_arc_length",
    "branch_for",
    "brillouin_sweep",
    "c0_multiple",
    "c0_quadrature",
    "c0_simple",
    "cell_map_T",
    "convergence_ratios",
    "correction_for",
    "correction_matrix",
    "detect_gaps",
    "disk_dirichlet_eigenvalues",
    "eigenfunction_eval",
    "enumerate_spectrum",
    "floquet_axis",
    "lambda1_multiple",
    "lambda1_simple",
    "lambda_expansion",
    "limit_eigenvalue",
    "mode",
    "quadrant_of",
    "quadrant_phase",
    "swept_band_width",
]
