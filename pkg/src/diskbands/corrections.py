"""First-order Floquet corrections in closed form.

The two-scale expansion of an eigenvalue reads Lambda0 + eps^{2m} Lambda1(eta)
with an error pad C * eps^gamma, gamma = min(3m, 1).  This module carries the
quadrant phase g_x(eta), the half-period cell map T, the boundary
compatibility constants c0(eta), the rank-one correction matrix M of a double
eigenvalue (assembled by quadrature over the four quarter-arcs), and the
correction eigenvalues: Lambda1 of a simple mode, and the pair {0, tr M} of a
double mode.  For n = 0 (mod 4) every first-order quantity vanishes and the
correction is undetermined at this order.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from ._quad import panel_rule
from .bessel import bessel_j, bessel_zero
from .spectrum import ModeIndex, Parity, limit_eigenvalue

TWO_PI = 2.0 * math.pi
# area of the unit cell outside the inscribed disk of radius 1/2
SOFT_CELL_AREA = 1.0 - math.pi / 4.0

_QUAD_TOL = 1e-10
_MAX_PANELS = 1024


class UndeterminedCorrectionError(RuntimeError):
    """Numeric evaluation requested for a branch with no first-order data."""


class QuadratureConvergenceError(RuntimeError):
    """Panel doubling failed to stabilize a boundary integral."""


def _reduce_angle(v: float) -> float:
    r = math.remainder(float(v), TWO_PI)
    if r >= math.pi:
        r -= TWO_PI
    return r + 0.0  # normalize -0.0


@dataclass(frozen=True)
class FloquetPoint:
    """eta = (eta1, eta2), reduced into [-pi, pi) on construction."""

    eta1: float
    eta2: float

    def __post_init__(self):
        object.__setattr__(self, "eta1", _reduce_angle(self.eta1))
        object.__setattr__(self, "eta2", _reduce_angle(self.eta2))

    def negated(self) -> "FloquetPoint":
        return FloquetPoint(-self.eta1, -self.eta2)


class Quadrant(enum.Enum):
    Q1 = 1
    Q2 = 2
    Q3 = 3
    Q4 = 4


# phase sign pairs (s1, s2): g = exp(i (s1 eta1 + s2 eta2) / 2)
_PHASE_SIGNS = {
    Quadrant.Q1: (1.0, 1.0),
    Quadrant.Q2: (-1.0, 1.0),
    Quadrant.Q3: (-1.0, -1.0),
    Quadrant.Q4: (1.0, -1.0),
}

# half-period shifts applied by the cell map T
_T_SHIFTS = {
    Quadrant.Q1: (-0.5, -0.5),
    Quadrant.Q2: (0.5, -0.5),
    Quadrant.Q3: (0.5, 0.5),
    Quadrant.Q4: (-0.5, 0.5),
}


def quadrant_of(x: tuple[float, float]) -> Quadrant:
    """Open quadrant of a cell point; axis points are domain errors."""
    x1, x2 = float(x[0]), float(x[1])
    if abs(x1) > 0.5 or abs(x2) > 0.5:
        raise ValueError("point %r lies outside the periodicity cell" % (x,))
    if x1 == 0.0 or x2 == 0.0:
        raise ValueError(
            "point %r lies on a coordinate axis; quadrants are open" % (x,)
        )
    if x1 > 0.0:
        return Quadrant.Q1 if x2 > 0.0 else Quadrant.Q4
    return Quadrant.Q2 if x2 > 0.0 else Quadrant.Q3


def quadrant_phase(q: Quadrant, eta: FloquetPoint) -> complex:
    """g_x(eta) = exp(i(+-eta1/2 +- eta2/2)) with the quadrant's sign pair."""
    s1, s2 = _PHASE_SIGNS[q]
    return cmath.exp(0.5j * (s1 * eta.eta1 + s2 * eta.eta2))


def cell_map_T(x: tuple[float, float]) -> tuple[float, float]:
    """Half-period shift gluing the four disk quarters into one cell; an
    involution on each quadrant pair."""
    s1, s2 = _T_SHIFTS[quadrant_of(x)]
    return (float(x[0]) + s1, float(x[1]) + s2)


@dataclass(frozen=True)
class ExpansionParams:
    """Small parameter eps, density exponent m in (0, 1/2), and the error-pad
    constant C (>= 0, 0 meaning an uncertified pad)."""

    epsilon: float
    m: float
    error_constant: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.epsilon) and self.epsilon > 0.0):
            raise ValueError("epsilon must be positive, got %r" % (self.epsilon,))
        if not (0.0 < self.m < 0.5):
            raise ValueError(
                "m must satisfy 0 < m < 1/2 (standing assumption of the "
                "two-term expansion), got %r" % (self.m,)
            )
        if not (math.isfinite(self.error_constant) and self.error_constant >= 0.0):
            raise ValueError(
                "error_constant must be non-negative, got %r" % (self.error_constant,)
            )

    @property
    def gamma(self) -> float:
        return min(3.0 * self.m, 1.0)

    @property
    def first_order_scale(self) -> float:
        return self.epsilon ** (2.0 * self.m)

    @property
    def pad(self) -> float:
        return self.error_constant * self.epsilon**self.gamma


def _derivative_gap(n: int, k: int) -> tuple[float, float]:
    # (j_{n,k}, J_{n-1}(j) - J_{n+1}(j)); the bracket equals 2 J_n'(j)
    z = bessel_zero(n, k).value
    return z, bessel_j(n - 1, z) - bessel_j(n + 1, z)


def c0_simple(k: int, eta: FloquetPoint) -> float:
    """Compatibility constant of a simple mode:
    pi J_1(j_{0,k}) cos(eta1/2) cos(eta2/2) / (j_{0,k} (1 - pi/4))."""
    z = bessel_zero(0, k).value
    return (
        math.pi
        / (z * SOFT_CELL_AREA)
        * bessel_j(1, z)
        * math.cos(0.5 * eta.eta1)
        * math.cos(0.5 * eta.eta2)
    )


def c0_multiple(
    n: int, k: int, eta: FloquetPoint, coeff_c: complex, coeff_s: complex
) -> complex:
    """Compatibility constant of a double mode with angular coefficients
    (C_c, C_s); identically zero for n = 0 (mod 4)."""
    if n < 1:
        raise ValueError("n must be >= 1 for double modes, got %r" % (n,))
    if n % 4 == 0:
        return 0j
    z, gap = _derivative_gap(n, k)
    base = gap / (n * z * SOFT_CELL_AREA)
    sa, ca = math.sin(0.5 * eta.eta1), math.cos(0.5 * eta.eta1)
    sb, cb = math.sin(0.5 * eta.eta2), math.cos(0.5 * eta.eta2)
    if n % 4 == 2:
        return 2.0 * base * coeff_s * sa * sb
    sign = 1.0 if n % 4 == 1 else -1.0
    return -1j * base * (sign * coeff_c * sa * cb + coeff_s * ca * sb)


def lambda1_simple(k: int, eta: FloquetPoint) -> float:
    """First-order correction of the simple mode (0, k):
    (2 pi / (1 - pi/4)) (J_1(j_{0,k}) cos(eta1/2) cos(eta2/2))^2."""
    z = bessel_zero(0, k).value
    amp = bessel_j(1, z) * math.cos(0.5 * eta.eta1) * math.cos(0.5 * eta.eta2)
    return (2.0 * math.pi / SOFT_CELL_AREA) * amp * amp


def _arc_trig_integrals(n: int, eta: FloquetPoint, panels: int) -> tuple[complex, complex]:
    # I_c = int_Gamma g cos(n theta) dtheta, I_s likewise with sin, the four
    # quarter-arcs carrying their quadrant's constant phase
    ic = 0j
    isn = 0j
    for idx, q in enumerate((Quadrant.Q1, Quadrant.Q2, Quadrant.Q3, Quadrant.Q4)):
        theta, w = panel_rule(idx * math.pi / 2, (idx + 1) * math.pi / 2, panels)
        phase = quadrant_phase(q, eta)
        ic += phase * float(np.dot(w, np.cos(n * theta)))
        isn += phase * float(np.dot(w, np.sin(n * theta)))
    return ic, isn


def correction_matrix(n: int, k: int, eta: FloquetPoint) -> np.ndarray:
    """Rank-one matrix M whose eigenvalues {0, tr M} split the first-order
    correction of the double mode (n, k); the arc integrals I_c, I_s are
    computed by composite Gauss-Legendre, panels doubled until stable."""
    if n < 1:
        raise ValueError("n must be >= 1 for double modes, got %r" % (n,))
    z, gap = _derivative_gap(n, k)
    pref = gap / (z * SOFT_CELL_AREA)
    panels = 8  # 32 nodes per quarter-arc
    prev: tuple[complex, complex] | None = None
    while panels <= _MAX_PANELS:
        cur = _arc_trig_integrals(n, eta, panels)
        if prev is not None and max(
            abs(cur[0] - prev[0]), abs(cur[1] - prev[1])
        ) < _QUAD_TOL:
            ic, isn = cur
            return pref * np.array(
                [[ic * ic, ic * isn], [ic * isn, isn * isn]], dtype=complex
            )
        prev = cur
        panels *= 2
    raise QuadratureConvergenceError(
        "arc integrals did not stabilize (n=%d, eta=(%g, %g))"
        % (n, eta.eta1, eta.eta2)
    )


@dataclass(frozen=True)
class MultipleCorrection:
    """Correction pair (cosine, sine) of a double mode; `undetermined` marks
    n = 0 (mod 4), where the pair is 0 only because first-order theory is
    silent and the true band width is unknown at this order."""

    cosine: float
    sine: float
    undetermined: bool

    def __iter__(self):
        yield self.cosine
        yield self.sine


def lambda1_multiple(n: int, k: int, eta: FloquetPoint) -> MultipleCorrection:
    """Closed-form correction pair (0, tr M) of the double mode (n, k)."""
    if n < 1 or k < 1:
        raise ValueError("double modes need n >= 1 and k >= 1, got (%r, %r)" % (n, k))
    if n % 4 == 0:
        return MultipleCorrection(0.0, 0.0, True)
    z, gap = _derivative_gap(n, k)
    pref = gap / (z * SOFT_CELL_AREA)
    sa, ca = math.sin(0.5 * eta.eta1), math.cos(0.5 * eta.eta1)
    sb, cb = math.sin(0.5 * eta.eta2), math.cos(0.5 * eta.eta2)
    if n % 4 == 2:
        trace = pref * (64.0 / (n * n)) * (sa * sa) * (sb * sb)
    else:
        trace = -pref * (16.0 / (n * n)) * (sa * sa * cb * cb + ca * ca * sb * sb)
    return MultipleCorrection(0.0, trace, False)


class Branch(enum.Enum):
    SIMPLE = "simple"
    COSINE = "cosine"
    SINE = "sine"
    UNDETERMINED = "undetermined"


def branch_for(mode: ModeIndex) -> Branch:
    if mode.n == 0:
        return Branch.SIMPLE
    if mode.n % 4 == 0:
        return Branch.UNDETERMINED
    return Branch.COSINE if mode.parity is Parity.COSINE else Branch.SINE


@dataclass(frozen=True)
class CorrectionValue:
    """Evaluable first-order correction Lambda1(eta) of one mode branch."""

    mode: ModeIndex
    branch: Branch

    def lambda1_at(self, eta: FloquetPoint) -> float:
        if self.branch is Branch.UNDETERMINED:
            raise UndeterminedCorrectionError(
                "mode %s has no first-order correction data (n = 0 mod 4)"
                % self.mode.label()
            )
        if self.branch is Branch.SIMPLE:
            return lambda1_simple(self.mode.k, eta)
        if self.branch is Branch.COSINE:
            return 0.0
        return lambda1_multiple(self.mode.n, self.mode.k, eta).sine


def correction_for(mode: ModeIndex) -> CorrectionValue:
    return CorrectionValue(mode, branch_for(mode))


@dataclass(frozen=True)
class Expansion:
    """Two-term eigenvalue value with its error pad; `undetermined` flags an
    unresolved eps^{2m}-order term (value then equals Lambda0)."""

    value: float
    pad: float
    undetermined: bool = False


def lambda_expansion(
    mode: ModeIndex, eta: FloquetPoint, params: ExpansionParams
) -> Expansion:
    """Lambda0 + eps^{2m} Lambda1(eta) with pad C eps^gamma, branch selected
    by the mode's parity."""
    lam0 = limit_eigenvalue(mode).lambda0
    corr = correction_for(mode)
    if corr.branch is Branch.UNDETERMINED:
        return Expansion(lam0, params.pad, True)
    lam1 = corr.lambda1_at(eta)
    return Expansion(lam0 + params.first_order_scale * lam1, params.pad, False)
