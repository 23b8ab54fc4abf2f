"""Brute-force numerical cross-checks for the closed-form results.

Two independent routes: a radial finite-volume discretization of the
Dirichlet disk validating the limit eigenvalues 4 j_{n,k}^2, and direct
boundary quadrature of the compatibility integral validating the closed-form
c0(eta).  Neither route shares formulas with the modules it checks: the disk
solve knows nothing of Bessel zeros, and the quadrature rebuilds the phase
from node coordinates instead of reusing the quadrant tables.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ._core import tridiag_smallest_eigenvalues
from ._quad import panel_rule
from .bessel import bessel_j_prime, bessel_zero
from .corrections import FloquetPoint
from .spectrum import ModeIndex

_SOFT_AREA = 1.0 - math.pi / 4.0


class OracleConvergenceError(RuntimeError):
    """Mesh or panel refinement failed to confirm the computed value."""


@dataclass(frozen=True)
class RadialMesh:
    """Uniform radial grid on (0, 1/2): interior nodes r_i = i*h with
    h = (1/2)/(points + 1)."""

    points: int

    def __post_init__(self):
        if self.points < 16:
            raise ValueError("mesh needs at least 16 points, got %r" % (self.points,))

    @property
    def h(self) -> float:
        return 0.5 / (self.points + 1)

    def doubled(self) -> "RadialMesh":
        # 2*points + 1 interior nodes halves h exactly
        return RadialMesh(2 * self.points + 1)


def _assemble(n: int, mesh: RadialMesh) -> tuple[np.ndarray, np.ndarray]:
    # finite volumes for -(r u')'/r + (n^2/r^2) u = lambda u on (0, 1/2),
    # u(1/2) = 0; rows are weighted by the cell mass r_i h, then the
    # generalized problem A u = lambda D u is symmetrized through D^{1/2}
    npts = mesh.points
    h = mesh.h
    r = h * np.arange(1, npts + 1)
    r_plus = r + 0.5 * h
    r_minus = r - 0.5 * h

    diag = (r_minus + r_plus) / (h * h)
    if n > 0:
        diag = diag + (n * n) / r
    mass = r.copy()
    if n == 0:
        # merged origin cell [0, 3h/2]: zero flux through r = 0, mass
        # integral of r dr gives 9h/8 after the 1/h row scaling
        diag[0] = r_plus[0] / (h * h)
        mass[0] = 9.0 * h / 8.0
    off = -r_plus[:-1] / (h * h)

    sym_diag = diag / mass
    sym_off = off / np.sqrt(mass[:-1] * mass[1:])
    return np.ascontiguousarray(sym_diag), np.ascontiguousarray(sym_off)


def disk_dirichlet_eigenvalues(
    n: int,
    count: int,
    mesh: RadialMesh,
    verify_convergence: bool = False,
) -> list[float]:
    """Smallest `count` eigenvalues of the angular-mode-n Dirichlet disk
    problem on the given mesh, ascending.  With verify_convergence, a solve
    on the h-halved mesh must agree to within a loose Richardson bound."""
    if n < 0:
        raise ValueError("angular order must be >= 0, got %r" % (n,))
    if count < 1:
        raise ValueError("count must be >= 1, got %r" % (count,))
    if count > mesh.points // 4:
        raise ValueError(
            "count %d too large for %d mesh points (need count <= points/4)"
            % (count, mesh.points)
        )
    d, e = _assemble(n, mesh)
    values = tridiag_smallest_eigenvalues(d, e, count)
    if verify_convergence:
        fine = mesh.doubled()
        df, ef = _assemble(n, fine)
        fine_values = tridiag_smallest_eigenvalues(df, ef, count)
        for coarse_v, fine_v in zip(values, fine_values):
            # second-order scheme: coarse-fine difference ~ 3x the fine error
            if abs(coarse_v - fine_v) > 0.05 * abs(fine_v):
                raise OracleConvergenceError(
                    "mesh doubling moved eigenvalue from %r to %r (n=%d, "
                    "points=%d); discretization not converged"
                    % (coarse_v, fine_v, n, mesh.points)
                )
    return values


def convergence_ratios(n: int, count: int, mesh: RadialMesh) -> list[float]:
    """Error-reduction factors E(mesh)/E(doubled mesh) against the exact
    values 4 j_{n,k}^2; a second-order scheme gives ratios near 4."""
    coarse = disk_dirichlet_eigenvalues(n, count, mesh)
    fine = disk_dirichlet_eigenvalues(n, count, mesh.doubled())
    ratios = []
    for k, (cv, fv) in enumerate(zip(coarse, fine), start=1):
        z = bessel_zero(n, k).value
        exact = 4.0 * z * z
        ratios.append(abs(cv - exact) / abs(fv - exact))
    return ratios


def _node_phase(theta: float, eta: FloquetPoint) -> complex:
    # quadrant phase reconstructed from the boundary point itself: the signs
    # of cos/sin theta decide the (+-eta1/2 +- eta2/2) combination
    s1 = 1.0 if math.cos(theta) > 0.0 else -1.0
    s2 = 1.0 if math.sin(theta) > 0.0 else -1.0
    return cmath.exp(0.5j * (s1 * eta.eta1 + s2 * eta.eta2))


def _boundary_integral(
    n: int, eta: FloquetPoint, coeff_c: complex, coeff_s: complex, panels: int
) -> complex:
    total = 0j
    for quarter in range(4):
        theta, w = panel_rule(
            quarter * math.pi / 2.0, (quarter + 1) * math.pi / 2.0, panels
        )
        for t, wt in zip(theta, w):
            angular = coeff_c * math.cos(n * t) + coeff_s * math.sin(n * t)
            total += wt * _node_phase(float(t), eta) * angular
    return total


def c0_quadrature(
    mode: ModeIndex,
    eta: FloquetPoint,
    coeff_c: complex = 1.0 + 0j,
    coeff_s: complex = 0j,
    panels: int = 16,
) -> complex:
    """Compatibility constant by direct boundary quadrature:
    -1/(Lambda0 (1 - pi/4)) times the phase-weighted integral of the radial
    derivative of the disk eigenfunction over the four quarter-arcs.
    Raises if doubling the panel count moves the value by more than 1e-10."""
    if panels < 8:
        raise ValueError("need at least 8 panels per quarter-arc, got %r" % (panels,))
    n, k = mode.n, mode.k
    z = bessel_zero(n, k).value
    lam0 = 4.0 * z * z
    dnu = 2.0 * z * bessel_j_prime(n, z)  # d/dr J_n(2 z r) at r = 1/2
    pref = -dnu / (lam0 * _SOFT_AREA)
    value = pref * _boundary_integral(n, eta, coeff_c, coeff_s, panels)
    refined = pref * _boundary_integral(n, eta, coeff_c, coeff_s, 2 * panels)
    if abs(refined - value) > 1e-10:
        raise OracleConvergenceError(
            "boundary quadrature for %s did not converge: panel doubling "
            "moved the value by %g" % (mode.label(), abs(refined - value))
        )
    return refined


def boundary_arc_length(panels: int = 8) -> float:
    """Arc length of the whole disk boundary by the same panel scheme
    (radius 1/2, so the exact value is pi); plumbing sanity check."""
    total = 0.0
    for quarter in range(4):
        _, w = panel_rule(
            quarter * math.pi / 2.0, (quarter + 1) * math.pi / 2.0, panels
        )
        total += 0.5 * float(np.sum(w))  # ds = r dtheta with r = 1/2
    return total
