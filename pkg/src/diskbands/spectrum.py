"""Dirichlet Laplacian on the disk of radius 1/2: the leading-order spectrum.

Eigenvalues are 4 j_{n,k}^2 with eigenfunctions J_n(2 j_{n,k} r) times an
angular factor; n = 0 gives simple eigenvalues, n >= 1 double ones carrying a
cosine and a sine branch.  `enumerate_spectrum` lists them ascending with the
cosine branch preceding the sine branch of each double eigenvalue.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .bessel import BesselZero, bessel_j, bessel_zero

DISK_RADIUS = 0.5


class Parity(enum.Enum):
    SIMPLE = "simple"
    COSINE = "c"
    SINE = "s"


@dataclass(frozen=True)
class ModeIndex:
    """Angular order n, radial index k, and multiplicity branch."""

    n: int
    k: int
    parity: Parity

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError("n must be a non-negative integer, got %r" % (self.n,))
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError("k must be a positive integer, got %r" % (self.k,))
        if (self.n == 0) != (self.parity is Parity.SIMPLE):
            raise ValueError(
                "parity must be SIMPLE exactly when n = 0 (n=%d, parity=%s)"
                % (self.n, self.parity)
            )

    def label(self) -> str:
        return "%d,%d,%s" % (self.n, self.k, self.parity.value)


def mode(n: int, k: int, parity: Parity | str | None = None) -> ModeIndex:
    """ModeIndex constructor accepting 'c'/'s'/'simple' strings; parity may be
    omitted for n = 0."""
    if parity is None:
        parity = Parity.SIMPLE
    elif isinstance(parity, str):
        parity = Parity(parity)
    return ModeIndex(n, k, parity)


@dataclass(frozen=True)
class LimitEigenpair:
    mode: ModeIndex
    lambda0: float
    zero: BesselZero
    multiplicity: int


@dataclass(frozen=True)
class DiskEigenfunction:
    """J_n(2 j_{n,k} r) (C_c cos n theta + C_s sin n theta); coefficients are
    caller-supplied, no normalization is imposed."""

    mode: ModeIndex
    coeff_c: complex
    coeff_s: complex = 0j

    def __post_init__(self):
        if self.mode.parity is Parity.SIMPLE and self.coeff_s != 0:
            raise ValueError("simple modes carry no sine coefficient")


def limit_eigenvalue(mode: ModeIndex) -> LimitEigenpair:
    """Lambda0 = 4 j_{n,k}^2 with its Bessel zero attached."""
    zero = bessel_zero(mode.n, mode.k)
    lam0 = 4.0 * zero.value * zero.value
    return LimitEigenpair(mode, lam0, zero, 1 if mode.n == 0 else 2)


def eigenfunction_eval(f: DiskEigenfunction, r: float, theta: float) -> complex:
    """Value of the eigenfunction at polar point (r, theta), 0 <= r <= 1/2."""
    r = float(r)
    if not (0.0 <= r <= DISK_RADIUS):
        raise ValueError("r must lie in [0, 1/2], got %r" % (r,))
    n = f.mode.n
    radial = bessel_j(n, 2.0 * bessel_zero(n, f.mode.k).value * r)
    if f.mode.parity is Parity.SIMPLE:
        return radial * f.coeff_c
    return radial * (
        f.coeff_c * math.cos(n * theta) + f.coeff_s * math.sin(n * theta)
    )


def enumerate_spectrum(count: int) -> list[LimitEigenpair]:
    """The first `count` eigenpairs ascending by eigenvalue, double ones
    expanded into adjacent (cosine, sine) entries."""
    if not isinstance(count, int) or count < 1:
        raise ValueError("count must be a positive integer, got %r" % (count,))
    # Collect every zero below a cutoff, growing the cutoff until the pool is
    # deep enough; j_{n,1} increases with n, so the n-scan below is complete.
    bound = bessel_zero(0, 1).value + 1.0
    while True:
        pool: list[BesselZero] = []
        weight = 0
        n = 0
        while True:
            z = bessel_zero(n, 1)
            if z.value > bound:
                break
            k = 1
            while z.value <= bound:
                pool.append(z)
                weight += 1 if n == 0 else 2
                k += 1
                z = bessel_zero(n, k)
            n += 1
        if weight >= count:
            break
        bound *= 1.5

    pool.sort(key=lambda z: z.value)
    out: list[LimitEigenpair] = []
    for z in pool:
        if z.n == 0:
            out.append(limit_eigenvalue(ModeIndex(z.n, z.k, Parity.SIMPLE)))
        else:
            out.append(limit_eigenvalue(ModeIndex(z.n, z.k, Parity.COSINE)))
            out.append(limit_eigenvalue(ModeIndex(z.n, z.k, Parity.SINE)))
        if len(out) >= count:
            break
    return out[:count]
