"""Pure-Python numerical kernels.

Reference implementations of the two hot scalar loops: evaluation of the
Bessel function of the first kind for integer order, and the smallest
eigenvalues of a symmetric tridiagonal matrix by Sturm-count bisection.
`diskbands._kernels` is the compiled mirror; the two lanes must implement
the identical arithmetic so results stay in lockstep.
"""

from __future__ import annotations

BACKEND = "python"

# Series/recurrence switch.  Above this argument the alternating power series
# amplifies cancellation beyond ~1e-14 absolute, so Miller's backward
# recurrence takes over.
_SERIES_CUTOFF = 4.0
_RESCALE = 1e250


def bessel_j_kernel(n: int, x: float) -> float:
    """J_n(x) for integer n >= 0 and x >= 0 (arguments assumed validated)."""
    if x == 0.0:
        return 1.0 if n == 0 else 0.0
    if x < _SERIES_CUTOFF:
        return _series(n, x)
    return _miller(n, x)


def _series(n: int, x: float) -> float:
    # sum_t (-1)^t (x/2)^(n+2t) / (t! (n+t)!), summed until the next term is
    # negligible against the largest partial sum.
    half = 0.5 * x
    term = 1.0
    for i in range(1, n + 1):
        term *= half / i
    total = term
    scale = abs(term)
    t = 0
    while t < 400:
        t += 1
        term *= -(half * half) / (t * (n + t))
        total += term
        mag = abs(total)
        if mag > scale:
            scale = mag
        if abs(term) <= 1e-18 * scale:
            break
    return total


def _miller(n: int, x: float) -> float:
    # Backward recurrence J_{i-1} = (2i/x) J_i - J_{i+1} from a start order
    # well above both n and x, normalized by J_0 + 2 sum_t J_{2t} = 1.
    m = int(x + 12.0 * x ** (1.0 / 3.0) + 25.0) + n
    if m % 2 == 1:
        m += 1
    jhi = 0.0
    jcur = 1e-30
    # even-order normalization sum, seeded with the start order (m is even)
    s = 2.0 * jcur
    result = 0.0
    i = m
    while i > 0:
        jlo = (2.0 * i / x) * jcur - jhi
        jhi = jcur
        jcur = jlo
        i -= 1
        if i == n:
            result = jcur
        if i == 0:
            s += jcur
        elif i % 2 == 0:
            s += 2.0 * jcur
        if abs(jcur) > _RESCALE:
            jcur *= 1e-250
            jhi *= 1e-250
            s *= 1e-250
            result *= 1e-250
    return result / s


def tridiag_smallest_eigenvalues(d, e, count: int) -> list[float]:
    """The `count` smallest eigenvalues of the symmetric tridiagonal matrix
    with diagonal `d` and off-diagonal `e`, ascending, by bisection on the
    Sturm count."""
    dl = [float(v) for v in d]
    el = [float(v) for v in e]
    n = len(dl)
    lo = hi = dl[0]
    for i in range(n):
        r = (abs(el[i - 1]) if i > 0 else 0.0) + (abs(el[i]) if i < n - 1 else 0.0)
        if dl[i] - r < lo:
            lo = dl[i] - r
        if dl[i] + r > hi:
            hi = dl[i] + r
    out = []
    for k in range(1, count + 1):
        a, b = lo, hi
        for _ in range(120):
            mid = 0.5 * (a + b)
            if mid == a or mid == b:
                break
            if _sturm_count(dl, el, mid) >= k:
                b = mid
            else:
                a = mid
            if b - a <= 1e-12 * max(1.0, abs(a), abs(b)):
                break
        out.append(0.5 * (a + b))
        lo = a  # eigenvalue k+1 cannot lie below this bound
    return out


def _sturm_count(d, e, x: float) -> int:
    # number of eigenvalues strictly below x (LDL^T pivot sign count)
    q = d[0] - x
    count = 1 if q < 0.0 else 0
    for i in range(1, len(d)):
        if q == 0.0:
            q = -1e-290
        q = d[i] - x - e[i - 1] * e[i - 1] / q
        if q < 0.0:
            count += 1
    return count
