# cython: language_level=3
"""Compiled numerical kernels.

Mirror of ``diskbands._kernels_py``: the arithmetic must stay identical so
both lanes produce matching results.
"""

from libc.math cimport cbrt, fabs

BACKEND = "c"

cdef double _SERIES_CUTOFF = 4.0
cdef double _RESCALE = 1e250


cpdef double bessel_j_kernel(int n, double x):
    """J_n(x) for integer n >= 0 and x >= 0 (arguments assumed validated)."""
    if x == 0.0:
        return 1.0 if n == 0 else 0.0
    if x < _SERIES_CUTOFF:
        return _series(n, x)
    return _miller(n, x)


cdef double _series(int n, double x):
    cdef double half = 0.5 * x
    cdef double term = 1.0
    cdef double total, scale, mag
    cdef int i, t
    for i in range(1, n + 1):
        term *= half / i
    total = term
    scale = fabs(term)
    t = 0
    while t < 400:
        t += 1
        term *= -(half * half) / (t * (n + t))
        total += term
        mag = fabs(total)
        if mag > scale:
            scale = mag
        if fabs(term) <= 1e-18 * scale:
            break
    return total


cdef double _miller(int n, double x):
    cdef int m = <int>(x + 12.0 * cbrt(x) + 25.0) + n
    if m % 2 == 1:
        m += 1
    cdef double jhi = 0.0
    cdef double jcur = 1e-30
    cdef double s = 2.0 * jcur
    cdef double result = 0.0
    cdef double jlo
    cdef int i = m
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
        if fabs(jcur) > _RESCALE:
            jcur *= 1e-250
            jhi *= 1e-250
            s *= 1e-250
            result *= 1e-250
    return result / s


def tridiag_smallest_eigenvalues(double[:] d, double[:] e, int count):
    """The `count` smallest eigenvalues of the symmetric tridiagonal matrix
    with diagonal `d` and off-diagonal `e`, ascending, by bisection on the
    Sturm count."""
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t i
    cdef double lo = d[0]
    cdef double hi = d[0]
    cdef double r, a, b, mid
    cdef int k, it
    for i in range(n):
        r = (fabs(e[i - 1]) if i > 0 else 0.0) + (fabs(e[i]) if i < n - 1 else 0.0)
        if d[i] - r < lo:
            lo = d[i] - r
        if d[i] + r > hi:
            hi = d[i] + r
    out = []
    for k in range(1, count + 1):
        a = lo
        b = hi
        for it in range(120):
            mid = 0.5 * (a + b)
            if mid == a or mid == b:
                break
            if _sturm_count(d, e, mid) >= k:
                b = mid
            else:
                a = mid
            if b - a <= 1e-12 * max(1.0, fabs(a), fabs(b)):
                break
        out.append(0.5 * (a + b))
        lo = a  # eigenvalue k+1 cannot lie below this bound
    return out


cdef int _sturm_count(double[:] d, double[:] e, double x):
    # number of eigenvalues strictly below x (LDL^T pivot sign count)
    cdef double q = d[0] - x
    cdef int count = 1 if q < 0.0 else 0
    cdef Py_ssize_t i
    for i in range(1, d.shape[0]):
        if q == 0.0:
            q = -1e-290
        q = d[i] - x - e[i - 1] * e[i - 1] / q
        if q < 0.0:
            count += 1
    return count
