"""Agreement between the compiled kernels and the pure-Python fallback."""

import math
import os
import subprocess
import sys

import numpy as np
import pytest

from diskbands import _kernels_py as pykern

compiled = pytest.importorskip(
    "diskbands._kernels", reason="compiled extension not built"
)


def test_backend_labels():
    assert pykern.BACKEND == "python"
    assert compiled.BACKEND == "c"


def test_bessel_kernel_agreement():
    for n in range(0, 13):
        x = 0.05
        while x < 60.0:
            a = pykern.bessel_j_kernel(n, x)
            b = compiled.bessel_j_kernel(n, x)
            assert math.isclose(a, b, rel_tol=1e-13, abs_tol=1e-300), (n, x)
            x *= 1.37


def test_tridiag_kernel_agreement():
    rng = np.random.default_rng(7)
    diag = rng.uniform(1.0, 5.0, size=400)
    off = rng.uniform(-1.0, 1.0, size=399)
    a = pykern.tridiag_smallest_eigenvalues(diag, off, 5)
    b = compiled.tridiag_smallest_eigenvalues(diag, off, 5)
    for x, y in zip(a, b):
        assert math.isclose(x, y, rel_tol=1e-12, abs_tol=1e-12)


def test_forced_backend_selection():
    for forced, label in (("python", "python"), ("c", "c")):
        env = dict(os.environ, DISKBANDS_BACKEND=forced)
        proc = subprocess.run(
            [sys.executable, "-c", "import diskbands; print(diskbands.BACKEND)"],
            capture_output=True,
            text=True,
            env=env,
        )
        assert proc.returncode == 0, proc.stderr
        assert proc.stdout.strip() == label


def test_backends_produce_identical_csv():
    base = [sys.executable, "-m", "diskbands", "bands", "--count", "8"]
    outputs = []
    for forced in ("python", "c"):
        env = dict(os.environ, DISKBANDS_BACKEND=forced)
        proc = subprocess.run(base, capture_output=True, text=True, env=env)
        assert proc.returncode == 0, proc.stderr
        outputs.append(proc.stdout)
    assert outputs[0] == outputs[1]
