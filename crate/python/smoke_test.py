#!/usr/bin/env python3
"""Smoke test of the dgwave_py extension module.

Build the module first:

    cargo build -p dgwave-py --release

then run this script from anywhere inside the repository:

    python3 python/smoke_test.py
"""

import math
import shutil
import sys
import tempfile
from pathlib import Path


def locate_extension() -> Path:
    root = Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libdgwave_py.so", "libdgwave_py.dylib", "dgwave_py.dll")
    ]
    for path in candidates:
        if path.exists():
            return path
    sys.exit("dgwave_py not built; run `cargo build -p dgwave-py --release` first")


def import_module():
    ext = locate_extension()
    stage = Path(tempfile.mkdtemp(prefix="dgwave-py-"))
    suffix = ".pyd" if ext.suffix == ".dll" else ".so"
    shutil.copy2(ext, stage / f"dgwave_py{suffix}")
    sys.path.insert(0, str(stage))
    import dgwave_py

    return dgwave_py


def approx(a, b, tol):
    assert abs(a - b) <= tol, f"{a} vs {b} (tol {tol})"


def main():
    dg = import_module()

    # meshes
    cells = dg.uniform_mesh(20)
    assert len(cells) == 20
    approx(sum(w for _, w in cells), 1.0, 1e-14)
    assert dg.perturbed_mesh(20, 0.1, 1) == dg.perturbed_mesh(20, 0.1, 1)

    # optimized coupling constant
    approx(dg.alpha_star(0), math.sqrt(4.0 / 3.0), 1e-14)
    approx(dg.alpha_star(1), math.sqrt(5.0 / 6.0), 1e-14)

    # leading error law and the Floquet solve agree: R ≈ -iΩ³/24 at N=0, α=1
    order, coeff, component = dg.leading_term("A", 0)
    assert (order, component) == (3, "im")
    sol = dg.solve_floquet(0, 0.1, 1.0)
    approx(sol.rho_plus[1], coeff * 0.1**3, 1e-7)
    approx(abs(complex(*sol.lambda_plus)), 1.0, 1e-12)

    # high-precision error evaluation below the f64 noise floor
    re, im = dg.floquet_error("Astar", 1, 0.01)
    approx(im / (-53.0 / 302400.0 * 0.01**7), 1.0, 0.01)
    assert dg.floquet_error_log10("A", 15, 1.0) < -40

    # Padé remainder: Re 𝓔_0 = -Ω²/2 + O(Ω⁴)
    (e_re, e_im), theta = dg.pade_remainder(0, 0.05)
    approx(e_re, -0.05**2 / 2, 1e-5)

    label, kappa, predicted = dg.classify_regime(20, 1.0)
    assert label == "SuperExponential" and predicted is not None

    # a short march: centered flux conserves energy
    m = dg.advance_wave("C", 1, 10, 1.0)
    approx(m.energy_u, 0.5, 1e-3)
    assert m.max_energy_drift < 1e-8
    assert m.phase_lag is not None

    # experiment driver round-trip
    with tempfile.TemporaryDirectory(prefix="dgwave-exp-") as out:
        assert dg.run_experiment("table2-partial", out)
        report = Path(out) / "table2-partial" / "report.csv"
        assert report.exists()
    assert "fig4" in dg.list_experiments()

    print("smoke test passed")


if __name__ == "__main__":
    main()
