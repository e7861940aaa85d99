#!/usr/bin/env python3
"""Smoke test for the Python bindings.

Build the extension first, then run this script from the repository root:

    cargo build -p polytrope-py
    python3 python/smoke_test.py

The script copies the built cdylib into a temporary directory under the
importable name `polytrope.so` and exercises the exposed API.
"""

import math
import shutil
import sys
import tempfile
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent


def locate_cdylib() -> Path:
    candidates = [
        REPO_ROOT / "target" / profile / f"libpolytrope_py{suffix}"
        for profile in ("debug", "release")
        for suffix in (".so", ".dylib")
    ]
    for path in candidates:
        if path.exists():
            return path
    sys.exit(
        "could not find the built extension; run `cargo build -p polytrope-py` first"
    )


def import_module():
    lib = locate_cdylib()
    tmp = Path(tempfile.mkdtemp(prefix="polytrope-smoke-"))
    shutil.copy2(lib, tmp / "polytrope.so")
    sys.path.insert(0, str(tmp))
    import polytrope

    return polytrope


def expect_value_error(fn, *args):
    try:
        fn(*args)
    except ValueError:
        return
    raise AssertionError(f"{fn} should have raised ValueError for {args}")


def main() -> None:
    pt = import_module()

    iso = pt.Eos.isothermal(2.0)
    poly = pt.Eos.polytropic(0.5, 1.4)
    assert abs(iso.pressure(1.5) - 6.0) < 1e-15, "isothermal p = c^2 rho"
    assert abs(poly.pressure(2.0) - 0.5 * 2.0**1.4) < 1e-15, "polytropic p = kappa rho^gamma"
    assert iso.gamma() == 1.0 and abs(iso.kappa() - 4.0) < 1e-15
    assert "isothermal" in repr(iso) and "polytropic" in repr(poly)
    expect_value_error(pt.Eos.isothermal, -1.0)
    expect_value_error(pt.Eos.polytropic, 0.5, 0.9)

    unit = pt.Eos.isothermal(1.0)
    f = pt.physical_flux([2.0, 1.0], 0, unit)
    assert abs(f[0] - 1.0) < 1e-15 and abs(f[1] - 2.5) < 1e-15, f"1d flux {f}"
    assert abs(pt.max_wave_speed([2.0, 1.0], unit) - 1.5) < 1e-15

    left = [1.2, 0.1, 0.0]
    right = [1.0, 0.2, -0.4]
    for eos in (unit, poly):
        for axis in (0, 1):
            fec = pt.ec_flux(left, right, axis, eos)
            prod = pt.entropy_production(fec, left, right, axis, eos)
            assert abs(prod) <= 1e-13, f"EC production {prod} on axis {axis}"
            fes = pt.es_flux(left, right, axis, eos)
            prod = pt.entropy_production(fes, left, right, axis, eos)
            assert prod <= 1e-14, f"ES production {prod} on axis {axis}"

    log_mean = pt.gamma_mean(1.0, math.e, unit)
    assert abs(log_mean - (math.e - 1.0)) < 1e-12, "gamma=1 mean is the log mean"
    shallow = pt.Eos.polytropic(0.5, 2.0)
    assert abs(pt.gamma_mean(1.0, 3.0, shallow) - 2.0) < 1e-13, "gamma=2 mean is arithmetic"
    assert abs(pt.avg_sound_speed_sq(0.7, 1.9, unit) - 1.0) < 1e-15, "isothermal a^2 = c^2"

    nodes, weights, deriv = pt.lgl_operators(3)
    assert len(nodes) == 4 and nodes[0] == -1.0 and nodes[-1] == 1.0
    assert all(abs(a + b) < 1e-14 for a, b in zip(nodes, reversed(nodes)))
    assert abs(sum(weights) - 2.0) < 1e-13, "weights integrate constants over [-1, 1]"
    assert all(abs(sum(row)) < 1e-13 for row in deriv), "derivative rows kill constants"

    state = pt.manufactured_state(0.0, 0.0, 0.0)
    assert state == [8.0, 4.0, 12.0]
    source = pt.manufactured_source(0.0, 0.25, 0.0, unit)
    assert len(source) == 3 and all(math.isfinite(r) for r in source)
    assert pt.discontinuous_ic(0.2, 0.5) == [1.2, 0.1, 0.0]
    assert pt.discontinuous_ic(0.5, 0.2) == [1.0, 0.2, -0.4]

    w = pt.entropy_variables(left, unit)
    psi = pt.entropy_potential(left, 0, unit)
    s_flux = pt.entropy_flux(left, 0, unit)
    f_left = pt.physical_flux(left, 0, unit)
    contracted = sum(wk * fk for wk, fk in zip(w, f_left))
    assert abs(contracted - s_flux - psi) < 1e-14, "psi = w . f - f^s"

    expect_value_error(pt.physical_flux, [1.0], 0, unit)
    expect_value_error(pt.physical_flux, [1.0, 0.1], 5, unit)
    expect_value_error(pt.ec_flux, [1.0, 0.1], [1.0, 0.1, 0.2], 0, unit)
    expect_value_error(pt.entropy, [-1.0, 0.0], unit)

    print("smoke test passed")


if __name__ == "__main__":
    main()
