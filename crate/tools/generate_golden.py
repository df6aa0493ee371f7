#!/usr/bin/env python3
"""Regenerate the frozen golden vectors for the special-function layer.

Values are produced with mpmath at 50+ significant digits and rounded to the
nearest IEEE-754 double.  Output is JSON lines, one record per evaluation:

    {"fn": str, "two_lambda": int, "z": [re, im], "value": [re, im], "tol": float}

Run from the repository root:

    python3 tools/generate_golden.py > crates/cli/tests/data/golden_vectors.jsonl
"""
import json
import math
import mpmath as mp

mp.mp.dps = 50

# 20 log-spaced moduli in [0.1, 50] x 10 phases covering the closed right
# half-plane, with both imaginary-axis boundaries included.
MODULI = [0.1 * (500.0 ** (i / 19.0)) for i in range(20)]
PHASES = [0.0, 0.35, -0.35, 0.75, -0.75, 1.15, -1.15, 1.5, math.pi / 2, -math.pi / 2]

ON_AXIS_TOL = 1e-10
OFF_AXIS_TOL = 1e-12


def emit(fn, two_lambda, z, value, tol):
    rec = {
        "fn": fn,
        "two_lambda": two_lambda,
        "z": [float(z.real), float(z.imag)],
        "value": [float(value.real), float(value.imag)],
        "tol": tol,
    }
    print(json.dumps(rec))


def main():
    for rho in MODULI:
        for phi in PHASES:
            z = mp.mpc(rho * math.cos(phi), rho * math.sin(phi))
            on_axis = abs(abs(phi) - math.pi / 2) < 1e-12
            tol = ON_AXIS_TOL if on_axis else OFF_AXIS_TOL
            for two_lambda in (0, 2, 1, 3, 5):
                lam = mp.mpf(two_lambda) / 2
                v = mp.besselk(lam, z)
                emit("bessel_k", two_lambda, complex(z), complex(v), tol)
            e1 = mp.expint(1, z)
            emit("exp_integral_e1", 0, complex(z), complex(e1), tol)


if __name__ == "__main__":
    main()
