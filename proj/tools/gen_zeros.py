#!/usr/bin/env python3
"""Generate a zero-ordinate fixture file (imaginary parts of the first K
nontrivial zeta zeros).

Uses a vectorised Riemann-Siegel Z(t) (main sum plus the leading remainder
term) to locate sign changes on a fine grid, then refines each bracket with
Brent's method on a Z(t) built from the alternating eta series with
Borwein weights. Below t = 100 mpmath.siegelz is used throughout. The K-th
ordinate is checked against mpmath.zetazero(K), which catches any missed
sign change, and a random sample is re-polished with mpmath.siegelz.

This script only produces test data; the C++ library never computes zeros.
"""
import argparse
import math

import mpmath
import numpy as np
from scipy.optimize import brentq


def theta(t):
    t = np.asarray(t, dtype=float)
    return (t / 2) * np.log(t / (2 * np.pi)) - t / 2 - np.pi / 8 \
        + 1 / (48 * t) + 7 / (5760 * t**3)


def z_rs(t):
    t = np.atleast_1d(np.asarray(t, dtype=float))
    a = np.sqrt(t / (2 * np.pi))
    n_max = np.floor(a).astype(int)
    th = theta(t)
    out = np.zeros_like(t)
    top = int(n_max.max())
    for n in range(1, top + 1):
        mask = n <= n_max
        out[mask] += np.cos(th[mask] - t[mask] * math.log(n)) / math.sqrt(n)
    out *= 2
    p = a - n_max
    c0 = np.cos(2 * np.pi * (p * p - p - 1 / 16)) / np.cos(2 * np.pi * p)
    w = (2 * np.pi / t) ** 0.25
    sign = np.where(n_max % 2 == 1, 1.0, -1.0)
    return out + sign * w * c0


class EtaZ:
    """Z(t) from the accelerated eta series with a fixed number of terms."""

    def __init__(self, n):
        i = np.arange(n + 1)
        la = (np.array([math.lgamma(n + k) for k in i]) + i * math.log(4.0)
              - np.array([math.lgamma(n - k + 1) for k in i])
              - np.array([math.lgamma(2 * k + 1) for k in i]))
        a = np.exp(la - la.max())
        tail = np.cumsum(a[::-1])[::-1]
        self.w = (tail[1:] / tail[0]) * np.where(i[:-1] % 2 == 0, 1.0, -1.0)
        self.logk = np.log(np.arange(1, n + 1, dtype=float))

    def __call__(self, t):
        s = complex(0.5, t)
        eta = np.sum(self.w * np.exp(-s * self.logk))
        zeta = eta / (1 - 2 ** (1 - s))
        th = float(theta(t)) + 31 / (80640 * t**5)
        return (np.exp(1j * th) * zeta).real


def polish(z, r):
    h = 2e-3
    while np.sign(z(r - h)) == np.sign(z(r + h)):
        h *= 2
        if h > 0.05:
            raise SystemExit(f"cannot bracket zero near {r}")
    return brentq(z, r - h, r + h, xtol=1e-12, rtol=1e-15)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=10000)
    ap.add_argument("--out", required=True)
    ap.add_argument("--step", type=float, default=0.004)
    args = ap.parse_args()

    mpmath.mp.dps = 20
    last = float(mpmath.zetazero(args.count).imag)
    upper = last + 0.2
    mpmath.mp.dps = 15
    zeros = []
    lo = 10.0
    while lo < upper:
        hi = min(lo + 200.0, upper) if lo >= 100 else 100.0
        z = EtaZ(int(math.ceil(2 * hi)) + 64)
        grid = np.arange(lo, hi + args.step, args.step)
        if lo < 100:
            vals = np.array([float(mpmath.siegelz(x)) for x in grid])
        else:
            vals = z_rs(grid)
        idx = np.nonzero(np.sign(vals[:-1]) != np.sign(vals[1:]))[0]
        for k in idx:
            a, b = grid[k], grid[k + 1]
            if a < 100:
                r = brentq(lambda x: float(mpmath.siegelz(x)), a, b, xtol=1e-14)
            else:
                r = polish(z, brentq(lambda x: float(z_rs(x)[0]), a, b, xtol=1e-10))
            zeros.append(r)
        lo = grid[-1]
    zeros = sorted(set(round(z, 10) for z in zeros))
    zeros = [z for z in zeros if z < upper]
    if len(zeros) < args.count or abs(zeros[args.count - 1] - last) > 1e-6:
        raise SystemExit(f"found {len(zeros)} zeros; ordinate {args.count} does not match")
    zeros = zeros[: args.count]
    rng = np.random.default_rng(0)
    for k in rng.choice(len(zeros), size=min(20, len(zeros)), replace=False):
        r = float(mpmath.findroot(mpmath.siegelz, (zeros[k] - 1e-6, zeros[k] + 1e-6), solver="secant"))
        if abs(r - zeros[k]) > 1e-8:
            raise SystemExit(f"zero {k + 1}: {zeros[k]} disagrees with siegelz root {r}")
    with open(args.out, "w", newline="\n") as f:
        f.write(f"# imaginary parts of the first {args.count} nontrivial zeta zeros\n")
        for z in zeros:
            f.write(f"{z:.9f}\n")


if __name__ == "__main__":
    main()
