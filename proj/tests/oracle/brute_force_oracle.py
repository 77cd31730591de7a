#!/usr/bin/env python3
"""Independent brute-force oracle for the equidistribution fixtures.

Roots are found by evaluating f on every residue 0..n-1 (no Hensel lifting,
no CRT, no sieve). The printed values are frozen into the C++ acceptance and
unit tests.
"""
import json
import math
import sys

import numpy as np

POLYS = {
    "x2+1": [1, 0, 1],
    "x2-2": [-2, 0, 1],
    "x3-x-1": [-1, -1, 0, 1],
}
PAIRS = [("x2+1", "x2+1"), ("x2+1", "x2-2"), ("x3-x-1", "x2-2")]
FREQS = [(1, 0), (0, 1), (1, 1), (2, -3)]
GRID = 256


def roots_mod(coeffs, n):
    m = np.arange(n, dtype=np.int64)
    v = np.full(n, coeffs[-1] % n, dtype=np.int64)
    for c in reversed(coeffs[:-1]):
        v = (v * m + c) % n
    return m[v == 0]


def all_roots(coeffs, limit):
    return [None] + [roots_mod(coeffs, n) for n in range(1, limit + 1)]


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def expsum(rs, h, n):
    if len(rs) == 0:
        return 0j
    k = (h * rs) % n
    return complex(np.exp(2j * np.pi * k / n).sum())


def pair_stats(rf, rg, x, checkpoints):
    out = {}
    num = {fr: 0j for fr in FREQS}
    M = 0
    box = 0
    hist = np.zeros((GRID, GRID), dtype=np.int64)
    diag_all = 0
    for n in range(1, x + 1):
        a, b = rf[n], rg[n]
        if len(a) and len(b):
            M += len(a) * len(b)
            for fr in FREQS:
                num[fr] += expsum(a, fr[0], n) * expsum(b, fr[1], n)
            ca = int(((a > 0) & (2 * a < n)).sum())
            cb = int(((b > 0) & (2 * b < n)).sum())
            box += ca * cb
            ia = (a * GRID) // n
            ib = (b * GRID) // n
            np.add.at(hist, (ia[:, None], ib[None, :]), 1)
            A = a[:, None]
            B = b[None, :]
            on = (A == B) | (A + B == n)
            diag_all += int(on.sum())
        if n in checkpoints:
            pref = hist.cumsum(0).cumsum(1)
            # pref[k-1, l-1] = #points with cell_a < k and cell_b < l
            k = np.arange(1, GRID + 1)
            emp = pref / M
            area = (k[:, None] * k[None, :]) / GRID**2
            disc = float(np.abs(emp - area).max())
            disc = max(disc, 0.0)
            out[n] = {
                "M": M,
                "weyl": {f"{h1}:{h2}": [num[(h1, h2)].real / M, num[(h1, h2)].imag / M,
                                       abs(num[(h1, h2)]) / M] for (h1, h2) in FREQS},
                "box_half": box / M,
                "box_half_count": box,
                "diag_all_count": diag_all,
                "diag_all": diag_all / M,
                "disc_grid_lower": disc,
            }
    return out


def counting_ratio(rf, rg, x):
    s = sum(len(rf[n]) * len(rg[n]) for n in range(1, x + 1))
    logprod = sum(math.log1p(len(rf[p]) * len(rg[p]) / p) for p in range(2, x + 1) if is_prime(p))
    return x * math.exp(logprod) / (math.log(x) * s)


def main():
    x = int(sys.argv[1]) if len(sys.argv) > 1 else 100000
    checkpoints = {c for c in (1000, 10000, 100000) if c <= x}
    checkpoints.add(x)
    roots = {name: all_roots(c, x) for name, c in POLYS.items()}
    result = {"x": x, "pairs": {}}
    for fname, gname in PAIRS:
        rf, rg = roots[fname], roots[gname]
        st = pair_stats(rf, rg, x, checkpoints)
        st = {str(k): v for k, v in st.items()}
        st["counting_ratio"] = {str(c): counting_ratio(rf, rg, c) for c in (10, 1000, 10000) if c <= x}
        result["pairs"][f"{fname},{gname}"] = st
    lim = min(x, 10000)
    primes = [p for p in range(2, lim + 1) if is_prime(p)]
    rf, rg = roots["x2+1"], roots["x2-2"]
    result["split_1e4"] = {
        "primes": len(primes),
        "x2+1": sum(len(rf[p]) == 2 for p in primes),
        "x2-2": sum(len(rg[p]) == 2 for p in primes),
        "joint": sum(len(rf[p]) == 2 and len(rg[p]) == 2 for p in primes),
    }
    json.dump(result, sys.stdout, indent=1)
    print()


if __name__ == "__main__":
    main()
