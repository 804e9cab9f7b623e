#!/usr/bin/env python3
"""Generate Daubechies dec_lo filter tables (db1..db26) by spectral factorization.

Emits src/daubechies_table.cpp. Run from the repo root:
    python3 tools/gen_daubechies.py > src/daubechies_table.cpp
"""
import sys
from mpmath import mp, mpf, binomial, polyroots, sqrt, mpc

mp.dps = 80

MAX_N = 26


def daub_dec_lo(N):
    if N == 1:
        s = 1 / sqrt(2)
        return [s, s]
    # P(y) = sum_{k=0}^{N-1} C(N-1+k, k) y^k  (Daubechies polynomial)
    pcoeffs = [binomial(N - 1 + k, k) for k in range(N - 1, -1, -1)]
    yroots = polyroots(pcoeffs, maxsteps=200, extraprec=200)
    # Map each y-root to the z-root inside the unit circle:
    # y = (2 - z - 1/z)/4  =>  z^2 - (2 - 4y) z + 1 = 0
    zroots = []
    for y in yroots:
        b = 2 - 4 * y
        disc = (b * b - 4) ** mpf("0.5")
        z1 = (b + disc) / 2
        z2 = (b - disc) / 2
        zroots.append(z1 if abs(z1) < 1 else z2)
    # h(z) = c * (1 + z)^N * prod (z - z_i); expand.
    poly = [mpc(1)]
    for _ in range(N):
        poly = mul(poly, [mpc(1), mpc(1)])  # (1 + z)
    for zr in zroots:
        poly = mul(poly, [-zr, mpc(1)])
    h = [p.real for p in poly]
    norm = sum(h)
    s2 = sqrt(2)
    h = [x * s2 / norm for x in h]
    # pywt-style ordering: largest-magnitude taps near the end for db2.
    if abs(h[0]) > abs(h[-1]):
        h = h[::-1]
    return h


def mul(a, b):
    out = [mpc(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def check(N, h):
    s2 = sqrt(2)
    assert abs(sum(h) - s2) < mpf("1e-40"), N
    assert abs(sum(x * x for x in h) - 1) < mpf("1e-40"), N
    for m in range(1, N):
        dot = sum(h[k] * h[k + 2 * m] for k in range(len(h) - 2 * m))
        assert abs(dot) < mpf("1e-40"), (N, m)
    for p in range(N):
        mom = sum((-1) ** k * mpf(k) ** p * h[len(h) - 1 - k] for k in range(len(h)))
        assert abs(mom) < mpf("1e-30"), (N, p, mom)


def main():
    tables = []
    for N in range(1, MAX_N + 1):
        h = daub_dec_lo(N)
        check(N, h)
        tables.append(h)
    out = sys.stdout
    out.write("// Daubechies scaling filter coefficients (dec_lo), db1..db26.\n")
    out.write("// Generated by tools/gen_daubechies.py; do not edit by hand.\n\n")
    out.write('#include "waveaug/wavelet.hpp"\n\n')
    out.write("namespace waveaug::detail {\n\n")
    for N, h in enumerate(tables, 1):
        out.write(f"static const double kDb{N}[{2*N}] = {{\n")
        for i in range(0, len(h), 3):
            row = ", ".join(mp.nstr(x, 20, strip_zeros=False) for x in h[i : i + 3])
            out.write(f"    {row},\n")
        out.write("};\n")
    out.write("\nconst double* daubechies_dec_lo(int n) {\n")
    out.write("    static const double* table[] = {\n        ")
    out.write(", ".join(f"kDb{N}" for N in range(1, MAX_N + 1)))
    out.write("\n    };\n")
    out.write(f"    if (n < 1 || n > {MAX_N}) return nullptr;\n")
    out.write("    return table[n - 1];\n}\n\n")
    out.write("}  // namespace waveaug::detail\n")


if __name__ == "__main__":
    main()
