#!/usr/bin/env python3
"""Regenerate frozen_values.hpp with 50-digit mpmath references.

Run from the repository root:  python3 tests/oracles/generate_oracles.py
"""
import pathlib

import mpmath as mp

mp.mp.dps = 50


def poch(x, y, n):
    p = mp.mpc(1)
    for i in range(n):
        p *= x + i * y
    return p


def g_series(a, b, c, d, z, terms=400):
    total = mp.mpc(0)
    for k in range(terms):
        total += poch(a, b, k) / poch(c, d, k) * z**k / mp.factorial(k)
    return total


def cpx(v):
    v = mp.mpc(v)
    return "{%s, %s}" % (mp.nstr(v.real, 20, min_fixed=-mp.inf, max_fixed=mp.inf),
                          mp.nstr(v.imag, 20, min_fixed=-mp.inf, max_fixed=mp.inf))


def real(v):
    return mp.nstr(mp.mpf(v), 20)


lines = [
    "// Generated by tests/oracles/generate_oracles.py (mpmath, 50 digits). Do not edit.",
    "#pragma once",
    "",
    "#include <complex>",
    "",
    "namespace oracle {",
    "",
    "using C = std::complex<double>;",
    "",
]

# 40-term partial sum of 1/(k!)^2.
inv_fact_sq = mp.fsum(1 / mp.factorial(k) ** 2 for k in range(40))
lines.append(f"inline constexpr double kInvFactorialSquaredSum40 = {real(inv_fact_sq)};")
lines.append("")

# General G instances: (a, b, c, d, z).
g_cases = [
    (mp.mpc(0.5, 0.25), mp.mpc(-0.3, 0.1), mp.mpc(1.5, -0.5), mp.mpc(0.7, 0.2), mp.mpc(0.9, -0.4)),
    (mp.mpc(2, 0), mp.mpc(1, 0), mp.mpc(3, 0), mp.mpc(1, 0), mp.mpc(-1.25, 0)),
    (mp.mpc(-1.5, 1), mp.mpc(0, 0), mp.mpc(2, 0), mp.mpc(1, 0), mp.mpc(0.3, 1.7)),
    (mp.mpc(1, -1), mp.mpc(0.5, 0.5), mp.mpc(0.25, 0), mp.mpc(0, 0), mp.mpc(0.2, 0.1)),
    (mp.mpc(0.75, 0), mp.mpc(1.25, -0.5), mp.mpc(4, 1), mp.mpc(2, 0), mp.mpc(-2.5, 1.5)),
]
lines.append("struct GCase { C a, b, c, d, z, value; };")
lines.append("inline const GCase kGCases[] = {")
for a, b, c, d, z in g_cases:
    lines.append(f"    {{C{cpx(a)}, C{cpx(b)}, C{cpx(c)}, C{cpx(d)}, C{cpx(z)}, C{cpx(g_series(a, b, c, d, z))}}},")
lines.append("};")
lines.append("")

# Kummer M(a, b, z) from mpmath's own hyp1f1.
kummer_cases = [
    (mp.mpc(0.5, 0), mp.mpc(1.5, 0), mp.mpc(1, 0)),
    (mp.mpc(-2.3, 0.7), mp.mpc(3, 0), mp.mpc(1.5, -2)),
    (mp.mpc(1.2, -0.4), mp.mpc(0.5, 0.5), mp.mpc(-3, 0.5)),
    (mp.mpc(4, 0), mp.mpc(11, 0), mp.mpc(6, 0)),
]
lines.append("struct KummerCase { C a, b, z, value; };")
lines.append("inline const KummerCase kKummerCases[] = {")
for a, b, z in kummer_cases:
    lines.append(f"    {{C{cpx(a)}, C{cpx(b)}, C{cpx(z)}, C{cpx(mp.hyp1f1(a, b, z))}}},")
lines.append("};")
lines.append("")

# Modified Bessel I_n(z) from mpmath.besseli.
bessel_cases = [(0, mp.mpc(2, 0)), (1, mp.mpc(0.5, 0)), (3, mp.mpc(1.5, -2)),
                (7, mp.mpc(4, 1)), (20, mp.mpc(10, 0)), (2, mp.mpc(-3, 0.25))]
lines.append("struct BesselCase { int n; C z, value; };")
lines.append("inline const BesselCase kBesselCases[] = {")
for n, z in bessel_cases:
    lines.append(f"    {{{n}, C{cpx(z)}, C{cpx(mp.besseli(n, z))}}},")
lines.append("};")
lines.append("")

# P-series for (s, t, r), m, z: the sum with a = r+sm, b = s+t, c = m+1, d = 1.
p_cases = [
    ((mp.mpc(1, 0), mp.mpc(0, 0), mp.mpc(0, 0)), 0, mp.mpc(0.5, 0.5)),
    ((mp.mpc(0.3, -0.2), mp.mpc(-0.1, 0.4), mp.mpc(1.1, 0.6)), 3, mp.mpc(-0.7, 0.2)),
    ((mp.mpc(2, 0), mp.mpc(-2, 0), mp.mpc(-1, 0.5)), 5, mp.mpc(1.9, -0.3)),
    ((mp.mpc(-1.5, 0.5), mp.mpc(0.25, -1), mp.mpc(0.5, 0)), 12, mp.mpc(3, 2)),
]
lines.append("struct PCase { C s, t, r; int m; C z, value; };")
lines.append("inline const PCase kPCases[] = {")
for (s, t, r), m, z in p_cases:
    val = g_series(r + s * m, s + t, m + 1, 1, z)
    lines.append(f"    {{C{cpx(s)}, C{cpx(t)}, C{cpx(r)}, {m}, C{cpx(z)}, C{cpx(val)}}},")
lines.append("};")
lines.append("")
lines.append("}  // namespace oracle")

out = pathlib.Path(__file__).with_name("frozen_values.hpp")
out.write_text("\n".join(lines) + "\n")
print(f"wrote {out}")
