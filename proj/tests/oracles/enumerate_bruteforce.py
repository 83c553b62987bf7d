#!/usr/bin/env python3
# Copyright 2026 The chernratio Authors
# SPDX-License-Identifier: Apache-2.0
"""Brute-force feasibility count over the raw search box.

Loops every (h2k, hk2, chi) in the unpruned ranges and filters with the
defining inequalities written out longhand. Shares no code with the C++
enumerator; its output is frozen into tests/test_geography.cpp.
"""
import sys
from fractions import Fraction
from math import comb, floor


def castelnuovo(d):
    m = (d - 1) // 2
    pg_x = 2 * comb(m, 4) + comb(m, 3)
    pg_y = 2 * comb(m, 3) + comb(m, 2)
    return 1 - pg_x, 1 + pg_y


def count(d, s, positivity):
    upper = floor(Fraction(d * d, s) + d * (s - 6))
    lower = 2 if positivity else -2 * d - 2
    chi_lo, chi_hi = castelnuovo(d)
    n = 0
    first = None
    for h2k in range(lower, upper + 1):
        if (h2k + 2 * d) % 2:
            continue
        hk2_lo = 1 if positivity else d * (d - 21) - 9 * h2k
        for hk2 in range(hk2_lo, h2k * h2k // d + 1):
            if 9 * h2k + hk2 < d * (d - 21):
                continue
            if d * hk2 > h2k * h2k:
                continue
            for chi in range(chi_lo, chi_hi + 1):
                k3 = (d - 15) * h2k - 6 * hk2 - 24 * chi
                if positivity and k3 < 1:
                    continue
                if k3 < 8 * d * (d - 13) + 2 * (d - 33) * h2k - 14 * hk2:
                    continue
                n += 1
                if first is None:
                    first = (d, h2k, hk2, k3, chi)
    return n, first


if __name__ == "__main__":
    for d, s, pos in [(6, 2, True), (16, 4, True), (12, 3, True), (20, 4, True),
                      (9, 3, True), (16, 4, False), (10, 3, False)]:
        print(d, s, pos, *count(d, s, pos))
    sys.stdout.flush()
