# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled arithmetic kernel.

Same contract as ``_purekernel``; coefficients stay Python integers (values
are exact rationals of unbounded size) but the loops and list handling run
as C.  See ``_purekernel`` for the representation.
"""

from math import gcd

KERNEL_NAME = "compiled"


def normalize(nums, den):
    cdef Py_ssize_t i, n = len(nums)
    cdef list out
    if den < 0:
        den = -den
        nums = [-v for v in nums]
    g = den
    for i in range(n):
        v = nums[i]
        if v:
            g = gcd(g, v)
            if g == 1:
                break
    if g > 1:
        den = den // g
        out = [0] * n
        for i in range(n):
            out[i] = nums[i] // g
        return tuple(out), den
    return tuple(nums), den


def add(anums, aden, bnums, bden):
    cdef Py_ssize_t i, n = len(anums)
    cdef list out = [0] * n
    if aden == bden:
        for i in range(n):
            out[i] = anums[i] + bnums[i]
        return normalize(out, aden)
    for i in range(n):
        out[i] = anums[i] * bden + bnums[i] * aden
    return normalize(out, aden * bden)


def sub(anums, aden, bnums, bden):
    cdef Py_ssize_t i, n = len(anums)
    cdef list out = [0] * n
    if aden == bden:
        for i in range(n):
            out[i] = anums[i] - bnums[i]
        return normalize(out, aden)
    for i in range(n):
        out[i] = anums[i] * bden - bnums[i] * aden
    return normalize(out, aden * bden)


def scale(anums, aden, snum, sden):
    cdef Py_ssize_t i, n = len(anums)
    cdef list out
    if snum == 0:
        return (0,) * n, 1
    out = [0] * n
    for i in range(n):
        out[i] = snum * anums[i]
    return normalize(out, aden * sden)


def mul_mod(anums, aden, bnums, bden, red):
    cdef Py_ssize_t i, j, k, deg = len(anums)
    cdef list conv = [0] * (2 * deg - 1)
    cdef list out
    for i in range(deg):
        a = anums[i]
        if a == 0:
            continue
        for j in range(deg):
            b = bnums[j]
            if b != 0:
                conv[i + j] = conv[i + j] + a * b
    out = conv[:deg]
    for k in range(2 * deg - 2, deg - 1, -1):
        c = conv[k]
        if c != 0:
            row = red[k - deg]
            for i in range(deg):
                r = row[i]
                if r != 0:
                    out[i] = out[i] + c * r
    return normalize(out, aden * bden)


def apply_rows(nums, rows, deg):
    cdef Py_ssize_t i, k, n = len(nums), d = deg
    cdef list out = [0] * d
    for k in range(n):
        c = nums[k]
        if c == 0:
            continue
        row = rows[k]
        for i in range(d):
            r = row[i]
            if r != 0:
                out[i] = out[i] + c * r
    return tuple(out)
