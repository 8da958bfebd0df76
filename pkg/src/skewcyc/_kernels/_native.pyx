# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled GF(2) kernels, same contract as ``_pure``.

Field multiplication is limited to deg <= 63 so that every intermediate
fits one machine word; wider inputs fall back to the Python versions.
"""

from libc.stdint cimport uint64_t

from . import _pure


cdef inline uint64_t _mulmod(uint64_t a, uint64_t b, uint64_t mod, int deg) nogil:
    cdef uint64_t top = (<uint64_t>1) << deg
    cdef uint64_t result = 0
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= mod
    return result


def gf2_mulmod(a, b, mod, int deg):
    if deg > 63:
        return _pure.gf2_mulmod(a, b, mod, deg)
    cdef uint64_t m = <uint64_t>(mod & 0xFFFFFFFFFFFFFFFF)
    return _mulmod(<uint64_t>a, <uint64_t>b, m, deg)


def gf2_powmod(a, e, mod, int deg):
    if deg > 63:
        return _pure.gf2_powmod(a, e, mod, deg)
    cdef uint64_t m = <uint64_t>(mod & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t base = <uint64_t>a
    cdef uint64_t result = 1
    e = int(e)
    while e:
        if e & 1:
            result = _mulmod(result, base, m, deg)
        e >>= 1
        if e:
            base = _mulmod(base, base, m, deg)
    return result


def gf2_apply(e, cols):
    if e.bit_length() > 64:
        return _pure.gf2_apply(e, cols)
    cdef uint64_t v = <uint64_t>e
    cdef int i = 0
    cdef int ncols = len(cols)
    if ncols and max(cols).bit_length() > 64:
        return _pure.gf2_apply(e, cols)
    cdef uint64_t out = 0
    while v and i < ncols:
        if v & 1:
            out ^= <uint64_t>cols[i]
        v >>= 1
        i += 1
    return out


def gf2_rref(rows):
    rows = list(rows)
    if rows and max(rows).bit_length() > 64:
        return _pure.gf2_rref(rows)
    cdef uint64_t[64] basis
    cdef int[64] pivots
    cdef int count = 0
    cdef int i, j, p
    cdef uint64_t v
    for r in rows:
        v = <uint64_t>r
        for i in range(count):
            if (v >> pivots[i]) & 1:
                v ^= basis[i]
        if v:
            p = 63
            while not ((v >> p) & 1):
                p -= 1
            for i in range(count):
                if (basis[i] >> p) & 1:
                    basis[i] ^= v
            basis[count] = v
            pivots[count] = p
            count += 1
    order = sorted(range(count), key=lambda k: -pivots[k])
    return [basis[k] for k in order], [pivots[k] for k in order]


def gf2_rank(rows):
    rows = list(rows)
    if rows and max(rows).bit_length() > 64:
        return _pure.gf2_rank(rows)
    cdef uint64_t[64] basis
    cdef int count = 0
    cdef int i
    cdef uint64_t v, w
    for r in rows:
        v = <uint64_t>r
        for i in range(count):
            w = v ^ basis[i]
            if w < v:
                v = w
        if v:
            basis[count] = v
            count += 1
    return count
