"""Pure-Python versions of the hot GF(2) kernels.

Field elements of GF(2^deg) are ints whose bit i is the coefficient of x^i.
Vectors over GF(2) are ints used as bitmasks.
"""

from __future__ import annotations


def gf2_mulmod(a: int, b: int, mod: int, deg: int) -> int:
    """Product of a and b in GF(2)[x]/(mod); mod carries the x^deg bit."""
    top = 1 << deg
    result = 0
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= mod
    return result


def gf2_powmod(a: int, e: int, mod: int, deg: int) -> int:
    result = 1
    while e:
        if e & 1:
            result = gf2_mulmod(result, a, mod, deg)
        e >>= 1
        if e:
            a = gf2_mulmod(a, a, mod, deg)
    return result


def gf2_apply(e: int, cols) -> int:
    """Apply a GF(2)-linear map given by its column images to bitmask e."""
    out = 0
    i = 0
    while e:
        if e & 1:
            out ^= cols[i]
        e >>= 1
        i += 1
    return out


def gf2_rref(rows) -> tuple[list[int], list[int]]:
    """Reduced row echelon form of bitmask rows.

    Pivots are taken at the highest set bit, so the output rows are sorted
    by decreasing pivot. Returns (rows, pivot_bits).
    """
    basis: list[int] = []
    pivots: list[int] = []
    for v in rows:
        for b, p in zip(basis, pivots):
            if v >> p & 1:
                v ^= b
        if v:
            p = v.bit_length() - 1
            for i, b in enumerate(basis):
                if b >> p & 1:
                    basis[i] = b ^ v
            basis.append(v)
            pivots.append(p)
    order = sorted(range(len(basis)), key=lambda i: -pivots[i])
    return [basis[i] for i in order], [pivots[i] for i in order]


def gf2_rank(rows) -> int:
    basis: list[int] = []
    for v in rows:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)
