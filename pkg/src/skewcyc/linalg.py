"""Gaussian elimination over a finite field given by its operations.

The field object ``F`` needs ``add``, ``sub``, ``mul``, ``inv``, ``zero``
and ``one``. Both :class:`~skewcyc.fqpoly.SmallField`-like objects and
:class:`~skewcyc.fieldtower.Tower` (for subfields of the big field) work.
Matrices are lists of row lists.
"""

from __future__ import annotations

from typing import Sequence


def rref(F, rows: Sequence[Sequence[int]], ncols: int | None = None):
    """Reduced row echelon form.

    Returns (rows, pivots) with zero rows dropped, pivot entries equal to 1
    and pivot columns strictly increasing.
    """
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0]) if ncols is None else ncols
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        pr = next((i for i in range(top, len(mat)) if mat[i][col]), None)
        if pr is None:
            continue
        mat[top], mat[pr] = mat[pr], mat[top]
        lead = mat[top][col]
        if lead != 1:
            inv = F.inv(lead)
            mat[top] = [F.mul(inv, x) if x else 0 for x in mat[top]]
        prow = mat[top]
        for i in range(len(mat)):
            if i != top:
                f = mat[i][col]
                if f:
                    row = mat[i]
                    mat[i] = [F.sub(a, F.mul(f, b)) if b else a for a, b in zip(row, prow)]
        pivots.append(col)
        top += 1
        if top == len(mat):
            break
    return mat[:top], pivots


def rank(F, rows) -> int:
    return len(rref(F, rows)[1])


def kernel(F, rows, ncols: int) -> list[list[int]]:
    """Basis of the right kernel {x : A x = 0}, in RREF."""
    red, pivots = rref(F, rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fcol in free:
        v = [0] * ncols
        v[fcol] = 1
        for row, pc in zip(red, pivots):
            if row[fcol]:
                v[pc] = F.sub(0, row[fcol])
        basis.append(v)
    return rref(F, basis, ncols)[0]


def solve(F, rows, rhs) -> list[int] | None:
    """One solution of A x = rhs, or None."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(F, aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return x


def inverse(F, rows) -> list[list[int]]:
    n = len(rows)
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref(F, aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def intersect(F, a_rows, b_rows, ncols: int) -> list[list[int]]:
    """Zassenhaus intersection of two row spaces, in RREF."""
    if not a_rows or not b_rows:
        return []
    block = [list(r) + list(r) for r in a_rows] + [list(r) + [0] * ncols for r in b_rows]
    red, pivots = rref(F, block, 2 * ncols)
    out = [row[ncols:] for row, pc in zip(red, pivots) if pc >= ncols]
    return rref(F, out, ncols)[0]


def mat_vec(F, rows, vec) -> list[int]:
    out = []
    for row in rows:
        acc = 0
        for a, b in zip(row, vec):
            if a and b:
                acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return out


def in_row_space(F, rows, vec, ncols: int) -> bool:
    return rank(F, list(rows) + [list(vec)]) == rank(F, rows)


# ----------------------------------------------------------------------
# GF(2) bitmask helpers (rows are ints, bit j = column j)


def gf2_inverse_columns(cols: Sequence[int], n: int) -> list[int]:
    """Columns of the inverse of the GF(2) matrix whose j-th column is cols[j]."""
    pairs = [(c, 1 << j) for j, c in enumerate(cols)]
    basis: dict[int, tuple[int, int]] = {}
    for img, src in pairs:
        for p, (bi, bs) in basis.items():
            if img >> p & 1:
                img ^= bi
                src ^= bs
        if not img:
            raise ZeroDivisionError("singular GF(2) matrix")
        p = img.bit_length() - 1
        for k, (bi, bs) in list(basis.items()):
            if bi >> p & 1:
                basis[k] = (bi ^ img, bs ^ src)
        basis[p] = (img, src)
    out = [0] * n
    for p, (img, src) in basis.items():
        # fully reduced: img is exactly the unit vector at p
        out[p] = src
    return out


def gf2_kernel_from_columns(cols: Sequence[int]) -> list[int]:
    """Kernel basis of the GF(2) map sending unit vector j to cols[j].

    Kernel vectors are bitmasks over the input coordinates.
    """
    basis: dict[int, tuple[int, int]] = {}
    kernel_vecs = []
    for j, img in enumerate(cols):
        src = 1 << j
        for p, (bi, bs) in basis.items():
            if img >> p & 1:
                img ^= bi
                src ^= bs
        if img:
            p = img.bit_length() - 1
            for k, (bi, bs) in list(basis.items()):
                if bi >> p & 1:
                    basis[k] = (bi ^ img, bs ^ src)
            basis[p] = (img, src)
        else:
            kernel_vecs.append(src)
    return kernel_vecs


def gf2_intersect(a: Sequence[int], b: Sequence[int], width: int) -> list[int]:
    """Zassenhaus intersection of two GF(2) row spaces (bitmasks)."""
    from . import _kernels

    if not a or not b:
        return []
    block = [(v << width) | v for v in a] + [v << width for v in b]
    rows, pivots = _kernels.gf2_rref(block)
    mask = (1 << width) - 1
    return [r & mask for r, p in zip(rows, pivots) if p < width]
