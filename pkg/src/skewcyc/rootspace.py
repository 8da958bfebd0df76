"""Root spaces, subspace polynomials, minimal q^r-polynomials and
cyclotomic spaces.

A :class:`Subspace` is an F_{q^d}-subspace of the big field stored as the
reduced row echelon form of the coordinates (over F_{q^d}, on the tower's
basis a^0, a^1, ...) of a basis. Two subspaces are equal iff their stored
matrices are equal. For q = 2 and d = 1 the heavy lifting is done on
bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from . import _kernels, linalg
from .errors import MixedScalars, TowerMismatch, ZeroPolynomial
from .fieldtower import Tower
from .linpoly import LinPoly, evaluate


# ----------------------------------------------------------------------
# bit-level helpers for q = 2, d = 1. Coordinate j of an element sits at
# bit (N-1-j), so the highest set bit is the leading (leftmost) entry and
# the GF(2) kernels' echelon form is the canonical one.

_BIT_CACHE: dict = {}


def _binary(t: Tower, d: int) -> bool:
    return t.q == 2 and d == 1


def _bit_maps(t: Tower):
    maps = _BIT_CACHE.get(t.params)
    if maps is None:
        N = t.N
        sb = t.subfield_basis(1)
        to_bits = [_reverse(c, N) for c in sb.inv_cols]
        from_bits = [sb.zeta_pows[N - 1 - b] for b in range(N)]
        maps = _BIT_CACHE[t.params] = (to_bits, from_bits)
    return maps


def _reverse(v: int, width: int) -> int:
    return int(format(v, f"0{width}b")[::-1], 2)


def elem_to_bits(t: Tower, e: int) -> int:
    return _kernels.gf2_apply(e, _bit_maps(t)[0])


def bits_to_elem(t: Tower, v: int) -> int:
    return _kernels.gf2_apply(v, _bit_maps(t)[1])


def _bits_to_row(v: int, width: int) -> tuple[int, ...]:
    return tuple(int(ch) for ch in format(v, f"0{width}b"))


def _row_to_bits(row: Sequence[int]) -> int:
    v = 0
    for c in row:
        v = (v << 1) | c
    return v


# ----------------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """F_{q^d}-subspace of F_{q^N} in canonical (RREF) coordinate form."""

    d: int
    rows: tuple[tuple[int, ...], ...]
    tower: Tower = field(compare=False, repr=False, hash=False)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def length(self) -> int:
        return self.tower.N // self.d

    @cached_property
    def bits(self) -> tuple[int, ...]:
        return tuple(_row_to_bits(r) for r in self.rows)

    @cached_property
    def basis(self) -> tuple[int, ...]:
        """Basis elements (as field elements), one per canonical row."""
        t = self.tower
        if _binary(t, self.d):
            return tuple(bits_to_elem(t, v) for v in self.bits)
        return tuple(t.reconstruct(r, self.d) for r in self.rows)

    def __contains__(self, e: int) -> bool:
        return contains(self, e)

    def is_full(self) -> bool:
        return self.dim == self.length

    def elements(self) -> Iterator[int]:
        """Every element of the subspace (small spaces only)."""
        t = self.tower
        scalars = list(t.subfield_elements(self.d))
        for combo in product(scalars, repeat=self.dim):
            acc = 0
            for c, b in zip(combo, self.basis):
                if c:
                    acc = t.add(acc, t.mul(c, b))
            yield acc

    def to_json(self) -> dict:
        t = self.tower
        return {
            "d": self.d,
            "dim": self.dim,
            "basis": [list(r) for r in self.rows],
            "elements": [t.power_text(b) for b in self.basis],
        }

    def __repr__(self) -> str:
        return f"Subspace(d={self.d}, dim={self.dim}, basis={[self.tower.power_text(b) for b in self.basis]})"


def _from_bits(t: Tower, vecs: Iterable[int]) -> Subspace:
    rows, _ = _kernels.gf2_rref([v for v in vecs if v])
    return Subspace(1, tuple(_bits_to_row(v, t.N) for v in rows), t)


def _from_rows(t: Tower, d: int, rows) -> Subspace:
    length = t.N // d
    red, _ = linalg.rref(t, [list(r) for r in rows if any(r)], length)
    return Subspace(d, tuple(tuple(r) for r in red), t)


def span(t: Tower, elems: Iterable[int], d: int | None = None) -> Subspace:
    """The F_{q^d}-span of elems (d defaults to r)."""
    d = t.r if d is None else d
    elems = [e for e in elems if e]
    if _binary(t, d):
        return _from_bits(t, (elem_to_bits(t, e) for e in elems))
    return _from_rows(t, d, [t.subfield_coords(e, d) for e in elems])


def zero_subspace(t: Tower, d: int | None = None) -> Subspace:
    return Subspace(t.r if d is None else d, (), t)


def full_space(t: Tower, d: int | None = None) -> Subspace:
    d = t.r if d is None else d
    L = t.N // d
    return Subspace(d, tuple(tuple(1 if i == j else 0 for j in range(L)) for i in range(L)), t)


def contains(T: Subspace, e: int) -> bool:
    t = T.tower
    if e == 0:
        return True
    if _binary(t, T.d):
        v = elem_to_bits(t, e)
        for b in T.bits:
            if v >> (b.bit_length() - 1) & 1:
                v ^= b
        return v == 0
    row = t.subfield_coords(e, T.d)
    return linalg.rank(t, [list(r) for r in T.rows] + [row]) == T.dim


def is_subspace_of(A: Subspace, B: Subspace) -> bool:
    _same(A, B)
    return all(contains(B, e) for e in A.basis)


def _same(A: Subspace, B: Subspace) -> None:
    if A.d != B.d:
        raise MixedScalars(f"subspaces over F_q^{A.d} and F_q^{B.d}")
    if A.tower != B.tower:
        raise TowerMismatch("subspaces of different towers")


def sum_spaces(A: Subspace, B: Subspace) -> Subspace:
    _same(A, B)
    t = A.tower
    if _binary(t, A.d):
        return _from_bits(t, A.bits + B.bits)
    return _from_rows(t, A.d, A.rows + B.rows)


def intersect(A: Subspace, B: Subspace) -> Subspace:
    _same(A, B)
    t = A.tower
    if _binary(t, A.d):
        return _from_bits(t, linalg.gf2_intersect(A.bits, B.bits, t.N))
    rows = linalg.intersect(t, [list(r) for r in A.rows], [list(r) for r in B.rows], A.length)
    return Subspace(A.d, tuple(tuple(r) for r in rows), t)


def frobenius_image(T: Subspace, a: int) -> Subspace:
    """{beta^(q^a) : beta in T}."""
    t = T.tower
    return span(t, (t.frob(b, a) for b in T.basis), T.d)


def frobenius_preimage(T: Subspace, a: int) -> Subspace:
    return frobenius_image(T, -a)


def equals(A: Subspace, B: Subspace) -> bool:
    _same(A, B)
    return A.rows == B.rows


# ----------------------------------------------------------------------
# root spaces


def zero_space(F: LinPoly) -> Subspace:
    """Z(F): the F_{q^r}-subspace of roots of F in F_{q^N}."""
    t = F.tower
    if F.is_zero():
        raise ZeroPolynomial("the zero polynomial vanishes everywhere", full_space(t))
    r, n = t.r, t.n
    sb = t.subfield_basis(r)
    images = [evaluate(F, z) for z in sb.zeta_pows]
    if _binary(t, r):
        cols = [elem_to_bits(t, v) for v in images]
        kern = linalg.gf2_kernel_from_columns(cols)
        # kernel vectors are coordinate masks with bit i for a^i
        return span(t, (_mask_to_elem(sb.zeta_pows, k) for k in kern), 1)
    mat = [[0] * n for _ in range(n)]
    for i, v in enumerate(images):
        for l, c in enumerate(t.subfield_coords(v, r)):
            mat[l][i] = c
    kern = linalg.kernel(t, mat, n)
    return Subspace(r, tuple(tuple(v) for v in kern), t)


def _mask_to_elem(pows: Sequence[int], mask: int) -> int:
    acc = 0
    i = 0
    while mask:
        if mask & 1:
            acc ^= pows[i]
        mask >>= 1
        i += 1
    return acc


def subspace_polynomial(T: Subspace) -> LinPoly:
    """Monic q^r-polynomial of q^r-degree dim T vanishing exactly on T."""
    t = T.tower
    r = t.r
    P = LinPoly.x(t)
    qr1 = t.q**r - 1
    for b in T.basis:
        gamma = evaluate(P, b)
        # (x^[r] - gamma^(q^r - 1) x) composed with P
        c = t.neg(t.pow(gamma, qr1))
        step = LinPoly(t, (c, 1), t.N)
        P = step * P
    return P


def is_root_space(T: Subspace) -> tuple[bool, dict]:
    """Whether T is a q^r-root space over F_{q^m}.

    Primary test: every coefficient of the subspace polynomial lies in
    F_{q^m}. The diagnostic lists offending coefficient indices.
    """
    t = T.tower
    P = subspace_polynomial(T)
    bad = [i for i, c in enumerate(P.coeffs) if not t.in_subfield(c, t.m)]
    return not bad, {"subspace_polynomial": P, "coefficients_outside_Fqm": bad}


def galois_closure_dims(T: Subspace) -> tuple[int, int]:
    """(dim over F_{q^m} of the subfield subcode, dim over F_{q^N} of the
    code with Moore parity check of T). T is a root space iff they agree."""
    t = T.tower
    n, r, m = t.n, t.r, t.m
    expected = n - T.dim
    rows = []
    for beta in T.basis:
        powers = [t.subfield_coords(t.frob(beta, j * r), m) for j in range(n)]
        for l in range(t.N // m):
            rows.append([powers[j][l] for j in range(n)])
    got = n - linalg.rank(t, rows) if rows else n
    return got, expected


def is_root_space_cross_check(T: Subspace) -> bool:
    got, expected = galois_closure_dims(T)
    return got == expected


def minimal_qr_polynomial(t: Tower, beta: int) -> LinPoly:
    """Monic q^r-polynomial over F_{q^m} of least degree with beta as a root."""
    if beta == 0:
        return LinPoly.x(t)
    r, m = t.r, t.m
    vecs = [t.subfield_coords(beta, m)]
    k = 1
    while True:
        target = t.subfield_coords(t.frob(beta, k * r), m)
        cols = [list(col) for col in zip(*vecs)]
        sol = linalg.solve(t, cols, target)
        if sol is not None:
            coeffs = [t.neg(c) for c in sol] + [1]
            return LinPoly(t, coeffs, m)
        vecs.append(target)
        k += 1


def cyclotomic_space(t: Tower, beta: int) -> Subspace:
    """C_{q^r}(beta): the roots of the minimal q^r-polynomial of beta."""
    return zero_space(minimal_qr_polynomial(t, beta))


def root_space_closure(t: Tower, elems: Iterable[int]) -> Subspace:
    """Smallest root space containing elems (sum of their cyclotomic spaces)."""
    out = zero_subspace(t)
    for e in elems:
        if e and not contains(out, e):
            out = sum_spaces(out, cyclotomic_space(t, e))
    return out


def all_subspaces(t: Tower, d: int | None = None) -> Iterator[Subspace]:
    """Every F_{q^d}-subspace of F_{q^N}, by dimension then pivot pattern."""
    d = t.r if d is None else d
    L = t.N // d
    scalars = list(t.subfield_elements(d))
    for k in range(L + 1):
        for pivots in combinations(range(L), k):
            free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, L) if j not in pivots]
            for vals in product(scalars, repeat=len(free)):
                rows = [[0] * L for _ in range(k)]
                for i, p in enumerate(pivots):
                    rows[i][p] = 1
                for (i, j), v in zip(free, vals):
                    rows[i][j] = v
                yield Subspace(d, tuple(tuple(r) for r in rows), t)


def all_root_spaces(t: Tower) -> list[Subspace]:
    return [T for T in all_subspaces(t) if is_root_space(T)[0]]
