"""Skew cyclic codes as left ideals of L F_{q^m}[x] / (x^[rn] - x).

Vectors are tuples of big-field ints lying in F_{q^m}; a vector c and the
residue class c_0 x + c_1 x^[r] + ... + c_{n-1} x^[(n-1)r] are identified.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Iterable, Iterator, Sequence

from . import linalg
from .errors import DependentRows, NotARootSpace, TowerMismatch
from .fieldtower import Tower
from .linpoly import (
    LinPoly,
    ResidueClass,
    left_divmod,
    residue_reduce,
    right_divmod,
    right_gcd,
)
from .rootspace import Subspace, is_root_space, subspace_polynomial, zero_space

Vector = tuple[int, ...]


# ----------------------------------------------------------------------
# shifts and embeddings


def sigma_shift(t: Tower, v: Sequence[int], r: int | None = None) -> Vector:
    """(c_{n-1}^[r], c_0^[r], ..., c_{n-2}^[r])."""
    r = t.r if r is None else r
    if not v:
        return ()
    return tuple(t.frob(c, r) for c in (v[-1], *v[:-1]))


def psi_embed(c: Sequence[int], m: int) -> Vector:
    """Repeat c until the length is lcm(m, len(c))."""
    N = len(c)
    reps = m // gcd(m, N)
    return tuple(c) * reps


# ----------------------------------------------------------------------
# general linear codes


@dataclass(frozen=True)
class LinearCode:
    """F_{q^m}-linear code given by a generator matrix in RREF."""

    tower: Tower
    rows: tuple[Vector, ...]
    n: int

    @classmethod
    def from_rows(cls, t: Tower, rows: Iterable[Sequence[int]], n: int | None = None) -> "LinearCode":
        rows = [list(r) for r in rows]
        n = n if n is not None else (len(rows[0]) if rows else t.n)
        red, _ = linalg.rref(t, [r for r in rows if any(r)], n)
        return cls(t, tuple(tuple(r) for r in red), n)

    @classmethod
    def from_parity_check(cls, t: Tower, rows: Sequence[Sequence[int]], n: int) -> "LinearCode":
        if not rows:
            return cls.from_rows(t, [[1 if i == j else 0 for j in range(n)] for i in range(n)], n)
        return cls.from_rows(t, linalg.kernel(t, [list(r) for r in rows], n), n)

    @property
    def k(self) -> int:
        return len(self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearCode) and self.rows == other.rows and self.n == other.n

    def __hash__(self) -> int:
        return hash(self.rows)

    def contains(self, v: Sequence[int]) -> bool:
        if not any(v):
            return True
        return linalg.rank(self.tower, [list(r) for r in self.rows] + [list(v)]) == self.k

    def parity_check(self) -> list[list[int]]:
        return linalg.kernel(self.tower, [list(r) for r in self.rows], self.n)

    def codewords(self) -> Iterator[Vector]:
        return enumerate_codewords(self.tower, self.rows, self.n)


def enumerate_codewords(t: Tower, rows: Sequence[Sequence[int]], n: int) -> Iterator[Vector]:
    """All codewords: messages over F_{q^m}^k in lexicographic order."""
    scalars = list(t.subfield_elements(t.m))
    for msg in product(scalars, repeat=len(rows)):
        out = [0] * n
        for u, row in zip(msg, rows):
            if u:
                for j, c in enumerate(row):
                    if c:
                        out[j] = t.add(out[j], t.mul(u, c))
        yield tuple(out)


def is_skew_cyclic(t: Tower, code) -> bool:
    """Closure under sigma_shift.

    For a :class:`LinearCode` or :class:`SkewCyclicCode` the row space is
    tested; any other iterable is treated as a finite set of vectors.
    """
    if isinstance(code, SkewCyclicCode):
        code = code.as_linear()
    if isinstance(code, LinearCode):
        return all(code.contains(sigma_shift(t, row)) for row in code.rows)
    vecs = {tuple(v) for v in code}
    return all(sigma_shift(t, v) in vecs for v in vecs)


# ----------------------------------------------------------------------
# skew cyclic codes


@dataclass(frozen=True, eq=False)
class SkewCyclicCode:
    """A q^r-cyclic code: minimal generator G, check polynomial H, dimension k."""

    tower: Tower
    G: LinPoly
    H: LinPoly
    k: int

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewCyclicCode) and self.G == other.G and self.tower == other.tower

    def __hash__(self) -> int:
        return hash(self.G.coeffs)

    def __repr__(self) -> str:
        return f"SkewCyclicCode(k={self.k}, G={self.G.text()})"

    @property
    def n(self) -> int:
        return self.tower.n

    def generator_matrix(self) -> list[list[int]]:
        return matrices(self)[0]

    def as_linear(self) -> LinearCode:
        return LinearCode.from_rows(self.tower, self.generator_matrix(), self.n)

    def codewords(self) -> Iterator[Vector]:
        return enumerate_codewords(self.tower, self.generator_matrix(), self.n)

    def to_json(self) -> dict:
        return {
            "tower": self.tower.header(),
            "G": self.G.to_json(),
            "H": self.H.to_json(),
            "G_text": self.G.text(),
            "H_text": self.H.text(),
            "k": self.k,
        }


def _as_linpoly(t: Tower, g) -> LinPoly:
    if isinstance(g, LinPoly):
        return g
    if isinstance(g, ResidueClass):
        return g.to_linpoly()
    return LinPoly(t, list(g))


def code_from_generator(t: Tower, gens) -> SkewCyclicCode:
    """Left ideal generated by gens (a polynomial, class, vector or a list).

    The minimal generator is the monic right gcd of the inputs and the
    modulus; the check polynomial comes from a left division.
    """
    if isinstance(gens, (LinPoly, ResidueClass)):
        gens = [gens]
    elif gens and not isinstance(gens[0], (LinPoly, ResidueClass, list, tuple)):
        gens = [gens]
    polys = [_as_linpoly(t, g) for g in gens]
    for P in polys:
        if P.tower != t:
            raise TowerMismatch("generator over a different tower")
        if not all(t.in_subfield(c, t.m) for c in P.coeffs):
            raise ValueError("generator coefficients must lie in F_q^m")
    M = LinPoly.modulus(t)
    G = right_gcd(M, *polys)
    G = LinPoly(t, G.coeffs, t.m)
    return _code_from_minimal(t, G)


def _code_from_minimal(t: Tower, G: LinPoly) -> SkewCyclicCode:
    M = LinPoly.modulus(t)
    H, R = left_divmod(M, G)
    assert R.is_zero(), "minimal generator must divide the modulus"
    assert G * H == M and H * G == M, "G*H = H*G = x^[rn] - x fails"
    return SkewCyclicCode(t, G, LinPoly(t, H.coeffs, t.m), t.n - G.degree)


def whole_space(t: Tower) -> SkewCyclicCode:
    return _code_from_minimal(t, LinPoly.x(t))


def zero_code(t: Tower) -> SkewCyclicCode:
    return _code_from_minimal(t, LinPoly.modulus(t))


def matrices(C: SkewCyclicCode) -> tuple[list[list[int]], list[list[int]]]:
    """Banded generator matrix and the parity check matrix built from
    h_i = H_i^[(k-i)r]."""
    t, n, k, r = C.tower, C.n, C.k, C.tower.r
    G = C.G
    gen = []
    if k:
        for i in range(k):
            row = [0] * n
            for j, c in enumerate(G.coeffs):
                row[i + j] = t.frob(c, i * r)
            gen.append(row)
    h = [t.frob(C.H.coeff(i), (k - i) * r) for i in range(k + 1)]
    par = []
    for l in range(n - k):
        row = [0] * n
        for j in range(k + 1):
            row[l + j] = t.frob(h[k - j], l * r)
        par.append(row)
    return gen, par


def check_orthogonal(C: SkewCyclicCode) -> bool:
    t = C.tower
    gen, par = matrices(C)
    for g in gen:
        for h in par:
            acc = 0
            for a, b in zip(g, h):
                if a and b:
                    acc = t.add(acc, t.mul(a, b))
            if acc:
                return False
    return True


def dual(C: SkewCyclicCode) -> SkewCyclicCode:
    """The dual code under the standard bilinear form.

    Its minimal generator is (h_k x + ... + h_0 x^[kr]) / h_0; the result
    is checked against the generator matrix of C.
    """
    t, k, r = C.tower, C.k, C.tower.r
    if k == 0:
        return whole_space(t)
    h = [t.frob(C.H.coeff(i), (k - i) * r) for i in range(k + 1)]
    inv = t.inv(h[0])
    Hperp = LinPoly(t, [t.mul(h[k - i], inv) for i in range(k + 1)], t.m)
    D = code_from_generator(t, Hperp)
    assert D.G == Hperp, "dual generator is not minimal"
    gen = matrices(C)[0]
    for row in matrices(D)[0]:
        for g in gen:
            acc = 0
            for a, b in zip(row, g):
                if a and b:
                    acc = t.add(acc, t.mul(a, b))
            assert acc == 0, "dual is not orthogonal"
    return D


def _vector_of(t: Tower, F) -> Vector:
    if isinstance(F, ResidueClass):
        return F.coeffs
    if isinstance(F, LinPoly):
        return residue_reduce(F).coeffs
    v = tuple(F)
    if len(v) != t.n:
        raise ValueError(f"expected a vector of length {t.n}")
    return v


def contains(C: SkewCyclicCode, F) -> bool:
    """Membership by right division by G and by F*H = 0; both must agree."""
    t = C.tower
    v = _vector_of(t, F)
    P = LinPoly(t, v)
    by_division = right_divmod(P, C.G)[1].is_zero()
    by_check = residue_reduce(P * C.H).is_zero()
    assert by_division == by_check, "membership criteria disagree"
    return by_division


def rho(C: SkewCyclicCode) -> Subspace:
    """Root space Z(G) of the code."""
    return zero_space(C.G)


def rho_inverse(T: Subspace) -> SkewCyclicCode:
    """Code whose root space is T."""
    t = T.tower
    ok, info = is_root_space(T)
    if not ok:
        raise NotARootSpace(
            f"subspace polynomial has coefficients outside F_q^{t.m} at {info['coefficients_outside_Fqm']}")
    P = info["subspace_polynomial"]
    return _code_from_minimal(t, LinPoly(t, P.coeffs, t.m))


def moore_matrix(t: Tower, betas: Sequence[int], ncols: int | None = None) -> list[list[int]]:
    ncols = t.n if ncols is None else ncols
    return [[t.frob(b, j * t.r) for j in range(ncols)] for b in betas]


def parity_check_over_extension(t: Tower, betas: Sequence[int]) -> list[list[int]]:
    """Moore matrix of an F_{q^r}-independent basis of the root space."""
    if t.subfield_rank(betas, t.r) != len(betas):
        raise DependentRows("evaluation points are F_q^r-dependent")
    return moore_matrix(t, betas)


def subfield_subcode(t: Tower, parity: Sequence[Sequence[int]], n: int) -> LinearCode:
    """{c in F_{q^m}^n : parity c = 0} for a parity matrix over F_{q^N}."""
    m = t.m
    rows = []
    for prow in parity:
        coords = [t.subfield_coords(x, m) for x in prow]
        for l in range(t.N // m):
            rows.append([coords[j][l] for j in range(n)])
    return LinearCode.from_parity_check(t, rows, n)


def matrix_csv(t: Tower, mat: Sequence[Sequence[int]]) -> str:
    """Rows of a matrix in power notation, comma separated."""
    return "\n".join(",".join(t.power_text(x) for x in row) for row in mat) + ("\n" if mat else "")


def code_from_json(t: Tower, data: dict) -> SkewCyclicCode:
    coeffs = [c["radix"] if isinstance(c, dict) else c for c in data["G"]]
    G = LinPoly(t, coeffs, t.m)
    return _code_from_minimal(t, G)
