"""Classical cyclic codes over F_q and their images in the rank metric.

With m = n, gcd(n, r) = 1 and a normal element alpha of F_{q^n}, the map
E(c) = (c_0 alpha, c_1 alpha^[r], ..., c_{n-1} alpha^[(n-1)r]) turns
Hamming weight into rank weight and cyclic shifts into q^r-shifts.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Iterator, Sequence

from . import linalg
from .errors import ParameterViolation
from .fieldtower import Tower
from .fqpoly import SmallField, poly_divmod, poly_gcd, poly_monic, poly_mul, prime_field_base, trim
from .linpoly import LinPoly, ResidueClass
from .skewcode import (
    LinearCode,
    SkewCyclicCode,
    code_from_generator,
    is_skew_cyclic,
    sigma_shift,
)


def _prime_power(q: int) -> tuple[int, int]:
    from sympy import factorint

    f = factorint(q)
    if len(f) != 1:
        raise ParameterViolation(f"q = {q} is not a prime power")
    (p, s), = f.items()
    return p, s


def small_field(q: int) -> SmallField:
    p, s = _prime_power(q)
    return SmallField(p, s, prime_field_base(p, s))


def _x_n_minus_1(F: SmallField, n: int) -> list[int]:
    return [F.neg(1)] + [0] * (n - 1) + [1]


# ----------------------------------------------------------------------
# classical cyclic codes


@dataclass(frozen=True)
class ClassicCyclicCode:
    """Cyclic code over F_q of length n with monic generator g | x^n - 1."""

    q: int
    n: int
    g: tuple[int, ...]

    @property
    def field(self) -> SmallField:
        return small_field(self.q)

    @property
    def k(self) -> int:
        return self.n - (len(self.g) - 1)

    def generator_matrix(self) -> list[list[int]]:
        """Rows (g_0, ..., g_{n-k}, 0, ...) and its cyclic shifts."""
        rows = []
        for i in range(self.k):
            row = [0] * self.n
            for j, c in enumerate(self.g):
                row[i + j] = c
            rows.append(row)
        return rows

    def codewords(self) -> Iterator[tuple[int, ...]]:
        F = self.field
        rows = self.generator_matrix()
        for msg in product(range(self.q), repeat=self.k):
            out = [0] * self.n
            for u, row in zip(msg, rows):
                if u:
                    out = [F.add(a, F.mul(u, b)) for a, b in zip(out, row)]
            yield tuple(out)

    def min_hamming_distance(self) -> int | None:
        weights = [hamming_weight(c) for c in self.codewords() if any(c)]
        return min(weights) if weights else None

    def to_json(self) -> dict:
        return {"q": self.q, "n": self.n, "g": list(self.g), "k": self.k}


def hamming_weight(c: Sequence[int]) -> int:
    return sum(1 for x in c if x)


def classic_cyclic(q: int, n: int, gen: Sequence[int]) -> ClassicCyclicCode:
    """Cyclic code generated by gen: g = monic gcd(gen, x^n - 1)."""
    F = small_field(q)
    mod = _x_n_minus_1(F, n)
    gen = trim([c % q for c in gen]) if F.s == 1 else trim(list(gen))
    g = mod if not gen else poly_gcd(F, gen, mod)
    g = poly_monic(F, g)
    _, rem = poly_divmod(F, mod, g)
    assert not rem, "generator must divide x^n - 1"
    return ClassicCyclicCode(q, n, tuple(g))


def all_classic_cyclic(q: int, n: int) -> list[ClassicCyclicCode]:
    """Every cyclic code of length n over F_q (one per monic divisor)."""
    F = small_field(q)
    mod = _x_n_minus_1(F, n)
    seen = {}
    for deg in range(n + 1):
        for tail in product(range(q), repeat=deg):
            g = list(tail) + [1]
            if not poly_divmod(F, mod, g)[1]:
                seen[tuple(g)] = ClassicCyclicCode(q, n, tuple(g))
    return list(seen.values())


def cyclic_shift(c: Sequence[int]) -> tuple[int, ...]:
    return (c[-1], *c[:-1]) if c else ()


# ----------------------------------------------------------------------
# the maps E and L


def _check_bridge(t: Tower) -> None:
    if t.m != t.n:
        raise ParameterViolation(f"needs m = n (got m = {t.m}, n = {t.n})")
    if gcd(t.n, t.r) != 1:
        raise ParameterViolation(f"needs gcd(n, r) = 1 (got {gcd(t.n, t.r)})")


def default_alpha(t: Tower) -> int:
    """Normal element of F_{q^n} over F_q used for E."""
    return t.find_subfield_normal(1, t.m)


def _twisted_basis(t: Tower, alpha: int | None) -> list[int]:
    _check_bridge(t)
    alpha = default_alpha(t) if alpha is None else alpha
    if t.fq_rank([t.frob(alpha, i) for i in range(t.n)]) != t.n or not t.in_subfield(alpha, t.m):
        raise ParameterViolation("alpha must generate a normal basis of F_q^n")
    return [t.frob(alpha, i * t.r) for i in range(t.n)]


def E_map(t: Tower, c: Sequence[int], alpha: int | None = None) -> tuple[int, ...]:
    """(c_0 alpha, c_1 alpha^[r], ..., c_{n-1} alpha^[(n-1)r])."""
    basis = _twisted_basis(t, alpha)
    if len(c) != t.n:
        raise ParameterViolation(f"expected length {t.n}")
    return tuple(t.mul(x, a) if x else 0 for x, a in zip(c, basis))


def L_map(t: Tower, f: Sequence[int]) -> ResidueClass:
    """f_0 + f_1 x + ... -> f_0 x + f_1 x^[r] + ... (f reduced mod x^n - 1)."""
    out = [0] * t.n
    for i, c in enumerate(f):
        if c:
            out[i % t.n] = t.add(out[i % t.n], c)
    return ResidueClass(t, out)


def E_op(t: Tower, g: Sequence[int], alpha: int | None = None) -> ResidueClass:
    """g_0 + g_1 x + ... -> g_0 alpha x + g_1 alpha^[r] x^[r] + ..."""
    basis = _twisted_basis(t, alpha)
    folded = L_map(t, g).coeffs
    return ResidueClass(t, [t.mul(c, a) if c else 0 for c, a in zip(folded, basis)])


def classic_mul(q: int, n: int, f: Sequence[int], g: Sequence[int]) -> list[int]:
    """f*g in F_q[x]/(x^n - 1), as a length-n coefficient list."""
    F = small_field(q)
    prod = poly_mul(F, trim(list(f)), trim(list(g)))
    out = [0] * n
    for i, c in enumerate(prod):
        out[i % n] = F.add(out[i % n], c)
    return out


# ----------------------------------------------------------------------
# F_q-left ideals


@dataclass(frozen=True)
class FqLeftIdealCode:
    """F_q-linear q^r-cyclic code in F_{q^m}^n, stored as an F_q-RREF basis
    of the coordinate expansions (n blocks of m coordinates)."""

    tower: Tower
    gens: tuple[ResidueClass, ...]
    basis: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self) -> list[tuple[int, ...]]:
        return [_collapse(self.tower, row) for row in self.basis]

    def contains(self, v: Sequence[int]) -> bool:
        t = self.tower
        row = _expand(t, v)
        if not any(row):
            return True
        return linalg.rank(t, [list(b) for b in self.basis] + [row]) == self.dim

    def codewords(self) -> Iterator[tuple[int, ...]]:
        t = self.tower
        vecs = self.vectors()
        for combo in product(range(t.q), repeat=self.dim):
            out = [0] * t.n
            for u, v in zip(combo, vecs):
                if u:
                    out = [t.add(a, t.mul(u, b)) for a, b in zip(out, v)]
            yield tuple(out)

    def is_closed(self) -> bool:
        """Closed under F -> x^[r] * F (basis shifts stay inside)."""
        return all(self.contains(sigma_shift(self.tower, v)) for v in self.vectors())


def _expand(t: Tower, v: Sequence[int]) -> list[int]:
    out = []
    for x in v:
        out.extend(t.scalar_coords(x, t.m))
    return out


def _collapse(t: Tower, row: Sequence[int]) -> tuple[int, ...]:
    m = t.m
    eta = t.subfield_basis(m).eta_pows
    out = []
    for j in range(t.n):
        acc = 0
        for c, e in zip(row[j * m:(j + 1) * m], eta):
            if c:
                acc = t.add(acc, t.mul(c, e))
        out.append(acc)
    return tuple(out)


def fq_ideal_span(t: Tower, gens: Sequence) -> FqLeftIdealCode:
    """F_q-span of x^[jr] * G_i for 0 <= j < n over all generators."""
    gens = tuple(g if isinstance(g, ResidueClass) else ResidueClass(t, list(g)) for g in gens)
    rows = []
    for G in gens:
        v = G.coeffs
        for _ in range(t.n):
            rows.append(_expand(t, v))
            v = sigma_shift(t, v)
    red, _ = linalg.rref(t, [r for r in rows if any(r)], t.n * t.m)
    code = FqLeftIdealCode(t, gens, tuple(tuple(r) for r in red))
    assert code.dim <= len(gens) * t.n
    return code


def weight_distribution(words, weight) -> dict[int, int]:
    return dict(sorted(Counter(weight(w) for w in words).items()))


def weight_distribution_csv(dist: dict[int, int]) -> str:
    return "weight,count\n" + "".join(f"{w},{c}\n" for w, c in dist.items())


def cyclic_to_skew(t: Tower, C: ClassicCyclicCode, alpha: int | None = None) -> FqLeftIdealCode:
    """E(C) as the principal F_q-left ideal generated by E(g).

    Checks that the ideal equals E applied to a basis of C, that it is
    q^r-cyclic, and that Hamming weights of C match rank weights of E(C).
    """
    from .bounds import rank_weight

    _check_bridge(t)
    if C.q != t.q or C.n != t.n:
        raise ParameterViolation("code and tower disagree on q or n")
    g = [0] * t.n if C.k == 0 else list(C.g)
    ideal = fq_ideal_span(t, [E_op(t, g, alpha)])
    images = [E_map(t, row, alpha) for row in C.generator_matrix()]
    direct, _ = linalg.rref(t, [_expand(t, v) for v in images], t.n * t.m)
    assert tuple(tuple(r) for r in direct) == ideal.basis, "E([g]) differs from (E(g))_Fq"
    image_set = {E_map(t, c, alpha) for c in C.codewords()}
    assert is_skew_cyclic(t, image_set), "E(C) is not q^r-cyclic"
    ham = weight_distribution(C.codewords(), hamming_weight)
    rank = weight_distribution(image_set, lambda v: rank_weight(t, v))
    assert ham == rank, "weight distributions differ"
    return ideal


def hat_code(t: Tower, C: ClassicCyclicCode, alpha: int | None = None) -> SkewCyclicCode:
    """The F_{q^n}-span of E(C); its minimal generator is monic E(g)."""
    _check_bridge(t)
    if C.k == 0:
        return code_from_generator(t, [ResidueClass.zero(t)])
    span = LinearCode.from_rows(t, [E_map(t, row, alpha) for row in C.generator_matrix()], t.n)
    Eg = E_op(t, list(C.g), alpha).to_linpoly()
    skew = code_from_generator(t, Eg)
    assert skew.G == LinPoly(t, Eg.monic().coeffs, t.m), "minimal generator is not monic E(g)"
    assert skew.k == C.k, "dimension changed"
    assert skew.as_linear() == span, "span of E(C) differs from (E(g))"
    return skew
