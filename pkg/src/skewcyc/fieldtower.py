"""The field tower F_q <= {F_{q^r}, F_{q^m}} <= F_{q^{rn}}.

Everything lives in the single big field F_{q^N}, N = r*n. An element is a
non-negative int whose radix-q digits are its coordinates on the power
basis 1, x, x^2, ... of ``ext_poly`` (lowest digit first). Enumeration
order of elements is plain integer order. Subfields are carved out by the
Frobenius fixed-point test.

Coordinates over a subfield F_{q^d} use the basis 1, a, ..., a^{N/d-1} of a
fixed primitive element ``a`` (the smallest primitive element in
enumeration order). That basis works for every divisor d at once.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd

from sympy import Poly, isprime, primefactors, symbols

from . import _kernels, linalg
from .errors import (
    DivisibilityViolated,
    NonPrime,
    NotADivisor,
    ROutOfRange,
    UnsupportedSubfield,
)
from .fqpoly import (
    SmallField,
    poly_divmod,
    poly_mul,
    prime_field_base,
    smallest_irreducible,
)

LOG_TABLE_LIMIT = 1 << 20


@dataclass(frozen=True)
class TowerParams:
    """Parameters (p, s, m, r, n) with q = p^s."""

    p: int
    s: int
    m: int
    r: int
    n: int

    @property
    def q(self) -> int:
        return self.p**self.s

    @property
    def N(self) -> int:
        return self.r * self.n

    def validate(self) -> None:
        if not isprime(self.p):
            raise NonPrime(f"p={self.p} is not prime")
        for name in ("s", "m", "r", "n"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be a positive integer")
        if (self.r * self.n) % self.m:
            raise DivisibilityViolated(f"m={self.m} does not divide r*n={self.r * self.n}")
        if not 1 <= self.r <= self.m:
            raise ROutOfRange(f"r={self.r} outside 1..m={self.m}")

    @classmethod
    def from_q(cls, q: int, m: int, r: int, n: int) -> "TowerParams":
        """Build from a prime power q."""
        pf = primefactors(q)
        if len(pf) != 1:
            raise NonPrime(f"q={q} is not a prime power")
        p = pf[0]
        s = 0
        while q > 1:
            q //= p
            s += 1
        return cls(p, s, m, r, n)


class _SubfieldBasis:
    """Coordinate machinery for one subfield degree d."""

    def __init__(self, tower: "Tower", d: int):
        self.d = d
        self.length = tower.N // d
        t = tower
        self.eta = t.pow(t.zeta, (t.order - 1) // (t.q**d - 1))
        eta_pows = [1]
        for _ in range(d - 1):
            eta_pows.append(t.mul(eta_pows[-1], self.eta))
        self.eta_pows = eta_pows
        zeta_pows = [1]
        for _ in range(self.length - 1):
            zeta_pows.append(t.mul(zeta_pows[-1], t.zeta))
        self.zeta_pows = zeta_pows
        # column (i*d + a) is eta^a zeta^i
        cols = [t.mul(ep, zp) for zp in zeta_pows for ep in eta_pows]
        if t.q == 2:
            self.inv_cols = linalg.gf2_inverse_columns(cols, t.N)
            self._chunks = _chunk_tables(eta_pows)
        else:
            F = t.base
            mat = [[0] * t.N for _ in range(t.N)]
            for j, c in enumerate(cols):
                for i, dig in enumerate(t.digits(c)):
                    mat[i][j] = dig
            self.inv_mat = linalg.inverse(F, mat)

    def scalar_coords(self, t: "Tower", e: int) -> list[int]:
        """F_q-coordinates of e on the basis eta^a zeta^i, index i*d + a."""
        if t.q == 2:
            v = _kernels.gf2_apply(e, self.inv_cols)
            return [(v >> k) & 1 for k in range(t.N)]
        return linalg.mat_vec(t.base, self.inv_mat, t.digits(e))

    def coords(self, t: "Tower", e: int) -> list[int]:
        d = self.d
        if t.q == 2:
            v = _kernels.gf2_apply(e, self.inv_cols)
            mask = (1 << d) - 1
            return [_combine(self._chunks, (v >> (i * d)) & mask) for i in range(self.length)]
        v = self.scalar_coords(t, e)
        out = []
        for i in range(self.length):
            acc = 0
            for a in range(d):
                c = v[i * d + a]
                if c:
                    acc = t.add(acc, t.mul(c, self.eta_pows[a]))
            out.append(acc)
        return out


def _chunk_tables(elems: list[int]) -> list[list[int]]:
    """Tables of XOR combinations of elems, eight at a time."""
    tables = []
    for start in range(0, len(elems), 8):
        group = elems[start : start + 8]
        table = [0] * (1 << len(group))
        for mask in range(1, len(table)):
            low = mask & -mask
            table[mask] = table[mask ^ low] ^ group[low.bit_length() - 1]
        tables.append(table)
    return tables


def _combine(tables: list[list[int]], bits: int) -> int:
    out = 0
    for table in tables:
        if not bits:
            break
        out ^= table[bits & 0xFF]
        bits >>= 8
    return out


class Tower:
    """Immutable field tower; build with :func:`build_tower`."""

    def __init__(self, params: TowerParams):
        params.validate()
        self.params = params
        self.p, self.s = params.p, params.s
        self.m, self.r, self.n = params.m, params.r, params.n
        self.q = params.q
        self.N = params.N
        self.order = self.q**self.N
        self.base_poly = prime_field_base(self.p, self.s)
        self.base = SmallField(self.p, self.s, self.base_poly)
        self.ext_poly = tuple(smallest_irreducible(self.base, self.N))
        self.zero, self.one = 0, 1
        self._binary = self.q == 2
        self._log: list[int] | None = None
        self._exp: list[int] | None = None
        self._zech: list[int] | None = None
        if self._binary:
            self._mod = sum(c << i for i, c in enumerate(self.ext_poly))
        elif self.order <= LOG_TABLE_LIMIT:
            self._build_generic_tables()
        self.zeta = self._find_primitive()
        if self._binary:
            self._frob_cols = self._binary_frobenius_columns()
        self._subfield_cache: dict[int, _SubfieldBasis] = {}
        self._normal_cache: dict[int, int] = {}

    # -- pickling: rebuild from params through the cache
    def __reduce__(self):
        return (build_tower, (self.params,))

    def __eq__(self, other) -> bool:
        return isinstance(other, Tower) and other.params == self.params

    def __hash__(self) -> int:
        return hash(self.params)

    def __repr__(self) -> str:
        return f"Tower({self.header()})"

    # ------------------------------------------------------------------
    # digit helpers

    def digits(self, e: int) -> list[int]:
        q = self.q
        out = []
        for _ in range(self.N):
            e, dgt = divmod(e, q)
            out.append(dgt)
        return out

    def from_digits(self, digits) -> int:
        v = 0
        for dgt in reversed(list(digits)):
            v = v * self.q + dgt
        return v

    # ------------------------------------------------------------------
    # arithmetic

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._zech is not None:
            if a == 0:
                return b
            if b == 0:
                return a
            la, lb = self._log[a], self._log[b]
            z = self._zech[(lb - la) % (self.order - 1)]
            return 0 if z < 0 else self._exp[(la + z) % (self.order - 1)]
        return self._add_digits(a, b)

    def _add_digits(self, a: int, b: int) -> int:
        F = self.base
        return self.from_digits(F.add(x, y) for x, y in zip(self.digits(a), self.digits(b)))

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        F = self.base
        return self.from_digits(F.neg(x) for x in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._binary:
            return _kernels.gf2_mulmod(a, b, self._mod, self.N)
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return self._mul_poly(a, b)

    def _mul_poly(self, a: int, b: int) -> int:
        F = self.base
        prod = poly_mul(F, self.digits(a), self.digits(b))
        rem = poly_divmod(F, prod, list(self.ext_poly))[1]
        return self.from_digits(rem + [0] * (self.N - len(rem)))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if e == 0 else 0
        e %= self.order - 1
        if self._binary:
            return _kernels.gf2_powmod(a, e, self._mod, self.N)
        if self._exp is not None:
            return self._exp[self._log[a] * e % (self.order - 1)]
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            from .errors import DivisionByZero

            raise DivisionByZero("inverse of zero")
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frob(self, e: int, j: int) -> int:
        """e^(q^j), with j taken modulo N."""
        j %= self.N
        if j == 0 or e <= 1:
            return e
        if self._binary:
            return _kernels.gf2_apply(e, self._frob_cols[j])
        if self._exp is not None:
            return self._exp[self._log[e] * pow(self.q, j, self.order - 1) % (self.order - 1)]
        return self.pow(e, self.q**j)

    # ------------------------------------------------------------------
    # setup helpers

    def _build_generic_tables(self) -> None:
        Q = self.order
        g = next(x for x in range(2, Q) if self._is_primitive_slow(x)) if Q > 2 else 1
        exp = [1] * (Q - 1)
        for i in range(1, Q - 1):
            exp[i] = self._mul_poly(exp[i - 1], g)
        log = [0] * Q
        for i, v in enumerate(exp):
            log[v] = i
        zech = [0] * (Q - 1)
        for i, v in enumerate(exp):
            w = self._add_digits(1, v)
            zech[i] = -1 if w == 0 else log[w]
        self._exp, self._log, self._zech = exp, log, zech

    def _is_primitive_slow(self, x: int) -> bool:
        Q = self.order
        for f in primefactors(Q - 1):
            y, e, acc = x, (Q - 1) // f, 1
            while e:
                if e & 1:
                    acc = self._mul_poly(acc, y)
                y = self._mul_poly(y, y)
                e >>= 1
            if acc == 1:
                return False
        return True

    def _find_primitive(self) -> int:
        Q = self.order
        if Q == 2:
            return 1
        factors = primefactors(Q - 1)
        for x in range(2, Q):
            if all(self.pow(x, (Q - 1) // f) != 1 for f in factors):
                return x
        raise AssertionError("no primitive element")  # pragma: no cover

    def _binary_frobenius_columns(self) -> list[list[int]]:
        N = self.N
        sq = [self.mul(1 << i, 1 << i) for i in range(N)]
        tables = [[1 << i for i in range(N)], sq]
        for _ in range(2, N):
            prev = tables[-1]
            tables.append([_kernels.gf2_apply(c, sq) for c in prev])
        return tables[:N]

    # ------------------------------------------------------------------
    # subfields

    def _check_divisor(self, d: int) -> None:
        if d < 1 or self.N % d:
            raise NotADivisor(f"d={d} does not divide N={self.N}")

    def in_subfield(self, e: int, d: int) -> bool:
        self._check_divisor(d)
        return self.frob(e, d) == e

    def subfield_basis(self, d: int) -> _SubfieldBasis:
        if d < 1 or self.N % d:
            raise UnsupportedSubfield(f"no basis over F_q^{d} in a field of degree {self.N}")
        sb = self._subfield_cache.get(d)
        if sb is None:
            sb = self._subfield_cache[d] = _SubfieldBasis(self, d)
        return sb

    def subfield_coords(self, e: int, d: int) -> list[int]:
        """Coordinates of e over F_{q^d}: e = sum c_i a^i, c_i in F_{q^d}."""
        return self.subfield_basis(d).coords(self, e)

    def reconstruct(self, coords, d: int) -> int:
        sb = self.subfield_basis(d)
        acc = 0
        for c, zp in zip(coords, sb.zeta_pows):
            if c:
                acc = self.add(acc, self.mul(c, zp))
        return acc

    def scalar_coords(self, e: int, d: int) -> list[int]:
        """F_q-coordinates of e in F_{q^d} on the basis 1, eta, ..., eta^{d-1}."""
        return self.subfield_basis(d).scalar_coords(self, e)[:d]

    def subfield_elements(self, d: int):
        """All elements of F_{q^d}, in a fixed order starting with 0, 1."""
        self._check_divisor(d)
        sb = self.subfield_basis(d)
        if self.q == 2:
            tables = _chunk_tables(sb.eta_pows)
            for v in range(1 << d):
                yield _combine(tables, v)
            return
        for digits in product(range(self.q), repeat=d):
            acc = 0
            for c, ep in zip(reversed(digits), sb.eta_pows):
                if c:
                    acc = self.add(acc, self.mul(c, ep))
            yield acc

    def fq_rank(self, elems) -> int:
        """Dimension over F_q of the span of elems."""
        elems = [e for e in elems if e]
        if self._binary:
            return _kernels.gf2_rank(elems)
        return linalg.rank(self.base, [self.digits(e) for e in elems])

    def subfield_rank(self, elems, d: int) -> int:
        """Dimension over F_{q^d} of the span of elems."""
        if d == 1:
            return self.fq_rank(elems)
        rows = [self.subfield_coords(e, d) for e in elems if e]
        return linalg.rank(self, rows)

    def find_normal_basis(self, d: int = 1) -> int:
        """First element whose Frobenius orbit over F_{q^d} is a basis."""
        self._check_divisor(d)
        cached = self._normal_cache.get(d)
        if cached is not None:
            return cached
        length = self.N // d
        if d == 1 and self.s == 1 and self.N > 1:
            e = self._first_normal_pruned()
        else:
            e = next(e for e in range(1, self.order)
                     if self.subfield_rank([self.frob(e, d * j) for j in range(length)], d) == length)
        self._normal_cache[d] = e
        return e

    def _first_normal_pruned(self) -> int:
        """Smallest normal element over the prime field, in integer order.

        e is normal iff ((x^N - 1)/f)(Frobenius) does not kill e for every
        irreducible factor f of x^N - 1. Each such kernel is a subspace, so a
        digit-by-digit search can drop a whole coset once one kernel holds
        it. A plain scan is hopeless for large N: with a sparse ext_poly all
        small elements can have trace zero.
        """
        p, N, q = self.p, self.N, self.q
        x = symbols("x")
        modulus = Poly(x**N - 1, x, modulus=p)
        maps = []
        for f, _ in modulus.factor_list()[1]:
            g = modulus.quo(f)
            coeffs = [int(c) % p for c in reversed(g.all_coeffs())]
            images = [self._apply_frobenius_poly(coeffs, q**k) for k in range(N)]
            prefix = 0
            while prefix < N and images[prefix] == 0:
                prefix += 1
            maps.append((images, prefix))

        def image(images, c):
            if self._binary:
                return _kernels.gf2_apply(c, images)
            acc = 0
            for k, dgt in enumerate(self.digits(c)):
                if dgt:
                    acc = self.add(acc, self.mul(dgt, images[k]))
            return acc

        def search(c, j):
            for images, prefix in maps:
                if prefix >= j and image(images, c) == 0:
                    return None
            if j == 0:
                return c
            step = q ** (j - 1)
            for t in range(q):
                found = search(c + t * step, j - 1)
                if found is not None:
                    return found
            return None

        found = search(0, N)
        assert found is not None
        return found

    def _apply_frobenius_poly(self, coeffs, e: int) -> int:
        acc = 0
        for i, c in enumerate(coeffs):
            if c:
                acc = self.add(acc, self.mul(c, self.frob(e, i)))
        return acc

    def find_subfield_normal(self, d: int, ext: int) -> int:
        """First element of F_{q^ext} whose orbit under x -> x^(q^d) spans
        F_{q^ext} over F_{q^d}; needs d | ext | N."""
        self._check_divisor(ext)
        if ext % d:
            raise NotADivisor(f"d={d} does not divide {ext}")
        if ext == self.N:
            return self.find_normal_basis(d)
        key = (d, ext)
        cached = self._normal_cache.get(key)
        if cached is not None:
            return cached
        length = ext // d
        for e in self.subfield_elements(ext):
            if not e:
                continue
            orbit = [self.frob(e, d * j) for j in range(length)]
            if self.subfield_rank(orbit, d) == length:
                self._normal_cache[key] = e
                return e
        raise AssertionError("no normal element")  # pragma: no cover

    # ------------------------------------------------------------------
    # text forms

    def _ensure_log(self) -> bool:
        if self._log is not None:
            return True
        if self.order > LOG_TABLE_LIMIT:
            return False
        Q = self.order
        exp = [1] * (Q - 1)
        for i in range(1, Q - 1):
            exp[i] = self.mul(exp[i - 1], self.zeta)
        log = [0] * Q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp, self._log = exp, log
        return True

    def log(self, e: int) -> int | None:
        """Discrete log to base a, or None when no table is kept."""
        if e == 0:
            raise ValueError("log of zero")
        if not self._ensure_log():
            return None
        return self._log[e]

    def power_text(self, e: int) -> str:
        if e == 0:
            return "0"
        k = self.log(e)
        if k is None:
            return str(e)
        if k == 0:
            return "1"
        return "a" if k == 1 else f"a^{k}"

    def parse_element(self, text: str) -> int:
        """Parse "0", "1", "a", "a^k" or a radix integer like "#13" or "13"."""
        t = text.strip().replace(" ", "")
        neg = t.startswith("-")
        if neg:
            t = t[1:]
        m = re.fullmatch(r"(?:a|α|alpha)(?:\^\{?(-?\d+)\}?)?", t)
        if m:
            v = self.pow(self.zeta, int(m.group(1) or 1))
        elif re.fullmatch(r"#?\d+", t):
            v = int(t.lstrip("#"))
            if v >= self.order:
                raise ValueError(f"radix value {v} outside the field")
        else:
            raise ValueError(f"cannot parse field element {text!r}")
        return self.neg(v) if neg else v

    def header(self) -> str:
        bp = ",".join(str(c) for c in self.base_poly)
        ep = ",".join(str(c) for c in self.ext_poly)
        return (f"q={self.p}^{self.s}; m={self.m}; r={self.r}; n={self.n}; "
                f"base_poly={bp}; ext_poly={ep}")

    def element_json(self, e: int) -> dict:
        return {"power": self.power_text(e), "radix": e}


def parse_header(text: str) -> TowerParams:
    """Inverse of :meth:`Tower.header` (polynomials are recomputed, then
    compared, so a header from a different construction is rejected)."""
    fields = dict(part.strip().split("=", 1) for part in text.split(";") if part.strip())
    p, s = (int(x) for x in fields["q"].split("^"))
    params = TowerParams(p, s, int(fields["m"]), int(fields["r"]), int(fields["n"]))
    tower = build_tower(params)
    if "ext_poly" in fields:
        given = tuple(int(c) for c in fields["ext_poly"].split(","))
        if given != tower.ext_poly:
            raise ValueError(f"ext_poly {given} differs from {tower.ext_poly}")
    return params


@lru_cache(maxsize=64)
def build_tower(params: TowerParams) -> Tower:
    """Deterministic tower for ``params`` (cached)."""
    return Tower(params)


def tower(q: int, m: int, r: int, n: int) -> Tower:
    """Shorthand: ``tower(2, 3, 1, 3)`` is F_8 over F_2 with m = n = 3."""
    return build_tower(TowerParams.from_q(q, m, r, n))


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)
