"""Arithmetic in a small field F_q and commutative polynomials over it.

F_q = F_p[y]/(base_poly). An element is an int in 0..q-1 whose radix-p
digits are its coordinates on 1, y, y^2, ... (lowest digit first).

Polynomials are lists of F_q ints, lowest degree first, with no trailing
zeros; the zero polynomial is the empty list. For q = 2 there is an int
fast path where bit i is the coefficient of x^i.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from sympy import factorint, primefactors

from . import _kernels


class SmallField:
    """The field F_q with q = p^s, elements encoded as radix-p ints."""

    def __init__(self, p: int, s: int, base_poly: tuple[int, ...]):
        self.p = p
        self.s = s
        self.q = p**s
        self.base_poly = tuple(base_poly)
        self._log: list[int] | None = None
        self._exp: list[int] | None = None
        if s > 1:
            self._build_tables()

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.s):
            a, d = divmod(a, self.p)
            out.append(d)
        return out

    def _from_digits(self, digits) -> int:
        v = 0
        for d in reversed(digits):
            v = v * self.p + d
        return v

    def _mul_slow(self, a: int, b: int) -> int:
        p, s = self.p, self.s
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * s - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for k in range(len(prod) - 1, s - 1, -1):
            c = prod[k]
            if c:
                for i in range(s + 1):
                    prod[k - s + i] = (prod[k - s + i] - c * self.base_poly[i]) % p
        return self._from_digits(prod[:s])

    def _build_tables(self) -> None:
        q = self.q
        factors = primefactors(q - 1)
        for g in range(2, q):
            # order test by repeated multiplication is cheap for small q
            x, order = g, 1
            while x != 1:
                x = self._mul_slow(x, g)
                order += 1
            if order == q - 1 and all(order % f == 0 for f in factors):
                break
        exp = [1] * (q - 1)
        for i in range(1, q - 1):
            exp[i] = self._mul_slow(exp[i - 1], g)
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp, self._log = exp, log

    def add(self, a: int, b: int) -> int:
        if self.s == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self._from_digits([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def neg(self, a: int) -> int:
        if self.s == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self._from_digits([(-x) % self.p for x in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.s == 1:
            return a * b % self.p
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_q")
        if self.s == 1:
            return pow(a, -1, self.p)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 1 if e == 0 else 0
        result = 1
        e %= self.q - 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result


# ----------------------------------------------------------------------
# dense polynomials over a SmallField


def trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_add(F: SmallField, f, g) -> list[int]:
    n = max(len(f), len(g))
    out = [F.add(f[i] if i < len(f) else 0, g[i] if i < len(g) else 0) for i in range(n)]
    return trim(out)


def poly_sub(F: SmallField, f, g) -> list[int]:
    return poly_add(F, f, [F.neg(c) for c in g])


def poly_mul(F: SmallField, f, g) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(out)


def poly_divmod(F: SmallField, f, g) -> tuple[list[int], list[int]]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    inv_lead = F.inv(g[-1])
    quo = [0] * max(len(r) - dg, 0)
    while len(r) - 1 >= dg and r:
        shift = len(r) - 1 - dg
        c = F.mul(r[-1], inv_lead)
        quo[shift] = c
        for i, b in enumerate(g):
            r[shift + i] = F.sub(r[shift + i], F.mul(c, b))
        trim(r)
    return trim(quo), r


def poly_monic(F: SmallField, f) -> list[int]:
    if not f:
        return []
    inv = F.inv(f[-1])
    return [F.mul(c, inv) for c in f]


def poly_gcd(F: SmallField, f, g) -> list[int]:
    """Monic gcd."""
    f, g = list(f), list(g)
    while g:
        f, g = g, poly_divmod(F, f, g)[1]
    return poly_monic(F, f)


def poly_powmod(F: SmallField, f, e: int, mod) -> list[int]:
    result = [1]
    base = poly_divmod(F, f, mod)[1]
    while e:
        if e & 1:
            result = poly_divmod(F, poly_mul(F, result, base), mod)[1]
        base = poly_divmod(F, poly_mul(F, base, base), mod)[1]
        e >>= 1
    return result


# ----------------------------------------------------------------------
# q = 2 fast path: polynomials as ints


def int_clmul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def int_mod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def int_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, int_mod(a, b)
    return a


def _int_x_power_q_power(k: int, f: int) -> int:
    """x^(2^k) mod f for an int polynomial f over F_2."""
    deg = f.bit_length() - 1
    x = int_mod(2, f)
    for _ in range(k):
        x = _kernels.gf2_mulmod(x, x, f, deg) if deg >= 1 else 0
    return x


def int_is_irreducible(f: int) -> bool:
    """Rabin's test over F_2."""
    deg = f.bit_length() - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    if not f & 1:
        return False
    if _int_x_power_q_power(deg, f) != int_mod(2, f):
        return False
    for pf in primefactors(deg):
        h = _int_x_power_q_power(deg // pf, f) ^ 2
        if int_gcd(f, h) != 1:
            return False
    return True


def is_irreducible(F: SmallField, f) -> bool:
    """Rabin's test: f monic of degree D is irreducible iff x^(q^D) = x mod f
    and gcd(x^(q^(D/l)) - x, f) = 1 for every prime l dividing D."""
    f = list(f)
    deg = len(f) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    if f[0] == 0:
        return False
    x = [0, 1]

    def frob_power(k):
        return poly_powmod(F, x, F.q**k, f)

    if poly_sub(F, frob_power(deg), x) != []:
        return False
    for pf in primefactors(deg):
        if len(poly_gcd(F, f, poly_sub(F, frob_power(deg // pf), x))) > 1:
            return False
    return True


def smallest_irreducible(F: SmallField, deg: int) -> list[int]:
    """Smallest monic irreducible of the given degree.

    Candidates are ordered by the integer sum c_i q^i with c_0 the least
    significant digit; the monic top digit is the same for all of them.
    """
    q = F.q
    if q == 2:
        for low in range(0, 1 << deg):
            f = (1 << deg) | low
            if int_is_irreducible(f):
                return [(f >> i) & 1 for i in range(deg + 1)]
    for low in range(q**deg):
        coeffs = []
        v = low
        for _ in range(deg):
            v, c = divmod(v, q)
            coeffs.append(c)
        f = coeffs + [1]
        if is_irreducible(F, f):
            return f
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@lru_cache(maxsize=None)
def prime_field_base(p: int, s: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree s over F_p, low degree first."""
    prime = SmallField(p, 1, (0, 1))
    return tuple(smallest_irreducible(prime, s))


def multiplicative_order_factors(order: int) -> list[int]:
    return sorted(factorint(order))


def all_monic(F: SmallField, deg: int):
    """All monic polynomials of degree deg (used by brute-force tests)."""
    for low in product(range(F.q), repeat=deg):
        yield list(low) + [1]
