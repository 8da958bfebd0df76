"""q^r-linearized polynomials and their residue ring modulo x^[rn] - x.

A :class:`LinPoly` stores F_0, ..., F_d where F_i is the coefficient of
x^[ir] = x^(q^(ir)). Multiplication ``*`` is the symbolic product
(composition) and calling a polynomial evaluates it.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import BothZero, DivisionByZero, TowerMismatch, ZeroInput
from .fieldtower import Tower

NEG_INF = float("-inf")


class LinPoly:
    """Immutable q^r-polynomial over a subfield of the tower's big field.

    ``field`` is the degree over F_q of the coefficient field (1, m or N).
    It is inferred from the coefficients when not given.
    """

    __slots__ = ("tower", "coeffs", "field")

    def __init__(self, tower: Tower, coeffs: Iterable[int] = (), field: int | None = None,
                 check: bool = False):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.tower = tower
        self.coeffs = tuple(c)
        if field is None:
            field = _smallest_field(tower, self.coeffs)
        elif check and not all(tower.in_subfield(a, field) for a in self.coeffs):
            raise ValueError(f"coefficients are not in F_q^{field}")
        self.field = field

    # -- constructors

    @classmethod
    def x(cls, tower: Tower) -> "LinPoly":
        return cls(tower, (1,), 1)

    @classmethod
    def monomial(cls, tower: Tower, i: int, c: int = 1) -> "LinPoly":
        return cls(tower, [0] * i + [c])

    @classmethod
    def modulus(cls, tower: Tower) -> "LinPoly":
        """x^[rn] - x."""
        return cls(tower, [tower.neg(1)] + [0] * (tower.n - 1) + [1], 1)

    @classmethod
    def zero(cls, tower: Tower) -> "LinPoly":
        return cls(tower, (), 1)

    # -- basic properties

    @property
    def degree(self):
        """q^r-degree; -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        return (isinstance(other, LinPoly) and self.coeffs == other.coeffs
                and self.tower == other.tower)

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"LinPoly({self.text()})"

    # -- ring operations

    def _check(self, other: "LinPoly") -> None:
        if other.tower != self.tower:
            raise TowerMismatch("polynomials over different towers")

    def __add__(self, other: "LinPoly") -> "LinPoly":
        self._check(other)
        t = self.tower
        n = max(len(self.coeffs), len(other.coeffs))
        return LinPoly(t, [t.add(self.coeff(i), other.coeff(i)) for i in range(n)],
                       max(self.field, other.field))

    def __neg__(self) -> "LinPoly":
        t = self.tower
        return LinPoly(t, [t.neg(c) for c in self.coeffs], self.field)

    def __sub__(self, other: "LinPoly") -> "LinPoly":
        self._check(other)
        t = self.tower
        n = max(len(self.coeffs), len(other.coeffs))
        return LinPoly(t, [t.sub(self.coeff(i), other.coeff(i)) for i in range(n)],
                       max(self.field, other.field))

    def __mul__(self, other: "LinPoly") -> "LinPoly":
        return sym_mul(self, other)

    def scale(self, c: int) -> "LinPoly":
        """(c x) composed with self: every coefficient times c."""
        t = self.tower
        return LinPoly(t, [t.mul(c, a) for a in self.coeffs], _join(t, self.field, c))

    def twist(self, c: int) -> "LinPoly":
        """self composed with (c x): F_i becomes F_i c^[ir]."""
        t = self.tower
        r = t.r
        return LinPoly(t, [t.mul(a, t.frob(c, i * r)) for i, a in enumerate(self.coeffs)],
                       _join(t, self.field, c))

    def monic(self) -> "LinPoly":
        if not self.coeffs:
            return self
        return self.scale(self.tower.inv(self.lead))

    def __call__(self, beta: int) -> int:
        return evaluate(self, beta)

    # -- text

    def text(self) -> str:
        t = self.tower
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = f"X^[{i * t.r}]"
            terms.append(mono if c == 1 else f"{t.power_text(c)}*{mono}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> list:
        return [self.tower.element_json(c) for c in self.coeffs]


def _smallest_field(t: Tower, coeffs: Sequence[int]) -> int:
    for d in (1, t.m, t.N):
        if all(t.in_subfield(c, d) for c in coeffs):
            return d
    return t.N  # pragma: no cover


def _join(t: Tower, field: int, c: int) -> int:
    if field == t.N:
        return field
    for d in (field, t.m, t.N):
        if d % field == 0 and t.in_subfield(c, d):
            return d
    return t.N


def parse_linpoly(t: Tower, text: str) -> LinPoly:
    """Parse "X^[2] + a^4*X^[1] + a^6*X^[0]" (exponents are q-powers and must
    be multiples of r)."""
    s = text.replace(" ", "").replace("−", "-")
    if s in ("", "0"):
        return LinPoly.zero(t)
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, int] = {}
    for sign, body in re.findall(r"([+-])([^+-]+)", s):
        m = re.fullmatch(r"(?:(.+?)\*?)?[Xx](?:\^\[(\d+)\])?", body)
        if not m:
            raise ValueError(f"cannot parse term {body!r}")
        c = t.parse_element(m.group(1)) if m.group(1) else 1
        k = int(m.group(2) or 0)
        if k % t.r:
            raise ValueError(f"exponent [{k}] is not a multiple of r={t.r}")
        if sign == "-":
            c = t.neg(c)
        i = k // t.r
        coeffs[i] = t.add(coeffs.get(i, 0), c)
    top = max(coeffs)
    return LinPoly(t, [coeffs.get(i, 0) for i in range(top + 1)])


# ----------------------------------------------------------------------
# ring operations


def sym_mul(F: LinPoly, G: LinPoly) -> LinPoly:
    """Symbolic product: (F*G)_k = sum over i+j=k of F_i G_j^[ir]."""
    F._check(G)
    t = F.tower
    if not F.coeffs or not G.coeffs:
        return LinPoly.zero(t)
    r = t.r
    out = [0] * (len(F.coeffs) + len(G.coeffs) - 1)
    for i, a in enumerate(F.coeffs):
        if not a:
            continue
        for j, b in enumerate(G.coeffs):
            if b:
                out[i + j] = t.add(out[i + j], t.mul(a, t.frob(b, i * r)))
    return LinPoly(t, out, max(F.field, G.field))


def evaluate(F: LinPoly, beta: int) -> int:
    """F(beta) = sum F_i beta^[ir]."""
    t = F.tower
    acc = 0
    for i, a in enumerate(F.coeffs):
        if a:
            acc = t.add(acc, t.mul(a, t.frob(beta, i * t.r)))
    return acc


def right_divmod(F: LinPoly, G: LinPoly) -> tuple[LinPoly, LinPoly]:
    """Q, R with F = Q*G + R and deg R < deg G."""
    F._check(G)
    if G.is_zero():
        raise DivisionByZero("right division by the zero polynomial")
    t = F.tower
    r = t.r
    rem = list(F.coeffs)
    e = len(G.coeffs) - 1
    quo = [0] * max(len(rem) - e, 0)
    for d in range(len(rem) - 1, e - 1, -1):
        c_top = rem[d]
        if not c_top:
            continue
        shift = d - e
        c = t.div(c_top, t.frob(G.coeffs[e], shift * r))
        quo[shift] = c
        for j, b in enumerate(G.coeffs):
            if b:
                rem[j + shift] = t.sub(rem[j + shift], t.mul(c, t.frob(b, shift * r)))
    field = max(F.field, G.field)
    return LinPoly(t, quo, field), LinPoly(t, rem[:e], field)


def left_divmod(F: LinPoly, G: LinPoly) -> tuple[LinPoly, LinPoly]:
    """Q, R with F = G*Q + R and deg R < deg G."""
    F._check(G)
    if G.is_zero():
        raise DivisionByZero("left division by the zero polynomial")
    t = F.tower
    r = t.r
    rem = list(F.coeffs)
    e = len(G.coeffs) - 1
    quo = [0] * max(len(rem) - e, 0)
    for d in range(len(rem) - 1, e - 1, -1):
        c_top = rem[d]
        if not c_top:
            continue
        shift = d - e
        # G_e c^[er] = c_top
        c = t.frob(t.div(c_top, G.coeffs[e]), -e * r)
        quo[shift] = c
        for i, g in enumerate(G.coeffs):
            if g:
                rem[i + shift] = t.sub(rem[i + shift], t.mul(g, t.frob(c, i * r)))
    field = max(F.field, G.field)
    return LinPoly(t, quo, field), LinPoly(t, rem[:e], field)


def _euclid(F: LinPoly, G: LinPoly, right: bool):
    """Extended Euclid. Returns (D, A, B, U, V) with D the last nonzero
    remainder and U, V the cofactors of the final zero remainder."""
    t = F.tower
    one, zero = LinPoly.x(t), LinPoly.zero(t)
    r0, r1 = F, G
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero():
        if right:
            q, rem = right_divmod(r0, r1)
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        else:
            q, rem = left_divmod(r0, r1)
            s0, s1 = s1, s0 - s1 * q
            t0, t1 = t1, t0 - t1 * q
        r0, r1 = r1, rem
    return r0, s0, t0, s1, t1


def right_xgcd(F: LinPoly, G: LinPoly) -> tuple[LinPoly, LinPoly, LinPoly]:
    """Monic right gcd D with cofactors: D = A*F + B*G."""
    F._check(G)
    if F.is_zero() and G.is_zero():
        raise BothZero("gcd of two zero polynomials")
    D, A, B, _, _ = _euclid(F, G, right=True)
    c = F.tower.inv(D.lead)
    return D.scale(c), A.scale(c), B.scale(c)


def left_xgcd(F: LinPoly, G: LinPoly) -> tuple[LinPoly, LinPoly, LinPoly]:
    """Monic left gcd D with cofactors: D = F*A + G*B."""
    F._check(G)
    if F.is_zero() and G.is_zero():
        raise BothZero("gcd of two zero polynomials")
    D, A, B, _, _ = _euclid(F, G, right=False)
    t = F.tower
    # D * (c x) has leading coefficient D_d c^[dr]
    c = t.frob(t.inv(D.lead), -D.degree * t.r)
    return D.twist(c), A.twist(c), B.twist(c)


def right_gcd(*polys: LinPoly) -> LinPoly:
    """Monic right gcd of any number of polynomials (not all zero)."""
    nonzero = [P for P in polys if not P.is_zero()]
    if not nonzero:
        raise BothZero("gcd of zero polynomials")
    D = nonzero[0].monic()
    for P in nonzero[1:]:
        D = right_xgcd(D, P)[0]
    return D


def right_lcm(F: LinPoly, G: LinPoly) -> LinPoly:
    """Monic least common left multiple: F and G both right-divide it."""
    F._check(G)
    if F.is_zero() or G.is_zero():
        raise ZeroInput("lcm with a zero polynomial")
    D, _, _, U, _ = _euclid(F, G, right=True)
    M = (U * F).monic()
    assert M.degree == F.degree + G.degree - D.degree
    return M


# ----------------------------------------------------------------------
# residue ring modulo x^[rn] - x


class ResidueClass:
    """Class of a q^r-polynomial modulo x^[rn] - x, as n coefficients."""

    __slots__ = ("tower", "coeffs")

    def __init__(self, tower: Tower, coeffs: Sequence[int]):
        if len(coeffs) != tower.n:
            raise ValueError(f"expected {tower.n} coefficients, got {len(coeffs)}")
        self.tower = tower
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, tower: Tower) -> "ResidueClass":
        return cls(tower, [0] * tower.n)

    def to_linpoly(self) -> LinPoly:
        return LinPoly(self.tower, self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ResidueClass) and self.coeffs == other.coeffs
                and self.tower == other.tower)

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"ResidueClass({self.to_linpoly().text()})"

    def __add__(self, other: "ResidueClass") -> "ResidueClass":
        t = self.tower
        return ResidueClass(t, [t.add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "ResidueClass") -> "ResidueClass":
        t = self.tower
        return ResidueClass(t, [t.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: "ResidueClass") -> "ResidueClass":
        return residue_reduce(self.to_linpoly() * other.to_linpoly())


def residue_reduce(F: LinPoly) -> ResidueClass:
    """Fold x^[ir] onto x^[(i mod n) r]; coefficients move unchanged."""
    t = F.tower
    out = [0] * t.n
    for i, c in enumerate(F.coeffs):
        if c:
            out[i % t.n] = t.add(out[i % t.n], c)
    return ResidueClass(t, out)


def gamma_r(t: Tower, vec: Sequence[int]) -> ResidueClass:
    """(F_0, ..., F_{n-1}) -> F_0 x + F_1 x^[r] + ... + F_{n-1} x^[(n-1)r]."""
    return ResidueClass(t, vec)


def gamma_r_inverse(F: ResidueClass) -> tuple[int, ...]:
    return F.coeffs
