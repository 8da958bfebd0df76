"""Lattice of skew cyclic codes, complementaries, idempotent generators
and the rank equivalences phi_a."""

from __future__ import annotations

from .errors import NotCoprimeBothSides, TowerMismatch
from .fieldtower import Tower
from .linpoly import LinPoly, ResidueClass, left_xgcd, residue_reduce, right_gcd, right_lcm, right_xgcd
from .skewcode import SkewCyclicCode, _code_from_minimal


def _same_tower(C1: SkewCyclicCode, C2: SkewCyclicCode) -> Tower:
    if C1.tower != C2.tower:
        raise TowerMismatch("codes over different towers")
    return C1.tower


def meet(C1: SkewCyclicCode, C2: SkewCyclicCode) -> SkewCyclicCode:
    """Intersection: generated by the right lcm of the minimal generators."""
    t = _same_tower(C1, C2)
    M = right_lcm(C1.G, C2.G)
    return _code_from_minimal(t, LinPoly(t, M.coeffs, t.m))


def join(C1: SkewCyclicCode, C2: SkewCyclicCode) -> SkewCyclicCode:
    """Sum: generated by the right gcd of the minimal generators."""
    t = _same_tower(C1, C2)
    D = right_gcd(C1.G, C2.G)
    return _code_from_minimal(t, LinPoly(t, D.coeffs, t.m))


def are_complementary(C1: SkewCyclicCode, C2: SkewCyclicCode) -> bool:
    """G1, G2 right coprime with degrees adding up to n."""
    t = _same_tower(C1, C2)
    coprime = right_gcd(C1.G, C2.G) == LinPoly.x(t)
    verdict = coprime and C1.G.degree + C2.G.degree == t.n
    direct = meet(C1, C2).k == 0 and join(C1, C2).k == t.n
    assert verdict == direct, "complementarity criteria disagree"
    return verdict


def idempotent_generator(C: SkewCyclicCode) -> ResidueClass:
    """Idempotent generator from the two Bezout identities
    x = G*G1 + H*H1 = G2*G + H2*H.

    E = x - H2*H and E' = x - H*H1 must coincide.
    """
    t = C.tower
    G, H = C.G, C.H
    x = LinPoly.x(t)
    if C.k == t.n:
        return residue_reduce(x)
    if C.k == 0:
        return ResidueClass.zero(t)
    Dr, G2, H2 = right_xgcd(G, H)
    Dl, G1, H1 = left_xgcd(G, H)
    if Dr != x or Dl != x:
        raise NotCoprimeBothSides(
            f"G and H have right gcd {Dr.text()} and left gcd {Dl.text()}")
    E = residue_reduce(x - H2 * H)
    E2 = residue_reduce(x - H * H1)
    assert E == E2, "the two idempotent constructions disagree"
    assert E * E == E, "E is not idempotent"
    return E


def complement(C: SkewCyclicCode) -> SkewCyclicCode:
    """The complementary code (x - E) for the idempotent E of C."""
    from .skewcode import code_from_generator

    E = idempotent_generator(C)
    x = residue_reduce(LinPoly.x(C.tower))
    return code_from_generator(C.tower, x - E)


def phi_a(F: ResidueClass, a: int) -> ResidueClass:
    """x^[rn-a] * F * x^[a]: every coefficient raised to q^(rn-a)."""
    t = F.tower
    a %= t.N
    return ResidueClass(t, [t.frob(c, t.N - a) for c in F.coeffs])


def phi_a_code(C: SkewCyclicCode, a: int) -> SkewCyclicCode:
    """Image of a code under phi_a (again a skew cyclic code)."""
    from .skewcode import code_from_generator

    return code_from_generator(C.tower, phi_a(residue_reduce(C.G), a))


def enumerate_codes(t: Tower, max_size: int = 64) -> list[SkewCyclicCode]:
    """Every skew cyclic code of the tower, ordered by root-space size.

    Root spaces are sums of cyclotomic spaces, so a BFS over sums finds
    them all; it stops with LatticeTooLarge once max_size is exceeded.
    """
    from collections import deque

    from .errors import LatticeTooLarge
    from .rootspace import cyclotomic_space, sum_spaces, zero_subspace
    from .skewcode import rho_inverse

    if t.order > 1 << 16:
        raise LatticeTooLarge(f"field of order {t.order} is too large to enumerate")
    cyclos, covered = {}, set()
    for beta in range(1, t.order):
        if beta in covered:
            continue
        K = cyclotomic_space(t, beta)
        if K.rows not in cyclos:
            cyclos[K.rows] = K
            covered.update(K.elements())
    start = zero_subspace(t)
    seen = {start.rows: start}
    queue = deque([start])
    while queue:
        S = queue.popleft()
        for K in cyclos.values():
            U = sum_spaces(S, K)
            if U.rows not in seen:
                seen[U.rows] = U
                if len(seen) > max_size:
                    raise LatticeTooLarge(f"more than {max_size} codes")
                queue.append(U)
    spaces = sorted(seen.values(), key=lambda S: (S.dim, S.rows))
    return [rho_inverse(S) for S in spaces]
