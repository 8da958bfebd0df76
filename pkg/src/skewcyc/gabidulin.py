"""Generalized Gabidulin codes and rank-BCH codes built from cyclotomic
spaces."""

from __future__ import annotations

from math import gcd
from typing import Sequence

from .errors import DependentChain, DependentEvaluationPoints, ParameterViolation
from .fieldtower import Tower
from .rootspace import cyclotomic_space, sum_spaces, zero_subspace
from .skewcode import LinearCode, SkewCyclicCode, code_from_generator, is_skew_cyclic, rho_inverse


def gabidulin_parity_check(t: Tower, betas: Sequence[int], k: int) -> list[list[int]]:
    """(n-k) x n Moore matrix with rows beta_j^[ir], 0 <= i < n-k."""
    n = len(betas)
    return [[t.frob(b, i * t.r) for b in betas] for i in range(n - k)]


def gabidulin_code(t: Tower, betas: Sequence[int], k: int) -> LinearCode:
    """Gab_{k,r}(beta): the kernel over F_{q^m} of the Moore parity check."""
    n = len(betas)
    if n > t.m:
        raise ParameterViolation(f"length {n} exceeds m = {t.m}")
    if gcd(t.r, t.m) != 1:
        raise ParameterViolation(f"gcd(r, m) = {gcd(t.r, t.m)} must be 1")
    if not 1 <= k <= n:
        raise ParameterViolation(f"k = {k} outside 1..{n}")
    if not all(t.in_subfield(b, t.m) for b in betas):
        raise ParameterViolation("evaluation points must lie in F_q^m")
    if t.fq_rank(betas) != n:
        raise DependentEvaluationPoints("evaluation points are F_q-dependent")
    code = LinearCode.from_parity_check(t, gabidulin_parity_check(t, betas, k), n)
    assert code.k == k
    return code


def gabidulin_as_skew(t: Tower, code: LinearCode) -> SkewCyclicCode | None:
    """The same code as a SkewCyclicCode when m = n and it is shift closed."""
    if t.m != t.n or code.n != t.n or not is_skew_cyclic(t, code):
        return None
    C = code_from_generator(t, [list(r) for r in code.rows]) if code.rows else None
    if C is None or C.k != code.k:  # pragma: no cover
        return None
    return C


def bch_root_space(t: Tower, alpha: int, delta: int):
    """C(alpha) + C(alpha^[r]) + ... + C(alpha^[(delta-2)r])."""
    T = zero_subspace(t)
    for i in range(delta - 1):
        T = sum_spaces(T, cyclotomic_space(t, t.frob(alpha, i * t.r)))
    return T


def rank_bch_code(t: Tower, alpha: int, delta: int) -> SkewCyclicCode:
    """Rank-BCH code of designed distance delta from alpha."""
    if not 1 <= delta <= t.m:
        raise ParameterViolation(f"delta = {delta} outside 1..{t.m}")
    chain = [t.frob(alpha, i * t.r) for i in range(delta - 1)]
    if t.subfield_rank(chain, t.r) != len(chain):
        raise DependentChain("alpha, alpha^[r], ... are F_q^r-dependent")
    return rho_inverse(bch_root_space(t, alpha, delta))


def independence_lift_check(t: Tower, elems: Sequence[int]) -> bool:
    """F_q-independent elements of F_{q^n} stay F_{q^r}-independent in
    F_{q^rn} when gcd(r, n) = 1. Vacuously true if they are dependent."""
    if gcd(t.r, t.n) != 1:
        raise ParameterViolation(f"gcd(r, n) = {gcd(t.r, t.n)} must be 1")
    if not all(t.in_subfield(e, t.n) for e in elems):
        raise ParameterViolation("elements must lie in F_q^n")
    if t.fq_rank(elems) != len(elems):
        return True
    return t.subfield_rank(elems, t.r) == len(elems)


def bch_equals_gabidulin_check(t: Tower, alpha: int, delta: int) -> bool:
    """Rank-BCH code from a normal alpha equals Gab_{n-delta+1,r}(alpha, alpha^[r], ...)."""
    n = t.n
    if t.m != n or gcd(t.r, n) != 1:
        raise ParameterViolation("needs m = n and gcd(r, n) = 1")
    orbit = [t.frob(alpha, i) for i in range(n)]
    if not t.in_subfield(alpha, t.m) or t.fq_rank(orbit) != n:
        raise ParameterViolation("alpha must generate a normal basis of F_q^m")
    betas = [t.frob(alpha, i * t.r) for i in range(n)]
    assert independence_lift_check(t, betas)
    bch = rank_bch_code(t, alpha, delta).as_linear()
    gab = gabidulin_code(t, betas, n - delta + 1)
    return bch == gab
