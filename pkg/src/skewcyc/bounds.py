"""Rank weight, brute-force minimum rank distance and the BCH,
Hartmann-Tzeng and shift lower bounds with re-checkable certificates.

A BCH or HT certificate (alpha, c, delta, s) only bounds d_R when the
smallest root space containing T and every alpha^[ir] is the whole field;
otherwise a codeword may vanish on the entire Frobenius orbit of alpha.
For a normal alpha this always holds. The verifier enforces it.

The shift bound is reported as the minimum, over all root spaces S that
contain T and are not the whole field, of the best independent sequence
found for S (a codeword F has Z(F) = S for one of them). When the root
spaces above T cannot be enumerated the value falls back to the HT value
and ``exhaustive`` is False.
"""

from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from math import gcd
from typing import NamedTuple, Sequence

from . import linalg
from .errors import CertificateInvalid, EnumerationTooLarge
from .fieldtower import Tower, TowerParams, build_tower
from .rootspace import (
    Subspace,
    contains,
    cyclotomic_space,
    frobenius_image,
    frobenius_preimage,
    intersect,
    is_subspace_of,
    span,
    subspace_polynomial,
    sum_spaces,
    zero_subspace,
)

DEFAULT_NODE_BUDGET = 10**5
DEFAULT_ALPHA_BUDGET = 1 << 12
SMALL_FIELD_POOL = 256
SUPERSET_FIELD_CAP = 1 << 10


# ----------------------------------------------------------------------
# rank weight and brute force


def rank_weight(t: Tower, v: Sequence[int]) -> int:
    """dim over F_q of the span of the entries of v.

    Computed as the F_q-rank of the entries and as the rank of the m x n
    coordinate expansion over the basis of F_{q^m}; both must agree.
    """
    direct = t.fq_rank([x for x in v if x])
    cols = [t.scalar_coords(x, t.m) for x in v]
    expansion = [[col[a] for col in cols] for a in range(t.m)]
    via_matrix = linalg.rank(t, expansion) if any(v) else 0
    assert direct == via_matrix, "rank weight formulas disagree"
    return direct


def _generator_rows(code) -> list[list[int]]:
    from .skewcode import SkewCyclicCode

    if isinstance(code, SkewCyclicCode):
        return code.generator_matrix()
    return [list(r) for r in code.rows]


def _partial_min(args) -> int:
    params, rows, n, first_values = args
    t = build_tower(params)
    scalars = list(t.subfield_elements(t.m))
    best = n + 1
    rest = rows[1:]
    for u0 in first_values:
        base = [t.mul(u0, c) if u0 else 0 for c in rows[0]]
        for msg in product(scalars, repeat=len(rest)):
            out = list(base)
            for u, row in zip(msg, rest):
                if u:
                    for j, c in enumerate(row):
                        if c:
                            out[j] = t.add(out[j], t.mul(u, c))
            if any(out):
                w = t.fq_rank(out)
                if w < best:
                    best = w
                    if best == 1:
                        return 1
    return best


def min_rank_distance(code, cap: int = 1 << 20, jobs: int = 1) -> int | None:
    """Exact d_R by enumerating all q^(mk) messages.

    Returns None for the zero code. ``jobs`` > 1 splits the messages by
    their first coordinate across worker processes; the answer is the
    minimum of the partial minima.
    """
    t = code.tower
    rows = _generator_rows(code)
    k, n = len(rows), len(rows[0]) if rows else t.n
    if k == 0:
        return None
    size = t.q ** (t.m * k)
    if size - 1 > cap:
        raise EnumerationTooLarge(size, cap)
    scalars = list(t.subfield_elements(t.m))
    if jobs <= 1:
        return _partial_min((t.params, rows, n, scalars))
    jobs = min(jobs, len(scalars), os.cpu_count() or 1)
    chunks = [scalars[i::jobs] for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_partial_min, [(t.params, rows, n, ch) for ch in chunks])
        return min(parts)


# ----------------------------------------------------------------------
# certificates


class Verification(NamedTuple):
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class HTCertificate:
    alpha: int
    c: int
    delta: int
    s: int

    @property
    def value(self) -> int:
        return self.delta + self.s

    def exponents(self) -> list[int]:
        """Exponents i + jc (in units of r) of the set A."""
        return [i + j * self.c for j in range(self.s + 1) for i in range(self.delta - 1)]

    def to_json(self, t: Tower) -> dict:
        return {"alpha": t.element_json(self.alpha), "c": self.c, "delta": self.delta, "s": self.s}

    @classmethod
    def from_json(cls, t: Tower, data: dict) -> "HTCertificate":
        a = data["alpha"]
        if isinstance(a, dict):
            a = a["radix"]
        elif isinstance(a, str):
            a = t.parse_element(a)
        return cls(int(a), int(data["c"]), int(data["delta"]), int(data["s"]))


def orbit_closure_is_full(T: Subspace, alpha: int) -> bool:
    """Whether T together with all alpha^[ir] generates the whole field as a
    root space. Root spaces are the F_{q^r}-spaces stable under x -> x^[m],
    so the closure is spanned by T and the alpha^[jg], g = gcd(r, m)."""
    t = T.tower
    g = gcd(t.r, t.m)
    orbit = [t.frob(alpha, j * g) for j in range(t.N // g)]
    return span(t, list(T.basis) + orbit, T.d).is_full()


def verify_ht_certificate(cert: HTCertificate, T: Subspace) -> Verification:
    """Re-check every hypothesis of the HT bound using only T and cert."""
    t = T.tower
    n, m, r = t.n, t.m, t.r
    if cert.c <= 0 or cert.delta <= 0 or cert.s < 0:
        return Verification(False, "need c > 0, delta > 0, s >= 0")
    if cert.delta + cert.s > min(m, n):
        return Verification(False, f"delta + s = {cert.value} exceeds min(m, n) = {min(m, n)}")
    if gcd(cert.c, n) >= cert.delta:
        return Verification(False, f"gcd(c, n) = {gcd(cert.c, n)} is not below delta")
    if not cert.alpha or cert.alpha >= t.order:
        return Verification(False, "alpha must be a nonzero field element")
    A = sorted({t.frob(cert.alpha, k * r) for k in cert.exponents()})
    for a in A:
        if not contains(T, a):
            return Verification(False, f"{t.power_text(a)} of A is not in T")
    if t.subfield_rank(A, r) != len(A):
        return Verification(False, "A is not F_q^r-linearly independent")
    if not orbit_closure_is_full(T, cert.alpha):
        return Verification(False, "T and the Frobenius orbit of alpha do not generate the whole field")
    return Verification(True)


def verify_bch_certificate(alpha: int, delta: int, T: Subspace) -> Verification:
    if delta == 1:
        return Verification(True)
    return verify_ht_certificate(HTCertificate(alpha, 1, delta, 0), T)


class BoundResult(NamedTuple):
    value: int
    certificate: HTCertificate | None
    exhaustive: bool


def _candidates(U: Subspace, budget: int, extra: Sequence[int]) -> tuple[list[int], bool]:
    """Nonzero elements of U in increasing order, or (when U is too large)
    the supplied candidates lying in U followed by U's basis."""
    t = U.tower
    if U.dim == 0:
        return [], True
    size = (t.q ** U.d) ** U.dim
    if size - 1 <= budget:
        return sorted(e for e in U.elements() if e), True
    picked = [a for a in extra if a and contains(U, a)]
    picked += [b for b in U.basis if b not in picked]
    return picked, False


def _default_alphas(t: Tower) -> list[int]:
    try:
        a = t.find_normal_basis(1)
    except Exception:  # pragma: no cover
        return []
    return [t.frob(a, j) for j in range(t.N)]


def rank_bch_bound(T: Subspace, budget: int = DEFAULT_ALPHA_BUDGET,
                   alphas: Sequence[int] = ()) -> BoundResult:
    """Largest delta with a certificate alpha whose first delta-1 Frobenius
    q^r-powers lie in T, are independent and pass the orbit condition."""
    t = T.tower
    if T.is_full():
        return BoundResult(1, None, True)
    extra = list(alphas) + _default_alphas(t)
    top = min(t.m, t.n)
    chain = [T]
    while len(chain) < top - 1 and chain[-1].dim:
        chain.append(intersect(chain[-1], frobenius_preimage(T, len(chain) * t.r)))
    exhaustive = True
    for delta in range(min(top, len(chain) + 1), 1, -1):
        U = chain[delta - 2]
        cands, full = _candidates(U, budget, extra)
        exhaustive &= full
        for a in cands:
            if verify_bch_certificate(a, delta, T):
                return BoundResult(delta, HTCertificate(a, 1, delta, 0), exhaustive)
    return BoundResult(1, None, exhaustive)


def rank_ht_bound(T: Subspace, budget: int = DEFAULT_ALPHA_BUDGET,
                  alphas: Sequence[int] = ()) -> BoundResult:
    """Best HT certificate over c in 1..n-1, delta, s; alpha ranges over the
    subspace of elements whose whole grid lies in T."""
    t = T.tower
    n, r = t.n, t.r
    bch = rank_bch_bound(T, budget, alphas)
    best, best_cert, exhaustive = bch.value, bch.certificate, bch.exhaustive
    if T.is_full():
        return BoundResult(1, None, True)
    extra = list(alphas) + _default_alphas(t)
    top = min(t.m, n)
    pre = {}

    def preimage(k):
        k %= n
        if k not in pre:
            pre[k] = frobenius_preimage(T, k * r)
        return pre[k]

    for c in range(1, n):
        if top <= best:
            break
        for delta in range(max(2, gcd(c, n) + 1), top + 1):
            U = T
            for i in range(delta - 1):
                U = intersect(U, preimage(i))
            if U.dim == 0:
                break
            s = 0
            while delta + s <= top and U.dim:
                if delta + s > best:
                    cands, full = _candidates(U, budget, extra)
                    exhaustive &= full
                    for a in cands:
                        cert = HTCertificate(a, c, delta, s)
                        if verify_ht_certificate(cert, T):
                            best, best_cert = cert.value, cert
                            break
                s += 1
                for i in range(delta - 1):
                    U = intersect(U, preimage(i + s * c))
    return BoundResult(best, best_cert, exhaustive)


# ----------------------------------------------------------------------
# independent sequences


@dataclass(frozen=True)
class Step:
    """Provenance of one space: ("add", source, beta) or ("shift", source, b)."""

    kind: str
    source: int
    beta: int = 0
    b: int = 0

    def to_json(self, t: Tower) -> dict:
        if self.kind == "add":
            return {"rule": "a", "from": self.source, "beta": t.element_json(self.beta)}
        return {"rule": "b", "from": self.source, "b": self.b}


@dataclass
class IndependentSequence:
    """I_0 = {0}, I_1, ... with one provenance step per later space."""

    tower: Tower
    spaces: list[Subspace] = field(default_factory=list)
    steps: list[Step] = field(default_factory=list)
    extension: tuple | None = None  # maximal grid (b, delta, s) used, if any

    @classmethod
    def start(cls, t: Tower) -> "IndependentSequence":
        return cls(t, [zero_subspace(t)], [])

    @property
    def dim(self) -> int:
        return max(I.dim for I in self.spaces)

    def add(self, source: int, beta: int) -> int:
        t = self.tower
        self.spaces.append(sum_spaces(self.spaces[source], span(t, [beta])))
        self.steps.append(Step("add", source, beta=beta))
        return len(self.spaces) - 1

    def shift(self, source: int, b: int) -> int:
        t = self.tower
        self.spaces.append(frobenius_image(self.spaces[source], b * t.r))
        self.steps.append(Step("shift", source, b=b))
        return len(self.spaces) - 1

    def to_json(self) -> dict:
        t = self.tower
        return {"dim": self.dim, "steps": [s.to_json(t) for s in self.steps],
                "dims": [I.dim for I in self.spaces]}

    @classmethod
    def from_json(cls, t: Tower, data: dict) -> "IndependentSequence":
        seq = cls.start(t)
        for st in data["steps"]:
            if st["rule"] == "a":
                beta = st["beta"]
                seq.add(st["from"], beta["radix"] if isinstance(beta, dict) else int(beta))
            else:
                seq.shift(st["from"], int(st["b"]))
        return seq


def verify_independent_sequence(seq: IndependentSequence, S: Subspace) -> Verification:
    """Replay every step against the definition of an independent sequence."""
    t = seq.tower
    if not seq.spaces or seq.spaces[0].dim != 0:
        return Verification(False, "I_0 must be {0}")
    if len(seq.steps) != len(seq.spaces) - 1:
        return Verification(False, "one step per space after I_0 is required")
    for i, st in enumerate(seq.steps, start=1):
        if not 0 <= st.source < i:
            return Verification(False, f"step {i}: source {st.source} is not earlier")
        Ij = seq.spaces[st.source]
        if st.kind == "add":
            if not is_subspace_of(Ij, S):
                return Verification(False, f"step {i}: I_{st.source} is not inside S")
            if contains(S, st.beta):
                return Verification(False, f"step {i}: beta = {t.power_text(st.beta)} lies in S")
            expect = sum_spaces(Ij, span(t, [st.beta]))
            if expect.dim != Ij.dim + 1:
                return Verification(False, f"step {i}: sum is not direct")  # pragma: no cover
        elif st.kind == "shift":
            if st.b < 0:
                return Verification(False, f"step {i}: negative shift")
            expect = frobenius_image(Ij, st.b * t.r)
        else:
            return Verification(False, f"step {i}: unknown rule {st.kind!r}")
        if expect.rows != seq.spaces[i].rows:
            return Verification(False, f"step {i}: stored space does not match the rule")
    return Verification(True)


# ----------------------------------------------------------------------
# HT certificate -> independent sequence, on exponents modulo the orbit
# period e of alpha (alpha^[er] = alpha)


def _orbit_period(t: Tower, alpha: int) -> int:
    for e in range(1, t.n + 1):
        if t.n % e == 0 and t.frob(alpha, e * t.r) == alpha:
            return e
    return t.n  # pragma: no cover


def _grid_plan(in_s, e, c, delta, s):
    """Extend the grid {b + i + jc} maximally inside Z, then add-then-shift.

    Returns (plan, (b, delta', s')) or None. Plan entries are ("add", k)
    or ("shift", b) with exponents in units of r.
    """
    def col(b, d, j):  # column j, rows 0..d-2
        return all(in_s(b + i + j * c) for i in range(d - 1))

    def row(b, i, sl):  # row i, columns 0..sl
        return all(in_s(b + i + j * c) for j in range(sl + 1))

    b, d, sl = 0, delta, s
    for _ in range(4 * e + 4):
        if row(b, d - 1, sl):
            d += 1
        elif row(b - 1, 0, sl):
            b, d = b - 1, d + 1
        elif col(b, d, sl + 1):
            sl += 1
        elif col(b - c, d, 0):
            b, sl = b - c, sl + 1
        else:
            break
    else:
        return None
    i0 = next(i for i in range(d - 1) if not in_s(b + i + (sl + 1) * c))
    j0 = next(j for j in range(sl + 1) if not in_s(b + d - 1 + j * c))
    plan = []
    x = b + i0 + (sl + 1) * c
    for _ in range(sl + 1):
        plan += [("add", x), ("shift", -c)]
    if d - 2 - i0:
        plan.append(("shift", d - 2 - i0))
    p = b + d - 1 + j0 * c
    for _ in range(d - 2):
        plan += [("add", p), ("shift", -1)]
    plan.append(("add", p))
    return plan, (b, d, sl)


def _exponent_bfs(in_s, e, target, cap=10**4):
    """Breadth-first search over exponent sets for a sequence reaching target."""
    Z = {k for k in range(e) if in_s(k)}
    outside = [k for k in range(e) if k not in Z]
    start = frozenset()
    parent = {start: None}
    queue = deque([start])
    while queue and len(parent) < cap:
        cur = queue.popleft()
        if len(cur) >= target:
            plan = []
            while parent[cur] is not None:
                prev, op = parent[cur]
                plan.append(op)
                cur = prev
            return plan[::-1]
        moves = []
        if cur <= Z:
            moves += [(cur | {k}, ("add", k)) for k in outside]
        moves += [(frozenset((k + b) % e for k in cur), ("shift", b)) for b in range(1, e)]
        for nxt, op in moves:
            if nxt not in parent:
                parent[nxt] = (cur, op)
                queue.append(nxt)
    return None


def ht_to_independent_sequence(cert: HTCertificate, T: Subspace) -> IndependentSequence:
    """Independent sequence w.r.t. T of dimension at least delta + s.

    The certificate is first extended to a maximal grid (offset b, delta',
    s'). The column of exponents b+i0+jc is built by adding and shifting
    by -c, moved to row delta'-2, and the rows are filled by adding at
    b+delta'-1+j0c and shifting by -1. Every step is replayed through
    :func:`verify_independent_sequence` before returning.
    """
    t = T.tower
    check = verify_ht_certificate(cert, T)
    if not check:
        raise CertificateInvalid(check.reason)
    n, r = t.n, t.r
    alpha = cert.alpha
    e = _orbit_period(t, alpha)
    member = [contains(T, t.frob(alpha, k * r)) for k in range(e)]
    if all(member):
        raise CertificateInvalid("T contains the whole orbit of alpha")

    def in_s(k):
        return member[k % e]

    built = _grid_plan(in_s, e, cert.c, cert.delta, cert.s)
    plan = built[0] if built else _exponent_bfs(in_s, e, cert.value)
    if plan is None:
        raise CertificateInvalid("no independent sequence reaches delta + s")
    seq = IndependentSequence.start(t)
    cur = 0
    for kind, k in plan:
        if kind == "add":
            cur = seq.add(cur, t.frob(alpha, (k % e) * r))
        else:
            b = k % n
            if b:
                cur = seq.shift(cur, b)
    if built:
        seq.extension = built[1]
    ok = verify_independent_sequence(seq, T)
    if not ok:  # pragma: no cover
        raise CertificateInvalid(ok.reason)
    if seq.dim < cert.value:  # pragma: no cover
        raise CertificateInvalid(f"sequence reaches {seq.dim} < {cert.value}")
    return seq


# ----------------------------------------------------------------------
# shift bound


def root_spaces_containing(T: Subspace, field_cap: int = SUPERSET_FIELD_CAP) -> list[Subspace] | None:
    """All root spaces S with T <= S < whole field, or None if the field has
    more than field_cap elements."""
    t = T.tower
    if t.order > field_cap:
        return None
    cyclos = {}
    for beta in range(1, t.order):
        if not contains(T, beta):
            K = cyclotomic_space(t, beta)
            cyclos.setdefault(K.rows, K)
    seen = {T.rows: T}
    queue = deque([T])
    while queue:
        S = queue.popleft()
        for K in cyclos.values():
            U = sum_spaces(S, K)
            if U.rows not in seen:
                seen[U.rows] = U
                queue.append(U)
    return [S for S in seen.values() if not S.is_full()]


def _pool(t: Tower, S: Subspace, alphas: Sequence[int]) -> list[int]:
    if t.order <= SMALL_FIELD_POOL:
        return [b for b in range(1, t.order) if not contains(S, b)]
    pool = list(t.subfield_basis(t.r).zeta_pows)
    for a in alphas:
        pool += [t.frob(a, j * t.r) for j in range(t.n)]
    comp = []
    cur = S
    for z in t.subfield_basis(t.r).zeta_pows:
        if not contains(cur, z):
            comp.append(z)
            cur = sum_spaces(cur, span(t, [z]))
    pool += comp
    out, seen = [], set()
    for b in pool:
        if b and b not in seen and not contains(S, b):
            seen.add(b)
            out.append(b)
    return out


def _search(S: Subspace, budget: int, alphas: Sequence[int]) -> IndependentSequence:
    """Breadth-first search over independent spaces w.r.t. S.

    Stops at the node budget, at depth rn, or once the dimension reaches
    the rank weight of the subspace polynomial of S (an upper bound).
    """
    from .linpoly import residue_reduce

    t = S.tower
    ceiling = rank_weight(t, residue_reduce(subspace_polynomial(S)).coeffs) if S.dim < t.n else 0
    pool = _pool(t, S, alphas)
    start = zero_subspace(t)
    parent: dict = {start.rows: None}
    spaces = {start.rows: start}
    depth = {start.rows: 0}
    queue = deque([start])
    best = start
    while queue and len(spaces) < budget and best.dim < ceiling:
        I = queue.popleft()
        if depth[I.rows] >= t.N:
            continue
        moves = []
        if is_subspace_of(I, S):
            moves += [(sum_spaces(I, span(t, [b])), Step("add", -1, beta=b)) for b in pool]
        moves += [(frobenius_image(I, b * t.r), Step("shift", -1, b=b)) for b in range(1, t.n)]
        for J, st in moves:
            if J.rows not in spaces:
                spaces[J.rows] = J
                parent[J.rows] = (I.rows, st)
                depth[J.rows] = depth[I.rows] + 1
                queue.append(J)
                if J.dim > best.dim:
                    best = J
    chain = []
    key = best.rows
    while parent[key] is not None:
        prev, st = parent[key]
        chain.append(st)
        key = prev
    seq = IndependentSequence.start(t)
    cur = 0
    for st in reversed(chain):
        cur = seq.add(cur, st.beta) if st.kind == "add" else seq.shift(cur, st.b)
    return seq


@dataclass
class ShiftResult:
    value: int
    witness: IndependentSequence | None
    exhaustive: bool
    note: str = ""
    supersets: list = field(default_factory=list)  # (S, sequence) pairs

    def __iter__(self):
        return iter((self.value, self.witness))


def shift_bound(T: Subspace, budget: int = DEFAULT_NODE_BUDGET,
                alphas: Sequence[int] = (), field_cap: int = SUPERSET_FIELD_CAP) -> ShiftResult:
    """Shift-bound lower bound on d_R for the code with root space T.

    The witness is an independent sequence w.r.t. T (seeded by the HT
    construction when that is at least as long). The reported value is
    max(HT value, min over root spaces S above T of the search for S).
    """
    t = T.tower
    if T.is_full():
        return ShiftResult(0, None, True, "no nonzero codewords to bound")
    ht = rank_ht_bound(T, alphas=alphas)
    seeds = list(alphas) + ([ht.certificate.alpha] if ht.certificate else [])
    witness = _search(T, budget, seeds)
    if ht.certificate is not None and ht.value > witness.dim:
        witness = ht_to_independent_sequence(ht.certificate, T)
    supers = root_spaces_containing(T, field_cap)
    if supers is None:
        return ShiftResult(max(ht.value, 1), witness, False,
                           "root spaces above T not enumerable; value is the HT bound")
    results = []
    for S in supers:
        seq = witness if S.rows == T.rows else _search(S, budget, seeds)
        results.append((S, seq))
    low = min(seq.dim for _, seq in results)
    return ShiftResult(max(ht.value, low), witness, True, "", results)
