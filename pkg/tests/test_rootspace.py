import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewcyc import errors
from skewcyc.fieldtower import tower
from skewcyc.linpoly import LinPoly
from skewcyc.rootspace import (
    all_root_spaces,
    all_subspaces,
    contains,
    cyclotomic_space,
    frobenius_image,
    intersect,
    is_root_space,
    is_root_space_cross_check,
    minimal_qr_polynomial,
    root_space_closure,
    span,
    subspace_polynomial,
    sum_spaces,
    zero_space,
)

TOWERS = [(2, 3, 1, 3), (2, 2, 1, 4), (2, 2, 2, 2), (3, 2, 1, 2), (2, 4, 2, 2)]


def element_set(T):
    return set(T.elements())


def gaussian_binomial(n, k, q):
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@pytest.mark.parametrize("params", TOWERS)
def test_subspace_count_is_gaussian(params):
    t = tower(*params)
    Q, L = t.q ** t.r, t.n
    expected = sum(gaussian_binomial(L, k, Q) for k in range(L + 1))
    assert sum(1 for _ in all_subspaces(t)) == expected


@pytest.mark.parametrize("params", TOWERS)
def test_root_spaces_match_brute_force(params):
    """T is a root space iff it is closed under beta -> beta^[m]."""
    t = tower(*params)
    brute = []
    for T in all_subspaces(t):
        elems = element_set(T)
        closed = all(t.frob(b, t.m) in elems for b in elems)
        assert is_root_space(T)[0] == closed == is_root_space_cross_check(T)
        if closed:
            brute.append(T.rows)
    assert sorted(T.rows for T in all_root_spaces(t)) == sorted(brute)


@given(st.sampled_from(TOWERS), st.data())
@settings(max_examples=100, deadline=None)
def test_zero_space_matches_root_enumeration(params, data):
    t = tower(*params)
    elems = list(t.subfield_elements(t.N))
    coeffs = data.draw(st.lists(st.sampled_from(elems), min_size=1, max_size=t.n + 1))
    F = LinPoly(t, coeffs)
    if F.is_zero():
        with pytest.raises(errors.ZeroPolynomial):
            zero_space(F)
        return
    Z = zero_space(F)
    assert element_set(Z) == {b for b in range(t.order) if F(b) == 0}


@pytest.mark.parametrize("params", TOWERS)
def test_subspace_polynomial_vanishes_exactly(params):
    t = tower(*params)
    for T in list(all_subspaces(t))[::3]:
        P = subspace_polynomial(T)
        assert P.lead == 1 and P.degree == T.dim
        assert {b for b in range(t.order) if P(b) == 0} == element_set(T)


@pytest.mark.parametrize("params", TOWERS)
def test_cyclotomic_space_is_smallest_root_space(params):
    t = tower(*params)
    roots = all_root_spaces(t)
    for beta in range(1, t.order):
        C = cyclotomic_space(t, beta)
        smallest = min((T for T in roots if contains(T, beta)), key=lambda T: T.dim)
        assert C.rows == smallest.rows
        P = minimal_qr_polynomial(t, beta)
        assert P(beta) == 0 and all(t.in_subfield(c, t.m) for c in P.coeffs)


def test_cyclotomic_space_of_normal_element():
    t = tower(2, 2, 1, 4)
    alpha = t.find_normal_basis(1)
    assert cyclotomic_space(t, alpha).rows == span(t, [alpha, t.frob(alpha, 2)]).rows


@given(st.sampled_from(TOWERS), st.data())
@settings(max_examples=60, deadline=None)
def test_sum_and_intersection(params, data):
    t = tower(*params)
    pick = st.lists(st.integers(0, t.order - 1), max_size=3)
    A = span(t, data.draw(pick), t.r)
    B = span(t, data.draw(pick), t.r)
    a, b = element_set(A), element_set(B)
    assert element_set(intersect(A, B)) == a & b
    assert element_set(sum_spaces(A, B)) == {t.add(x, y) for x in a for y in b}


def test_closure_and_frobenius():
    t = tower(2, 3, 1, 6)
    beta = t.zeta
    T = root_space_closure(t, [beta])
    assert T.rows == cyclotomic_space(t, beta).rows
    assert frobenius_image(T, t.m).rows == T.rows
    assert frobenius_image(frobenius_image(T, 2), -2).rows == T.rows


def test_json_form():
    t = tower(2, 3, 1, 3)
    T = span(t, [t.zeta])
    out = T.to_json()
    assert out["dim"] == 1 and out["elements"] == ["a"]


def test_span_of_nothing_is_zero():
    t = tower(2, 3, 1, 3)
    assert span(t, []).dim == 0
    assert span(t, [0, 0]).dim == 0


def test_every_subspace_of_f8_is_root_space():
    t = tower(2, 3, 1, 3)
    assert all(is_root_space(T)[0] for T in all_subspaces(t))


def test_diagnostic_lists_bad_coefficients():
    t = tower(2, 2, 1, 4)
    T = span(t, [t.zeta])
    ok, info = is_root_space(T)
    assert not ok and info["coefficients_outside_Fqm"]


def test_product_enumeration_is_exhaustive():
    t = tower(2, 2, 2, 2)
    seen = set()
    for T in all_subspaces(t):
        seen.add(frozenset(T.elements()))
    # every F_4-line through a nonzero vector of F_16
    lines = {frozenset(t.mul(c, v) for c in t.subfield_elements(2)) for v in range(1, 16)}
    assert lines <= seen
