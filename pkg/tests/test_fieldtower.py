import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewcyc import errors
from skewcyc.fieldtower import TowerParams, parse_header, tower

# small towers of every flavour: binary, odd prime, prime power base
TOWERS = [(2, 3, 1, 3), (2, 4, 1, 4), (2, 2, 2, 2), (3, 2, 1, 2), (4, 2, 1, 2), (5, 1, 1, 2)]


def naive_mul(t, a, b):
    """Schoolbook product of digit vectors, reduced by ext_poly over F_q."""
    F = t.base
    da, db = t.digits(a), t.digits(b)
    prod = [0] * (2 * t.N)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = F.add(prod[i + j], F.mul(x, y))
    f = t.ext_poly
    for k in range(len(prod) - 1, t.N - 1, -1):
        c = prod[k]
        if c:
            for i, fc in enumerate(f):
                prod[k - t.N + i] = F.sub(prod[k - t.N + i], F.mul(c, fc))
    return t.from_digits(prod[:t.N])


@pytest.fixture(params=TOWERS, ids=lambda p: "q%d_m%d_r%d_n%d" % p)
def small(request):
    return tower(*request.param)


def test_multiplication_matches_schoolbook(small):
    t = small
    elems = range(t.order) if t.order <= 64 else range(0, t.order, 7)
    for a in elems:
        for b in range(0, t.order, max(1, t.order // 13)):
            assert t.mul(a, b) == naive_mul(t, a, b)


def test_field_axioms_exhaustive(small):
    t = small
    for a in range(1, t.order):
        assert t.mul(a, t.inv(a)) == 1
        assert t.add(a, t.neg(a)) == 0
    assert t.pow(t.zeta, t.order - 1) == 1
    seen = {t.pow(t.zeta, k) for k in range(t.order - 1)}
    assert len(seen) == t.order - 1  # zeta is primitive


def test_zeta_is_smallest_primitive(small):
    t = small
    for e in range(2, t.zeta):
        order = next(k for k in range(1, t.order) if t.pow(e, k) == 1)
        assert order < t.order - 1


def test_frobenius_is_power_map(small):
    t = small
    for a in range(t.order):
        assert t.frob(a, 1) == t.pow(a, t.q)
        assert t.frob(a, t.N) == a
        assert t.frob(t.frob(a, 2), -2) == a


def test_subfields_match_fixed_points(small):
    t = small
    for d in range(1, t.N + 1):
        if t.N % d:
            with pytest.raises(errors.NotADivisor):
                t.in_subfield(1, d)
            continue
        members = [a for a in range(t.order) if t.pow(a, t.q ** d) == a]
        assert len(members) == t.q ** d
        assert sorted(t.subfield_elements(d)) == members
        assert all(t.in_subfield(a, d) for a in members)


def test_subfield_coordinates_reconstruct(small):
    t = small
    for d in range(1, t.N + 1):
        if t.N % d:
            continue
        for a in range(0, t.order, max(1, t.order // 20)):
            coords = t.subfield_coords(a, d)
            assert all(t.in_subfield(c, d) for c in coords)
            assert t.reconstruct(coords, d) == a


def test_normal_basis_is_normal(small):
    t = small
    e = t.find_normal_basis(1)
    assert t.fq_rank([t.frob(e, j) for j in range(t.N)]) == t.N
    assert all(t.fq_rank([t.frob(x, j) for j in range(t.N)]) < t.N for x in range(1, e))


def test_subfield_normal_element():
    t = tower(2, 3, 1, 6)
    e = t.find_subfield_normal(1, 3)
    assert t.in_subfield(e, 3)
    assert t.fq_rank([t.frob(e, j) for j in range(3)]) == 3


def test_large_binary_normal_element_is_fast():
    t = tower(2, 31, 1, 62)
    e = t.find_normal_basis(1)
    assert t.fq_rank([t.frob(e, j) for j in range(62)]) == 62


@given(st.sampled_from(TOWERS), st.data())
@settings(max_examples=200, deadline=None)
def test_parse_and_print_round_trip(params, data):
    t = tower(*params)
    a = data.draw(st.integers(0, t.order - 1))
    assert t.parse_element(t.power_text(a)) == a
    assert t.parse_element(str(a)) == a
    assert t.element_json(a)["radix"] == a


def test_header_round_trip():
    t = tower(3, 2, 1, 2)
    assert parse_header(t.header()) == t.params
    bad = t.header().replace("ext_poly=", "ext_poly=9,")
    with pytest.raises(ValueError):
        parse_header(bad)


@pytest.mark.parametrize("args, error", [
    ((6, 1, 1, 1), errors.NonPrime),
    ((2, 3, 1, 2), errors.DivisibilityViolated),
    ((2, 2, 3, 2), errors.ROutOfRange),
])
def test_invalid_parameters(args, error):
    with pytest.raises(error):
        tower(*args)


def test_params_from_prime_power():
    p = TowerParams.from_q(9, 2, 1, 2)
    assert (p.p, p.s, p.q, p.N) == (3, 2, 9, 2)


def test_parse_rejects_garbage():
    t = tower(2, 3, 1, 3)
    with pytest.raises(ValueError):
        t.parse_element("b^2")
    with pytest.raises(ValueError):
        t.parse_element("99")


def test_division_by_zero():
    t = tower(2, 3, 1, 3)
    with pytest.raises(ZeroDivisionError):
        t.inv(0)
