import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewcyc import errors
from skewcyc.bounds import min_rank_distance, rank_weight
from skewcyc.bridge import (
    E_map,
    E_op,
    L_map,
    all_classic_cyclic,
    classic_cyclic,
    classic_mul,
    cyclic_shift,
    cyclic_to_skew,
    fq_ideal_span,
    hamming_weight,
    hat_code,
    weight_distribution,
    weight_distribution_csv,
)
from skewcyc.fieldtower import tower
from skewcyc.skewcode import sigma_shift

BRIDGE = [(2, 3, 1, 3), (2, 4, 1, 4), (2, 3, 2, 3), (3, 2, 1, 2), (2, 5, 1, 5)]


@pytest.mark.parametrize("params", BRIDGE[:4])
def test_every_cyclic_code_maps_over(params):
    t = tower(*params)
    for C in all_classic_cyclic(t.q, t.n):
        ideal = cyclic_to_skew(t, C)  # asserts the image laws internally
        assert ideal.dim == C.k
        assert ideal.is_closed()
        images = {E_map(t, c) for c in C.codewords()}
        assert set(ideal.codewords()) == images
        hat = hat_code(t, C)
        assert hat.k == C.k
        if C.k:
            assert min_rank_distance(hat) <= C.min_hamming_distance()


def test_number_of_binary_cyclic_codes():
    # x^3 - 1 = (x + 1)(x^2 + x + 1), x^4 - 1 = (x + 1)^4
    assert len(all_classic_cyclic(2, 3)) == 4
    assert len(all_classic_cyclic(2, 4)) == 5
    assert len(all_classic_cyclic(3, 2)) == 4


@given(st.sampled_from(BRIDGE), st.data())
@settings(max_examples=150, deadline=None)
def test_weights_and_shifts_transfer(params, data):
    t = tower(*params)
    c = data.draw(st.lists(st.integers(0, t.q - 1), min_size=t.n, max_size=t.n))
    v = E_map(t, c)
    assert rank_weight(t, v) == hamming_weight(c)
    assert E_map(t, cyclic_shift(c)) == sigma_shift(t, v)


@given(st.sampled_from(BRIDGE), st.data())
@settings(max_examples=150, deadline=None)
def test_L_times_E_is_E_of_product(params, data):
    t = tower(*params)
    poly = st.lists(st.integers(0, t.q - 1), min_size=1, max_size=t.n)
    f, g = data.draw(poly), data.draw(poly)
    assert L_map(t, f) * E_op(t, g) == E_op(t, classic_mul(t.q, t.n, f, g))


def test_repetition_code_is_mds_and_mrd():
    for n in (3, 4, 5):
        t = tower(2, n, 1, n)
        rep = classic_cyclic(2, n, [1] * n)
        assert rep.k == 1 and rep.min_hamming_distance() == n
        hat = hat_code(t, rep)
        assert hat.k == 1 and min_rank_distance(hat) == n


def test_even_length_example():
    t = tower(2, 4, 1, 4)
    C = classic_cyclic(2, 4, [1, 0, 1])
    assert C.g == (1, 0, 1) and C.k == 2 and C.min_hamming_distance() == 2
    hat = hat_code(t, C)
    alpha = t.find_subfield_normal(1, 4)
    Eg = [alpha, 0, t.frob(alpha, 2)]
    assert hat.G.coeffs == tuple(t.mul(c, t.inv(Eg[-1])) for c in Eg)
    assert min_rank_distance(hat) == 2


def test_classic_generator_is_normalised():
    C = classic_cyclic(2, 3, [0, 1, 1])  # x + x^2 = x(1 + x)
    assert C.g == (1, 1)
    assert classic_cyclic(2, 3, []).k == 0


def test_classic_mul_wraps():
    assert classic_mul(2, 3, [0, 0, 1], [0, 1]) == [1, 0, 0]


def test_weight_distribution_csv():
    C = classic_cyclic(2, 3, [1, 1])
    dist = weight_distribution(C.codewords(), hamming_weight)
    assert dist == {0: 1, 2: 3}
    assert weight_distribution_csv(dist) == "weight,count\n0,1\n2,3\n"


def test_fq_ideal_of_several_generators():
    t = tower(2, 3, 1, 3)
    rng = random.Random(5)
    gens = [E_op(t, [rng.randrange(2) for _ in range(3)]) for _ in range(2)]
    ideal = fq_ideal_span(t, gens)
    assert ideal.is_closed()
    assert all(ideal.contains(g.coeffs) for g in gens)


def test_parameter_checks():
    with pytest.raises(errors.ParameterViolation):
        E_map(tower(2, 2, 1, 4), [1, 0, 0, 0])  # m != n
    with pytest.raises(errors.ParameterViolation):
        E_map(tower(2, 2, 2, 2), [1, 0])  # gcd(n, r) = 2
    with pytest.raises(errors.ParameterViolation):
        E_map(tower(2, 3, 1, 3), [1, 0])
    with pytest.raises(errors.ParameterViolation):
        classic_cyclic(6, 3, [1])
    t = tower(2, 3, 1, 3)
    with pytest.raises(errors.ParameterViolation):
        E_map(t, [1, 0, 0], alpha=1)  # 1 is not normal
