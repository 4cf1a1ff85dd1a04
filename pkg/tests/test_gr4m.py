import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from z4trace.gr4m import GaloisRing, TwoAdic, graeffe_lift, z4_poly_to_str

XI = 4  # xi has digit vector (0, 1)


def test_graeffe_lift_examples():
    assert graeffe_lift(0b11) == [3, 1]
    assert graeffe_lift(0b111) == [1, 1, 1]
    assert graeffe_lift(0b1011) == [3, 1, 2, 1]
    assert z4_poly_to_str([3, 1, 2, 1]) == "x^3 + 2x^2 + x + 3"


@pytest.mark.parametrize("m", range(1, 13))
def test_basic_poly_reduces_to_field_poly(m):
    ring = GaloisRing(m)
    h = ring.basic_poly
    assert h[m] == 1
    assert sum((c & 1) << j for j, c in enumerate(h)) == ring.field.poly


def test_teichmuller_small():
    assert GaloisRing(1).teichmuller == [0, 1]
    ring = GaloisRing(2)
    assert ring.teichmuller == [0, 1, XI, ring.from_digits([3, 3])]


@pytest.mark.parametrize("m", range(1, 8))
def test_teichmuller_structure(m):
    ring = GaloisRing(m)
    t = ring.teichmuller
    assert len(t) == 1 << m
    assert sorted(ring.reduce(x) for x in t) == list(range(1 << m))
    xi = ring.xi_pow(1)
    assert ring.pow(xi, (1 << m) - 1) == 1
    for k in range(1, m + 1):
        if ((1 << m) - 1) % k == 0 and k < (1 << m) - 1:
            assert ring.pow(xi, k) != 1
    # closed under multiplication and fixed by x -> x^(2^m)
    for a in t[:: max(1, len(t) // 8)]:
        assert ring.pow(a, 1 << m) == a
        for b in t[:: max(1, len(t) // 8)]:
            assert ring.mul(a, b) in ring.teich_exponent


def test_two_adic_examples():
    ring = GaloisRing(2)
    assert ring.two_adic_decompose(0) == TwoAdic(0, 0)
    assert ring.two_adic_decompose(2) == TwoAdic(0, 1)
    assert ring.two_adic_decompose(3) == TwoAdic(1, 1)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_two_adic_round_trip(m):
    ring = GaloisRing(m)
    teich = set(ring.teichmuller)
    a_bar, b_bar = ring.two_adic_array(np.arange(ring.size))
    for c in range(ring.size):
        t = ring.two_adic_decompose(c)
        assert t.a in teich and t.b in teich
        assert ring.recompose(t) == c
        assert ring.reduce(t.a) == a_bar[c] and ring.reduce(t.b) == b_bar[c]


def test_frobenius_examples():
    ring = GaloisRing(2)
    assert ring.frobenius(2) == 2
    assert ring.frobenius(XI) == ring.from_digits([3, 3])


@pytest.mark.parametrize("m", range(1, 7))
def test_frobenius_order_m(m):
    ring = GaloisRing(m)
    for c in range(0, ring.size, max(1, ring.size // 512)):
        assert ring.frobenius(c, m) == c


def test_frobenius_is_ring_automorphism():
    ring = GaloisRing(3)
    for x in range(0, ring.size, 5):
        for y in range(0, ring.size, 7):
            assert ring.frobenius(ring.mul(x, y)) == ring.mul(ring.frobenius(x), ring.frobenius(y))
            assert ring.frobenius(ring.add(x, y)) == ring.add(ring.frobenius(x), ring.frobenius(y))


def test_trace_examples():
    ring = GaloisRing(2)
    assert ring.gen_trace(0) == 0
    assert ring.gen_trace(XI) == 3
    assert ring.gen_trace(1) == 2
    # the tr(a) + 2tr(b) shortcut is not the generalised trace
    assert ring.literal_trace(XI) == 1


@pytest.mark.parametrize("m", range(1, 7))
def test_trace_is_sum_of_conjugates(m):
    ring = GaloisRing(m)
    for c in range(0, ring.size, max(1, ring.size // 256)):
        assert ring.gen_trace(c) == ring._frobenius_trace(c)
    assert np.array_equal(ring.trace_table[:64], ring.trace_array(np.arange(min(64, ring.size))))


def test_enumerate_subsets():
    ring = GaloisRing(1)
    assert sorted(ring.enumerate("ideal")) == [0, 2]
    assert sorted(ring.enumerate("units")) == [1, 3]
    ring = GaloisRing(2)
    assert len(list(ring.enumerate("units"))) == 12
    assert len(list(ring.enumerate("ideal"))) == 4
    for c in ring.enumerate("all"):
        assert ring.is_unit(c) == (ring.reduce(c) != 0)
    assert np.array_equal(np.sort(ring.elements_array("units")), sorted(ring.enumerate("units")))


def test_units_have_inverses():
    ring = GaloisRing(3)
    units = list(ring.enumerate("units"))
    for u in units:
        assert any(ring.mul(u, v) == 1 for v in units)
    for c in ring.enumerate("ideal"):
        assert all(ring.mul(c, v) != 1 for v in range(ring.size))


def test_format_parse_and_json():
    ring = GaloisRing(3)
    for c in range(ring.size):
        assert ring.parse(ring.format(c)) == c
    data = json.loads(ring.teichmuller_json())
    assert data["basic_poly"] == [3, 1, 2, 1]
    assert len(data["teichmuller"]) == 8


def test_mul_array_matches_scalar():
    ring = GaloisRing(3)
    xs = np.arange(ring.size)
    prods = ring.mul_array(xs[:, None], xs[None, :])
    for x in range(0, ring.size, 3):
        for y in range(ring.size):
            assert prods[x, y] == ring.mul(x, y)


codes = st.integers(0, 4**4 - 1)


@settings(max_examples=200, deadline=None)
@given(codes, codes, codes)
def test_ring_axioms(x, y, z):
    ring = GaloisRing(4)
    assert ring.add(x, ring.neg(x)) == 0
    assert ring.mul(x, y) == ring.mul(y, x)
    assert ring.mul(x, ring.mul(y, z)) == ring.mul(ring.mul(x, y), z)
    assert ring.mul(x, ring.add(y, z)) == ring.add(ring.mul(x, y), ring.mul(x, z))
    assert ring.gen_trace(ring.add(x, y)) == (ring.gen_trace(x) + ring.gen_trace(y)) % 4
    assert ring.reduce(ring.mul(x, y)) == ring.field.mul(ring.reduce(x), ring.reduce(y))
