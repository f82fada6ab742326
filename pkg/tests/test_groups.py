import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cospectra.cyclotomic import CyclotomicInteger
from cospectra.errors import InvalidElement, InvalidGroup, ParseError
from cospectra.groups import FiniteAbelianGroup, char_sign, char_value, group_new, parse_group


@pytest.mark.parametrize("orders, order, exponent", [
    ([2, 2, 2, 2, 2], 32, 2),
    ([4, 4], 16, 4),
    ([2, 2, 2, 2, 2, 3], 96, 6),
    ([], 1, 1),
])
def test_group_new(orders, order, exponent):
    G = group_new(orders)
    assert G.order == order
    assert G.exponent == exponent
    assert len(list(G.elements())) == order


@pytest.mark.parametrize("orders", [[1], [2, 0], [3, -2]])
def test_group_new_rejects_small_orders(orders):
    with pytest.raises(InvalidGroup):
        group_new(orders)


@pytest.mark.parametrize("text, orders", [
    ("Z2^5", (2, 2, 2, 2, 2)),
    ("z4^2", (4, 4)),
    ("Z2^5xZ3", (2, 2, 2, 2, 2, 3)),
    ("Z2 x Z4 X z6", (2, 4, 6)),
    ("Z1", ()),
])
def test_parse_group(text, orders):
    G = parse_group(text)
    assert G.orders == orders
    assert parse_group(str(G)) == G


@pytest.mark.parametrize("text", ["", "Q8", "Z2^", "Z0", "Z2xx"])
def test_parse_group_errors(text):
    with pytest.raises(ParseError):
        parse_group(text)


def test_lexicographic_order_and_index():
    G = group_new([2, 3])
    elems = list(G.elements())
    assert elems == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]
    assert [G.index(g) for g in elems] == list(range(6))
    assert [G.element_at(i) for i in range(6)] == elems
    assert [tuple(r) for r in G.element_array.tolist()] == elems


def test_element_order():
    G = group_new([4, 6])
    assert G.element_order((0, 0)) == 1
    assert G.element_order((2, 3)) == 2
    assert G.element_order((1, 2)) == 12
    assert G.involutions() == [(0, 0), (0, 3), (2, 0), (2, 3)]


def test_element_validation():
    G = group_new([2, 2])
    with pytest.raises(InvalidElement):
        G.element((1,))
    with pytest.raises(InvalidElement):
        G.element((0, 2))


def test_char_value_examples():
    assert char_value(group_new([2]), (1,), (1,)) == -1
    z4 = char_value(group_new([4]), (1,), (1,))
    assert z4 == CyclotomicInteger.root_of_unity(4, 1)
    assert z4.coeffs == (0, 1)
    G = group_new([2, 4, 3])
    for g in G.elements():
        assert char_value(G, G.zero(), g) == 1


def test_char_value_length_mismatch():
    with pytest.raises(InvalidElement):
        char_value(group_new([2, 2]), (1,), (1, 0))


groups = st.lists(st.integers(2, 6), min_size=1, max_size=4).filter(lambda o: math.prod(o) <= 256)


@settings(max_examples=60, deadline=None)
@given(groups, st.data())
def test_character_is_homomorphism(orders, data):
    G = group_new(orders)
    elem = st.tuples(*(st.integers(0, m - 1) for m in orders))
    a, g, h = data.draw(elem), data.draw(elem), data.draw(elem)
    assert char_value(G, a, G.add(g, h)) == char_value(G, a, g) * char_value(G, a, h)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(2, 6), min_size=1, max_size=3).filter(lambda o: math.prod(o) <= 128))
def test_orthogonality(orders):
    G = group_new(orders)
    for a in G.elements():
        total = CyclotomicInteger.from_int(0, G.exponent)
        for g in G.elements():
            total = total + char_value(G, a, g)
        assert total == (G.order if a == G.zero() else 0)


@pytest.mark.parametrize("orders", [[2, 4], [4, 4], [2, 6, 3]])
def test_involution_values_are_signs(orders):
    G = group_new(orders)
    for a in G.elements():
        for g in G.involutions():
            s = char_sign(G, a, g)
            assert s in (1, -1)
            assert char_value(G, a, g) == s


def test_char_sign_rejects_non_involution():
    with pytest.raises(InvalidElement):
        char_sign(group_new([4]), (1,), (1,))
