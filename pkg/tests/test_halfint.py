import pytest
from hypothesis import given, strategies as st

from aql.halfint import CharMultiset, HalfInt, Weight, half, multiset_of, shift

halfints = st.integers(min_value=-200, max_value=200).map(HalfInt.from_twice)


def test_integer_construction_and_display():
    assert str(HalfInt(3)) == "3"
    assert str(HalfInt(-2)) == "-2"
    assert str(half(7)) == "7/2"
    assert str(half(-3)) == "-3/2"
    assert HalfInt(5).twice == 10


def test_parse_round_trip():
    for text in ["0", "7/2", "-3/2", "12", "-40"]:
        assert str(HalfInt.parse(text)) == text


def test_parse_rejects_other_denominators():
    with pytest.raises(ValueError):
        HalfInt.parse("4/3")
    with pytest.raises(ValueError):
        HalfInt.parse("4/2")  # not in lowest terms


def test_floats_rejected():
    with pytest.raises(TypeError):
        HalfInt(1.5)
    with pytest.raises(TypeError):
        HalfInt(True)


def test_integrality_predicate():
    assert HalfInt(4).is_integral
    assert not half(9).is_integral


def test_mixed_arithmetic_with_ints():
    assert half(7) + 1 == half(9)
    assert 1 + half(7) == half(9)
    assert half(7) - 4 == half(-1)
    assert 4 - half(7) == half(1)
    assert half(3) * 2 == HalfInt(3)
    assert -half(3) == half(-3)


@given(halfints, halfints, halfints)
def test_addition_associative_commutative(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p + q) - q == p


def test_weight_signature_and_dominance():
    w = Weight.of([1, 0], [0])
    assert w.signature == (2, 1)
    assert w.is_dominant
    assert not Weight.of([0, 1], []).is_dominant


def test_shift_examples():
    w = Weight.of([1, 0], [0])
    assert shift(w, 0) == w
    assert shift(Weight.of([2, 1], [-1]), half(1)) == Weight.of(
        [half(5), half(3)], [half(-1)]
    )


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_shift_inverse(a, c):
    w = Weight.of([a, a - 1], [a + 2])
    ch = HalfInt.from_twice(c)
    assert shift(shift(w, ch), -ch) == w


def test_multiset_of_examples():
    assert multiset_of(Weight.of([1, 0], [0])) == CharMultiset([1, 0, 0])
    assert multiset_of(Weight.of([half(7)], [])) == CharMultiset([half(7)])
    assert multiset_of(Weight.of([2, 1], [-1, -2])) == multiset_of(
        Weight.of([-2, 2], [1, -1])
    )


@given(st.lists(halfints, max_size=6), halfints)
def test_multiset_commutes_with_shift(values, c):
    w = Weight.of(values[: len(values) // 2], values[len(values) // 2 :])
    assert multiset_of(shift(w, c)) == CharMultiset(v + c for v in values)


def test_weight_json_round_trip():
    w = Weight.of([half(5), 1], [0])
    doc = w.to_json()
    assert doc == {"a": 2, "b": 1, "x": ["5/2", "1"], "y": ["0"]}
    assert Weight.from_json(doc) == w


def test_char_multiset_is_order_insensitive():
    assert CharMultiset([1, 2, 2]) == CharMultiset([2, 1, 2])
    assert CharMultiset([1, 2, 2]) != CharMultiset([1, 1, 2])
    assert CharMultiset([1, 2]) != CharMultiset([1, 2, 2])
