from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braid_monodromy.permutations import Permutation, compose_all


def perms(size: int):
    return st.permutations(list(range(size))).map(lambda t: Permutation(tuple(t)))


def test_left_to_right_product():
    a = Permutation.transposition(1, 2, 3)
    b = Permutation.transposition(2, 3, 3)
    # apply (12) first, then (23): 1 -> 2 -> 3
    assert (a * b)(1) == 3
    assert (a * b).images == [3, 1, 2]


def test_parse_and_print_roundtrip():
    p = Permutation.parse("(1 2)(3 4)", 5)
    assert str(p) == "(1 2)(3 4)"
    assert p.cycle_type() == (2, 2, 1)
    assert p.support() == frozenset({1, 2, 3, 4})
    assert str(Permutation.identity(3)) == "()"


def test_from_images_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation.from_images([1, 1, 2])


def test_transposition_bounds():
    with pytest.raises(ValueError):
        Permutation.transposition(1, 4, 3)


@given(perms(5), perms(5), perms(5))
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(perms(6))
def test_inverse(a):
    assert (a * a.inverse()).is_identity
    assert (a.inverse() * a).is_identity


def test_compose_all_empty_is_identity():
    assert compose_all([], 4).is_identity
