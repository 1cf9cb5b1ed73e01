import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import strategies as sts
from oracles import pictures_oracle
from lrpictures.diagram import SkewShape
from lrpictures.picture import (
    Picture,
    enumerate_pictures,
    is_admissible_picture,
    is_pa_standard,
    omega,
)
from lrpictures.reading import far_eastern, middle_eastern, random_admissible_order


DOM = SkewShape((2, 2))
COD = SkewShape((4, 3), (2, 1))
EXAMPLE = Picture(
    DOM, COD, {(1, 1): (1, 4), (1, 2): (1, 3), (2, 1): (2, 3), (2, 2): (2, 2)}
)


def test_picture_validation():
    with pytest.raises(ValueError):
        Picture(DOM, COD, {(1, 1): (1, 4)})
    with pytest.raises(ValueError):
        Picture(
            DOM, COD,
            {(1, 1): (1, 4), (1, 2): (1, 4), (2, 1): (2, 3), (2, 2): (2, 2)},
        )
    with pytest.raises(ValueError):
        Picture(
            DOM, COD,
            {(1, 1): (9, 9), (1, 2): (1, 3), (2, 1): (2, 3), (2, 2): (2, 2)},
        )


def test_picture_call_and_equality():
    assert EXAMPLE((1, 1)) == (1, 4)
    same = Picture(DOM, COD, dict(EXAMPLE.forward))
    assert same == EXAMPLE and hash(same) == hash(EXAMPLE)


def test_example_picture_admissible_under_any_orders():
    # this map satisfies both conditions for every admissible order pair
    makes = [middle_eastern, far_eastern] + [
        lambda s, k=k: random_admissible_order(s, k) for k in range(4)
    ]
    for make_a in makes:
        for make_ap in makes:
            assert is_admissible_picture(EXAMPLE, make_a(COD), make_ap(DOM))


def test_identity_on_a_row_is_not_standard():
    row = SkewShape((2,))
    ident = Picture(row, row, {(1, 1): (1, 1), (1, 2): (1, 2)})
    assert not is_admissible_picture(ident, middle_eastern(row), middle_eastern(row))
    flip = Picture(row, row, {(1, 1): (1, 2), (1, 2): (1, 1)})
    assert is_admissible_picture(flip, middle_eastern(row), middle_eastern(row))


def test_is_pa_standard_direct():
    order = middle_eastern(SkewShape((2,)))
    assert not is_pa_standard({(1, 1): (1, 1), (1, 2): (1, 2)}, order)
    assert is_pa_standard({(1, 1): (1, 2), (1, 2): (1, 1)}, order)


def test_omega_swaps_and_involutes():
    q = omega(EXAMPLE)
    assert q.domain == COD and q.codomain == DOM
    assert q((1, 4)) == (1, 1)
    assert omega(q) == EXAMPLE


def test_order_shape_mismatch_raises():
    with pytest.raises(ValueError):
        is_admissible_picture(EXAMPLE, middle_eastern(DOM), middle_eastern(DOM))
    with pytest.raises(ValueError):
        enumerate_pictures(DOM, COD, middle_eastern(DOM), middle_eastern(DOM))


def test_enumerate_pictures_counts():
    # counts from the permutation-filter search in oracles.py
    cases = [
        (SkewShape((2, 1)), SkewShape((3, 2, 1), (2, 1)), 2),
        (SkewShape((2, 2)), SkewShape((4, 3), (2, 1)), 1),
        (SkewShape((3, 1)), SkewShape((3, 2, 1), (1, 1)), 1),
        (SkewShape((2, 1)), SkewShape((2, 1)), 1),
    ]
    for x, y, count in cases:
        for make in (middle_eastern, far_eastern):
            assert len(enumerate_pictures(x, y, make(y), make(x))) == count


def test_enumerate_pictures_finds_the_example():
    pics = enumerate_pictures(DOM, COD, middle_eastern(COD), middle_eastern(DOM))
    assert pics == (EXAMPLE,)


def test_enumerate_pictures_degenerate():
    empty = SkewShape(())
    assert len(enumerate_pictures(empty, empty, middle_eastern(empty), middle_eastern(empty))) == 1
    assert (
        enumerate_pictures(
            SkewShape((1,)), SkewShape((2,)),
            middle_eastern(SkewShape((2,))), middle_eastern(SkewShape((1,))),
        )
        == ()
    )


def _order_for(spec, shape):
    if spec == "ME":
        return middle_eastern(shape)
    if spec == "FE":
        return far_eastern(shape)
    return random_admissible_order(shape, int(spec))


@settings(max_examples=25)
@given(
    sts.skew_shapes(max_size=4),
    sts.skew_shapes(max_size=4),
    st.sampled_from(["ME", "FE", "0", "1"]),
    st.sampled_from(["ME", "FE", "0", "1"]),
)
def test_enumerate_matches_oracle(x, y, spec_a, spec_ap):
    a = _order_for(spec_a, y)
    a_prime = _order_for(spec_ap, x)
    ours = {tuple(sorted(p.forward.items())) for p in enumerate_pictures(x, y, a, a_prime)}
    theirs = {tuple(sorted(f.items())) for f in pictures_oracle(x, y, a, a_prime)}
    assert ours == theirs


@settings(max_examples=15)
@given(sts.skew_shapes(max_size=4), sts.skew_shapes(max_size=4))
def test_picture_sets_do_not_depend_on_the_orders(x, y):
    reference = None
    for make in (middle_eastern, far_eastern, lambda s: random_admissible_order(s, 7)):
        pics = set(enumerate_pictures(x, y, make(y), make(x)))
        if reference is None:
            reference = pics
        assert pics == reference


@settings(max_examples=15)
@given(sts.skew_shapes(max_size=4), sts.skew_shapes(max_size=4))
def test_omega_bijects_the_two_picture_sets(x, y):
    fwd = enumerate_pictures(x, y, middle_eastern(y), middle_eastern(x))
    back = enumerate_pictures(y, x, middle_eastern(x), middle_eastern(y))
    assert {omega(p) for p in fwd} == set(back)
