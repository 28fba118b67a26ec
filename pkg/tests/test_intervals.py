import pytest

from helpers import mod
from torslice.intervals import (
    Interval,
    Module,
    ext_nonzero,
    format_module,
    hom_nonzero,
    indec_subquotients,
    indecomposables,
    modules_up_to,
    nonsplit_middle,
    parse_module,
)

I = Interval


def test_indecomposables_lexicographic():
    assert indecomposables(1) == (I(1, 1),)
    assert indecomposables(2) == (I(1, 1), I(1, 2), I(2, 2))
    assert len(indecomposables(3)) == 6
    assert list(indecomposables(4)) == sorted(indecomposables(4), key=lambda iv: (iv.a, iv.b))


def test_interval_validation():
    with pytest.raises(ValueError):
        Interval(2, 1)
    with pytest.raises(ValueError):
        Interval(0, 1)


@pytest.mark.parametrize(
    "x, y, expected",
    [((1, 2), (1, 1), True), ((1, 1), (1, 2), False), ((2, 2), (1, 2), True), ((1, 1), (1, 1), True)],
)
def test_hom_rule(x, y, expected):
    assert hom_nonzero(I(*x), I(*y)) is expected


@pytest.mark.parametrize(
    "x, y, expected",
    [((1, 1), (2, 2), True), ((2, 2), (1, 1), False), ((1, 2), (2, 3), True), ((1, 1), (1, 1), False)],
)
def test_ext_rule(x, y, expected):
    assert ext_nonzero(I(*x), I(*y)) is expected


def test_nonsplit_middle_examples():
    assert nonsplit_middle(I(1, 1), I(2, 2)) == mod("[1,2]")
    assert nonsplit_middle(I(1, 2), I(2, 3)) == mod("[1,3]+[2,2]", 3)
    assert nonsplit_middle(I(1, 1), I(2, 3)) == mod("[1,3]", 3)
    with pytest.raises(ValueError):
        nonsplit_middle(I(2, 2), I(1, 1))


def test_subquotients():
    subs, quots = indec_subquotients(I(2, 2))
    assert subs == [mod("[2,2]"), Module()] and quots == [mod("[2,2]"), Module()]
    subs, quots = indec_subquotients(I(1, 2))
    assert subs == [mod("[1,2]"), mod("[2,2]"), Module()]
    assert quots == [mod("[1,2]"), mod("[1,1]"), Module()]
    assert len(indec_subquotients(I(1, 3))[0]) == 4


def test_module_text_round_trip():
    for text in ["0", "[1,2]", "[1,1]+[2,2]", "[1,2]*3+[2,2]"]:
        assert format_module(parse_module(text, 2)) == text
    assert parse_module("[2,2]+[1,1]", 2) == parse_module("[1,1]+[2,2]", 2)


@pytest.mark.parametrize("text", ["[3,3]", "[1,", "[2,1]", "x", "[1,1]*0"])
def test_module_parse_errors(text):
    with pytest.raises(ValueError):
        parse_module(text, 2)


def test_modules_up_to_counts():
    mods = modules_up_to(2, 2)
    # S1, S2, [1,2], 2S1, S1+S2, 2S2
    assert len(mods) == 6
    assert all(m.total_dim <= 2 for m in mods)
    assert len(modules_up_to(3, 6)) == 216


def test_direct_sum_and_dims():
    m = mod("[1,2]") + mod("[2,2]")
    assert m.dim_vector(2) == (1, 2)
    assert m.total_dim == 3
    assert Module().is_zero
