import itertools

import pytest

from helpers import mod
from torslice import gf2
from torslice.intervals import Module, context, ext_nonzero, hom_nonzero, nonsplit_middle


def rep(text, n=2):
    return gf2.module_to_rep(mod(text, n), n)


def test_module_to_rep_shapes():
    r = rep("0")
    assert r.dims == (0, 0)
    r = rep("[1,2]")
    assert r.dims == (1, 1) and r.maps == ((1,),)
    r = rep("[1,1]+[2,2]")
    assert r.dims == (1, 1) and r.maps == ((0,),)


def test_decompose_examples():
    assert gf2.decompose_rep(rep("[1,2]")) == mod("[1,2]")
    assert gf2.decompose_rep(gf2.Rep((1, 1), ((0,),))) == mod("[1,1]+[2,2]")


def test_pushout_middle_decomposes():
    x, y = rep("[1,2]", 3), rep("[2,3]", 3)
    mids = gf2.extension_middles(x, y)
    assert set(mids) == {mod("[1,2]+[2,3]", 3), mod("[1,3]+[2,2]", 3)}


def test_subreps_counts():
    subs = gf2.subreps(rep("[1,2]"))
    assert sorted(str(c) for _, c in subs) == ["0", "[1,2]", "[2,2]"]
    assert len(gf2.subreps(rep("[1,1]"))) == 2
    assert len(gf2.subreps(rep("[1,1]+[2,2]"))) == 4


def test_quotients():
    r = rep("[1,2]")
    by_class = {str(c): s for s, c in gf2.subreps(r)}
    assert gf2.quotient(r, by_class["[2,2]"]) == mod("[1,1]")
    assert gf2.quotient(r, by_class["0"]) == mod("[1,2]")
    assert gf2.quotient(r, by_class["[1,2]"]).is_zero


def test_hom_ext_dims():
    assert gf2.hom_dim(rep("[1,2]"), rep("[1,1]")) == 1
    assert gf2.ext_dim(rep("[1,1]"), rep("[2,2]")) == 1
    for iv in context(3).indecomposables:
        r = gf2.module_to_rep(Module.of([iv]), 3)
        assert gf2.hom_dim(r, r) == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_rules_match_oracle_exhaustively(n):
    ivs = context(n).indecomposables
    reps = {iv: gf2.module_to_rep(Module.of([iv]), n) for iv in ivs}
    for x, y in itertools.product(ivs, repeat=2):
        assert (gf2.hom_dim(reps[x], reps[y]) > 0) == hom_nonzero(x, y)
        e = gf2.ext_dim(reps[x], reps[y])
        assert (e > 0) == ext_nonzero(x, y)
        assert e == gf2.ext_dim_by_extensions(reps[x], reps[y])
        if e:
            mids = set(gf2.extension_middles(reps[x], reps[y])) - {Module.of([x, y])}
            assert mids == {nonsplit_middle(x, y)}


def test_enumerate_ses():
    assert gf2.enumerate_ses(mod("[1,1]"), 2) == []
    assert gf2.enumerate_ses(mod("[1,2]"), 2) == [(mod("[2,2]"), mod("[1,2]"), mod("[1,1]"))]
    assert len(gf2.enumerate_ses(mod("[1,1]+[2,2]"), 2)) == 2


def test_dimension_guard():
    with pytest.raises(gf2.DimensionBoundError):
        gf2.subreps(rep("[1,2]*5"), dim_bound=8)


def test_max_subobject_in_unique():
    member = lambda m: all(iv.b == 2 and iv.a == 2 for iv in m.distinct())
    _, cls, unique = gf2.max_subobject_in(mod("[1,2]+[2,2]"), 2, member)
    assert cls == mod("[2,2]*2") and unique
