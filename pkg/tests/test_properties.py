"""Randomized properties over chains, modules and central charges."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from torslice.chains import (
    Chain,
    chain_equal,
    chain_leq,
    chains_equivalent,
    hn_filtration,
    hn_via_torsion_subobjects,
    mho_omega,
    normalize,
    torsion_class_at,
)
from torslice.intervals import modules_up_to
from torslice.lattice import decreasing_sequences, torsion_lattice
from torslice.slices import distance, distance_filt_formula
from torslice.stability import CentralCharge, ChainMho, ChainOmega, check_weak_seesaw, eta_pm

phases = st.fractions(min_value=0, max_value=1, max_denominator=12)


@st.composite
def chains(draw, n=None):
    n = draw(st.integers(1, 3)) if n is None else n
    seq = draw(st.sampled_from(decreasing_sequences(torsion_lattice(n))))
    bps = sorted(draw(st.lists(phases, min_size=len(seq) - 1, max_size=len(seq) - 1)))
    run_flag = {x: draw(st.booleans()) for x in bps}
    return Chain(n, seq, tuple(bps), tuple(run_flag[x] for x in bps))


@st.composite
def chain_pairs(draw):
    n = draw(st.integers(1, 3))
    return draw(chains(n)), draw(chains(n)), draw(chains(n))


modules3 = st.sampled_from(modules_up_to(3, 4))


@given(chain_pairs())
def test_pseudometric(triple):
    a, b, c = triple
    assert distance(a, a) == 0
    assert distance(a, b) == distance(b, a)
    assert distance(a, c) <= distance(a, b) + distance(b, c)
    assert 0 <= distance(a, b) <= 1


@given(chain_pairs())
def test_filt_form_agrees(triple):
    a, b, _ = triple
    assert distance(a, b) == distance_filt_formula(a, b)


@given(chains(), phases)
def test_normalize_keeps_values(c, x):
    d = normalize(c)
    assert torsion_class_at(c, x) == torsion_class_at(d, x)
    assert chains_equivalent(c, d)


@given(chain_pairs())
def test_order_antisymmetric_up_to_equality(triple):
    a, b, _ = triple
    if chain_leq(a, b) and chain_leq(b, a):
        assert chain_equal(a, b) and distance(a, b) == 0


@given(chains(3), modules3, modules3)
def test_mho_omega_direct_sums(c, m1, m2):
    (a1, b1), (a2, b2) = mho_omega(c, m1), mho_omega(c, m2)
    assert mho_omega(c, m1 + m2) == (min(a1, a2), max(b1, b2))
    assert a1 <= b1


@given(chains(3), modules3)
def test_hn_agrees_with_torsion_subobjects(c, m):
    layers = hn_filtration(c, m)
    assert layers == hn_via_torsion_subobjects(c, m)
    assert layers[-1].sub == m
    assert [l.phase for l in layers] == sorted({l.phase for l in layers}, reverse=True)
    assert (layers[0].phase, layers[-1].phase) == mho_omega(c, m)[::-1]


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(-4, 4), min_size=2, max_size=2),
    st.lists(st.integers(1, 4), min_size=2, max_size=2),
)
def test_slope_phases_are_stability_conditions(theta, delta):
    v = check_weak_seesaw(CentralCharge(tuple(theta), tuple(delta)), dim_bound=5)
    assert v.passed and v.strict


@settings(max_examples=40, deadline=None)
@given(chains(2))
def test_eta_plus_of_chain_conditions(c):
    d = normalize(c)
    for phi in (ChainMho(d), ChainOmega(d)):
        plus, minus = eta_pm(phi)
        assert chains_equivalent(plus, d) and chains_equivalent(minus, d)
        assert chain_leq(minus, plus)
