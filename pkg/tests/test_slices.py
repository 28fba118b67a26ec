import itertools
from fractions import Fraction

import pytest

from helpers import F, P12, S1, S2, chain, cls, full, mod
from torslice.chains import constant_chain, hn_filtration, normalize
from torslice.intervals import Interval, Module, context
from torslice.lattice import maximal_green_sequences, torsion_lattice
from torslice.slices import (
    ball_contains,
    chamber_local_constancy,
    chamber_radius_ok,
    compactness_report,
    constant_on_window,
    distance,
    distance_filt_formula,
    filt_intervals,
    hn_shape,
    in_split_locus,
    is_chamber,
    nerve,
    probes_near,
    refining_probe,
    separated_family,
    slice_surjection_exists,
    subsequence_map,
    twin_locus_member,
    wall_locus,
)


def test_distance_example(c_s2):
    other = chain(2, [7, cls(2, S2), 0], ["1/2", "3/4"])
    assert distance(c_s2, other) == F("1/6")
    assert distance_filt_formula(c_s2, other) == F("1/6")
    assert distance(c_s2, c_s2) == 0
    assert distance(c_s2, normalize(c_s2)) == 0


def test_distance_single_supports():
    p, q = chain(2, [7, 0], ["1/5"]), chain(2, [7, 0], ["7/10"])
    assert distance(p, q) == distance_filt_formula(p, q) == F("1/2")


def test_distance_rejects_mixed_n(c_s2):
    with pytest.raises(ValueError):
        distance(c_s2, chain(3, [63, 0], ["1/2"]))


def test_filt_intervals_partitions():
    ctx = context(3)
    gens = ctx.mask([Interval(1, 1), Interval(2, 3)])
    assert filt_intervals(gens, 3) == ctx.mask([Interval(1, 1), Interval(2, 3), Interval(1, 3)])


def test_ball_examples():
    center = constant_chain(cls(2, S2), 2)
    probe = chain(2, [7, cls(2, S2), 0], ["1/5", "9/10"])
    assert distance(center, probe) == F("1/5")
    assert ball_contains(center, F("1/4"), probe)
    assert ball_contains(center, F("1/4"), center)
    other = chain(2, [7, cls(2, S1), 0], ["1/5", "9/10"])
    assert not ball_contains(center, F("1/4"), other)
    assert not constant_on_window(other, cls(2, S2), F("1/4"))
    with pytest.raises(ValueError):
        ball_contains(center, 0, probe)


def test_ball_window_boundary():
    # the plateau ends exactly at 1 - eps: the window predicate holds, the open ball misses it
    center = constant_chain(cls(2, S2), 2)
    probe = chain(2, [7, cls(2, S2), 0], ["0", "7/8"])
    assert constant_on_window(probe, cls(2, S2), F("1/8"))
    assert distance(center, probe) == F("1/8")
    assert not ball_contains(center, F("1/8"), probe)


def test_nerve_n1_n2():
    cx = nerve(torsion_lattice(1))
    assert cx.simplices == ((1, 0),) and cx.f_vector == (1,)
    lat = torsion_lattice(2)
    cx = nerve(lat)
    assert cx.f_vector == (1, 3, 1)
    assert sorted(cx.facets) == sorted(maximal_green_sequences(lat))
    assert sorted(len(f) for f in cx.facets) == [3, 4]


def test_nerve_closed_under_faces():
    cx = nerve(torsion_lattice(3))
    present = set(cx.simplices)
    for s in cx.simplices:
        for k in range(1, len(s) - 1):
            assert s[:k] + s[k + 1 :] in present


def test_subsequence_examples():
    x = cls(2, S2)
    seq = (7, x, 0)
    ident = subsequence_map(seq, seq, 2)
    assert ident.f == (0, 1, 2) and ident.contained
    sm = subsequence_map((7, 0), seq, 2)
    assert sm.f == (0, 2) and sm.g == (1, 1) and sm.contained  # slice indices are 1-based
    assert subsequence_map((7, cls(2, S1), 0), seq, 2) is None
    assert slice_surjection_exists((7, 0), seq, 2)
    assert not slice_surjection_exists((7, cls(2, S1), 0), seq, 2)


def test_is_chamber_examples(c_s2):
    assert is_chamber(c_s2)
    assert not is_chamber(chain(2, [7, 0], ["1/2"]))
    assert is_chamber(chain(2, [7, cls(2, S1, P12), cls(2, S1), 0], ["1/4", "1/2", "3/4"]))


def test_chamber_constancy_on_jittered_probes(c_s2):
    eps = F("1/8")
    probes = list(probes_near(c_s2, eps))
    rep = chamber_local_constancy(c_s2, eps, probes)
    assert rep.ok and rep.within == len(probes) > 0
    with pytest.raises(ValueError):
        chamber_local_constancy(c_s2, F("1/5"), probes)
    with pytest.raises(ValueError):
        chamber_local_constancy(chain(2, [7, 0], ["1/2"]), eps, probes)
    assert chamber_radius_ok(c_s2, eps) and not chamber_radius_ok(c_s2, F("1/6"))


@pytest.mark.parametrize("eps", [F("1/2"), F("1/10"), F("1/1000")])
def test_refining_probe(eps):
    c = chain(2, [7, 0], ["1/2"])
    r = refining_probe(c, eps)
    assert distance(c, r.probe) < eps
    assert hn_shape(c, r.witness) != hn_shape(r.probe, r.witness)
    with pytest.raises(ValueError):
        refining_probe(chain(2, [7, cls(2, S2), 0], ["1/3", "2/3"]), eps)


def test_refining_probe_at_the_right_end():
    c = chain(2, [7, cls(2, S1, P12), 0], ["1/3", "1"])
    r = refining_probe(c, F("1/20"))
    assert distance(c, r.probe) < F("1/20")
    assert hn_shape(c, r.witness) != hn_shape(r.probe, r.witness)


def test_wall_examples(c_s2):
    assert wall_locus(c_s2, mod(S2)) == (True, 0)
    assert wall_locus(c_s2, mod(P12)) == (False, F("1/6"))
    on_wall = [
        chain(2, [7, 0], [x]) for x in ("1/8", "1/2", "7/8")
    ] + [chain(2, [7, cls(2, S1, P12), 0], ["1/3", "2/3"])]
    for c in on_wall:
        assert wall_locus(c, mod(P12))[0]
        assert distance(c_s2, c) >= F("1/6")


def test_split_locus():
    assert in_split_locus(chain(2, [7, 0], ["1/2"]))
    assert not in_split_locus(chain(2, [7, cls(2, S2), 0], ["1/3", "2/3"]))


def test_twin_locus_examples():
    x = cls(2, S2)
    assert twin_locus_member(chain(2, [7, x, 0], ["1/4", "3/4"]), x, x, F("1/4"), F("3/4"))
    assert not twin_locus_member(chain(2, [7, cls(2, S1), 0], ["1/4", "3/4"]), x, x, F("1/4"), F("3/4"))
    for t in torsion_lattice(2).classes[1:-1]:
        assert twin_locus_member(constant_chain(t, 2), 0, full(2), 0, 1)
    with pytest.raises(ValueError):
        twin_locus_member(constant_chain(x, 2), cls(2, S1), x, 0, 1)


def test_separated_family():
    for n, size in ((1, 2), (2, 5)):
        fam = separated_family(torsion_lattice(n))
        assert len(fam) == size
        assert all(distance(a, b) == 1 for a, b in itertools.combinations(fam, 2))


def test_compactness_report():
    rep = compactness_report(torsion_lattice(2))
    assert rep.torsion_classes == 5 and rep.verdict.startswith("compact")
    assert compactness_report(torsion_lattice(3)).torsion_classes == 14
    assert compactness_report(torsion_lattice(1)).simplices == 1
