"""Exhaustive and sampled invariant checks, grouped into suites for the CLI.

Each check returns a :class:`CheckResult`; nothing here raises on a failed
invariant, so one run reports every problem at once.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterable

from . import gf2
from .chains import (
    Chain,
    all_indec_quasisemistable,
    chain_equal,
    chain_leq,
    chains_equivalent,
    constant_chain,
    constant_on,
    grid_chains,
    hn_filtration,
    is_split_chain,
    mho_omega,
    normalize,
    quasisemistable_phase,
    slicing_support,
    torsion_class_at,
)
from .intervals import (
    Interval,
    Module,
    context,
    ext_nonzero,
    hom_nonzero,
    indec_subquotients,
    modules_up_to,
    nonsplit_middle,
)
from .lattice import (
    decreasing_sequences,
    filt_closure,
    is_torsion_class,
    maximal_green_sequences,
    perp,
    torsion_lattice,
    torsion_subobject,
)
from .slices import (
    ball_contains,
    chamber_local_constancy,
    constant_on_window,
    distance,
    distance_filt_formula,
    hn_shape,
    in_split_locus,
    is_chamber,
    min_gap,
    nerve,
    probes_near,
    refining_probe,
    separated_family,
    slice_surjection_exists,
    subsequence_map,
    twin_locus_member,
    wall_locus,
)
from .stability import (
    CentralCharge,
    ChainMho,
    ChainOmega,
    check_weak_seesaw,
    cut_values,
    eta_pm,
    filt_description_check,
    hn_semistable_check,
    is_semistable,
    is_stability_and_constant,
    max_destabilizing_subobject,
    phase,
    proper_subobject_classes,
    semistable_slice_check,
    ses_classes,
    tors_cuts,
    wsc_leq,
)

GRID = 8
MAX_CLASSES = 5


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.name}: {self.checked} checked{tail}"


class _Tally:
    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.first: str | None = None

    def __call__(self, ok: bool, what: Callable[[], str] | str = ""):
        self.checked += 1
        if not ok and self.first is None:
            self.first = what() if callable(what) else what

    def result(self, extra: str = "") -> CheckResult:
        detail = self.first if self.first is not None else extra
        return CheckResult(self.name, self.first is None, self.checked, detail or "")


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def sequences(n: int, max_classes: int | None = MAX_CLASSES) -> list[tuple[int, ...]]:
    return decreasing_sequences(torsion_lattice(n), max_classes)


def spread_chain(n: int, seq: tuple[int, ...]) -> Chain:
    """The chain on ``seq`` with breakpoints k/(m+1); comparisons of mho and omega
    values depend only on the order of the breakpoints, so one placement per
    sequence decides order-only statements for all strictly increasing ones."""
    m = len(seq) - 1
    return Chain(n, seq, tuple(Fraction(k, m + 1) for k in range(1, m + 1)))


def random_chain(rng: random.Random, n: int, denominator: int = GRID, repeats: bool = True) -> Chain:
    seqs = sequences(n, None)
    seq = rng.choice(seqs)
    m = len(seq) - 1
    if repeats:
        bps = sorted(Fraction(rng.randint(0, denominator), denominator) for _ in range(m))
    else:
        bps = sorted(rng.sample([Fraction(k, denominator) for k in range(denominator + 1)], m))
    # one flag per run of equal breakpoints, so no class lives on a single point
    run_flag = {x: rng.random() < 0.25 for x in bps}
    return Chain(n, seq, tuple(bps), tuple(run_flag[x] for x in bps))


def central_charges(n: int) -> list[CentralCharge]:
    thetas = itertools.product((-1, 0, 1), repeat=n)
    deltas = list(itertools.product((1, 2), repeat=n))
    return [CentralCharge(t, d) for t in thetas for d in deltas]


def chain_wscs(n: int, max_classes: int | None = MAX_CLASSES) -> list:
    out = []
    for seq in sequences(n, max_classes):
        c = spread_chain(n, seq)
        out += [ChainMho(c), ChainOmega(c)]
    return out


# --- interval-core, oracle, lattice -------------------------------------------------


def check_torsion_counts(n: int) -> CheckResult:
    t = _Tally(f"torsion classes n={n}")
    lat = torsion_lattice(n)
    size = len(context(n).indecomposables)
    image = {filt_closure(s, n) for s in range(1 << size)}
    t(set(lat.classes) == image, "enumeration differs from the closure image")
    t(len(lat) == catalan(n + 1), f"{len(lat)} classes, expected {catalan(n + 1)}")
    t(all(is_torsion_class(b, n) for b in lat.classes), "closure output not torsion")
    return t.result(f"{len(lat)} classes")


def check_hom_ext_oracle(n: int) -> CheckResult:
    t = _Tally(f"hom/ext rules vs GF(2) n={n}")
    ivs = context(n).indecomposables
    reps = {iv: gf2.module_to_rep(Module.of([iv]), n) for iv in ivs}
    for x, y in itertools.product(ivs, repeat=2):
        h = gf2.hom_dim(reps[x], reps[y])
        e = gf2.ext_dim(reps[x], reps[y])
        t(h <= 1 and e <= 1, f"dimension above one for {x},{y}")
        t((h > 0) == hom_nonzero(x, y), f"hom {x},{y}")
        t((e > 0) == ext_nonzero(x, y), f"ext {x},{y}")
        t(gf2.ext_dim_by_extensions(reps[x], reps[y]) == e, f"cocycle count {x},{y}")
        if e:
            mids = gf2.extension_middles(reps[x], reps[y])
            split = Module.of([x, y])
            nonsplit = {m for m in mids if m != split}
            mid = nonsplit_middle(x, y)
            t(nonsplit == {mid}, f"middle of {x} by {y}")
            t(mid.dim_vector(n) == split.dim_vector(n), f"middle dims {x},{y}")
    return t.result()


def check_decompose_roundtrip(n: int, dim_bound: int) -> CheckResult:
    t = _Tally(f"decompose round trip n={n}")
    for m in modules_up_to(n, dim_bound):
        t(gf2.decompose_rep(gf2.module_to_rep(m, n)) == m, str(m))
    return t.result()


def check_subobject_chains(n: int) -> CheckResult:
    t = _Tally(f"interval subobjects n={n}")
    for iv in context(n).indecomposables:
        subs, quots = indec_subquotients(iv)
        found = gf2.subreps(gf2.module_to_rep(Module.of([iv]), n))
        t(len(subs) == len(found) == iv.b - iv.a + 2, str(iv))
        t(sorted((c for _, c in found), key=Module.sort_key) == sorted(subs, key=Module.sort_key), str(iv))
        bases = [s for s, _ in found]
        t(all(a.contained_in(b) or b.contained_in(a) for a, b in itertools.combinations(bases, 2)), str(iv))
    return t.result()


def check_torsion_subobjects(n: int, dim_bound: int) -> CheckResult:
    t = _Tally(f"torsion subobjects vs GF(2) n={n}")
    ctx = context(n)
    for bits in torsion_lattice(n).classes:
        member = lambda m, b=bits: ctx.module_mask(m) & ~b == 0
        for m in modules_up_to(n, dim_bound):
            tm, fm = torsion_subobject(bits, m, n)
            _, cls, unique = gf2.max_subobject_in(m, n, member, dim_bound)
            t(cls == tm and unique, lambda: f"{m} in class {bits}")
            t(ctx.module_mask(fm) & ~perp(bits, n) == 0, lambda: f"f-part of {m}")
    return t.result()


def check_dickson_duality(n: int) -> CheckResult:
    t = _Tally(f"T = left perp of its perp n={n}")
    ctx = context(n)
    reps = {iv: gf2.module_to_rep(Module.of([iv]), n) for iv in ctx.indecomposables}
    for bits in torsion_lattice(n).classes:
        free = ctx.members(perp(bits, n))
        for iv in ctx.indecomposables:
            orth = all(gf2.hom_dim(reps[iv], reps[y]) == 0 for y in free)
            t(bool(bits & ctx.bit(iv)) == orth, f"{iv} vs class {bits}")
    return t.result()


def check_brick_labels(n: int) -> CheckResult:
    t = _Tally(f"brick labels n={n}")
    lat = torsion_lattice(n)
    for e in lat.hasse:
        upper, lower = lat.classes[e.upper], lat.classes[e.lower]
        t(filt_closure(lower | context(n).bit(e.brick), n) == upper, str(e))
        t(bool(perp(lower, n) & context(n).bit(e.brick)), str(e))
    return t.result(f"{len(lat.hasse)} edges")


# --- chains -----------------------------------------------------------------------


def check_hn(n: int, dim_bound: int, max_classes: int | None = MAX_CLASSES, denominator: int = GRID) -> CheckResult:
    """HN filtrations of every module on every grid chain, against the GF(2) oracle."""
    t = _Tally(f"HN filtrations n={n}")
    ctx = context(n)
    mods = modules_up_to(n, dim_bound)
    oracle: dict[tuple[Module, int], Module] = {}
    for seq in sequences(n, max_classes):
        # oracle: the maximal subobject in each class, taken from all subrepresentations
        for m in mods:
            subs = []
            for bits in seq:
                if (m, bits) not in oracle:
                    member = lambda x, b=bits: ctx.module_mask(x) & ~b == 0
                    _, cls, unique = gf2.max_subobject_in(m, n, member, dim_bound)
                    t(unique, lambda: f"torsion subobject of {m} not unique")
                    oracle[m, bits] = cls
                subs.append(oracle[m, bits])
            expected = [subs[j - 1] for j in range(len(seq) - 1, 0, -1) if subs[j - 1] != subs[j]]
            got = hn_filtration(spread_chain(n, seq), m)
            t([layer.sub for layer in got] == expected, lambda: f"layers of {m} on {seq}")
        for c in grid_chains(n, [seq], denominator):
            slices = {s.phase: s.members for s in slicing_support(c)}
            for m in mods:
                layers = hn_filtration(c, m)
                ok = layers[-1].sub == m and all(not l.factor.is_zero for l in layers)
                ok = ok and all(a.phase > b.phase for a, b in zip(layers, layers[1:]))
                ok = ok and all(a.sub != b.sub for a, b in zip(layers, layers[1:]))
                ok = ok and all(ctx.module_mask(l.factor) & ~slices.get(l.phase, 0) == 0 for l in layers)
                t(ok, lambda: f"{m} on {c}")
    return t.result()


def check_mho_omega_laws(n: int, dim_bound: int) -> CheckResult:
    t = _Tally(f"mho/omega laws n={n}")
    mods = modules_up_to(n, dim_bound)
    ses = ses_classes(n, dim_bound)
    for seq in sequences(n, None):
        c = spread_chain(n, seq)
        val = {m: mho_omega(c, m) for m in mods}
        for a, b in itertools.combinations_with_replacement(mods, 2):
            s = a + b
            if s.total_dim > dim_bound:
                continue
            t(val[s][0] == min(val[a][0], val[b][0]) and val[s][1] == max(val[a][1], val[b][1]), f"{a}+{b}")
        for l, m, q in ses:
            (ml, ol), (mm, om), (mq, oq) = val[l], val[m], val[q]
            t(mm <= mq and mm >= min(ml, mq) and om >= ol and om <= max(ol, oq), f"{l}->{m}->{q}")
        for m in mods:
            qss = quasisemistable_phase(c, m) is not None
            t(val[m][0] <= val[m][1] and (val[m][0] == val[m][1]) == qss, str(m))
    return t.result()


def check_normalize_and_order(n: int, samples: int = 300, seed: int = 7) -> CheckResult:
    t = _Tally(f"normalize and chain order n={n}")
    rng = random.Random(seed)
    for _ in range(samples):
        c = random_chain(rng, n)
        try:
            d = normalize(c)
        except ValueError:
            continue  # a class living on a single point has no canonical collapse
        t(chain_equal(c, d) and chains_equivalent(c, d), str(c))
        t(normalize(d) == d, str(d))
    for _ in range(samples):
        a, b, c = (random_chain(rng, n, repeats=False) for _ in range(3))
        t(chain_leq(a, a), str(a))
        if chain_leq(a, b) and chain_leq(b, a):
            t(normalize(a) == normalize(b) and a.lower_at == b.lower_at, f"{a} {b}")
        if chain_leq(a, b) and chain_leq(b, c):
            t(chain_leq(a, c), f"{a} {b} {c}")
    return t.result()


def check_split_total(n: int, max_classes: int | None = MAX_CLASSES, denominator: int = GRID) -> CheckResult:
    t = _Tally(f"split pairs vs total semistability n={n}")
    ivs = [Module.of([iv]) for iv in context(n).indecomposables]
    for c in grid_chains(n, sequences(n, max_classes), denominator):
        split = is_split_chain(c)
        qss = all_indec_quasisemistable(c)
        t(split == qss, lambda: f"predicates disagree on {c}")
        t(qss == in_split_locus(c), lambda: f"split locus on {c}")
        for phi in (ChainMho(c), ChainOmega(c)):
            total = all(is_semistable(phi, iv) for iv in ivs)
            t(total == split, lambda: f"semistable intervals on {phi}")
    return t.result()


# --- stability ------------------------------------------------------------------------


def check_seesaw(n: int, dim_bound: int, max_classes: int | None = MAX_CLASSES, denominator: int = GRID) -> CheckResult:
    t = _Tally(f"see-saw n={n}")
    for c in grid_chains(n, sequences(n, max_classes), denominator):
        for phi in (ChainMho(c), ChainOmega(c)):
            v = check_weak_seesaw(phi, dim_bound=dim_bound)
            t(v.passed, lambda: f"{phi} fails on {v.witness}")
            facts = is_stability_and_constant(phi, dim_bound)
            t(facts.coincide, lambda: f"{phi}: {facts}")
    for cc in central_charges(n):
        v = check_weak_seesaw(cc, dim_bound=dim_bound)
        t(v.passed and v.strict, lambda: f"{cc} fails on {v.strict_witness}")
    return t.result()


def check_chain_sandwich(n: int, max_classes: int | None = MAX_CLASSES, denominator: int = GRID) -> CheckResult:
    t = _Tally(f"chain sandwich and same slicing n={n}")
    for c in grid_chains(n, sequences(n, max_classes), denominator):
        mp, mm = eta_pm(ChainMho(c))
        op, om = eta_pm(ChainOmega(c))
        order = [mm, om, c, mp, op]
        t(all(chain_leq(a, b) for a, b in zip(order, order[1:])), lambda: f"order on {c}")
        t(all(chains_equivalent(c, x) for x in order), lambda: f"slicing on {c}")
        for flags in itertools.product((False, True), repeat=c.steps):
            other = Chain(c.n, c.classes, c.breakpoints, flags)
            t(chain_leq(mm, other) and chain_leq(other, op), lambda: f"extremes around {other}")
    return t.result()


def _tested_wscs(n: int) -> list:
    return chain_wscs(n) + central_charges(n)


def check_wsc_theorems(n: int, dim_bound: int) -> CheckResult:
    t = _Tally(f"WSC round trips n={n}")
    mods = modules_up_to(n, dim_bound)
    for phi in _tested_wscs(n):
        plus, minus = eta_pm(phi)
        for c in (plus, minus):
            t(all(is_torsion_class(x, n) for x in c.classes), lambda: f"{phi}")
        ladder = [ChainMho(minus), ChainMho(plus), phi, ChainOmega(minus), ChainOmega(plus)]
        t(all(wsc_leq(a, b, dim_bound) for a, b in zip(ladder, ladder[1:])), lambda: f"ladder {phi}")
        report = semistable_slice_check(phi, dim_bound)
        t(report.ok, lambda: f"{phi}: {report.counterexamples[:1]}")
        for p in (Fraction(0), Fraction(1)) + cut_values(phi):
            t(filt_description_check(phi, p, dim_bound), lambda: f"{phi} at {p}")
        for m in mods:
            t(hn_semistable_check(phi, m, dim_bound), lambda: f"HN of {m} for {phi}")
        for m in mods[:40]:
            d = max_destabilizing_subobject(phi, m, dim_bound)
            subs = {s for s, _ in proper_subobject_classes(m, n, dim_bound)} | {m}
            top = max(phase(phi, s) for s in subs)
            t(is_semistable(phi, d, dim_bound) and phase(phi, d) == top, lambda: f"destab {m} {phi}")
        if not isinstance(phi, CentralCharge):
            c = phi.chain
            t(wsc_leq(ChainMho(c), ChainOmega(c), dim_bound), lambda: f"mho <= omega {c}")
    return t.result()


# --- metric -------------------------------------------------------------------------


def check_pseudometric(n_values: Iterable[int], triples: int = 1000, seed: int = 11) -> CheckResult:
    t = _Tally("pseudometric axioms")
    rng = random.Random(seed)
    ns = list(n_values)
    for k in range(triples):
        n = ns[k % len(ns)]
        a, b, c = (random_chain(rng, n) for _ in range(3))
        dab, dbc, dac = distance(a, b), distance(b, c), distance(a, c)
        t(distance(a, a) == 0 and dab == distance(b, a), f"{a} {b}")
        t(dac <= dab + dbc, f"triangle {a} {b} {c}")
        t(0 <= dab <= 1, f"range {a} {b}")
    return t.result()


def check_filt_formula(n_values: Iterable[int], pairs: int = 500, seed: int = 13) -> CheckResult:
    t = _Tally("distance equals Filt formula")
    rng = random.Random(seed)
    ns = list(n_values)
    for k in range(pairs):
        n = ns[k % len(ns)]
        a, b = random_chain(rng, n), random_chain(rng, n)
        t(distance(a, b) == distance_filt_formula(a, b), lambda: f"{a} {b}")
    return t.result()


def check_sup_over_intervals(n: int, dim_bound: int, pairs: int = 100, seed: int = 17) -> CheckResult:
    t = _Tally(f"sup over modules = sup over intervals n={n}")
    rng = random.Random(seed)
    mods = modules_up_to(n, dim_bound)
    for _ in range(pairs):
        a, b = random_chain(rng, n), random_chain(rng, n)
        full = max(
            max(abs(x - y) for x, y in zip(mho_omega(a, m), mho_omega(b, m))) for m in mods
        )
        t(full == distance(a, b), f"{a} {b}")
    return t.result()


def check_chebyshev(n: int, max_classes: int | None = MAX_CLASSES, denominator: int = GRID) -> CheckResult:
    t = _Tally(f"Chebyshev within a simplex n={n}")
    for seq in sequences(n, max_classes):
        chains = list(grid_chains(n, [seq], denominator))
        ticks = [tuple(int(x * denominator) for x in c.breakpoints) for c in chains]
        for (a, ta), (b, tb) in itertools.product(zip(chains, ticks), repeat=2):
            cheb = Fraction(max(abs(x - y) for x, y in zip(ta, tb)), denominator)
            t(distance(a, b) == cheb, lambda: f"{a} {b}")
    return t.result()


def check_zero_distance(n: int, denominator: int) -> CheckResult:
    t = _Tally(f"zero distance iff same slicing n={n}")
    chains = list(grid_chains(n, sequences(n, None), denominator))
    for a, b in itertools.product(chains, repeat=2):
        t((distance(a, b) == 0) == chains_equivalent(a, b), lambda: f"{a} {b}")
    return t.result()


def check_separation(n: int) -> CheckResult:
    t = _Tally(f"separated family n={n}")
    lat = torsion_lattice(n)
    fam = separated_family(lat)
    t(len(fam) == len(lat), "family size")
    for a, b in itertools.combinations(fam, 2):
        t(distance(a, b) == 1, lambda: f"{a} {b}")
    return t.result()


def check_ball_characterization(n: int, denominator: int = GRID, max_classes: int | None = MAX_CLASSES) -> CheckResult:
    """Ball of radius eps around a constant chain vs 'constant on [eps, 1 - eps]', as stated."""
    t = _Tally(f"ball characterization n={n}")
    lat = torsion_lattice(n)
    chains = list(grid_chains(n, sequences(n, max_classes), denominator))
    for bits in lat.classes[1:-1]:
        center = constant_chain(bits, n)
        for eps in (Fraction(1, 8), Fraction(1, 4), Fraction(3, 8)):
            for probe in chains:
                lhs = ball_contains(center, eps, probe)
                rhs = constant_on_window(probe, bits, eps)
                t(lhs == rhs, lambda: f"eps={eps} center={bits} probe={probe}: ball {lhs}, window {rhs}")
    return t.result()


def plateau_reaches(probe: Chain, bits: int, eps: Fraction) -> bool:
    """Whether the probe equals ``bits`` on [delta, 1 - delta] for some delta < eps."""
    below = max((x for x in probe.breakpoints if x < eps), default=Fraction(0))
    above = min((x for x in probe.breakpoints if x > 1 - eps), default=Fraction(1))
    return constant_on(probe, bits, (below + eps) / 2, (above + 1 - eps) / 2)


def check_ball_repaired(n: int, denominator: int = GRID, max_classes: int | None = MAX_CLASSES) -> CheckResult:
    """Same comparison with the window opened slightly: constant on [delta, 1-delta] for some delta < eps."""
    t = _Tally(f"ball characterization, open window n={n}")
    lat = torsion_lattice(n)
    chains = list(grid_chains(n, sequences(n, max_classes), denominator))
    for bits in lat.classes[1:-1]:
        center = constant_chain(bits, n)
        for eps in (Fraction(1, 8), Fraction(1, 4), Fraction(3, 8)):
            for probe in chains:
                t(ball_contains(center, eps, probe) == plateau_reaches(probe, bits, eps), lambda: f"{eps} {probe}")
    return t.result()


# --- nerve and chambers -------------------------------------------------------------------


def check_nerve(n: int) -> CheckResult:
    t = _Tally(f"nerve n={n}")
    lat = torsion_lattice(n)
    cx = nerve(lat)
    mgs = maximal_green_sequences(lat)
    t(sorted(cx.facets) == sorted(mgs) and len(set(cx.facets)) == len(cx.facets), "facets differ from MGS")
    present = set(cx.simplices)
    for s in cx.simplices:
        for k in range(1, len(s) - 1):
            t(s[:k] + s[k + 1 :] in present, f"face of {s}")
    t(sum(cx.f_vector) == len(cx.simplices), "f-vector total")
    seqs = [tuple(lat.classes[i] for i in s) for s in cx.simplices]
    for sub, seq in itertools.product(seqs, repeat=2):
        sm = subsequence_map(sub, seq, n)
        t((sm is not None) == slice_surjection_exists(sub, seq, n), lambda: f"{sub} in {seq}")
        if sm is not None:
            t(sm.contained and all(seq[sm.f[k]] == sub[k] for k in range(len(sub))), f"{sub} in {seq}")
    return t.result(f"f-vector {list(cx.f_vector)}")


def chamber_radius(c: Chain) -> Fraction:
    """A radius below half the smallest gap that keeps probe windows three grid points wide."""
    g = min_gap(c)
    cap = Fraction(1, 16) if g is None else min(g / 2, Fraction(1, 16))
    return cap - Fraction(1, 128)


def check_chambers(n: int, dim_bound: int, denominator: int = GRID, probe_denominator: int = 32) -> CheckResult:
    t = _Tally(f"chambers n={n}")
    lat = torsion_lattice(n)
    for ids in maximal_green_sequences(lat):
        seq = tuple(lat.classes[i] for i in ids)
        for c in grid_chains(n, [seq], denominator):
            eps = chamber_radius(c)
            rep = chamber_local_constancy(c, eps, probes_near(c, eps, probe_denominator), dim_bound)
            t(rep.ok, lambda: f"{c}: {rep.failures[:1]}")
    mgs = {tuple(lat.classes[i] for i in ids) for ids in maximal_green_sequences(lat)}
    for c in grid_chains(n, sequences(n, None), denominator):
        t(is_chamber(c) == (c.classes in mgs), lambda: f"{c}")
        if c.classes in mgs:
            continue
        for eps in (Fraction(1, 2), Fraction(1, 16), Fraction(1, 1000)):
            r = refining_probe(c, eps)
            ok = distance(c, r.probe) < eps and r.witness.total_dim <= dim_bound
            ok = ok and hn_shape(c, r.witness) != hn_shape(r.probe, r.witness)
            t(ok, lambda: f"{c} at {eps}")
    return t.result()


def check_walls(n: int, samples: int = 200, seed: int = 19) -> CheckResult:
    t = _Tally(f"wall loci n={n}")
    rng = random.Random(seed)
    ivs = [Module.of([iv]) for iv in context(n).indecomposables]
    pool = [random_chain(rng, n) for _ in range(samples)]
    for x in ivs:
        members = [c for c in pool if wall_locus(c, x)[0]]
        for c in pool[:60]:
            bound = wall_locus(c, x)[1]
            for other in members:
                t(distance(c, other) >= bound, lambda: f"{c} {other} {x}")
    lat = torsion_lattice(n)
    grid = list(grid_chains(n, sequences(n, 4), 4))
    for e in lat.hasse:
        upper, lower = lat.classes[e.upper], lat.classes[e.lower]
        brick = Module.of([e.brick])
        for a, b in ((Fraction(1, 4), Fraction(3, 4)), (Fraction(0), Fraction(1, 2))):
            for c in grid:
                if twin_locus_member(c, lower, upper, a, b):
                    t(wall_locus(c, brick)[0], lambda: f"{c} not on the wall of {e.brick}")
    return t.result()


def check_mgs_counts(n: int) -> CheckResult:
    t = _Tally(f"maximal green sequences n={n}")
    lat = torsion_lattice(n)
    # count maximal chains straight from containment, without the stored Hasse diagram
    below = {c: [d for d in lat.classes if d != c and d & ~c == 0] for c in lat.classes}
    covers = {c: [d for d in below[c] if not any(d & ~e == 0 and e != d for e in below[c])] for c in lat.classes}
    memo: dict[int, int] = {0: 1}

    def count(c):
        if c not in memo:
            memo[c] = sum(count(d) for d in covers[c])
        return memo[c]

    got = len(maximal_green_sequences(lat))
    t(got == count(lat.top), f"{got} vs {count(lat.top)}")
    return t.result(f"{got} sequences")


# --- suites ---------------------------------------------------------------------------------


SUITES = ("core", "stability", "metric", "chambers")


def run_suite(name: str, n: int, dim_bound: int = 6) -> list[CheckResult]:
    if name == "all":
        return [r for s in SUITES for r in run_suite(s, n, dim_bound)]
    if name == "core":
        return [
            check_torsion_counts(n),
            check_hom_ext_oracle(n),
            check_decompose_roundtrip(n, dim_bound),
            check_subobject_chains(n),
            check_torsion_subobjects(n, dim_bound),
            check_dickson_duality(n),
            check_brick_labels(n),
            check_mgs_counts(n),
        ]
    if name == "stability":
        return [
            check_hn(n, dim_bound),
            check_mho_omega_laws(n, dim_bound),
            check_normalize_and_order(n),
            check_split_total(n),
            check_seesaw(n, dim_bound),
            check_chain_sandwich(n),
            check_wsc_theorems(n, dim_bound),
        ]
    if name == "metric":
        return [
            check_pseudometric([n]),
            check_filt_formula([n]),
            check_sup_over_intervals(n, dim_bound),
            check_chebyshev(n),
            check_zero_distance(n, 4),
            check_separation(n),
            check_ball_characterization(n),
            check_ball_repaired(n),
        ]
    if name == "chambers":
        return [check_nerve(n), check_chambers(n, dim_bound), check_walls(n)]
    raise ValueError(f"unknown suite {name!r}")
