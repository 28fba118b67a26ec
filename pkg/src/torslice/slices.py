"""The pseudometric on chains, the nerve of Tors, chambers and walls."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .chains import (
    Chain,
    as_phase,
    hn_filtration,
    interval_phase_table,
    mho_omega,
    normalize,
    slicing_support,
    torsion_class_at,
)
from .intervals import Interval, Module, context, modules_up_to
from .lattice import (
    TorsLattice,
    decreasing_sequences,
    maximal_green_sequences,
    perp,
    torsion_lattice,
    torsion_subobject,
)


def distance(c1: Chain, c2: Chain) -> Fraction:
    """Largest shift of mho or omega over the indecomposables."""
    if c1.n != c2.n:
        raise ValueError("chains live on different categories")
    # exact, but compared on integer pairs; Fraction arithmetic dominates otherwise
    bn, bd = 0, 1
    for pair1, pair2 in zip(interval_phase_table(c1), interval_phase_table(c2)):
        for x, y in zip(pair1, pair2):
            if x is y:
                continue
            dn = abs(x.numerator * y.denominator - y.numerator * x.denominator)
            dd = x.denominator * y.denominator
            if dn * bd > bn * dd:
                bn, bd = dn, dd
    return Fraction(bn, bd)


# --- the Filt form of the distance ------------------------------------------


@lru_cache(maxsize=None)
def filt_intervals(gens: int, n: int) -> int:
    """Intervals filtered by the given intervals.

    A filtration of ``[a,b]`` runs through its submodules ``[c,b]``, so the
    interval is filtered by a set exactly when it can be cut into consecutive
    pieces ``[a,c1-1], [c1,c2-1], ...`` that all lie in the set.
    """
    ctx = context(n)
    out = 0
    for iv in ctx.indecomposables:
        reach = {iv.a}
        for start in range(iv.a, iv.b + 1):
            if start not in reach:
                continue
            for end in range(start, iv.b + 1):
                if gens & ctx.bit(Interval(start, end)):
                    reach.add(end + 1)
        if iv.b + 1 in reach:
            out |= ctx.bit(iv)
    return out


def _window_ok(src: Chain, dst: Chain, eps: Fraction) -> bool:
    src_slices = slicing_support(src)
    for s in slicing_support(dst):
        gens = 0
        for t in src_slices:
            if s.phase - eps <= t.phase <= s.phase + eps:
                gens |= t.members
        if s.members & ~filt_intervals(gens, dst.n):
            return False
    return True


def distance_filt_formula(c1: Chain, c2: Chain) -> Fraction:
    """Least eps with each phase category of one chain filtered by the other's eps-window, both ways."""
    p1 = [s.phase for s in slicing_support(c1)]
    p2 = [s.phase for s in slicing_support(c2)]
    candidates = sorted({Fraction(0), Fraction(1)} | {abs(a - b) for a in p1 for b in p2})
    for eps in candidates:
        if _window_ok(c1, c2, eps) and _window_ok(c2, c1, eps):
            return eps
    raise AssertionError("no feasible window width; the slicings are malformed")


def ball_contains(center: Chain, eps, probe: Chain) -> bool:
    eps = Fraction(eps)
    if not 0 < eps < 1:
        raise ValueError("radius must lie in (0, 1)")
    return distance(center, probe) < eps


def constant_on_window(probe: Chain, bits: int, eps) -> bool:
    """Whether the probe takes the value ``bits`` at every r in [eps, 1 - eps]."""
    from .chains import constant_on

    eps = Fraction(eps)
    return constant_on(probe, bits, eps, 1 - eps)


# --- nerve -------------------------------------------------------------------


@dataclass(frozen=True)
class NerveComplex:
    n: int
    simplices: tuple[tuple[int, ...], ...]
    facets: tuple[tuple[int, ...], ...]
    f_vector: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.simplices)


def _proper_subsequence_of_some(seq: tuple[int, ...], present: set, classes: Sequence[int]) -> bool:
    for k in range(len(seq) - 1):
        hi, lo = seq[k], seq[k + 1]
        for c in classes:
            if c != hi and c != lo and lo & ~c == 0 and c & ~hi == 0:
                if seq[: k + 1] + (c,) + seq[k + 1 :] in present:
                    return True
    return False


def nerve(lattice: TorsLattice, max_len: int | None = None) -> NerveComplex:
    """Strictly decreasing sequences from the whole category to zero, as lattice ids.

    ``f_vector[k]`` counts the sequences with ``k + 1`` steps, i.e. the
    simplices of dimension ``k + 1`` (one coordinate per breakpoint).
    """
    seqs = decreasing_sequences(lattice, max_len)
    present = set(seqs)
    facets = [s for s in seqs if not _proper_subsequence_of_some(s, present, lattice.classes)]
    longest = max(len(s) for s in seqs) - 1
    f = [0] * longest
    for s in seqs:
        f[len(s) - 2] += 1
    ids = lambda s: tuple(lattice.id_of(b) for b in s)
    return NerveComplex(
        lattice.n,
        tuple(ids(s) for s in seqs),
        tuple(ids(s) for s in facets),
        tuple(f),
    )


@dataclass(frozen=True)
class SubsequenceMap:
    f: tuple[int, ...]  # class index of the subsequence -> class index of the sequence
    g: tuple[int, ...]  # slice index alpha (1-based, position alpha-1) -> slice index of the subsequence
    contained: bool  # every slice of the sequence sits in its image slice


def sequence_slices(seq: Sequence[int], n: int) -> list[int]:
    """Phase categories X_{a-1} & perp(X_a) for a = 1..m."""
    return [hi & perp(lo, n) for hi, lo in zip(seq, seq[1:])]


def subsequence_map(sub: Sequence[int], seq: Sequence[int], n: int) -> SubsequenceMap | None:
    sub, seq = tuple(sub), tuple(seq)
    f = []
    pos = 0
    for x in sub:
        while pos < len(seq) and seq[pos] != x:
            pos += 1
        if pos == len(seq):
            return None
        f.append(pos)
        pos += 1
    if f[0] != 0 or f[-1] != len(seq) - 1:
        return None
    g = []
    for alpha in range(1, len(seq)):
        beta = next(b for b in range(1, len(sub)) if f[b - 1] < alpha <= f[b])
        g.append(beta)
    big, small = sequence_slices(seq, n), sequence_slices(sub, n)
    contained = all(big[a] & ~small[g[a] - 1] == 0 for a in range(len(big)))
    return SubsequenceMap(tuple(f), tuple(g), contained)


def slice_surjection_exists(sub: Sequence[int], seq: Sequence[int], n: int) -> bool:
    """Search all order-preserving surjections for one that carries slices into slices."""
    big, small = sequence_slices(seq, n), sequence_slices(sub, n)
    m, k = len(big), len(small)
    if k > m:
        return False
    # a monotone surjection [m] -> [k] is fixed by its k - 1 jump positions
    for cuts in itertools.combinations(range(1, m), k - 1):
        bounds = (0,) + cuts + (m,)
        if all(
            big[a] & ~small[b] == 0
            for b in range(k)
            for a in range(bounds[b], bounds[b + 1])
        ):
            return True
    return False


# --- chambers ------------------------------------------------------------------


def is_chamber(c: Chain) -> bool:
    lat = torsion_lattice(c.n)
    return all(lat.is_cover(hi, lo) for hi, lo in zip(c.classes, c.classes[1:]))


def hn_shape(c: Chain, m: Module) -> tuple[tuple[Module, Module], ...]:
    """HN layers without their phases."""
    return tuple((layer.sub, layer.factor) for layer in hn_filtration(c, m))


def min_gap(c: Chain) -> Fraction | None:
    gaps = [b - a for a, b in zip(c.breakpoints, c.breakpoints[1:])]
    return min(gaps) if gaps else None


def chamber_radius_ok(c: Chain, eps) -> bool:
    eps = Fraction(eps)
    g = min_gap(c)
    return eps > 0 and (g is None or eps < g / 2)


@dataclass
class ChamberReport:
    probes: int = 0
    within: int = 0
    modules: int = 0
    failures: list[tuple[Chain, Module]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def chamber_local_constancy(
    c: Chain, eps, probes: Iterable[Chain], dim_bound: int = 6
) -> ChamberReport:
    """Compare HN layers (ignoring phases) of every probe within eps against ``c``.

    Layers depend only on the collapsed class sequence, so the comparison is
    memoized per sequence; the distance test is exact for every probe.
    """
    eps = Fraction(eps)
    if not is_chamber(c):
        raise ValueError("the chain is not a maximal green sequence")
    if not chamber_radius_ok(c, eps):
        raise ValueError(f"radius {eps} is not below half the smallest breakpoint gap")
    mods = modules_up_to(c.n, dim_bound)
    report = ChamberReport(modules=len(mods))
    base = {m: hn_shape(c, m) for m in mods}
    verdicts: dict[tuple[int, ...], Module | None] = {}
    for probe in probes:
        report.probes += 1
        if distance(c, probe) >= eps:
            continue
        report.within += 1
        key = normalize(probe).classes
        if key not in verdicts:
            verdicts[key] = next((m for m in mods if hn_shape(probe, m) != base[m]), None)
        if verdicts[key] is not None:
            report.failures.append((probe, verdicts[key]))
    return report


@lru_cache(maxsize=None)
def _phase_indices(classes: tuple[int, ...], n: int) -> tuple[tuple[int, int], ...]:
    """Per interval, the breakpoint positions carrying its mho and omega."""
    out = []
    for iv in context(n).indecomposables:
        bit = context(n).bit(iv)
        j_star = max(j for j, x in enumerate(classes) if x & bit)
        j_free = min(j for j in range(1, len(classes)) if perp(classes[j], n) & bit)
        out.append((j_star, j_free - 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _window_assignments(classes: tuple[int, ...], n: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """(probe sequence, window of each probe breakpoint) pairs that keep every mho and omega in its window."""
    target = _phase_indices(classes, n)
    m = len(classes) - 1
    out = []
    for seq in decreasing_sequences(torsion_lattice(n)):
        idx = _phase_indices(seq, n)
        for w in itertools.combinations_with_replacement(range(m), len(seq) - 1):
            if all(w[a] == ta and w[b] == tb for (a, b), (ta, tb) in zip(idx, target)):
                out.append((seq, w))
    return tuple(out)


def probes_near(c: Chain, eps, denominator: int = 32) -> Iterator[Chain]:
    """Every canonical chain on the grid {k/denominator} at distance < eps from ``c``.

    Each probe breakpoint carries some quasisemistable interval, whose mho
    and omega for ``c`` are breakpoints of ``c``; so every probe breakpoint
    sits within eps of a breakpoint of ``c``.  With eps below half the
    smallest gap these windows are disjoint and the distance is < eps
    exactly when every interval keeps its mho and omega in the matching
    window.  That test depends only on which window each probe breakpoint
    uses, so it runs once per sequence before any placement is generated.
    """
    eps = Fraction(eps)
    if not chamber_radius_ok(c, eps):
        raise ValueError("windows overlap; eps must be below half the smallest gap")
    c = normalize(c)
    grid = [Fraction(k, denominator) for k in range(denominator + 1)]
    windows = [[p for p in grid if abs(p - x) < eps] for x in c.breakpoints]
    for seq, w in _window_assignments(c.classes, c.n):
        counts = [w.count(k) for k in range(len(windows))]
        choices = [itertools.combinations(win, k) for win, k in zip(windows, counts)]
        for parts in itertools.product(*choices):
            bps = tuple(p for part in parts for p in part)
            yield Chain(c.n, seq, bps)


@dataclass(frozen=True)
class RefiningProbe:
    probe: Chain
    witness: Module
    inserted: int  # bitset of the class placed between two consecutive classes


def refining_probe(c: Chain, eps) -> RefiningProbe:
    """A chain within eps of a non-chamber ``c`` whose HN filtrations differ on some module.

    A class Y strictly between X_j and X_{j+1} takes over a short window
    next to the breakpoint x_{j+1}.  With B1 the torsion-free part of a
    member of Y relative to X_{j+1} and B2 the torsion-free part of a member
    of X_j relative to Y, the sum B1 + B2 lies in one phase category of
    ``c`` but splits into two layers for the probe.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("radius must be positive")
    n = c.n
    lat = torsion_lattice(n)
    ctx = context(n)
    for j, (hi, lo) in enumerate(zip(c.classes, c.classes[1:])):
        mids = [y for y in lat.classes if y not in (hi, lo) and lo & ~y == 0 and y & ~hi == 0]
        if mids:
            break
    else:
        raise ValueError("the chain is a maximal green sequence; nothing to refine")
    y = mids[0]
    x = c.breakpoints[j]
    nxt = c.breakpoints[j + 1] if j + 1 < c.steps else Fraction(1)
    prv = c.breakpoints[j - 1] if j > 0 else Fraction(0)
    bps = list(c.breakpoints)
    flags = list(c.lower_at)
    classes = list(c.classes)
    classes.insert(j + 1, y)
    if x < 1:
        # Y takes over (x, x + delta]
        delta = min(eps / 2, (nxt - x) / 2)
        bps.insert(j + 1, x + delta)
        flags.insert(j + 1, False)
    else:
        # Y takes over (x - delta, x]
        delta = min(eps / 2, (x - prv) / 2)
        bps.insert(j, x - delta)
        flags.insert(j, False)
    probe = Chain(n, tuple(classes), tuple(bps), tuple(flags))
    i1 = ctx.members(y & ~lo)[0]
    i2 = ctx.members(hi & ~y)[0]
    b1 = torsion_subobject(lo, Module.of([i1]), n)[1]
    b2 = torsion_subobject(y, Module.of([i2]), n)[1]
    return RefiningProbe(probe, b1 + b2, y)


# --- walls and other loci -----------------------------------------------------


def wall_locus(c: Chain, x: Module) -> tuple[bool, Fraction]:
    """(x quasisemistable for c, a lower bound on the distance from c to the locus)."""
    mho, omega = mho_omega(c, x)
    return mho == omega, (omega - mho) / 2


def in_split_locus(c: Chain) -> bool:
    return all(wall_locus(c, Module.of([iv]))[0] for iv in context(c.n).indecomposables)


def _sample_points(c: Chain, lo: Fraction, hi: Fraction, lo_closed: bool, hi_closed: bool) -> list[Fraction]:
    if hi < lo or (hi == lo and not (lo_closed and hi_closed)):
        return []
    inner = sorted({lo, hi} | {x for x in c.breakpoints if lo < x < hi})
    pts = set((a + b) / 2 for a, b in zip(inner, inner[1:]))
    pts |= {x for x in inner if lo < x < hi}
    if lo_closed:
        pts.add(lo)
    if hi_closed:
        pts.add(hi)
    if lo == hi:
        pts = {lo}
    return sorted(pts)


def twin_locus_member(c: Chain, x: int, x2: int, a, b) -> bool:
    """The whole category on [0,a), classes between x and x2 on (a,b), zero on (b,1]."""
    a, b = as_phase(a), as_phase(b)
    if x & ~x2:
        raise ValueError("the lower class must be contained in the upper one")
    if not a < b:
        raise ValueError("need a < b")
    full = context(c.n).full
    if any(torsion_class_at(c, i) != full for i in _sample_points(c, Fraction(0), a, True, False)):
        return False
    if any(torsion_class_at(c, i) != 0 for i in _sample_points(c, b, Fraction(1), False, True)):
        return False
    for i in _sample_points(c, a, b, False, False):
        t = torsion_class_at(c, i)
        if x & ~t or t & ~x2:
            return False
    return True


# --- compactness ---------------------------------------------------------------


def separated_family(lattice: TorsLattice) -> list[Chain]:
    """One chain per torsion class, constant on the open interval (0, 1)."""
    from .chains import constant_chain

    return [constant_chain(bits, lattice.n) for bits in lattice.classes]


@dataclass(frozen=True)
class CompactnessReport:
    n: int
    torsion_classes: int
    f_vector: tuple[int, ...]
    facets: int
    simplices: int

    @property
    def verdict(self) -> str:
        return f"compact: finite CW complex with {self.simplices} simplices"


def compactness_report(lattice: TorsLattice, complex_: NerveComplex | None = None) -> CompactnessReport:
    """Only the finite branch is reachable here: finitely many classes give a finite complex."""
    cx = complex_ if complex_ is not None else nerve(lattice)
    return CompactnessReport(lattice.n, len(lattice), cx.f_vector, len(cx.facets), cx.size)


__all__ = [
    "ChamberReport",
    "CompactnessReport",
    "NerveComplex",
    "RefiningProbe",
    "SubsequenceMap",
    "ball_contains",
    "chamber_local_constancy",
    "chamber_radius_ok",
    "compactness_report",
    "constant_on_window",
    "distance",
    "distance_filt_formula",
    "filt_intervals",
    "hn_shape",
    "in_split_locus",
    "is_chamber",
    "maximal_green_sequences",
    "min_gap",
    "nerve",
    "probes_near",
    "refining_probe",
    "separated_family",
    "sequence_slices",
    "slice_surjection_exists",
    "subsequence_map",
    "twin_locus_member",
    "wall_locus",
]
