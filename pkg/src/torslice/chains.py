"""Chains of torsion classes as exact step functions on [0, 1].

A chain with classes ``X_0 = A > X_1 > ... > X_m = 0`` and breakpoints
``x_1 <= ... <= x_m`` takes the value ``A`` on ``[0, x_1]``, ``X_j`` on
``(x_j, x_{j+1}]`` and ``0`` on ``(x_m, 1]``.  ``lower_at[j]`` optionally moves
the value *at* ``x_{j+1}`` down to ``X_{j+1}``; this does not change the
slicing but is needed to represent chains built from strict cuts.  The
endpoints are forced: the value at 0 is ``A`` and the value at 1 is ``0``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .intervals import Interval, Module, context
from .lattice import in_class, in_torsionfree, perp, torsion_subobject, _torsion_start

Phase = Fraction
ONE = Fraction(1)
ZERO_PHASE = Fraction(0)


def as_phase(x) -> Fraction:
    p = Fraction(x)
    if not 0 <= p <= 1:
        raise ValueError(f"phase {p} outside [0, 1]")
    return p


@dataclass(frozen=True)
class Chain:
    n: int
    classes: tuple[int, ...]
    breakpoints: tuple[Fraction, ...]
    lower_at: tuple[bool, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(self.classes))
        object.__setattr__(self, "breakpoints", tuple(as_phase(x) for x in self.breakpoints))
        flags = tuple(bool(f) for f in self.lower_at) or (False,) * len(self.breakpoints)
        object.__setattr__(self, "lower_at", flags)
        full = context(self.n).full
        if len(self.classes) < 2 or len(self.classes) != len(self.breakpoints) + 1:
            raise ValueError("need m + 1 classes for m breakpoints, m >= 1")
        if len(flags) != len(self.breakpoints):
            raise ValueError("lower_at must have one flag per breakpoint")
        if self.classes[0] != full or self.classes[-1] != 0:
            raise ValueError("a chain must run from the whole category to zero")
        for hi, lo in zip(self.classes, self.classes[1:]):
            if hi == lo or lo & ~hi:
                raise ValueError("classes must be strictly decreasing")
        for a, b in zip(self.breakpoints, self.breakpoints[1:]):
            if b < a:
                raise ValueError("breakpoints must be non-decreasing")

    @property
    def steps(self) -> int:
        return len(self.breakpoints)

    @property
    def is_canonical(self) -> bool:
        return all(a < b for a, b in zip(self.breakpoints, self.breakpoints[1:]))

    def with_breakpoints(self, breakpoints) -> "Chain":
        return Chain(self.n, self.classes, tuple(breakpoints), self.lower_at)


def make_chain(n: int, classes: Sequence[int], breakpoints: Iterable, lower_at=()) -> Chain:
    return Chain(n, tuple(classes), tuple(Fraction(x) for x in breakpoints), tuple(lower_at))


def _index_at(c: Chain, i: Fraction) -> int:
    k = 0
    for x, low in zip(c.breakpoints, c.lower_at):
        if x < i or (x == i and low):
            k += 1
    return k


def torsion_class_at(c: Chain, i) -> int:
    return _value_at(c, as_phase(i))


def _value_at(c: Chain, i: Fraction) -> int:
    if i == 0:
        return c.classes[0]
    if i == 1:
        return 0
    return c.classes[_index_at(c, i)]


@lru_cache(maxsize=100_000)
def normalize(c: Chain) -> Chain:
    """Collapse runs of equal breakpoints, deleting the classes that live on empty intervals."""
    if c.is_canonical:
        return c
    classes = [c.classes[0]]
    bps: list[Fraction] = []
    flags: list[bool] = []
    j = 0
    m = c.steps
    while j < m:
        k = j
        while k + 1 < m and c.breakpoints[k + 1] == c.breakpoints[j]:
            k += 1
        x = c.breakpoints[j]
        nflag = sum(c.lower_at[j : k + 1])
        # value at x is classes[j + nflag]; it must be one of the two survivors
        if 0 < nflag < k - j + 1 and not (0 < x < 1):
            nflag = 0
        if 0 < nflag < k - j + 1:
            raise ValueError(f"a class is supported only at the point {x}; cannot collapse")
        classes.append(c.classes[k + 1])
        bps.append(x)
        flags.append(nflag > 0)
        j = k + 1
    return Chain(c.n, tuple(classes), tuple(bps), tuple(flags))


def grid_values(denominator: int) -> list[Fraction]:
    return [Fraction(k, denominator) for k in range(denominator + 1)]


def grid_chains(n: int, sequences: Iterable[Sequence[int]], denominator: int = 8):
    """Canonical chains with breakpoints strictly increasing on ``{k/denominator}``."""
    grid = grid_values(denominator)
    for seq in sequences:
        for bps in itertools.combinations(grid, len(seq) - 1):
            yield Chain(n, tuple(seq), bps)


# --- slicing ---------------------------------------------------------------


@dataclass(frozen=True)
class Slice:
    phase: Fraction
    upper: int
    lower: int
    members: int  # intervals of the phase category


def slice_members(upper: int, lower: int, n: int) -> int:
    return upper & perp(lower, n)


@lru_cache(maxsize=100_000)
def slicing_support(c: Chain) -> tuple[Slice, ...]:
    """Nonzero phase categories ``X_{j-1} & perp(X_j)`` at the breakpoints."""
    c = normalize(c)
    return tuple(
        Slice(x, hi, lo, slice_members(hi, lo, c.n))
        for x, hi, lo in zip(c.breakpoints, c.classes, c.classes[1:])
    )


def phase_category(c: Chain, t) -> int:
    """Intervals in the phase-t category (zero bitset when t carries nothing)."""
    t = as_phase(t)
    for s in slicing_support(c):
        if s.phase == t:
            return s.members
    return 0


def in_slice(c: Chain, t, m: Module) -> bool:
    return not m.is_zero and context(c.n).module_mask(m) & ~phase_category(c, t) == 0


def quasisemistable_phase(c: Chain, m: Module) -> Fraction | None:
    mask = context(c.n).module_mask(m)
    for s in slicing_support(c):
        if mask & ~s.members == 0:
            return s.phase
    return None


def chains_equivalent(c1: Chain, c2: Chain) -> bool:
    s1 = [(s.phase, s.members) for s in slicing_support(c1)]
    s2 = [(s.phase, s.members) for s in slicing_support(c2)]
    return c1.n == c2.n and s1 == s2


# --- Harder-Narasimhan filtrations -----------------------------------------


@dataclass(frozen=True)
class HNLayer:
    sub: Module
    phase: Fraction
    factor: Module


def _hn_starts(classes: tuple[int, ...], m: Module, n: int):
    """Per summand the start vertex of the torsion part for each class."""
    return [
        (iv, k, [_torsion_start(bits, n, iv) for bits in classes]) for iv, k in m.summands
    ]


@lru_cache(maxsize=200_000)
def _hn_shape(classes: tuple[int, ...], m: Module, n: int):
    """(j, sub, factor) for each nonzero step, top phase first."""
    starts = _hn_starts(classes, m, n)
    out = []
    for j in range(len(classes) - 1, 0, -1):
        sub: dict[Interval, int] = {}
        fac: dict[Interval, int] = {}
        for iv, k, cs in starts:
            hi, lo = cs[j - 1], cs[j]
            if hi <= iv.b:
                key = Interval(hi, iv.b)
                sub[key] = sub.get(key, 0) + k
            if hi < lo:
                key = Interval(hi, lo - 1)
                fac[key] = fac.get(key, 0) + k
        if fac:
            out.append((j, Module.from_counts(sub), Module.from_counts(fac)))
    return tuple(out)


def hn_filtration(c: Chain, m: Module) -> tuple[HNLayer, ...]:
    """Layers bottom-up: each has the subobject reached, its phase and the new factor."""
    if m.is_zero:
        raise ValueError("the zero module has no HN filtration")
    context(c.n).check_module(m)
    c = normalize(c)
    bps = c.breakpoints
    return tuple(HNLayer(sub, bps[j - 1], fac) for j, sub, fac in _hn_shape(c.classes, m, c.n))


def hn_via_torsion_subobjects(c: Chain, m: Module) -> tuple[HNLayer, ...]:
    """Same filtration computed literally from t_{X_j} M; slower, used for cross-checks."""
    c = normalize(c)
    subs = [torsion_subobject(x, m, c.n)[0] for x in c.classes]
    out = []
    for j in range(c.steps, 0, -1):
        if subs[j - 1] != subs[j]:
            fac = torsion_subobject(c.classes[j], subs[j - 1], c.n)[1]
            out.append(HNLayer(subs[j - 1], c.breakpoints[j - 1], fac))
    return tuple(out)


# --- the weak stability conditions of a chain -------------------------------


def mho_omega(c: Chain, m: Module) -> tuple[Fraction, Fraction]:
    """(sup of torsion membership, inf of torsion-free membership)."""
    if m.is_zero:
        raise ValueError("phases are defined on nonzero modules")
    mask = context(c.n).module_mask(m)
    j_star = max(j for j, x in enumerate(c.classes) if mask & ~x == 0)
    j_free = min(j for j in range(1, len(c.classes)) if mask & ~perp(c.classes[j], c.n) == 0)
    return c.breakpoints[j_star], c.breakpoints[j_free - 1]


def mho(c: Chain, m: Module) -> Fraction:
    return mho_omega(c, m)[0]


def omega(c: Chain, m: Module) -> Fraction:
    return mho_omega(c, m)[1]


@lru_cache(maxsize=100_000)
def interval_phase_table(c: Chain) -> tuple[tuple[Fraction, Fraction], ...]:
    """(mho, omega) of every indecomposable, in lattice index order."""
    return tuple(mho_omega(c, Module.of([iv])) for iv in context(c.n).indecomposables)


# --- order and split predicates --------------------------------------------


def _probe_points(*chains: Chain) -> list[Fraction]:
    pts = sorted({ZERO_PHASE, ONE}.union(*(c.breakpoints for c in chains)))
    mids = [(a + b) / 2 for a, b in zip(pts, pts[1:])]
    return sorted(pts + mids)


def chain_leq(c1: Chain, c2: Chain) -> bool:
    """Pointwise containment, decided on breakpoints and the open gaps between them."""
    return all(_value_at(c1, i) & ~_value_at(c2, i) == 0 for i in _probe_points(c1, c2))


def chain_equal(c1: Chain, c2: Chain) -> bool:
    return chain_leq(c1, c2) and chain_leq(c2, c1)


def constant_on(c: Chain, bits: int, lo, hi) -> bool:
    """True iff the chain takes the value ``bits`` at every point of the closed [lo, hi]."""
    lo, hi = as_phase(lo), as_phase(hi)
    pts = sorted({lo, hi} | {x for x in c.breakpoints if lo < x < hi})
    pts = sorted(set(pts) | {(a + b) / 2 for a, b in zip(pts, pts[1:])})
    return all(_value_at(c, i) == bits for i in pts)


def is_split_chain(c: Chain) -> bool:
    """Every evaluated torsion pair is split: each interval is torsion or torsion-free."""
    full = context(c.n).full
    return all((x | perp(x, c.n)) == full for x in c.classes)


def all_indec_quasisemistable(c: Chain) -> bool:
    covered = 0
    for s in slicing_support(c):
        covered |= s.members
    return covered == context(c.n).full


# --- constructors ------------------------------------------------------------


def from_torsion_class(bits: int, n: int) -> Chain:
    """The two-slice chain A > T > 0 at phases 1/3, 2/3."""
    if bits in (0, context(n).full):
        raise ValueError("need a proper torsion class")
    return Chain(n, (context(n).full, bits, 0), (Fraction(1, 3), Fraction(2, 3)))


def constant_chain(bits: int, n: int) -> Chain:
    """Value ``bits`` on the whole open interval (0, 1)."""
    full = context(n).full
    if bits == full:
        return Chain(n, (full, 0), (ONE,))
    if bits == 0:
        return Chain(n, (full, 0), (ZERO_PHASE,))
    return Chain(n, (full, bits, 0), (ZERO_PHASE, ONE))


def trivial_chain(n: int, t) -> Chain:
    return Chain(n, (context(n).full, 0), (as_phase(t),))


__all__ = [
    "Chain",
    "HNLayer",
    "Slice",
    "all_indec_quasisemistable",
    "as_phase",
    "chain_equal",
    "chain_leq",
    "chains_equivalent",
    "constant_chain",
    "constant_on",
    "from_torsion_class",
    "grid_chains",
    "grid_values",
    "hn_filtration",
    "hn_via_torsion_subobjects",
    "in_class",
    "in_slice",
    "in_torsionfree",
    "interval_phase_table",
    "is_split_chain",
    "make_chain",
    "mho",
    "mho_omega",
    "normalize",
    "omega",
    "phase_category",
    "quasisemistable_phase",
    "slicing_support",
    "torsion_class_at",
    "trivial_chain",
]
