"""Weak stability conditions: chain-induced phases and slope phases.

Every phase function here is constant on isomorphism classes and takes exact
rational values in [0, 1].  The see-saw scans run over the distinct
(sub, module, quotient) classes of short exact sequences produced by the
GF(2) oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Union

import numpy as np

from . import gf2
from .chains import (
    Chain,
    in_slice,
    interval_phase_table,
    slicing_support,
)
from .intervals import Interval, Module, context, modules_up_to, quotient_intervals
from .lattice import filt_closure, is_torsion_class

SUITE_DIM_BOUND = 6


@dataclass(frozen=True)
class ChainMho:
    chain: Chain

    @property
    def n(self) -> int:
        return self.chain.n


@dataclass(frozen=True)
class ChainOmega:
    chain: Chain

    @property
    def n(self) -> int:
        return self.chain.n


@dataclass(frozen=True)
class CentralCharge:
    theta: tuple[int, ...]
    delta: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "theta", tuple(int(t) for t in self.theta))
        object.__setattr__(self, "delta", tuple(int(d) for d in self.delta))
        if len(self.theta) != len(self.delta) or not self.theta:
            raise ValueError("theta and delta need the same positive length")
        if any(d <= 0 for d in self.delta):
            raise ValueError("delta must be strictly positive")

    @property
    def n(self) -> int:
        return len(self.theta)


WeakStability = Union[ChainMho, ChainOmega, CentralCharge]


def squash(x: Fraction) -> Fraction:
    """Order isomorphism from the rationals onto (0, 1)."""
    return Fraction(1, 2) + x / (2 * (1 + abs(x)))


def slope(cc: CentralCharge, m: Module) -> Fraction:
    dims = m.dim_vector(cc.n)
    return Fraction(
        sum(t * d for t, d in zip(cc.theta, dims)), sum(w * d for w, d in zip(cc.delta, dims))
    )


@lru_cache(maxsize=200_000)
def _charge_phase(cc: CentralCharge, m: Module) -> Fraction:
    return squash(slope(cc, m))


def phase(phi: WeakStability, m: Module) -> Fraction:
    if m.is_zero:
        raise ValueError("phases are defined on nonzero modules")
    if isinstance(phi, CentralCharge):
        return _charge_phase(phi, m)
    table = interval_phase_table(phi.chain)
    idx = context(phi.n).index
    # min/max laws over direct sums
    if isinstance(phi, ChainMho):
        return min(table[idx[iv]][0] for iv in m.distinct())
    return max(table[idx[iv]][1] for iv in m.distinct())


@lru_cache(maxsize=None)
def _summand_indices(m: Module, n: int) -> tuple[int, ...]:
    idx = context(n).index
    return tuple(idx[iv] for iv in m.distinct())


def phases(phi: WeakStability, mods) -> list[Fraction]:
    """``phase`` over a batch of modules, reading the interval table once."""
    if isinstance(phi, CentralCharge):
        return [phase(phi, m) for m in mods]
    col = 0 if isinstance(phi, ChainMho) else 1
    pick = min if col == 0 else max
    # compare small integer ranks instead of fractions
    vals = [row[col] for row in interval_phase_table(phi.chain)]
    levels = sorted(set(vals))
    rank = {v: k for k, v in enumerate(levels)}
    r = [rank[v] for v in vals]
    n = phi.n
    return [levels[pick(r[i] for i in _summand_indices(m, n))] for m in mods]


def interval_phase(phi: WeakStability, iv: Interval) -> Fraction:
    return phase(phi, Module.of([iv]))


# --- short exact sequences ---------------------------------------------------


@lru_cache(maxsize=None)
def ses_classes(n: int, dim_bound: int = SUITE_DIM_BOUND) -> tuple[tuple[Module, Module, Module], ...]:
    """Distinct classes of proper SES 0 -> L -> M -> N -> 0 with dim M <= dim_bound."""
    out = set()
    for m in modules_up_to(n, dim_bound):
        for _, sub, quo in gf2.module_subobjects(m, n, dim_bound):
            if not sub.is_zero and not quo.is_zero:
                out.add((sub, m, quo))
    return tuple(sorted(out, key=lambda t: (t[1].sort_key(), t[0].sort_key(), t[2].sort_key())))


@lru_cache(maxsize=None)
def proper_subobject_classes(m: Module, n: int, dim_bound: int) -> tuple[tuple[Module, Module], ...]:
    seen = set()
    for _, sub, quo in gf2.module_subobjects(m, n, dim_bound):
        if not sub.is_zero and not quo.is_zero:
            seen.add((sub, quo))
    return tuple(sorted(seen, key=lambda t: (t[0].sort_key(), t[1].sort_key())))


@dataclass(frozen=True)
class SESVerdict:
    passed: bool
    witness: tuple[Module, Module, Module] | None = None
    strict: bool = True
    strict_witness: tuple[Module, Module, Module] | None = None
    checked: int = 0


@lru_cache(maxsize=None)
def _ses_index(n: int, dim_bound: int):
    mods = tuple(modules_up_to(n, dim_bound))
    pos = {m: k for k, m in enumerate(mods)}
    arr = np.array([(pos[a], pos[b], pos[c]) for a, b, c in ses_classes(n, dim_bound)], dtype=np.intp)
    return mods, arr.reshape(-1, 3)


@lru_cache(maxsize=20_000)
def check_weak_seesaw(phi: WeakStability, n: int | None = None, dim_bound: int = SUITE_DIM_BOUND) -> SESVerdict:
    n = phi.n if n is None else n
    mods, triples = _ses_index(n, dim_bound)
    values = phases(phi, mods)
    # only the order of phases matters, so compare ranks
    rank = {v: k for k, v in enumerate(sorted(set(values)))}
    r = np.array([rank[v] for v in values], dtype=np.int64)
    a, b, c = r[triples[:, 0]], r[triples[:, 1]], r[triples[:, 2]]
    weak = ((a <= b) & (b <= c)) | ((a >= b) & (b >= c))
    strict = ((a < b) & (b < c)) | ((a > b) & (b > c)) | ((a == b) & (b == c))

    def first_bad(ok):
        bad = np.flatnonzero(~ok)
        if not bad.size:
            return None
        i, j, k = triples[bad[0]]
        return mods[i], mods[j], mods[k]

    witness, strict_witness = first_bad(weak), first_bad(strict)
    return SESVerdict(witness is None, witness, strict_witness is None, strict_witness, len(triples))


@lru_cache(maxsize=200_000)
def is_semistable(phi: WeakStability, m: Module, dim_bound: int = gf2.DEFAULT_DIM_BOUND) -> bool:
    return all(
        phase(phi, sub) <= phase(phi, quo)
        for sub, quo in proper_subobject_classes(m, phi.n, dim_bound)
    )


def max_destabilizing_subobject(phi: WeakStability, m: Module, dim_bound: int = gf2.DEFAULT_DIM_BOUND) -> Module:
    """Semistable subobject of largest phase; among those the largest, then the first in module order.

    Under a weak condition several subobjects can share the top phase
    without all being semistable, so semistability filters before the
    dimension tie-break.
    """
    if m.is_zero:
        raise ValueError("the zero module has no destabilizing subobject")
    subs = {cls for _, cls, _ in gf2.module_subobjects(m, phi.n, dim_bound) if not cls.is_zero}
    top = max(phase(phi, s) for s in subs)
    cands = [s for s in subs if phase(phi, s) == top and is_semistable(phi, s, dim_bound)]
    if not cands:
        raise AssertionError(f"no semistable subobject of top phase in {m}")
    return min(cands, key=lambda s: (-s.total_dim, s.sort_key()))


# --- torsion classes cut out by a phase -----------------------------------


def quotient_floor(phi: WeakStability, iv: Interval) -> Fraction:
    """Least phase among the nonzero quotients of an interval."""
    return min(interval_phase(phi, q) for q in quotient_intervals(iv))


@lru_cache(maxsize=None)
def _floors(phi: WeakStability) -> tuple[Fraction, ...]:
    return tuple(quotient_floor(phi, iv) for iv in context(phi.n).indecomposables)


def tors_cuts(phi: WeakStability, p) -> tuple[int, int]:
    """(phase >= p on all quotients, phase > p on all quotients) as bitsets.

    Quotients of an interval are intervals and a module lies in a torsion
    class iff its summands do, so scanning interval quotients is enough.
    """
    p = Fraction(p)
    geq = gt = 0
    for k, q in enumerate(_floors(phi)):
        if q >= p:
            geq |= 1 << k
        if q > p:
            gt |= 1 << k
    return geq, gt


def cut_values(phi: WeakStability) -> tuple[Fraction, ...]:
    return tuple(sorted(set(_floors(phi))))


def eta_pm(phi: WeakStability) -> tuple[Chain, Chain]:
    """The chains p -> T_{>=p} and p -> T_{>p}, in canonical form."""
    n = phi.n
    values = cut_values(phi)
    classes = [tors_cuts(phi, p)[0] for p in values] + [0]
    for bits in classes:
        if not is_torsion_class(bits, n):
            raise AssertionError("a phase cut is not a torsion class")
    plus = Chain(n, tuple(classes), values)
    minus = Chain(n, tuple(classes), values, (True,) * len(values))
    return plus, minus


# --- whole-condition checks ----------------------------------------------------


@dataclass
class SliceReport:
    checked: int = 0
    counterexamples: list[tuple[Module, Fraction, bool, bool]] = field(default_factory=list)
    supports_agree: bool = True

    @property
    def ok(self) -> bool:
        return self.supports_agree and not self.counterexamples


def semistable_slice_check(phi: WeakStability, dim_bound: int = SUITE_DIM_BOUND) -> SliceReport:
    """Compare membership in each phase category with semistability at that phase."""
    plus, minus = eta_pm(phi)
    report = SliceReport()
    report.supports_agree = [
        (s.phase, s.members) for s in slicing_support(plus)
    ] == [(s.phase, s.members) for s in slicing_support(minus)]
    phases = [s.phase for s in slicing_support(plus)]
    for m in modules_up_to(phi.n, dim_bound):
        semi = is_semistable(phi, m, dim_bound)
        pm = phase(phi, m)
        if semi and pm not in phases:
            report.counterexamples.append((m, pm, False, True))
        for t in phases:
            lhs = in_slice(plus, t, m)
            rhs = semi and pm == t
            report.checked += 1
            if lhs != rhs:
                report.counterexamples.append((m, t, lhs, rhs))
    return report


def filt_description_check(phi: WeakStability, p, dim_bound: int = SUITE_DIM_BOUND) -> bool:
    p = Fraction(p)
    ctx = context(phi.n)
    geq = tors_cuts(phi, p)[0]
    gens = ctx.mask(
        iv
        for iv in ctx.indecomposables
        if interval_phase(phi, iv) >= p and is_semistable(phi, Module.of([iv]), dim_bound)
    )
    if filt_closure(gens, phi.n) != geq:
        return False
    for m in modules_up_to(phi.n, dim_bound):
        if phase(phi, m) >= p and is_semistable(phi, m, dim_bound):
            if ctx.module_mask(m) & ~geq:
                return False
    return True


@dataclass(frozen=True)
class StabilityFacts:
    constant: bool
    stability: bool
    omega_eq_mho: bool
    single_slice: bool

    @property
    def coincide(self) -> bool:
        return len({self.constant, self.stability, self.omega_eq_mho, self.single_slice}) == 1


def is_stability_and_constant(phi: ChainMho | ChainOmega, dim_bound: int = SUITE_DIM_BOUND) -> StabilityFacts:
    if isinstance(phi, CentralCharge):
        raise TypeError("needs a chain-induced condition")
    c = phi.chain
    mods = modules_up_to(phi.n, dim_bound)
    values = set(phases(phi, mods))
    return StabilityFacts(
        constant=len(values) == 1,
        stability=check_weak_seesaw(phi, dim_bound=dim_bound).strict,
        omega_eq_mho=phases(ChainMho(c), mods) == phases(ChainOmega(c), mods),
        single_slice=len(slicing_support(c)) == 1,
    )


def wsc_leq(phi1: WeakStability, phi2: WeakStability, dim_bound: int = SUITE_DIM_BOUND) -> bool:
    if phi1.n != phi2.n:
        raise ValueError("conditions live on different categories")
    mods = modules_up_to(phi1.n, dim_bound)
    return all(a <= b for a, b in zip(phases(phi1, mods), phases(phi2, mods)))


def hn_semistable_check(phi: WeakStability, m: Module, dim_bound: int = SUITE_DIM_BOUND) -> bool:
    """The filtration of ``m`` through eta_plus has semistable factors of strictly decreasing phase."""
    from .chains import hn_filtration

    plus, _ = eta_pm(phi)
    layers = hn_filtration(plus, m)
    phases = [phase(phi, layer.factor) for layer in layers]
    if any(a <= b for a, b in zip(phases, phases[1:])):
        return False
    if [layer.phase for layer in layers] != phases:
        return False
    return all(is_semistable(phi, layer.factor, dim_bound) for layer in layers)


__all__ = [
    "CentralCharge",
    "ChainMho",
    "ChainOmega",
    "SESVerdict",
    "SliceReport",
    "StabilityFacts",
    "WeakStability",
    "check_weak_seesaw",
    "cut_values",
    "eta_pm",
    "filt_description_check",
    "hn_semistable_check",
    "interval_phase",
    "is_semistable",
    "is_stability_and_constant",
    "max_destabilizing_subobject",
    "phase",
    "phases",
    "quotient_floor",
    "semistable_slice_check",
    "ses_classes",
    "slope",
    "squash",
    "tors_cuts",
    "wsc_leq",
]
