"""Torsion classes of mod kA_n as bitsets over the indecomposables."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .intervals import (
    Interval,
    Module,
    ZERO,
    context,
    ext_nonzero,
    hom_nonzero,
    nonsplit_middle,
    quotient_intervals,
)

DEFAULT_N_BOUND = 5


class LabelError(AssertionError):
    """A Hasse edge without a unique brick label; this would mean a modelling bug."""


@lru_cache(maxsize=None)
def _quotient_masks(n: int) -> tuple[int, ...]:
    ctx = context(n)
    return tuple(ctx.mask(quotient_intervals(iv)) for iv in ctx.indecomposables)


@lru_cache(maxsize=None)
def _extension_rules(n: int) -> tuple[tuple[int, int, int], ...]:
    """(k, l, middle mask) for every pair with Ext^1(I_k, I_l) != 0."""
    ctx = context(n)
    ivs = ctx.indecomposables
    out = []
    for k, x in enumerate(ivs):
        for l, y in enumerate(ivs):
            if ext_nonzero(x, y):
                out.append((k, l, ctx.module_mask(nonsplit_middle(x, y))))
    return tuple(out)


def is_torsion_class(bits: int, n: int) -> bool:
    """Closed under quotients and nonsplit extensions of indecomposables.

    Coproduct closure is automatic: a module belongs to the class iff all of
    its summands do.
    """
    for k, q in enumerate(_quotient_masks(n)):
        if bits >> k & 1 and q & ~bits:
            return False
    for k, l, mid in _extension_rules(n):
        if bits >> k & 1 and bits >> l & 1 and mid & ~bits:
            return False
    return True


def filt_closure(bits: int, n: int) -> int:
    """Smallest torsion class containing the given intervals."""
    quots = _quotient_masks(n)
    rules = _extension_rules(n)
    while True:
        new = bits
        for k, q in enumerate(quots):
            if bits >> k & 1:
                new |= q
        for k, l, mid in rules:
            if bits >> k & 1 and bits >> l & 1:
                new |= mid
        if new == bits:
            return bits
        bits = new


def in_class(bits: int, m: Module, n: int) -> bool:
    return context(n).module_mask(m) & ~bits == 0


@lru_cache(maxsize=None)
def perp(bits: int, n: int) -> int:
    """Intervals Y with Hom(X, Y) = 0 for every member X."""
    ctx = context(n)
    members = ctx.members(bits)
    return ctx.mask(y for y in ctx.indecomposables if not any(hom_nonzero(x, y) for x in members))


@lru_cache(maxsize=None)
def left_perp(bits: int, n: int) -> int:
    """Intervals X with Hom(X, Y) = 0 for every member Y."""
    ctx = context(n)
    members = ctx.members(bits)
    return ctx.mask(x for x in ctx.indecomposables if not any(hom_nonzero(x, y) for y in members))


def in_torsionfree(bits: int, m: Module, n: int) -> bool:
    return context(n).module_mask(m) & ~perp(bits, n) == 0


@lru_cache(maxsize=None)
def _torsion_start(bits: int, n: int, iv: Interval) -> int:
    """Least c >= a with [c, b] in the class, or b + 1 when none is."""
    idx = context(n).index
    for c in range(iv.a, iv.b + 1):
        if bits >> idx[Interval(c, iv.b)] & 1:
            return c
    return iv.b + 1


def torsion_subobject(bits: int, m: Module, n: int) -> tuple[Module, Module]:
    """(tM, fM) for the canonical sequence 0 -> tM -> M -> fM -> 0."""
    t: dict[Interval, int] = {}
    f: dict[Interval, int] = {}
    for iv, k in m.summands:
        c = _torsion_start(bits, n, iv)
        if c <= iv.b:
            sub = Interval(c, iv.b)
            t[sub] = t.get(sub, 0) + k
        if c > iv.a:
            quo = Interval(iv.a, c - 1)
            f[quo] = f.get(quo, 0) + k
    return Module.from_counts(t), Module.from_counts(f)


def class_str(bits: int, n: int) -> str:
    return "{" + ",".join(str(iv) for iv in context(n).members(bits)) + "}"


@dataclass(frozen=True)
class HasseEdge:
    upper: int
    lower: int
    brick: Interval


@dataclass
class TorsLattice:
    n: int
    classes: tuple[int, ...]
    hasse: tuple[HasseEdge, ...] = ()
    _ids: dict[int, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._ids = {bits: k for k, bits in enumerate(self.classes)}

    def __len__(self):
        return len(self.classes)

    def id_of(self, bits: int) -> int:
        return self._ids[bits]

    def __contains__(self, bits: int) -> bool:
        return bits in self._ids

    @property
    def top(self) -> int:
        return context(self.n).full

    @property
    def bottom(self) -> int:
        return 0

    def leq(self, a: int, b: int) -> bool:
        return a & ~b == 0

    @cached_property
    def covers(self) -> dict[int, list[int]]:
        """upper bitset -> lower bitsets it covers, in id order."""
        out: dict[int, list[int]] = {c: [] for c in self.classes}
        for e in self.hasse:
            out[self.classes[e.upper]].append(self.classes[e.lower])
        return out

    @cached_property
    def _cover_sets(self) -> dict[int, frozenset[int]]:
        return {u: frozenset(ls) for u, ls in self.covers.items()}

    def is_cover(self, upper: int, lower: int) -> bool:
        return lower in self._cover_sets.get(upper, ())


def _sort_classes(found) -> tuple[int, ...]:
    return tuple(sorted(set(found), key=lambda b: (bin(b).count("1"), b)))


def enumerate_torsion_classes(n: int, n_bound: int = DEFAULT_N_BOUND) -> TorsLattice:
    """All torsion classes with their Hasse diagram and brick labels."""
    if n > n_bound:
        raise ValueError(f"n = {n} exceeds the enumeration bound {n_bound}")
    ctx = context(n)
    size = len(ctx.indecomposables)
    if n <= 4:
        found = [s for s in range(1 << size) if is_torsion_class(s, n)]
    else:
        # grow by joins: every class is reached by adding its members one at a time
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for t in frontier:
                for k in range(size):
                    if not t >> k & 1:
                        u = filt_closure(t | 1 << k, n)
                        if u not in seen:
                            seen.add(u)
                            nxt.append(u)
            frontier = nxt
        found = list(seen)
    lattice = TorsLattice(n, _sort_classes(found))
    lattice.hasse = tuple(hasse_and_bricks(lattice))
    return lattice


@lru_cache(maxsize=None)
def torsion_lattice(n: int) -> TorsLattice:
    """Cached lattice; callers must not mutate it."""
    return enumerate_torsion_classes(n)


def brick_label(upper: int, lower: int, n: int) -> Interval:
    ctx = context(n)
    fperp = perp(lower, n)
    labels = [
        iv
        for iv in ctx.members(upper & ~lower)
        if filt_closure(lower | ctx.bit(iv), n) == upper and fperp & ctx.bit(iv)
    ]
    if len(labels) != 1:
        raise LabelError(
            f"edge {class_str(upper, n)} > {class_str(lower, n)} has labels {labels}"
        )
    return labels[0]


def hasse_and_bricks(lattice: TorsLattice) -> list[HasseEdge]:
    cls = lattice.classes
    edges = []
    for u_id, u in enumerate(cls):
        below = [l for l in cls if l != u and l & ~u == 0]
        for l in below:
            if any(k != l and l & ~k == 0 and k & ~u == 0 and k != u for k in below):
                continue
            edges.append(HasseEdge(u_id, lattice.id_of(l), brick_label(u, l, lattice.n)))
    edges.sort(key=lambda e: (-e.upper, -e.lower))
    return edges


def maximal_green_sequences(lattice: TorsLattice) -> list[tuple[int, ...]]:
    """Maximal chains of covers from the top to the bottom, as tuples of ids."""
    covers = lattice.covers
    out: list[tuple[int, ...]] = []

    def walk(path: list[int]):
        cur = path[-1]
        if cur == 0:
            out.append(tuple(lattice.id_of(b) for b in path))
            return
        for low in sorted(covers[cur], key=lambda b: -lattice.id_of(b)):
            path.append(low)
            walk(path)
            path.pop()

    walk([lattice.top])
    return out


def decreasing_sequences(lattice: TorsLattice, max_len: int | None = None) -> list[tuple[int, ...]]:
    """Strictly decreasing sequences of bitsets from the top to the bottom.

    ``max_len`` bounds the number of classes in a sequence, endpoints included.
    """
    below = {
        c: [d for d in lattice.classes if d != c and d & ~c == 0] for c in lattice.classes
    }
    out: list[tuple[int, ...]] = []

    def walk(path: list[int]):
        cur = path[-1]
        if cur == 0:
            out.append(tuple(path))
            return
        if max_len is not None and len(path) >= max_len:
            return
        for d in sorted(below[cur], key=lambda b: -lattice.id_of(b)):
            if max_len is not None and len(path) + 1 == max_len and d != 0:
                continue
            path.append(d)
            walk(path)
            path.pop()

    walk([lattice.top])
    return out


__all__ = [
    "HasseEdge",
    "LabelError",
    "TorsLattice",
    "ZERO",
    "brick_label",
    "class_str",
    "decreasing_sequences",
    "enumerate_torsion_classes",
    "filt_closure",
    "in_class",
    "in_torsionfree",
    "is_torsion_class",
    "left_perp",
    "maximal_green_sequences",
    "perp",
    "torsion_lattice",
    "torsion_subobject",
]
