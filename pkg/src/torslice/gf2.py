"""Brute-force representation theory of A_n over the two-element field.

Vectors are Python ints (bit ``k`` is coordinate ``k``).  A linear map
``V_i -> V_{i+1}`` is stored as a tuple of ``dim V_i`` rows; row ``k`` is the
image of the ``k``-th basis vector, and a vector maps to the XOR of the rows
selected by its bits.  Subspaces are kept in reduced echelon form so that
equal subspaces have equal keys.

Nothing here uses the interval combinatorics of :mod:`torslice.intervals`
beyond building the direct-sum representation of a module, so the results
can serve as an independent check on that module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import log2

from .intervals import Interval, Module, ZERO

DEFAULT_DIM_BOUND = 8


class DimensionBoundError(ValueError):
    pass


@dataclass(frozen=True)
class Rep:
    dims: tuple[int, ...]
    maps: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.maps) != max(len(self.dims) - 1, 0):
            raise ValueError("need one map per arrow")
        for i, rows in enumerate(self.maps):
            if len(rows) != self.dims[i] or any(r >> self.dims[i + 1] for r in rows):
                raise ValueError(f"map {i} has the wrong shape")

    @property
    def n(self) -> int:
        return len(self.dims)

    @property
    def total_dim(self) -> int:
        return sum(self.dims)


@dataclass(frozen=True)
class SubRep:
    """Per-vertex echelon bases of an arrow-stable family of subspaces."""

    bases: tuple[tuple[int, ...], ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.bases)

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def contained_in(self, other: "SubRep") -> bool:
        return all(
            all(reduce_vec(v, ob) == 0 for v in b) for b, ob in zip(self.bases, other.bases)
        )


# --- linear algebra over GF(2) -----------------------------------------


def apply(v: int, rows: tuple[int, ...]) -> int:
    out = 0
    k = 0
    while v:
        if v & 1:
            out ^= rows[k]
        v >>= 1
        k += 1
    return out


def reduce_vec(v: int, basis: tuple[int, ...]) -> int:
    # basis is echelon with distinct leading bits, sorted by leading bit descending
    for b in basis:
        if v >> (b.bit_length() - 1) & 1:
            v ^= b
    return v


def echelon(vectors) -> tuple[int, ...]:
    """Fully reduced echelon basis of the span, leading bits descending."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            if v >> (b.bit_length() - 1) & 1:
                v ^= b
        if v:
            lead = v.bit_length() - 1
            basis = [b ^ v if b >> lead & 1 else b for b in basis]
            basis.append(v)
    basis.sort(reverse=True)
    return tuple(basis)


def rank(vectors) -> int:
    return len(echelon(vectors))


def image(basis, rows: tuple[int, ...]) -> tuple[int, ...]:
    return echelon(apply(v, rows) for v in basis)


@lru_cache(maxsize=None)
def all_subspaces(d: int) -> tuple[tuple[int, ...], ...]:
    """Every subspace of GF(2)^d as a reduced echelon basis."""
    out = []
    for k in range(d + 1):
        for pivots in itertools.combinations(range(d - 1, -1, -1), k):
            pivset = set(pivots)
            free = [[q for q in range(p) if q not in pivset] for p in pivots]
            for bits in itertools.product((0, 1), repeat=sum(len(f) for f in free)):
                rows = []
                pos = 0
                for p, fr in zip(pivots, free):
                    v = 1 << p
                    for q in fr:
                        if bits[pos]:
                            v |= 1 << q
                        pos += 1
                    rows.append(v)
                out.append(tuple(rows))
    return tuple(out)


def superspaces(w: tuple[int, ...], d: int):
    """Subspaces of GF(2)^d containing the echelon subspace ``w``."""
    pivots = {b.bit_length() - 1 for b in w}
    comp = [q for q in range(d) if q not in pivots]
    for sub in all_subspaces(len(comp)):
        lifted = []
        for v in sub:
            x = 0
            for k, q in enumerate(comp):
                if v >> k & 1:
                    x |= 1 << q
            lifted.append(x)
        yield echelon(list(w) + lifted)


def _unit_basis(d: int) -> tuple[int, ...]:
    return tuple(1 << k for k in range(d - 1, -1, -1))


# --- representations ------------------------------------------------------


def module_to_rep(m: Module, n: int) -> Rep:
    summands = list(m)
    for iv in summands:
        if iv.b > n:
            raise ValueError(f"{iv} does not live on A_{n}")
    coords: list[dict[int, int]] = []
    for i in range(1, n + 1):
        pos = {}
        for s, iv in enumerate(summands):
            if iv.contains_vertex(i):
                pos[s] = len(pos)
        coords.append(pos)
    maps = []
    for i in range(n - 1):
        src, dst = coords[i], coords[i + 1]
        rows = [0] * len(src)
        for s, k in src.items():
            if s in dst:
                rows[k] = 1 << dst[s]
        maps.append(tuple(rows))
    return Rep(tuple(len(c) for c in coords), tuple(maps))


def _decompose_from_ranks(n: int, r) -> Module:
    def rr(a, b):
        if a < 1 or b > n:
            return 0
        return r(a, b)

    counts = {}
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            k = rr(a, b) - rr(a - 1, b) - rr(a, b + 1) + rr(a - 1, b + 1)
            if k < 0:
                raise AssertionError("negative multiplicity in rank formula")
            if k:
                counts[Interval(a, b)] = k
    return Module.from_counts(counts)


def _composite_images(rep: Rep, start: dict[int, tuple[int, ...]]):
    """images[(a, b)] = image in V_b of start[a] under the path map a -> b."""
    out = {}
    for a, basis in start.items():
        cur = basis
        out[(a, a)] = cur
        for b in range(a + 1, rep.n + 1):
            cur = image(cur, rep.maps[b - 2])
            out[(a, b)] = cur
    return out


def decompose_rep(rep: Rep) -> Module:
    """Interval multiplicities from ranks of the path maps."""
    imgs = _composite_images(rep, {a: _unit_basis(rep.dims[a - 1]) for a in range(1, rep.n + 1)})
    return _decompose_from_ranks(rep.n, lambda a, b: len(imgs[(a, b)]))


def _sub_class(rep: Rep, sub: SubRep) -> Module:
    imgs = _composite_images(rep, {a: sub.bases[a - 1] for a in range(1, rep.n + 1)})
    return _decompose_from_ranks(rep.n, lambda a, b: len(imgs[(a, b)]))


def _quotient_class(rep: Rep, sub: SubRep) -> Module:
    imgs = _composite_images(rep, {a: _unit_basis(rep.dims[a - 1]) for a in range(1, rep.n + 1)})

    def r(a, b):
        u = sub.bases[b - 1]
        return rank(list(imgs[(a, b)]) + list(u)) - len(u)

    return _decompose_from_ranks(rep.n, r)


def is_subrep(rep: Rep, sub: SubRep) -> bool:
    if len(sub.bases) != rep.n:
        return False
    for i in range(rep.n - 1):
        target = sub.bases[i + 1]
        for v in sub.bases[i]:
            if reduce_vec(apply(v, rep.maps[i]), target):
                return False
    return True


def _guard(rep: Rep, dim_bound: int):
    if rep.total_dim > dim_bound:
        raise DimensionBoundError(
            f"total dimension {rep.total_dim} exceeds the bound {dim_bound}"
        )


@lru_cache(maxsize=4096)
def _subreps_cached(rep: Rep) -> tuple[SubRep, ...]:
    found: list[SubRep] = []

    def rec(i: int, acc: list[tuple[int, ...]]):
        if i == rep.n:
            found.append(SubRep(tuple(acc)))
            return
        if i == 0:
            candidates = all_subspaces(rep.dims[0])
        else:
            candidates = superspaces(image(acc[-1], rep.maps[i - 1]), rep.dims[i])
        for u in candidates:
            acc.append(u)
            rec(i + 1, acc)
            acc.pop()

    rec(0, [])
    found.sort(key=lambda s: (s.total_dim, s.bases))
    return tuple(found)


def subreps(rep: Rep, dim_bound: int = DEFAULT_DIM_BOUND) -> list[tuple[SubRep, Module]]:
    """All subrepresentations (as subspaces, not up to isomorphism) with their classes."""
    _guard(rep, dim_bound)
    return [(s, _sub_class(rep, s)) for s in _subreps_cached(rep)]


def quotient(rep: Rep, sub: SubRep) -> Module:
    if not is_subrep(rep, sub):
        raise ValueError("not an arrow-stable family of subspaces")
    return _quotient_class(rep, sub)


def hom_dim(r1: Rep, r2: Rep) -> int:
    """Dimension of the space of intertwiners, by solving the commutativity equations."""
    if r1.n != r2.n:
        raise ValueError("representations of different quivers")
    var = {}
    for i in range(r1.n):
        for k in range(r1.dims[i]):
            for l in range(r2.dims[i]):
                var[(i, k, l)] = len(var)
    equations = []
    # row convention: v -> v @ f_i; need A1_i f_{i+1} = f_i A2_i on V1_i -> V2_{i+1}
    for i in range(r1.n - 1):
        a1, a2 = r1.maps[i], r2.maps[i]
        for k in range(r1.dims[i]):
            for l in range(r2.dims[i + 1]):
                eq = 0
                row = a1[k]
                kk = 0
                while row:
                    if row & 1:
                        eq ^= 1 << var[(i + 1, kk, l)]
                    row >>= 1
                    kk += 1
                for m in range(r2.dims[i]):
                    if a2[m] >> l & 1:
                        eq ^= 1 << var[(i, k, m)]
                if eq:
                    equations.append(eq)
    return len(var) - rank(equations)


def ext_dim(r1: Rep, r2: Rep) -> int:
    """Ext^1 from the resolution 0 -> P_{y+1} -> P_x -> [x,y] -> 0, summed over summands of r1."""
    if r1.n != r2.n:
        raise ValueError("representations of different quivers")
    n = r2.n
    total = 0
    for iv, k in decompose_rep(r1).summands:
        if iv.b == n:
            continue
        # Hom(P_i, N) = N_i; the induced map N_x -> N_{y+1} is the path map
        cur = _unit_basis(r2.dims[iv.a - 1])
        for b in range(iv.a, iv.b + 1):
            cur = image(cur, r2.maps[b - 1])
        total += k * (r2.dims[iv.b] - len(cur))
    return total


def extension_middles(x: Rep, y: Rep) -> dict[Module, int]:
    """Enumerate all cocycles for 0 -> y -> E -> x -> 0; count middle terms by class.

    E_i = y_i + x_i with y in the low bits; the arrow sends (y, x) to
    (y A^y + x C, x A^x) for a cocycle C_i : x_i -> y_{i+1}.
    """
    n = x.n
    shape = [(x.dims[i], y.dims[i + 1]) for i in range(n - 1)]
    nbits = sum(r * c for r, c in shape)
    counts: dict[Module, int] = {}
    for word in range(1 << nbits):
        maps = []
        pos = 0
        for i in range(n - 1):
            dy_next = y.dims[i + 1]
            rows = list(y.maps[i])
            for k in range(x.dims[i]):
                c = (word >> pos) & ((1 << dy_next) - 1)
                pos += dy_next
                rows.append(c | (x.maps[i][k] << dy_next))
            maps.append(tuple(rows))
        e = Rep(tuple(a + b for a, b in zip(y.dims, x.dims)), tuple(maps))
        cls = decompose_rep(e)
        counts[cls] = counts.get(cls, 0) + 1
    return counts


def ext_dim_by_extensions(x: Rep, y: Rep) -> int:
    """Ext^1(x, y) counted as log2(#cocycles / #split cocycles) (Miyata: split iff E = x + y)."""
    counts = extension_middles(x, y)
    split = decompose_rep(x) + decompose_rep(y)
    total = sum(counts.values())
    return round(log2(total // counts[split]))


def enumerate_ses(
    m: Module, n: int, dim_bound: int = DEFAULT_DIM_BOUND, proper: bool = True
) -> list[tuple[Module, Module, Module]]:
    """One (sub, M, quotient) triple per subrepresentation of M."""
    rep = module_to_rep(m, n)
    out = []
    for sub, cls in subreps(rep, dim_bound):
        q = _quotient_class(rep, sub)
        if proper and (cls.is_zero or q.is_zero):
            continue
        out.append((cls, m, q))
    return out


@lru_cache(maxsize=None)
def module_subobjects(m: Module, n: int, dim_bound: int = DEFAULT_DIM_BOUND):
    """Cached (SubRep, sub class, quotient class) for every subrepresentation of M."""
    rep = module_to_rep(m, n)
    return tuple((sub, cls, _quotient_class(rep, sub)) for sub, cls in subreps(rep, dim_bound))


def max_subobject_in(m: Module, n: int, member, dim_bound: int = DEFAULT_DIM_BOUND):
    """Largest subrepresentation whose class satisfies ``member``.

    Returns ``(sub, class, unique)`` where ``unique`` says that every other
    qualifying subrepresentation is contained in the returned one.
    """
    rows = [(s, c) for s, c, _ in module_subobjects(m, n, dim_bound) if member(c)]
    best_s, best_c = max(rows, key=lambda t: t[0].total_dim)
    unique = all(s.contained_in(best_s) for s, _ in rows)
    return best_s, best_c, unique


__all__ = [
    "DEFAULT_DIM_BOUND",
    "DimensionBoundError",
    "Rep",
    "SubRep",
    "ZERO",
    "decompose_rep",
    "enumerate_ses",
    "ext_dim",
    "ext_dim_by_extensions",
    "extension_middles",
    "hom_dim",
    "max_subobject_in",
    "module_subobjects",
    "module_to_rep",
    "quotient",
    "subreps",
]
