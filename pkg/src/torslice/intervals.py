"""Interval modules of the linearly oriented type-A quiver 1 -> 2 -> ... -> n.

The indecomposable ``[a,b]`` has a one-dimensional space at each vertex
``a..b`` and identity maps between them.  With this orientation the top of
``[a,b]`` sits at ``a`` and the socle at ``b``, so the submodules of ``[a,b]``
are the intervals ``[c,b]`` and the quotients are ``[a,c]``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class Interval:
    a: int
    b: int

    def __post_init__(self):
        if not 1 <= self.a <= self.b:
            raise ValueError(f"invalid interval [{self.a},{self.b}]")

    def __str__(self):
        return f"[{self.a},{self.b}]"

    @property
    def dim(self) -> int:
        return self.b - self.a + 1

    def contains_vertex(self, i: int) -> bool:
        return self.a <= i <= self.b


@dataclass(frozen=True, order=True)
class Module:
    """A finite direct sum of intervals, kept as sorted ``(interval, mult)`` pairs."""

    summands: tuple[tuple[Interval, int], ...] = ()

    @classmethod
    def of(cls, intervals: Iterable[Interval]) -> "Module":
        counts = Counter(intervals)
        return cls(tuple(sorted(counts.items())))

    @classmethod
    def from_counts(cls, counts: dict[Interval, int]) -> "Module":
        return cls(tuple(sorted((iv, k) for iv, k in counts.items() if k > 0)))

    def __post_init__(self):
        prev = None
        for iv, k in self.summands:
            if k < 1:
                raise ValueError("multiplicities must be positive")
            if prev is not None and not prev < iv:
                raise ValueError("summands must be sorted and distinct")
            prev = iv

    def __bool__(self):
        return bool(self.summands)

    def __add__(self, other: "Module") -> "Module":
        counts = Counter(dict(self.summands))
        counts.update(dict(other.summands))
        return Module.from_counts(counts)

    def __iter__(self) -> Iterator[Interval]:
        """Iterate summands with multiplicity."""
        for iv, k in self.summands:
            for _ in range(k):
                yield iv

    def __str__(self):
        return format_module(self)

    @property
    def is_zero(self) -> bool:
        return not self.summands

    @property
    def total_dim(self) -> int:
        return sum(iv.dim * k for iv, k in self.summands)

    def distinct(self) -> tuple[Interval, ...]:
        return tuple(iv for iv, _ in self.summands)

    def dim_vector(self, n: int) -> tuple[int, ...]:
        dims = [0] * n
        for iv, k in self.summands:
            for i in range(iv.a, iv.b + 1):
                dims[i - 1] += k
        return tuple(dims)

    def sort_key(self):
        return (self.total_dim, self.summands)


ZERO = Module()


@dataclass(frozen=True)
class CategoryContext:
    """The category mod kA_n; also the home of the bitset indexing of intervals."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")

    @cached_property
    def indecomposables(self) -> tuple[Interval, ...]:
        return indecomposables(self.n)

    @cached_property
    def index(self) -> dict[Interval, int]:
        return {iv: k for k, iv in enumerate(self.indecomposables)}

    @property
    def full(self) -> int:
        return (1 << len(self.indecomposables)) - 1

    def bit(self, iv: Interval) -> int:
        return 1 << self.index[iv]

    def mask(self, intervals: Iterable[Interval]) -> int:
        bits = 0
        for iv in intervals:
            bits |= 1 << self.index[iv]
        return bits

    def module_mask(self, m: Module) -> int:
        return self.mask(m.distinct())

    def members(self, bits: int) -> list[Interval]:
        return [iv for k, iv in enumerate(self.indecomposables) if bits >> k & 1]

    def check_module(self, m: Module) -> Module:
        for iv in m.distinct():
            if iv.b > self.n:
                raise ValueError(f"{iv} is not a module over A_{self.n}")
        return m


@lru_cache(maxsize=None)
def context(n: int) -> CategoryContext:
    return CategoryContext(n)


@lru_cache(maxsize=None)
def indecomposables(n: int) -> tuple[Interval, ...]:
    if n < 1:
        raise ValueError("n must be positive")
    return tuple(Interval(a, b) for a in range(1, n + 1) for b in range(a, n + 1))


def hom_nonzero(x: Interval, y: Interval) -> bool:
    """Hom([a,b], [c,d]) != 0 iff c <= a <= d <= b."""
    return y.a <= x.a <= y.b <= x.b


def ext_nonzero(x: Interval, y: Interval) -> bool:
    """Ext^1([x,y], [u,v]) != 0 iff x < u <= y+1 <= v."""
    return x.a < y.a <= x.b + 1 <= y.b


def nonsplit_middle(x: Interval, y: Interval) -> Module:
    """Middle term E of the nonsplit sequence 0 -> y -> E -> x -> 0."""
    if not ext_nonzero(x, y):
        raise ValueError(f"Ext^1({x}, {y}) vanishes")
    parts = [Interval(x.a, y.b)]
    if y.a <= x.b:
        parts.append(Interval(y.a, x.b))
    return Module.of(parts)


def indec_subquotients(x: Interval) -> tuple[list[Module], list[Module]]:
    """Subobjects (largest first) and quotients (largest first) of an interval, zero included."""
    subs = [Module.of([Interval(c, x.b)]) for c in range(x.a, x.b + 1)] + [ZERO]
    quots = [Module.of([Interval(x.a, c)]) for c in range(x.b, x.a - 1, -1)] + [ZERO]
    return subs, quots


def quotient_intervals(x: Interval) -> list[Interval]:
    return [Interval(x.a, c) for c in range(x.a, x.b + 1)]


def sub_intervals(x: Interval) -> list[Interval]:
    return [Interval(c, x.b) for c in range(x.a, x.b + 1)]


def cokernel_of_sub(x: Interval, c: int) -> Module:
    """The quotient of ``x`` by its subobject ``[c, x.b]``; ``c = x.b + 1`` means the zero subobject."""
    if c == x.a:
        return ZERO
    return Module.of([Interval(x.a, c - 1)])


_TERM = re.compile(r"^\[\s*(\d+)\s*,\s*(\d+)\s*\](?:\s*\*\s*(\d+))?$")


def parse_module(text: str, n: int | None = None) -> Module:
    """Parse ``"[1,2]+[2,2]*3"``; ``"0"`` is the zero module."""
    text = text.strip()
    if text == "0":
        return ZERO
    counts: Counter[Interval] = Counter()
    for term in text.split("+"):
        m = _TERM.match(term.strip())
        if m is None:
            raise ValueError(f"cannot parse module term {term!r}")
        k = int(m.group(3) or 1)
        if k < 1:
            raise ValueError(f"multiplicity must be positive in {term!r}")
        counts[Interval(int(m.group(1)), int(m.group(2)))] += k
    module = Module.from_counts(counts)
    if n is not None:
        context(n).check_module(module)
    return module


def format_module(m: Module) -> str:
    if m.is_zero:
        return "0"
    return "+".join(str(iv) if k == 1 else f"{iv}*{k}" for iv, k in m.summands)


def modules_up_to(n: int, dim_bound: int) -> list[Module]:
    """All nonzero modules of total dimension <= dim_bound, ordered by (dim, summands)."""
    return list(_modules_up_to(n, dim_bound))


@lru_cache(maxsize=None)
def _modules_up_to(n: int, dim_bound: int) -> tuple[Module, ...]:
    ivs = indecomposables(n)
    out: list[Module] = []

    def rec(k: int, budget: int, acc: list[tuple[Interval, int]]):
        if k == len(ivs):
            if acc:
                out.append(Module(tuple(acc)))
            return
        iv = ivs[k]
        rec(k + 1, budget, acc)
        mult = 1
        while mult * iv.dim <= budget:
            acc.append((iv, mult))
            rec(k + 1, budget - mult * iv.dim, acc)
            acc.pop()
            mult += 1

    rec(0, dim_bound, [])
    out.sort(key=Module.sort_key)
    return tuple(out)
