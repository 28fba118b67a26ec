"""Small builders shared by the tests."""

from fractions import Fraction

from torslice.chains import Chain
from torslice.intervals import Interval, context, parse_module


def F(x):
    return Fraction(x)


def mod(text, n=2):
    return parse_module(text, n)


def cls(n, *names):
    """Bitset of the listed intervals, e.g. cls(2, "[1,1]", "[1,2]")."""
    ctx = context(n)
    return ctx.mask(parse_module(t, n).summands[0][0] for t in names)


def full(n):
    return context(n).full


def chain(n, classes, bps, flags=()):
    return Chain(n, tuple(classes), tuple(Fraction(x) for x in bps), tuple(flags))


S1, S2, P12 = "[1,1]", "[2,2]", "[1,2]"
