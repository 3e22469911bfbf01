"""Exact arithmetic in Z[tau], tau = (sqrt(5) - 1) / 2, the positive root of x^2 + x = 1."""

from __future__ import annotations

import re
from decimal import Decimal, localcontext
from functools import lru_cache, total_ordering

__all__ = ["GoldenInt", "GoldenParseError", "tau_pow", "sign", "cmp", "parse", "fmt", "approx"]


class GoldenParseError(ValueError):
    def __init__(self, text: str, pos: int, msg: str):
        super().__init__(f"{msg} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


@total_ordering
class GoldenInt:
    """The number ``a + b*tau``; immutable, hashable, exactly ordered."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0):
        object.__setattr__(self, "a", int(a))
        object.__setattr__(self, "b", int(b))

    def __setattr__(self, name, value):
        raise AttributeError("GoldenInt is immutable")

    def __repr__(self) -> str:
        return f"GoldenInt({self.a}, {self.b})"

    def __str__(self) -> str:
        return fmt(self)

    def __iter__(self):
        return iter((self.a, self.b))

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        if isinstance(other, GoldenInt):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __lt__(self, other) -> bool:
        if isinstance(other, int):
            other = GoldenInt(other)
        if not isinstance(other, GoldenInt):
            return NotImplemented
        return sign(self - other) < 0

    def __add__(self, other) -> GoldenInt:
        if isinstance(other, int):
            return GoldenInt(self.a + other, self.b)
        if isinstance(other, GoldenInt):
            return GoldenInt(self.a + other.a, self.b + other.b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> GoldenInt:
        return GoldenInt(-self.a, -self.b)

    def __sub__(self, other) -> GoldenInt:
        if isinstance(other, int):
            return GoldenInt(self.a - other, self.b)
        if isinstance(other, GoldenInt):
            return GoldenInt(self.a - other.a, self.b - other.b)
        return NotImplemented

    def __rsub__(self, other) -> GoldenInt:
        return (-self) + other

    def __mul__(self, other) -> GoldenInt:
        if isinstance(other, int):
            return GoldenInt(self.a * other, self.b * other)
        if not isinstance(other, GoldenInt):
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        # tau^2 = 1 - tau
        bd = b * d
        return GoldenInt(a * c + bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def times_tau_pow(self, n: int) -> GoldenInt:
        return self * tau_pow(n)


ZERO = GoldenInt(0, 0)
ONE = GoldenInt(1, 0)
TAU = GoldenInt(0, 1)


@lru_cache(maxsize=512)
def tau_pow(n: int) -> GoldenInt:
    """Canonical coordinates of tau**n for any integer n."""
    if n == 0:
        return ONE
    if n < 0:
        # tau^-1 = 1 + tau
        base, n = GoldenInt(1, 1), -n
    else:
        base = TAU
    result = ONE
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


def sign(x: GoldenInt) -> int:
    """Exact sign of a + b*tau.

    Uses 2(a + b*tau) = (2a - b) + b*sqrt(5) and compares squares when the
    two summands disagree in sign.
    """
    a, b = x.a, x.b
    if b == 0:
        return (a > 0) - (a < 0)
    r = 2 * a - b
    if r >= 0 and b > 0:
        return 1
    if r <= 0 and b < 0:
        return -1
    lhs, rhs = r * r, 5 * b * b
    # lhs == rhs is impossible for b != 0 since sqrt(5) is irrational
    if lhs > rhs:
        return 1 if r > 0 else -1
    return 1 if b > 0 else -1


def cmp(x: GoldenInt, y: GoldenInt) -> int:
    return sign(x - y)


_GOLDEN_RE = re.compile(r"\s*([+-]?\d+)\s*(?:([+-])\s*(\d+)\s*t)?\s*$")


def parse(text: str) -> GoldenInt:
    """Parse ``<int>[(+|-)<int>t]``, e.g. ``"2-3t"``."""
    m = _GOLDEN_RE.match(text)
    if m is None:
        pos = _first_bad_position(text)
        raise GoldenParseError(text, pos, "malformed golden integer")
    a = int(m.group(1))
    b = 0
    if m.group(2) is not None:
        b = int(m.group(3))
        if m.group(2) == "-":
            b = -b
    return GoldenInt(a, b)


# matches the longest prefix that can still be completed to a valid string
_GOLDEN_PREFIX_RE = re.compile(r"\s*(?:[+-]?(?:\d+(?:\s*(?:[+-](?:\s*\d+(?:\s*t\s*)?)?)?)?)?)?")


def _first_bad_position(text: str) -> int:
    return _GOLDEN_PREFIX_RE.match(text).end()


def fmt(x: GoldenInt) -> str:
    b = x.b
    return f"{x.a}{'+' if b >= 0 else '-'}{abs(b)}t"


def approx(x: GoldenInt, digits: int = 30) -> str:
    """Fixed-point decimal with ``digits`` places; display only."""
    with localcontext() as ctx:
        # cancellation in a + b*tau can eat up to len(b) digits
        ctx.prec = digits + 2 * len(str(abs(x.a) + abs(x.b))) + 10
        t = (Decimal(5).sqrt() - 1) / 2
        val = Decimal(x.a) + Decimal(x.b) * t
        return f"{val:.{digits}f}"
