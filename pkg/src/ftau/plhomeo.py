"""Piecewise-linear homeomorphisms of [0, 1] with slopes tau**k and breakpoints in Z[tau].

A map is stored as pieces ``(left, value, exponent)``: on the piece starting at
``left`` the map is ``x -> value + tau**exponent * (x - left)``.  The last piece
ends at 1.  Products act left to right: ``compose(f, g)`` is ``x -> g(f(x))``.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from typing import Iterable, Sequence

from .golden import ONE, ZERO, GoldenInt, approx, fmt, sign, tau_pow

__all__ = [
    "PLHomeo",
    "PLHomeoError",
    "identity",
    "compose",
    "invert",
    "generator_x",
    "generator_y",
    "nu",
    "support_bounds",
    "slope_exponent_at_zero",
    "slope_exponent_at_one",
]

Piece = tuple[GoldenInt, GoldenInt, int]


class PLHomeoError(ValueError):
    pass


def _end_value(left: GoldenInt, value: GoldenInt, exp: int, right: GoldenInt) -> GoldenInt:
    return value + tau_pow(exp) * (right - left)


class PLHomeo:
    __slots__ = ("pieces", "_lefts", "_hash")

    def __init__(self, pieces: Iterable[Sequence], *, check: bool = True):
        raw = [(_gi(p[0]), _gi(p[1]), int(p[2])) for p in pieces]
        self.pieces: tuple[Piece, ...] = _canonical(raw, check)
        self._lefts = [p[0] for p in self.pieces]
        self._hash = None

    def __repr__(self) -> str:
        body = ", ".join(f"({fmt(l)}, {fmt(v)}, {e})" for l, v, e in self.pieces)
        return f"PLHomeo([{body}])"

    def __eq__(self, other) -> bool:
        if not isinstance(other, PLHomeo):
            return NotImplemented
        return self.pieces == other.pieces

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.pieces)
        return self._hash

    def __call__(self, x: GoldenInt) -> GoldenInt:
        return eval_at(self, x)

    def __mul__(self, other: PLHomeo) -> PLHomeo:
        return compose(self, other)

    def __invert__(self) -> PLHomeo:
        return invert(self)

    def is_identity(self) -> bool:
        return self.pieces == ((ZERO, ZERO, 0),)

    def breakpoints(self) -> list[GoldenInt]:
        return [p[0] for p in self.pieces[1:]]

    def intervals(self):
        """Yield ``(left, right, value_left, value_right, exponent)`` per piece."""
        n = len(self.pieces)
        for k, (l, v, e) in enumerate(self.pieces):
            if k + 1 < n:
                r, vr = self.pieces[k + 1][0], self.pieces[k + 1][1]
            else:
                r, vr = ONE, ONE
            yield l, r, v, vr, e

    def to_record(self) -> dict:
        return {
            "pieces": [
                {"left": [l.a, l.b], "value": [v.a, v.b], "slope_exponent": e}
                for l, v, e in self.pieces
            ]
        }

    @classmethod
    def from_record(cls, record: dict) -> PLHomeo:
        return cls(
            (GoldenInt(*p["left"]), GoldenInt(*p["value"]), p["slope_exponent"])
            for p in record["pieces"]
        )

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> PLHomeo:
        return cls.from_record(json.loads(text))


def _gi(x) -> GoldenInt:
    if isinstance(x, GoldenInt):
        return x
    if isinstance(x, int):
        return GoldenInt(x, 0)
    a, b = x
    return GoldenInt(a, b)


def _canonical(raw: list[Piece], check: bool) -> tuple[Piece, ...]:
    if not raw:
        raise PLHomeoError("a PL homeomorphism needs at least one piece")
    # drop empty pieces (equal consecutive left endpoints); keep the last of a run
    pieces: list[Piece] = []
    for k, p in enumerate(raw):
        right = raw[k + 1][0] if k + 1 < len(raw) else ONE
        s = sign(right - p[0])
        if s < 0:
            raise PLHomeoError("left endpoints must increase")
        if s == 0:
            continue
        pieces.append(p)
    if not pieces:
        raise PLHomeoError("pieces do not cover [0, 1]")
    if check:
        if pieces[0][0] != ZERO or pieces[0][1] != ZERO:
            raise PLHomeoError("first piece must start at (0, 0)")
        for k, (l, v, e) in enumerate(pieces):
            if k + 1 < len(pieces):
                r, vr = pieces[k + 1][0], pieces[k + 1][1]
            else:
                r, vr = ONE, ONE
            if _end_value(l, v, e, r) != vr:
                raise PLHomeoError(f"discontinuity at breakpoint {fmt(r)}")
    merged = [pieces[0]]
    for p in pieces[1:]:
        if p[2] == merged[-1][2]:
            continue
        merged.append(p)
    return tuple(merged)


IDENTITY = PLHomeo([(ZERO, ZERO, 0)])


def identity() -> PLHomeo:
    return IDENTITY


def _locate(f: PLHomeo, x: GoldenInt) -> int:
    # bisect over exactly ordered GoldenInts
    return bisect_right(f._lefts, x) - 1


def eval_at(f: PLHomeo, x: GoldenInt) -> GoldenInt:
    x = _gi(x)
    if sign(x) < 0 or sign(ONE - x) < 0:
        raise PLHomeoError(f"{fmt(x)} lies outside [0, 1]")
    l, v, e = f.pieces[_locate(f, x)]
    return v + tau_pow(e) * (x - l)


def compose(f: PLHomeo, g: PLHomeo) -> PLHomeo:
    """The map x -> g(f(x))."""
    out: list[Piece] = []
    gp = g.pieces
    ng = len(gp)
    j = 0
    for l, r, v, vr, e in f.intervals():
        # g-piece containing the image of l
        while j + 1 < ng and sign(gp[j + 1][0] - v) <= 0:
            j += 1
        inv = tau_pow(-e)
        x = l
        while True:
            gl, gv, ge = gp[j]
            out.append((x, gv + tau_pow(ge) * (v + tau_pow(e) * (x - l) - gl), e + ge))
            if j + 1 < ng and sign(gp[j + 1][0] - vr) < 0:
                j += 1
                x = l + inv * (gp[j][0] - v)
            else:
                break
    return PLHomeo(out, check=False)


def invert(f: PLHomeo) -> PLHomeo:
    return PLHomeo([(v, l, -e) for l, v, e in f.pieces], check=False)


def nu(f: PLHomeo) -> PLHomeo:
    """Conjugate by t -> 1 - t."""
    out = []
    for l, r, v, vr, e in reversed(list(f.intervals())):
        out.append((ONE - r, ONE - vr, e))
    return PLHomeo(out, check=False)


def slope_exponent_at_zero(f: PLHomeo) -> int:
    return f.pieces[0][2]


def slope_exponent_at_one(f: PLHomeo) -> int:
    return f.pieces[-1][2]


def support_bounds(f: PLHomeo):
    """Smallest closed interval containing {x : f(x) != x}, or None for the identity."""
    lo = hi = None
    for l, r, v, vr, e in f.intervals():
        if e == 0 and v == l:
            continue
        if lo is None:
            lo = l
        hi = r
    if lo is None:
        return None
    return lo, hi


def generator_x(i: int) -> PLHomeo:
    if i < 0:
        raise ValueError("generator index must be nonnegative")
    b1 = ONE - tau_pow(i)
    b2 = b1 + tau_pow(i + 4)
    b3 = ONE - tau_pow(i + 1)
    return PLHomeo(
        [
            (ZERO, ZERO, 0),
            (b1, b1, -2),
            (b2, tau_pow(-2) * b2 - tau_pow(-1) * b1, 0),
            (b3, tau_pow(1) * b3 + tau_pow(2), 1),
        ]
    )


def generator_y(i: int) -> PLHomeo:
    if i < 0:
        raise ValueError("generator index must be nonnegative")
    b1 = ONE - tau_pow(i)
    b2 = ONE - tau_pow(i + 1)
    return PLHomeo(
        [
            (ZERO, ZERO, 0),
            (b1, b1, -1),
            (b2, tau_pow(1) * b2 + tau_pow(2), 1),
        ]
    )


def sample_points(f: PLHomeo, subdivisions: int = 4):
    """Exact points (x, f(x)): every breakpoint plus a binary subdivision of each piece.

    Subdivision points are taken at ``left + (right - left) * tau**k`` style
    positions so they stay inside Z[tau]: each piece is split recursively at
    the tau-golden cut ``left + tau**2 * (right - left)``.
    """
    pts = []
    for l, r, v, vr, e in f.intervals():
        interior = _golden_cuts(l, r, subdivisions)
        for x in [l, *interior]:
            pts.append((x, v + tau_pow(e) * (x - l)))
    pts.append((ONE, ONE))
    return pts


def _golden_cuts(l: GoldenInt, r: GoldenInt, depth: int) -> list[GoldenInt]:
    if depth <= 0:
        return []
    m = l + tau_pow(2) * (r - l)
    return _golden_cuts(l, m, depth - 1) + [m] + _golden_cuts(m, r, depth - 1)


def to_tsv(f: PLHomeo, subdivisions: int = 4, digits: int = 30) -> str:
    lines = ["x\tfx\tx_decimal\tfx_decimal"]
    for x, y in sample_points(f, subdivisions):
        lines.append(f"{fmt(x)}\t{fmt(y)}\t{approx(x, digits)}\t{approx(y, digits)}")
    return "\n".join(lines) + "\n"
