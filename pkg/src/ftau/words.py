"""Words over the generators x_i, y_i of F_tau and their elementary invariants."""

from __future__ import annotations

import re
from functools import lru_cache, reduce
from typing import Iterable, NamedTuple

from .plhomeo import IDENTITY, PLHomeo, compose, generator_x, generator_y, invert

__all__ = [
    "Letter",
    "Word",
    "WordParseError",
    "ShiftError",
    "parse_word",
    "format_word",
    "eval_word",
    "free_reduce",
    "shift",
    "relations_up_to",
    "AbelElt",
    "abelianize",
    "lambda_of",
    "rho_of",
    "coset_parity",
    "coset_of",
]

X, Y = "x", "y"


class Letter(NamedTuple):
    family: str
    index: int
    sign: int = 1

    def inverse(self) -> Letter:
        return Letter(self.family, self.index, -self.sign)

    def shifted(self, m: int) -> Letter:
        return Letter(self.family, self.index + m, self.sign)

    def __str__(self) -> str:
        return f"{self.family}{self.index}" + ("" if self.sign > 0 else "^-1")


class WordParseError(ValueError):
    def __init__(self, text: str, pos: int, msg: str):
        super().__init__(f"{msg} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


class ShiftError(ValueError):
    pass


class Word:
    """An immutable, not necessarily reduced, sequence of letters."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        object.__setattr__(self, "letters", tuple(Letter(*l) for l in letters))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def parse(cls, text: str) -> Word:
        return parse_word(text)

    def __iter__(self):
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, k):
        if isinstance(k, slice):
            return Word(self.letters[k])
        return self.letters[k]

    def __add__(self, other: Word) -> Word:
        return Word(self.letters + tuple(other))

    def __pow__(self, n: int) -> Word:
        if n < 0:
            return self.inverse() ** -n
        return Word(self.letters * n)

    def __eq__(self, other) -> bool:
        if isinstance(other, str):
            other = parse_word(other)
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"

    def __str__(self) -> str:
        return format_word(self)

    def inverse(self) -> Word:
        return Word(l.inverse() for l in reversed(self.letters))

    def min_index(self):
        return min((l.index for l in self.letters), default=None)

    def max_index(self):
        return max((l.index for l in self.letters), default=None)


def _as_word(w) -> Word:
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        return parse_word(w)
    return Word(w)


_TERM = re.compile(r"([xy])(\d+)(?:\^([+-]?\d+))?")


def parse_word(text: str) -> Word:
    """Parse whitespace-separated terms ``x3``, ``y0^-2``, ...; ``""`` is the empty word."""
    letters: list[Letter] = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TERM.match(text, pos)
        if m is None:
            raise WordParseError(text, pos, "expected a term like 'x3' or 'y0^-2'")
        end = m.end()
        if end < n and not text[end].isspace():
            raise WordParseError(text, end, "unexpected character")
        fam, idx = m.group(1), int(m.group(2))
        exp = int(m.group(3)) if m.group(3) is not None else 1
        s = 1 if exp > 0 else -1
        letters.extend([Letter(fam, idx, s)] * abs(exp))
        pos = end
    return Word(letters)


def format_word(w: Word) -> str:
    """Group runs of equal letters into exponents; the empty word prints as ``""``."""
    parts = []
    run_letter = None
    run = 0
    for l in w:
        key = (l.family, l.index)
        if run_letter == key and (run > 0) == (l.sign > 0):
            run += l.sign
            continue
        if run_letter is not None:
            parts.append(_term(run_letter, run))
        run_letter, run = key, l.sign
    if run_letter is not None:
        parts.append(_term(run_letter, run))
    return " ".join(parts)


def _term(key, exp: int) -> str:
    fam, idx = key
    return f"{fam}{idx}" if exp == 1 else f"{fam}{idx}^{exp}"


@lru_cache(maxsize=4096)
def _letter_map(l: Letter) -> PLHomeo:
    g = generator_x(l.index) if l.family == X else generator_y(l.index)
    return g if l.sign > 0 else invert(g)


def eval_word(w) -> PLHomeo:
    """The PL homeomorphism of a word; letters act left to right."""
    w = _as_word(w)
    return reduce(compose, (_letter_map(l) for l in w), IDENTITY)


def free_reduce(w) -> Word:
    out: list[Letter] = []
    for l in _as_word(w):
        if out and out[-1] == l.inverse():
            out.pop()
        else:
            out.append(l)
    return Word(out)


def shift(w, m: int) -> Word:
    """Apply sigma**m: add m to every index."""
    w = _as_word(w)
    if m < 0 and len(w) and w.min_index() + m < 0:
        raise ShiftError(f"shift by {m} would produce a negative index in {format_word(w)!r}")
    return Word(l.shifted(m) for l in w)


def relations_up_to(n: int) -> list[tuple[Word, Word]]:
    """Defining relations a_j b_i = b_i a_{j+1} (0 <= i < j <= n) and y_i^2 = x_i x_{i+1} (i <= n)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rels = []
    for j in range(1, n + 1):
        for i in range(j):
            for a in (X, Y):
                for b in (X, Y):
                    rels.append(
                        (
                            Word([Letter(a, j), Letter(b, i)]),
                            Word([Letter(b, i), Letter(a, j + 1)]),
                        )
                    )
    for i in range(n + 1):
        rels.append((Word([Letter(Y, i), Letter(Y, i)]), Word([Letter(X, i), Letter(X, i + 1)])))
    return rels


class AbelElt(NamedTuple):
    """Image in Z^2 + Z/2 with basis (bar y0, bar x1, z)."""

    u: int
    v: int
    z: int

    def __add__(self, other):
        return AbelElt(self.u + other.u, self.v + other.v, (self.z + other.z) % 2)


def _abel_letter(l: Letter) -> tuple[int, int, int]:
    if l.index == 0:
        u, v, z = (2, -1, 0) if l.family == X else (1, 0, 0)
    else:
        u, v, z = (0, 1, 0) if l.family == X else (0, 1, 1)
    return l.sign * u, l.sign * v, z


def abelianize(w) -> AbelElt:
    u = v = z = 0
    for l in _as_word(w):
        du, dv, dz = _abel_letter(l)
        u += du
        v += dv
        z ^= dz
    return AbelElt(u, v, z)


def lambda_of(w) -> int:
    """log_tau of the slope at 0, read off letter by letter."""
    total = 0
    for l in _as_word(w):
        if l.index == 0:
            total += l.sign * (-2 if l.family == X else -1)
    return total


def rho_of(w) -> int:
    """log_tau of the slope at 1: every generator has slope tau there."""
    return sum(l.sign for l in _as_word(w))


def coset_parity(w) -> int:
    """Signed count of y0 letters mod 2; 0 exactly on the index-2 subgroup K."""
    return sum(1 for l in _as_word(w) if l.family == Y and l.index == 0) % 2


def coset_of(w) -> str:
    return "K" if coset_parity(w) == 0 else "y0K"
