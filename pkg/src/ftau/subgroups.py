"""The index-2 subgroup K = <x0, x1, y1, x2, y2, ...>, the copies F_tau[m], and K as an HNN extension.

K is an ascending HNN extension of F_tau[1] with stable letter x0^-1 acting
by the shift sigma.  Words in the HNN alphabet (x0^{+-1} and letters of
index >= 1) are brought to the shape ``x0^a * core * x0^-b``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .normal_form import DEFAULT_STEP_LIMIT, StepLimitExceeded, normalize
from .words import Letter, Word, _as_word, coset_parity, format_word, parse_word, shift

__all__ = [
    "HnnForm",
    "AlphabetError",
    "sigma_endo",
    "hnn_rewrite",
    "hnn_reduce",
    "in_K",
    "in_Ftau_m",
    "UNKNOWN",
]

UNKNOWN = "unknown"


class AlphabetError(ValueError):
    pass


@dataclass(frozen=True)
class HnnForm:
    """The element x0^a * core * x0^-b, with every core index >= 1."""

    a: int
    core: Word
    b: int

    def to_word(self) -> Word:
        return Word([Letter("x", 0, 1)] * self.a) + self.core + Word([Letter("x", 0, -1)] * self.b)

    def to_record(self) -> dict:
        return {"a": self.a, "core": format_word(self.core), "b": self.b}

    @classmethod
    def from_record(cls, record: dict) -> HnnForm:
        return cls(int(record["a"]), parse_word(record["core"]), int(record["b"]))


def sigma_endo(w) -> Word:
    """The shift x_n -> x_{n+1}, y_n -> y_{n+1}; on index >= 1 words it is conjugation by x0."""
    return shift(w, 1)


def hnn_rewrite(w) -> HnnForm:
    w = _as_word(w)
    a = 0
    b = 0
    core: list[Letter] = []
    for pos, l in enumerate(w):
        if l.index > 0:
            # x0^-b g = sigma^b(g) x0^-b
            core.append(l.shifted(b))
        elif l.family == "y":
            raise AlphabetError(f"y0 at letter {pos} is not in the HNN alphabet of K")
        elif l.sign < 0:
            b += 1
        elif b > 0:
            b -= 1
        else:
            # core x0 = x0 sigma(core)
            a += 1
            core = [c.shifted(1) for c in core]
    return HnnForm(a, Word(core), b)


def hnn_reduce(h: HnnForm, step_limit: int = DEFAULT_STEP_LIMIT) -> HnnForm:
    """Cancel x0 ... x0^-1 around a core lying in F_tau[2]: x0 g x0^-1 = sigma^-1(g)."""
    a, core, b = h.a, h.core, h.b
    while a > 0 and b > 0:
        nf = normalize(core, step_limit)
        low = nf.min_index()
        if low is not None and low < 2:
            break
        a, core, b = a - 1, shift(nf, -1), b - 1
    return HnnForm(a, core, b)


def in_K(w) -> bool:
    return coset_parity(w) == 0


def in_Ftau_m(w, m: int, step_limit: int = DEFAULT_STEP_LIMIT):
    """Membership in F_tau[m] = <x_i, y_i : i >= m>; ``UNKNOWN`` if rewriting hits the step limit."""
    if m < 1:
        raise ValueError("m must be positive")
    try:
        nf = normalize(w, step_limit)
    except StepLimitExceeded:
        return UNKNOWN
    low = nf.min_index()
    return low is None or low >= m
