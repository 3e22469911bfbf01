"""Characters a*lambda + b*rho of F_tau and of its index-2 subgroup K.

lambda(f) = log_tau f'(0) and rho(f) = log_tau f'(1).  Characters of K are
written in the basis of restrictions (lambda|_K, rho|_K), so restriction is
the identity on coordinates and the only real content of lifting is the
value on y0, which is half the value on y0^2 = x0 x1.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import NamedTuple

from .words import Letter, Word, _as_word, abelianize, lambda_of, rho_of

__all__ = [
    "Character",
    "CharacterClass",
    "CharacterOnK",
    "ZeroCharacterError",
    "LAMBDA",
    "RHO",
    "eval_character",
    "class_of",
    "antipode",
    "restrict_to_K",
    "lift_from_K",
    "lift_value_on_y0",
    "in_sqrt_commutator",
    "parse_rational",
]


class ZeroCharacterError(ValueError):
    pass


def parse_rational(text) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


class Character(NamedTuple):
    a: Fraction
    b: Fraction

    @classmethod
    def of(cls, a, b) -> Character:
        return cls(Fraction(a), Fraction(b))

    @classmethod
    def parse(cls, text: str) -> Character:
        a, b = text.split(",")
        return cls(parse_rational(a), parse_rational(b))

    def __str__(self) -> str:
        return f"{self.a},{self.b}"

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __call__(self, w) -> Fraction:
        return eval_character(self, w)


class CharacterOnK(NamedTuple):
    a: Fraction
    b: Fraction

    @classmethod
    def of(cls, a, b) -> CharacterOnK:
        return cls(Fraction(a), Fraction(b))

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __call__(self, w) -> Fraction:
        w = _as_word(w)
        if any(l.family == "y" and l.index == 0 for l in w):
            raise ValueError("word is not in the generators of K")
        return self.a * lambda_of(w) + self.b * rho_of(w)


class CharacterClass(NamedTuple):
    """A point of the character circle: a primitive integer pair."""

    a: int
    b: int

    def __str__(self) -> str:
        return f"{self.a},{self.b}"


LAMBDA = Character(Fraction(1), Fraction(0))
RHO = Character(Fraction(0), Fraction(1))


def eval_character(chi: Character, w) -> Fraction:
    w = _as_word(w)
    return Fraction(chi.a) * lambda_of(w) + Fraction(chi.b) * rho_of(w)


def eval_on_abelianization(chi: Character, u: int, v: int) -> Fraction:
    """chi on the class u*bar(y0) + v*bar(x1); lambda = -u, rho = u + v there."""
    return Fraction(chi.a) * (-u) + Fraction(chi.b) * (u + v)


def class_of(chi) -> CharacterClass:
    a, b = Fraction(chi[0]), Fraction(chi[1])
    if a == 0 and b == 0:
        raise ZeroCharacterError("the zero character has no class")
    d = lcm(a.denominator, b.denominator)
    A, B = int(a * d), int(b * d)
    g = gcd(A, B)
    return CharacterClass(A // g, B // g)


def antipode(c: CharacterClass) -> CharacterClass:
    return CharacterClass(-c.a, -c.b)


def restrict_to_K(chi: Character) -> CharacterOnK:
    return CharacterOnK(Fraction(chi.a), Fraction(chi.b))


_Y0 = Word([Letter("y", 0)])
_X1 = Word([Letter("x", 1)])
_X0X1 = Word([Letter("x", 0), Letter("x", 1)])


def lift_value_on_y0(psi: CharacterOnK) -> Fraction:
    """The extension's value on y0: half of psi(x0 x1), since y0^2 = x0 x1 lies in K."""
    return psi(_X0X1) / 2


def lift_from_K(psi: CharacterOnK) -> Character:
    """Extend psi from K to F_tau.

    The extension agrees with psi on x0, x1, y1, x2, ... and takes
    ``psi(x0 x1) / 2`` on y0.  Its coordinates follow from the values on y0
    and x1, where (lambda, rho) = (-1, 1) and (0, 1).
    """
    on_y0 = lift_value_on_y0(psi)
    on_x1 = psi(_X1)
    # a*(-1) + b*1 = on_y0 and a*0 + b*1 = on_x1
    b = on_x1
    a = b - on_y0
    return Character(a, b)


def in_sqrt_commutator(w) -> bool:
    """True iff some power of w lies in the commutator subgroup."""
    ab = abelianize(w)
    return ab.u == 0 and ab.v == 0
