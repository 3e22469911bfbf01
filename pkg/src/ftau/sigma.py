"""Membership in the Sigma invariants of F_tau and K, and what it says about kernels.

Nothing here computes Sigma from first principles.  The rules restate the
known classification of the character circle of F_tau:

* Sigma^1 is everything except [-lambda] and [-rho];
* Sigma^2 = Sigma^infty additionally loses the open arc between them, i.e.
  [a*lambda + b*rho] survives iff a > 0 or b > 0.

Homotopical and homological (over Z) invariants agree.  For 2 < n < infty the
answer is the Sigma^2 one, forced by the chain Sigma^infty <= Sigma^n <= Sigma^2.
K has index 2 and the same character space, and restriction is the identity
in the chosen coordinates, so K gets the same answers.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .characters import (
    Character,
    CharacterClass,
    ZeroCharacterError,
    class_of,
    antipode,
)
from .words import Letter, Word

__all__ = [
    "INFINITY",
    "SigmaVerdict",
    "KernelType",
    "sigma_membership",
    "sigma_membership_K",
    "verdict",
    "kernel_coabelian_type",
    "kernel_witness",
    "WITNESS_LAMBDA",
    "WITNESS_RHO",
]

INFINITY = math.inf

# (lambda, rho) = (1, 0) and (0, 1)
WITNESS_LAMBDA = Word([Letter("y", 0, 1), Letter("x", 0, -1)])
WITNESS_RHO = Word([Letter("x", 1, 1)])


class KernelType(enum.Enum):
    F_INFTY = "F_INFTY"
    FG_NOT_FP2 = "FG_NOT_FP2"
    NOT_FG = "NOT_FG"


@dataclass(frozen=True)
class SigmaVerdict:
    in_sigma1: bool
    in_sigma_infty: bool

    def __post_init__(self):
        if self.in_sigma_infty and not self.in_sigma1:
            raise ValueError("Sigma^infty is contained in Sigma^1")


def _as_class(c) -> CharacterClass:
    if isinstance(c, CharacterClass):
        if c.a == 0 and c.b == 0:
            raise ZeroCharacterError("the zero character has no class")
        if math.gcd(c.a, c.b) != 1:
            return class_of(c)
        return c
    return class_of(c)


def sigma_membership(c, n=1) -> bool:
    """Is the class c in Sigma^n(F_tau)?  ``n`` is a positive integer or ``INFINITY``."""
    c = _as_class(c)
    if n < 1:
        raise ValueError("n must be a positive integer or infinity")
    if n == 1:
        return (c.a, c.b) not in ((-1, 0), (0, -1))
    return c.a > 0 or c.b > 0


def sigma_membership_K(c, n=1) -> bool:
    """Same question for K, with c in the coordinates (lambda|_K, rho|_K)."""
    return sigma_membership(c, n)


def verdict(c) -> SigmaVerdict:
    return SigmaVerdict(sigma_membership(c, 1), sigma_membership(c, INFINITY))


def kernel_coabelian_type(chi) -> KernelType:
    """Finiteness type of ker(chi) for a nonzero rational character.

    ker(chi) is of type F_n (resp. FP_n) iff both [chi] and [-chi] lie in Sigma^n.
    """
    c = _as_class(chi)
    minus = antipode(c)
    if sigma_membership(c, INFINITY) and sigma_membership(minus, INFINITY):
        return KernelType.F_INFTY
    if sigma_membership(c, 1) and sigma_membership(minus, 1):
        return KernelType.FG_NOT_FP2
    return KernelType.NOT_FG


def kernel_witness(chi) -> Word:
    """An element t0 of ker(chi) with lambda(t0) generating lambda(ker chi).

    For chi ~ A*lambda + B*rho (A, B coprime, nonzero) this is
    WITNESS_LAMBDA^B * WITNESS_RHO^(-A), with (lambda, rho)(t0) = (B, -A).
    """
    a, b = Fraction(chi[0]), Fraction(chi[1])
    if a == 0 or b == 0:
        raise ValueError("kernel witnesses need both coefficients nonzero")
    c = class_of((a, b))
    return WITNESS_LAMBDA ** c.b + WITNESS_RHO ** (-c.a)
