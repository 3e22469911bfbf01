"""Exact computations in the golden mean Thompson group F_tau."""

from .golden import GoldenInt, tau_pow
from .normal_form import BACKEND, NormalForm, StepLimitExceeded, is_normal_form, normalize
from .plhomeo import PLHomeo, compose, generator_x, generator_y, invert, nu
from .words import Letter, Word, abelianize, eval_word, lambda_of, parse_word, rho_of

__all__ = [
    "BACKEND",
    "GoldenInt",
    "Letter",
    "NormalForm",
    "PLHomeo",
    "StepLimitExceeded",
    "Word",
    "abelianize",
    "compose",
    "eval_word",
    "generator_x",
    "generator_y",
    "invert",
    "is_normal_form",
    "lambda_of",
    "normalize",
    "nu",
    "parse_word",
    "rho_of",
    "tau_pow",
]
