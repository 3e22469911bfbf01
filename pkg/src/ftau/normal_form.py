"""Normal forms x_0^i0 y_0^e0 ... x_n^in y_n^en x_m^-jm ... x_0^-j0 and the rewriting that reaches them.

The rewriting kernel comes in two interchangeable builds: the compiled
``_nf_ext`` (Cython) and the pure-Python ``_nf_py``.  The compiled one is used
when importable unless ``FTAU_PURE_PYTHON`` is set in the environment.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from . import _nf_py
from .words import Letter, Word, _as_word

__all__ = [
    "BACKEND",
    "DEFAULT_STEP_LIMIT",
    "NormalForm",
    "NormalFormError",
    "StepLimitExceeded",
    "normalize",
    "normalize_with_stats",
    "is_normal_form",
    "to_normal_form_data",
    "available_backends",
]

DEFAULT_STEP_LIMIT = 100_000

_KERNELS = {"python": _nf_py.normalize_tokens}
try:
    from . import _nf_ext  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on the build
    _nf_ext = None
else:
    _KERNELS["cython"] = _nf_ext.normalize_tokens

if _nf_ext is not None and not os.environ.get("FTAU_PURE_PYTHON"):
    BACKEND = "cython"
else:
    BACKEND = "python"


def available_backends() -> list[str]:
    return sorted(_KERNELS)


class StepLimitExceeded(RuntimeError):
    """Raised when rewriting needs more steps than allowed; ``partial`` equals the input in F_tau."""

    def __init__(self, partial: Word, steps: int):
        super().__init__(f"step limit exceeded after {steps} steps")
        self.partial = partial
        self.steps = steps


class NormalFormError(ValueError):
    def __init__(self, pos: int, msg: str):
        super().__init__(f"{msg} (letter {pos})")
        self.pos = pos


def _encode(w: Word) -> list[int]:
    return [
        (2 * l.index + (l.family == "y") + 1) * l.sign
        for l in w
    ]


def _decode(tokens) -> Word:
    out = []
    for t in tokens:
        code = abs(t) - 1
        out.append(Letter("y" if code & 1 else "x", code >> 1, 1 if t > 0 else -1))
    return Word(out)


def normalize_with_stats(w, step_limit: int = DEFAULT_STEP_LIMIT, backend: str | None = None):
    """Like :func:`normalize` but also returns the number of rewrite steps."""
    w = _as_word(w)
    if step_limit <= 0:
        raise ValueError("step_limit must be positive")
    kernel = _KERNELS[backend or BACKEND]
    status, tokens, steps = kernel(_encode(w), step_limit)
    if status != _nf_py.OK:
        raise StepLimitExceeded(_decode(tokens), steps)
    return _decode(tokens), steps


def normalize(w, step_limit: int = DEFAULT_STEP_LIMIT, backend: str | None = None) -> Word:
    return normalize_with_stats(w, step_limit, backend)[0]


@dataclass(frozen=True)
class NormalForm:
    """Exponent data of a normal form.

    ``positive`` holds ``(k, i_k, eps_k)`` for k = 0..n and ``negative`` holds
    ``j_k`` for k = m..0, highest index first.
    """

    positive: tuple[tuple[int, int, int], ...]
    negative: tuple[int, ...]

    def i(self, k: int) -> int:
        return self.positive[k][1] if 0 <= k < len(self.positive) else 0

    def eps(self, k: int) -> int:
        return self.positive[k][2] if 0 <= k < len(self.positive) else 0

    def j(self, k: int) -> int:
        m = len(self.negative) - 1
        return self.negative[m - k] if 0 <= k <= m else 0

    def to_word(self) -> Word:
        letters = []
        for k, i, e in self.positive:
            letters += [Letter("x", k, 1)] * i + [Letter("y", k, 1)] * e
        m = len(self.negative) - 1
        for pos, j in enumerate(self.negative):
            letters += [Letter("x", m - pos, -1)] * j
        return Word(letters)

    def to_record(self) -> dict:
        return {"positive": [list(t) for t in self.positive], "negative": list(self.negative)}


def _shape(w: Word) -> tuple[NormalForm, list[int]]:
    """Split into exponent data; also return the position of the first x_k of each index."""
    pos_i: dict[int, int] = {}
    pos_e: dict[int, int] = {}
    neg: dict[int, int] = {}
    first_pos: dict[int, int] = {}
    last_key = (-1, -1)
    last_neg = None
    for p, l in enumerate(w):
        if l.sign > 0:
            if last_neg is not None:
                raise NormalFormError(p, "positive letter after the negative part")
            key = (l.index, 0 if l.family == "x" else 1)
            if key < last_key:
                raise NormalFormError(p, "positive part is not in ascending order")
            if l.family == "y":
                if pos_e.get(l.index):
                    raise NormalFormError(p, "y exponent exceeds 1")
                pos_e[l.index] = 1
            else:
                pos_i[l.index] = pos_i.get(l.index, 0) + 1
            first_pos.setdefault(l.index, p)
            last_key = key
        else:
            if l.family == "y":
                raise NormalFormError(p, "inverse y letter")
            if last_neg is not None and l.index > last_neg:
                raise NormalFormError(p, "negative part is not in descending order")
            neg[l.index] = neg.get(l.index, 0) + 1
            last_neg = l.index
    n = max([*pos_i, *pos_e], default=-1)
    m = max(neg, default=-1)
    positive = tuple((k, pos_i.get(k, 0), pos_e.get(k, 0)) for k in range(n + 1))
    negative = tuple(neg.get(k, 0) for k in range(m, -1, -1))
    top = max(n, m) + 1
    return NormalForm(positive, negative), [first_pos.get(k, len(w)) for k in range(top)]


def to_normal_form_data(w) -> NormalForm:
    """Decompose ``w`` as a normal form; raise :class:`NormalFormError` at the first violation."""
    w = _as_word(w)
    nf, first_pos = _shape(w)
    top = len(first_pos)
    for k in range(top):
        i, e, j = nf.i, nf.eps, nf.j
        if i(k) and j(k) and not (i(k + 1) or j(k + 1) or e(k) or e(k + 1)):
            raise NormalFormError(first_pos[k], f"condition (1) fails at index {k}")
        if (
            i(k) >= 1
            and e(k) == 1
            and i(k + 1) == 0
            and e(k + 1) == 0
            and i(k + 2) >= 1
            and j(k + 1) >= 1
            and j(k) >= 1
            and not (i(k + 2) >= 2 or e(k + 2) or j(k + 2) or j(k + 1) >= 2)
        ):
            raise NormalFormError(first_pos[k], f"condition (2) fails at index {k}")
    return nf


def is_normal_form(w) -> bool:
    try:
        to_normal_form_data(w)
    except NormalFormError:
        return False
    return True
