import json
import random

import pytest
from hypothesis import given, settings

from conftest import words_st
from ftau.golden import ONE, ZERO, GoldenInt, tau_pow
from ftau.plhomeo import (
    PLHomeo,
    PLHomeoError,
    compose,
    eval_at,
    generator_x,
    generator_y,
    identity,
    invert,
    nu,
    sample_points,
    slope_exponent_at_one,
    slope_exponent_at_zero,
    support_bounds,
    to_tsv,
)
from ftau.words import eval_word

T = tau_pow
x, y = generator_x, generator_y


def from_formulas(parts):
    """Build a map from (left endpoint, slope exponent, intercept) with f(t) = tau^e t + c."""
    return PLHomeo((l, T(e) * l + c, e) for l, e, c in parts)


# the two maps with (lambda, rho) profiles (1, 0) and (0, 1)
F_LI = from_formulas([(ZERO, 1, ZERO), (T(2), -1, -T(2)), (T(1), 0, ZERO)])
G_LI = from_formulas([(ZERO, 0, ZERO), (T(2), -1, -T(3)), (T(1), 1, T(2))])


class TestConstruction:
    def test_rejects_discontinuity(self):
        with pytest.raises(PLHomeoError):
            PLHomeo([(ZERO, ZERO, 1), (T(1), T(1), 0)])

    def test_rejects_bad_start_and_order(self):
        with pytest.raises(PLHomeoError):
            PLHomeo([(T(1), T(1), 0)])
        with pytest.raises(PLHomeoError):
            PLHomeo([(ZERO, ZERO, 0), (T(1), T(1), 0), (T(2), T(2), 0)])

    def test_redundant_breakpoints_merge(self):
        f = PLHomeo([(ZERO, ZERO, 0), (T(2), T(2), 0), (T(1), T(1), 0)])
        assert f == identity()
        assert f.is_identity()

    def test_li_maps_are_continuous(self):
        # from_formulas goes through the continuity check
        assert len(F_LI.pieces) == 3 and len(G_LI.pieces) == 3


class TestGenerators:
    def test_y0(self):
        assert y(0).pieces == ((ZERO, ZERO, -1), (T(2), T(1), 1))

    def test_x0(self):
        assert [p[2] for p in x(0).pieces] == [-2, 0, 1]
        assert x(0).breakpoints() == [T(4), T(2)]

    def test_x1_breakpoints(self):
        assert x(1).breakpoints() == [GoldenInt(1, -1), GoldenInt(-2, 4), GoldenInt(0, 1)]
        assert len(x(1).pieces) == 4

    @pytest.mark.parametrize("i", range(9))
    def test_boundary_slopes(self, i):
        assert slope_exponent_at_one(x(i)) == 1
        assert slope_exponent_at_one(y(i)) == 1
        assert slope_exponent_at_zero(x(i)) == (-2 if i == 0 else 0)
        assert slope_exponent_at_zero(y(i)) == (-1 if i == 0 else 0)

    def test_negative_index(self):
        with pytest.raises(ValueError):
            x(-1)


class TestEval:
    def test_examples(self):
        assert eval_at(identity(), GoldenInt(1, -1)) == GoldenInt(1, -1)
        assert eval_at(x(0), GoldenInt(2, -3)) == GoldenInt(1, -1)
        assert eval_at(y(0), GoldenInt(1, -1)) == GoldenInt(0, 1)

    def test_endpoints(self):
        for f in (x(0), y(3), F_LI):
            assert f(ZERO) == ZERO and f(ONE) == ONE

    def test_domain(self):
        with pytest.raises(PLHomeoError):
            eval_at(x(0), GoldenInt(2, 0))
        with pytest.raises(PLHomeoError):
            eval_at(x(0), -T(3))


class TestCompose:
    def test_identity(self):
        assert compose(x(2), identity()) == x(2)
        assert compose(identity(), y(1)) == y(1)

    def test_y0_squared(self):
        expected = PLHomeo([(ZERO, ZERO, -2), (T(3), T(3) + T(2), 0), (T(2), T(2) + T(2), 2)])
        assert compose(y(0), y(0)) == expected
        assert compose(x(0), x(1)) == expected

    def test_orientation(self):
        # the relation y0^2 = x0 x1 needs x0 to act first
        assert compose(y(0), y(0)) == compose(x(0), x(1))
        assert compose(y(0), y(0)) != compose(x(1), x(0))

    def test_inverse(self):
        assert compose(x(0), invert(x(0))) == identity()

    def test_pointwise(self):
        f, g = x(0), y(1)
        h = compose(f, g)
        for p, _ in sample_points(f, 3):
            assert h(p) == g(f(p))

    @settings(max_examples=40, deadline=None)
    @given(words_st, words_st, words_st)
    def test_associative(self, u, v, w):
        f, g, h = eval_word(u), eval_word(v), eval_word(w)
        assert compose(compose(f, g), h) == compose(f, compose(g, h))

    @settings(max_examples=40, deadline=None)
    @given(words_st, words_st)
    def test_slopes_are_homomorphic(self, u, v):
        f, g = eval_word(u), eval_word(v)
        fg = compose(f, g)
        assert slope_exponent_at_zero(fg) == slope_exponent_at_zero(f) + slope_exponent_at_zero(g)
        assert slope_exponent_at_one(fg) == slope_exponent_at_one(f) + slope_exponent_at_one(g)


class TestInvert:
    def test_x0_inverse(self):
        expected = PLHomeo([(ZERO, ZERO, 2), (T(2), T(2) - T(3), 0), (T(1), T(1) - T(3), -1)])
        assert invert(x(0)) == expected

    def test_involution(self):
        assert invert(identity()) == identity()
        assert invert(invert(y(1))) == y(1)

    @settings(max_examples=40, deadline=None)
    @given(words_st)
    def test_two_sided(self, w):
        f = eval_word(w)
        assert compose(f, invert(f)) == identity() == compose(invert(f), f)

    @settings(max_examples=40, deadline=None)
    @given(words_st)
    def test_canonical_form_stable(self, w):
        f = eval_word(w)
        assert PLHomeo(f.pieces) == f
        assert PLHomeo(f.pieces).pieces == f.pieces


class TestNu:
    def test_li_example(self):
        assert nu(F_LI) == G_LI
        assert nu(G_LI) == F_LI

    def test_li_profiles(self):
        assert (slope_exponent_at_zero(F_LI), slope_exponent_at_one(F_LI)) == (1, 0)
        assert (slope_exponent_at_zero(G_LI), slope_exponent_at_one(G_LI)) == (0, 1)

    def test_identity_and_involution(self):
        assert nu(identity()) == identity()
        assert nu(nu(x(0))) == x(0)

    def test_pointwise(self):
        f = x(1)
        g = nu(f)
        for p, _ in sample_points(f, 3):
            assert g(ONE - p) == ONE - f(p)

    @settings(max_examples=40, deadline=None)
    @given(words_st, words_st)
    def test_automorphism(self, u, v):
        f, g = eval_word(u), eval_word(v)
        assert nu(compose(f, g)) == compose(nu(f), nu(g))
        assert slope_exponent_at_zero(nu(f)) == slope_exponent_at_one(f)
        assert slope_exponent_at_one(nu(f)) == slope_exponent_at_zero(f)


class TestSupport:
    def test_examples(self):
        assert support_bounds(identity()) is None
        assert support_bounds(F_LI) == (ZERO, T(1))
        assert support_bounds(x(1)) == (T(2), ONE)

    def test_shifted_generators_live_right_of_tau_squared(self):
        rng = random.Random(3)
        for _ in range(50):
            fam = rng.choice((x, y))
            lo, hi = support_bounds(fam(rng.randint(1, 8)))
            assert lo >= T(2) and hi == ONE


class TestSerialization:
    def test_json_round_trip(self):
        f = eval_word("x0 y1 x2^-1")
        rec = json.loads(f.to_json())
        assert rec["pieces"][0] == {"left": [0, 0], "value": [0, 0], "slope_exponent": f.pieces[0][2]}
        assert PLHomeo.from_json(f.to_json()) == f

    def test_tsv(self):
        lines = to_tsv(y(0), subdivisions=1).splitlines()
        assert lines[0] == "x\tfx\tx_decimal\tfx_decimal"
        # 2 pieces * (left + 1 cut) + final point
        assert len(lines) == 1 + 5
        assert lines[-1].startswith("1+0t\t1+0t\t1.000")
