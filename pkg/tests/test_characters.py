from fractions import Fraction as Q

import pytest
from hypothesis import given, settings

from conftest import k_words_st, random_word, words_st
from ftau.characters import (
    LAMBDA,
    RHO,
    Character,
    CharacterClass,
    CharacterOnK,
    ZeroCharacterError,
    antipode,
    class_of,
    eval_character,
    in_sqrt_commutator,
    lift_from_K,
    lift_value_on_y0,
    parse_rational,
    restrict_to_K,
)
from ftau.words import abelianize, lambda_of, rho_of


class TestEval:
    def test_examples(self):
        assert eval_character(Character.of(1, 0), "x0") == -2
        assert eval_character(Character.of(0, 1), "x0") == 1
        assert Character.of(Q(1, 2), 3)("y0 x1") == Q(1, 2) * -1 + 3 * 2

    def test_basis(self):
        assert LAMBDA("y0 x0^-1") == 1 and RHO("y0 x0^-1") == 0
        assert LAMBDA("x1") == 0 and RHO("x1") == 1

    @settings(max_examples=60, deadline=None)
    @given(words_st, words_st)
    def test_homomorphism(self, u, v):
        chi = Character.of(Q(3, 4), -2)
        assert chi(u + v) == chi(u) + chi(v)
        assert chi(u.inverse()) == -chi(u)

    def test_factors_through_abelianization(self, rng):
        chi = Character.of(Q(-5, 3), Q(7, 2))
        for _ in range(100):
            u, v = random_word(rng), random_word(rng)
            if abelianize(u) == abelianize(v):
                assert chi(u) == chi(v)
            # the z coordinate is torsion, so it is invisible to characters
            assert chi(u) == Q(-5, 3) * lambda_of(u) + Q(7, 2) * rho_of(u)


class TestClasses:
    @pytest.mark.parametrize(
        "chi, expected",
        [((Q(1, 2), 0), (1, 0)), ((-2, -2), (-1, -1)), ((Q(2, 3), Q(-4, 5)), (5, -6)), ((0, -7), (0, -1))],
    )
    def test_class_of(self, chi, expected):
        assert class_of(chi) == CharacterClass(*expected)

    def test_zero(self):
        with pytest.raises(ZeroCharacterError):
            class_of((0, 0))

    def test_positive_scaling_invariant(self, rng):
        for _ in range(100):
            a, b = Q(rng.randint(-9, 9), rng.randint(1, 9)), Q(rng.randint(-9, 9), rng.randint(1, 9))
            if a == 0 and b == 0:
                continue
            s = Q(rng.randint(1, 20), rng.randint(1, 20))
            assert class_of((a, b)) == class_of((s * a, s * b))
            assert class_of((-a, -b)) == antipode(class_of((a, b)))

    def test_antipode(self):
        assert antipode(CharacterClass(2, -3)) == CharacterClass(-2, 3)

    def test_parse_rational(self):
        assert parse_rational("-3/6") == Q(-1, 2)
        assert Character.parse("1/2,-3") == Character.of(Q(1, 2), -3)
        with pytest.raises(ValueError):
            parse_rational("1/0")
        with pytest.raises(ValueError):
            parse_rational("abc")


class TestRestrictLift:
    def test_restrict_examples(self):
        assert restrict_to_K(LAMBDA) == CharacterOnK.of(1, 0)
        assert restrict_to_K(Character.of(Q(1, 3), -2)) == CharacterOnK.of(Q(1, 3), -2)

    def test_restriction_agrees_on_K(self, rng):
        chi = Character.of(Q(2, 7), Q(-3, 5))
        psi = restrict_to_K(chi)
        for _ in range(100):
            w = random_word(rng, 20)
            w = type(w)(l for l in w if not (l.family == "y" and l.index == 0))
            assert psi(w) == chi(w)

    def test_K_rejects_y0(self):
        with pytest.raises(ValueError):
            CharacterOnK.of(1, 0)("x1 y0")

    def test_lift_examples(self):
        assert lift_from_K(CharacterOnK.of(1, 0)) == LAMBDA
        assert lift_from_K(CharacterOnK.of(0, 1)) == RHO
        # value on y0 is half the value on x0 x1
        assert lift_value_on_y0(CharacterOnK.of(1, 0)) == -1
        assert lift_value_on_y0(CharacterOnK.of(0, 1)) == 1

    def test_round_trip_grid(self):
        vals = [Q(p, q) for p in range(-3, 4) for q in (1, 2, 3)]
        for a in vals:
            for b in vals:
                chi = Character(a, b)
                assert lift_from_K(restrict_to_K(chi)) == chi
                psi = CharacterOnK(a, b)
                assert restrict_to_K(lift_from_K(psi)) == psi

    @settings(max_examples=60, deadline=None)
    @given(k_words_st)
    def test_lift_extends(self, w):
        psi = CharacterOnK.of(Q(5, 2), Q(-1, 3))
        chi = lift_from_K(psi)
        assert chi(w) == psi(w)
        assert chi("y0") * 2 == psi("x0 x1")


class TestSqrtCommutator:
    def test_examples(self):
        assert in_sqrt_commutator("")
        assert in_sqrt_commutator("y1 x1^-1")  # squares to a commutator product
        assert in_sqrt_commutator("x0 x1 y0^-2")
        assert not in_sqrt_commutator("x0")
        assert not in_sqrt_commutator("y0")

    def test_means_every_character_vanishes(self, rng):
        for _ in range(200):
            w = random_word(rng, 12, 4)
            vanishes = LAMBDA(w) == 0 and RHO(w) == 0
            assert in_sqrt_commutator(w) == vanishes
