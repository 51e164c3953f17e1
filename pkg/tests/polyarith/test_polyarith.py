from math import comb
import random

import pytest
from gmpy2 import mpz

from extremal_enumerators.polyarith import (
    DegreeMismatchError,
    InexactDivisionError,
    StepMismatchError,
    StepPoly,
    StepPolyException,
    densify,
    eval_at_ones,
    macwilliams_transform,
    poly_add_scaled,
    poly_divexact,
    poly_mul,
    poly_pow,
    poly_scale,
    swap_xy,
)

F_III = StepPoly(4, 3, (1, 8))                      # X^4 + 8XY^3
G_III = StepPoly(12, 3, (0, 1, -3, 3, -1))          # Y^3 (X^3 - Y^3)^3
F_II = StepPoly(8, 4, (1, 14, 1))                   # X^8 + 14X^4Y^4 + Y^8


def random_poly(rng: random.Random, step: int, max_degree: int = 12) -> StepPoly:
    degree = rng.randint(0, max_degree)
    return StepPoly(degree, step, tuple(rng.randint(-9, 9) for _ in range(degree // step + 1)))


@pytest.fixture
def rng():
    yield random.Random(20240611)


def test_slot_count_is_enforced():
    with pytest.raises(StepPolyException):
        StepPoly(4, 3, (1, 8, 0))
    assert len(StepPoly.zero(13, 3)) == 5
    assert StepPoly.monomial(2, 1, 2).coeffs == (0, 1, 0)


def test_mul_squares_binomial():
    square = poly_mul(F_III, F_III)
    assert square.degree == 8
    assert square.step == 3
    assert square.coeffs == (1, 16, 64)


def test_mul_by_one_is_identity():
    assert poly_mul(F_III, StepPoly.one(3)) == F_III
    assert poly_mul(StepPoly.one(3), G_III) == G_III


def test_mul_g_squared():
    square = poly_mul(G_III, G_III)
    assert square.degree == 24
    assert square.coeffs == (0, 0, 1, -6, 15, -20, 15, -6, 1)


def test_mul_pads_slots_past_the_convolution():
    p = StepPoly(2, 3, (5,))
    product = poly_mul(p, p)
    assert product.degree == 4
    assert product.coeffs == (25, 0)


def test_mul_step_mismatch():
    with pytest.raises(StepMismatchError):
        poly_mul(F_III, F_II)


def test_pow():
    cube = poly_pow(F_III, 3)
    assert cube.degree == 12
    assert cube.coeffs == (1, 24, 192, 512, 0)
    assert poly_pow(F_III, 1) == F_III
    assert poly_pow(F_III, 0) == StepPoly.one(3)
    with pytest.raises(ValueError):
        poly_pow(F_III, -1)


def test_coefficients_are_mpz():
    assert all(type(c) is type(mpz(0)) for c in StepPoly(4, 3, (1, 8)).coeffs)
    big = poly_pow(F_III, 200)
    assert all(type(c) is type(mpz(0)) for c in big.coeffs)
    assert big.coeffs[200] == 8**200
    assert big.coeffs[100] == comb(200, 100) * 8**100
    assert eval_at_ones(big) == 9**200


def test_add_scaled():
    assert poly_add_scaled(poly_pow(F_III, 3), -24, G_III).coeffs == (1, 0, 264, 440, 24)
    assert poly_add_scaled(G_III, 0, G_III) == G_III
    assert poly_add_scaled(G_III, 1, poly_scale(G_III, -1)) == StepPoly.zero(12, 3)


def test_add_scaled_mismatch():
    with pytest.raises(DegreeMismatchError):
        poly_add_scaled(F_III, 1, G_III)
    with pytest.raises(StepMismatchError):
        poly_add_scaled(StepPoly(8, 4, (1, 0, 1)), 1, StepPoly(8, 2, (1, 0, 0, 0, 1)))


def test_divexact_undoes_mul():
    f_cubed = poly_pow(F_III, 3)
    assert poly_divexact(poly_mul(f_cubed, G_III), f_cubed) == G_III
    assert poly_divexact(poly_mul(G_III, F_III), F_III) == G_III


def test_divexact_rejects_remainders():
    with pytest.raises(InexactDivisionError):
        poly_divexact(StepPoly(3, 3, (1, 1)), StepPoly(3, 3, (1, -1)))
    with pytest.raises(InexactDivisionError):
        poly_divexact(poly_pow(F_III, 3), G_III)
    with pytest.raises(DegreeMismatchError):
        poly_divexact(F_III, G_III)


def test_densify():
    assert densify(F_III) == StepPoly(4, 1, (1, 0, 0, 8, 0))
    assert densify(StepPoly.zero(6, 2)) == StepPoly.zero(6, 1)
    assert densify(F_II).coeffs == (1, 0, 0, 0, 14, 0, 0, 0, 1)


def test_swap_xy():
    assert swap_xy(F_III).coeffs == (0, 8, 0, 0, 1)
    assert swap_xy(F_II) == densify(F_II)


def test_macwilliams_examples():
    assert macwilliams_transform(StepPoly(2, 1, (1, 0, 1)), 2).coeffs == (2, 0, 2)
    assert macwilliams_transform(StepPoly.one(1), 2) == StepPoly.one(1)
    assert macwilliams_transform(densify(F_III), 3) == poly_scale(densify(F_III), 9)


def test_macwilliams_preconditions():
    with pytest.raises(DegreeMismatchError):
        macwilliams_transform(StepPoly(3, 1, (1, 0, 0, 1)), 2)
    with pytest.raises(StepMismatchError):
        macwilliams_transform(F_III, 3)


def test_eval_at_ones():
    assert eval_at_ones(F_III) == 9
    assert eval_at_ones(G_III) == 0
    assert eval_at_ones(F_II) == 16


@pytest.mark.parametrize("step", [1, 2, 3, 4])
def test_ring_laws(rng, step):
    for _ in range(25):
        p, r, s = (random_poly(rng, step) for _ in range(3))
        assert poly_mul(p, r) == poly_mul(r, p)
        assert poly_mul(poly_mul(p, r), s) == poly_mul(p, poly_mul(r, s))
        assert eval_at_ones(poly_mul(p, r)) == eval_at_ones(p) * eval_at_ones(r)
        assert poly_mul(p, r).degree == p.degree + r.degree
        a, b = rng.randint(0, 4), rng.randint(0, 4)
        assert poly_pow(p, a + b) == poly_mul(poly_pow(p, a), poly_pow(p, b))


@pytest.mark.parametrize("q", [2, 3, 4])
def test_macwilliams_twice_scales_by_q_to_the_n(rng, q):
    for _ in range(10):
        p = densify(random_poly(rng, 1, max_degree=10))
        if p.degree % 2:
            p = poly_mul(p, StepPoly(1, 1, (1, 1)))
        twice = macwilliams_transform(macwilliams_transform(p, q), q)
        assert twice == poly_scale(p, q**p.degree)


if __name__ == "__main__":
    pytest.main(["-v", __file__])
