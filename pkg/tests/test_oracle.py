"""Brute-force oracles and their agreement with the fast paths."""

import numpy as np
import pytest

from choquet.errors import GroundSetTooLarge
from choquet.generate import random_set_function, random_signed_capacity
from choquet.integral import choquet
from choquet.oracle import (
    choquet_all_permutations,
    lovasz_affine_check,
    mobius_naive,
)
from choquet.setfunction import (
    SetFunction,
    SignedCapacity,
    mobius_transform,
    unanimity_game,
)

from conftest import assert_close


class TestMobiusNaive:
    def test_unanimity_duality(self):
        coeffs = mobius_naive(unanimity_game(3, [1, 3])).coefficients
        expected = np.zeros(8)
        expected[0b101] = 1.0
        assert np.array_equal(coeffs, expected)

    def test_hand_computation(self):
        m = mobius_naive(SetFunction(2, [0, 3, -1, 2]))
        assert m.coefficients.tolist() == [0.0, 3.0, -1.0, 0.0]

    def test_zero_function(self):
        m = mobius_naive(SetFunction(3, np.zeros(8)))
        assert not m.coefficients.any()

    def test_bound(self):
        with pytest.raises(GroundSetTooLarge):
            mobius_naive(SetFunction(13, np.zeros(1 << 13)))


class TestChoquetAllPermutations:
    def test_constant_vector_all_permutations_valid(self):
        rng = np.random.default_rng(0)
        v = random_signed_capacity(2, rng)
        values = choquet_all_permutations(v, [3, 3])
        assert values == {3.0 * v.values[-1]}

    def test_hand_sum(self):
        v = SignedCapacity(2, [0, 3, -1, 2])
        assert choquet_all_permutations(v, [5, 1]) == {14.0}

    def test_tied_orders_agree(self):
        assert choquet_all_permutations(unanimity_game(3, [1, 2]), [1, 1, 2]) == {1.0}

    def test_bound(self):
        with pytest.raises(GroundSetTooLarge):
            choquet_all_permutations(SignedCapacity(7, np.zeros(128)), [0] * 7)


class TestLovaszAffineCheck:
    def test_basis_game_cone(self):
        assert lovasz_affine_check(unanimity_game(2, [1]), [2, 1])

    def test_constant_function_every_cone(self):
        f = SetFunction(2, [7, 7, 7, 7])
        assert lovasz_affine_check(f, [1, 2])
        assert lovasz_affine_check(f, [2, 1])

    def test_invalid_permutation(self):
        with pytest.raises(ValueError):
            lovasz_affine_check(SetFunction(2, [0, 1, 2, 3]), [1, 1])

    def test_bound(self):
        with pytest.raises(GroundSetTooLarge):
            lovasz_affine_check(SetFunction(9, np.zeros(512)), list(range(1, 10)))


def test_naive_equals_fast_exactly_on_integer_grids():
    rng = np.random.default_rng(1)
    for n in range(1, 5):
        for _ in range(100):
            f = SetFunction(n, rng.integers(-3, 4, 1 << n).astype(float))
            assert np.array_equal(
                mobius_naive(f).coefficients, mobius_transform(f).coefficients
            )


def test_naive_close_to_fast_on_reals():
    rng = np.random.default_rng(2)
    for n in range(1, 9):
        f = random_set_function(n, rng)
        naive = mobius_naive(f).coefficients
        fast = mobius_transform(f).coefficients
        for a, b in zip(naive, fast):
            assert_close(a, b, rel=1e-12, abs_tol=1e-12)


def test_singleton_sweep_with_ties():
    rng = np.random.default_rng(3)
    pool = [-2.0, -1.0, 0.0, 1.0]
    for n in range(2, 6):
        for _ in range(60):
            v = random_signed_capacity(n, rng)
            x = rng.choice(pool, n)
            values = choquet_all_permutations(v, x)
            assert len(values) == 1
            assert_close(values.pop(), choquet(v, x).value)


def test_affine_on_every_cone():
    from itertools import permutations

    rng = np.random.default_rng(4)
    for _ in range(5):
        f = random_set_function(3, rng)
        for order in permutations([1, 2, 3]):
            assert lovasz_affine_check(f, order, trials=40, seed=7)


def test_affine_on_sampled_cones_n6():
    rng = np.random.default_rng(5)
    for trial in range(4):
        f = random_set_function(6, rng)
        order = list(rng.permutation(6) + 1)
        assert lovasz_affine_check(f, order, trials=100, seed=trial)
