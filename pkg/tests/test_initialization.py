import numpy as np
import pytest

from whaleopt.core import DimensionMismatchError, SearchSpace, rng_stream
from whaleopt.initialization import (
    GoodNodesConfig,
    cyclotomic_offsets,
    good_nodes_unit,
    init_good_nodes,
    init_random,
    map_to_space,
    min_pairwise_distance,
    power_offsets,
    smallest_prime_at_least,
)

# frac((k+1) * 2cos(2*pi*j/7)) for k rows 1..3, j columns 1..2, computed
# with 50-digit arithmetic and rounded to double
GOOD_NODES_D2_M3 = np.array(
    [
        [0.24697960371746705, 0.5549581320873712],
        [0.4939592074349341, 0.10991626417474239],
        [0.7409388111524012, 0.6648743962621135],
    ]
)


def unit_square():
    return SearchSpace(np.zeros(2), np.ones(2))


class TestGoodNodesUnit:
    def test_single_node_half(self):
        config = GoodNodesConfig(1, 1, np.array([1.5]))
        np.testing.assert_array_equal(good_nodes_unit(config), [[0.5]])

    def test_integer_multiple_wraps_to_zero(self):
        config = GoodNodesConfig(2, 1, np.array([1.5]))
        np.testing.assert_array_equal(good_nodes_unit(config), [[0.5], [0.0]])

    def test_matches_high_precision_oracle(self):
        config = GoodNodesConfig(3, 2, 2.0 * np.cos(2.0 * np.pi * np.array([1.0, 2.0]) / 7.0))
        np.testing.assert_allclose(good_nodes_unit(config), GOOD_NODES_D2_M3, atol=1e-12)

    def test_pure_function(self):
        config = GoodNodesConfig.default(50, 4)
        np.testing.assert_array_equal(good_nodes_unit(config), good_nodes_unit(config))

    def test_entries_in_unit_interval(self):
        config = GoodNodesConfig.default(200, 10)
        points = good_nodes_unit(config)
        assert np.all(points >= 0.0) and np.all(points < 1.0)

    def test_negative_offsets_are_valid(self):
        # the default generator for dim >= 17 contains negative entries
        offsets = cyclotomic_offsets(30)
        assert np.any(offsets < 0)
        points = good_nodes_unit(GoodNodesConfig(30, 30, offsets))
        assert np.all(points >= 0.0) and np.all(points < 1.0)

    def test_rejects_zero_offset(self):
        with pytest.raises(ValueError):
            GoodNodesConfig(3, 1, np.array([0.0]))


class TestOffsets:
    def test_smallest_prime(self):
        assert smallest_prime_at_least(5) == 5
        assert smallest_prime_at_least(63) == 67
        assert smallest_prime_at_least(8) == 11

    def test_cyclotomic_uses_prime_2d_plus_3(self):
        offsets = cyclotomic_offsets(2)
        expected = 2.0 * np.cos(2.0 * np.pi * np.array([1.0, 2.0]) / 7.0)
        np.testing.assert_allclose(offsets, expected, rtol=0, atol=0)

    def test_power_offsets(self):
        np.testing.assert_allclose(power_offsets(3, 1.5), [1.5, 2.25, 3.375])
        with pytest.raises(ValueError):
            power_offsets(3, -1.0)


class TestMapToSpace:
    def test_midpoint(self):
        space = SearchSpace(np.array([-100.0]), np.array([100.0]))
        np.testing.assert_array_equal(map_to_space(np.array([[0.5]]), space), [[0.0]])

    def test_lower_bound(self):
        space = SearchSpace(np.array([-100.0]), np.array([100.0]))
        np.testing.assert_array_equal(map_to_space(np.array([[0.0]]), space), [[-100.0]])

    def test_quarter_point(self):
        space = SearchSpace(np.array([-5.12]), np.array([5.12]))
        np.testing.assert_allclose(map_to_space(np.array([[0.25]]), space), [[-2.56]])

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            map_to_space(np.zeros((3, 3)), unit_square())

    def test_monotone_per_dimension(self):
        space = SearchSpace(np.array([-7.0]), np.array([3.0]))
        p = np.sort(rng_stream(5).random(50))[:, None]
        mapped = map_to_space(p, space)[:, 0]
        assert np.all(np.diff(mapped) >= 0)


class TestInitGoodNodes:
    def test_two_points_distinct(self):
        space = SearchSpace(np.zeros(1), np.ones(1))
        pop = init_good_nodes(2, space)
        assert pop[0].position[0] != pop[1].position[0]

    def test_all_in_box_high_dim(self):
        space = SearchSpace.cube(30, -100.0, 100.0)
        pop = init_good_nodes(30, space)
        assert all(space.contains(ind.position) for ind in pop)
        assert all(ind.fitness is None for ind in pop)

    def test_more_even_than_random(self):
        # 200 good nodes on the unit square spread wider apart than the
        # average pseudo-random cloud of the same size
        pop = init_good_nodes(200, unit_square())
        good = min_pairwise_distance(np.array([ind.position for ind in pop]))
        rng = rng_stream(2024)
        random_dists = []
        for _ in range(30):
            pts = np.array([ind.position for ind in init_random(200, unit_square(), rng)])
            random_dists.append(min_pairwise_distance(pts))
        assert good > np.mean(random_dists)


class TestInitRandom:
    def test_reproducible(self):
        space = SearchSpace.cube(5, -3.0, 9.0)
        a = init_random(10, space, rng_stream(11))
        b = init_random(10, space, rng_stream(11))
        for x, y in zip(a, b):
            np.testing.assert_array_equal(x.position, y.position)

    def test_uniform_mean(self):
        space = SearchSpace(np.zeros(1), np.ones(1))
        pop = init_random(10**4, space, rng_stream(3))
        mean = np.mean([ind.position[0] for ind in pop])
        assert 0.49 <= mean <= 0.51

    def test_all_in_box(self):
        space = SearchSpace.cube(7, -2.0, 2.0)
        pop = init_random(50, space, rng_stream(4))
        assert all(space.contains(ind.position) for ind in pop)
