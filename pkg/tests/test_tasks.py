import math
from collections import Counter
from itertools import combinations, permutations

import pytest

from spatialgen.extensions import TooLarge, Unreachable
from spatialgen.oracles.bruteforce import brute_tsp
from spatialgen.tasks.spp import check_path, gen_spp, grid_cells, solve_spp
from spatialgen.tasks.tsp import gen_tsp, solve_tsp, tour_length
from tests.factories import SppInstanceFactory, TspInstanceFactory


# ---------------------------------------------------------------------------
# SPP
# ---------------------------------------------------------------------------

def test_gen_spp_deterministic():
    """Test same (seed, n) gives the same instance"""
    assert gen_spp(3, 4) == gen_spp(3, 4)
    assert gen_spp(3, 4, index=1).instance_id == 'spp4-3-000001'


def test_gen_spp_two_by_two_lengths():
    lengths = {solve_spp(gen_spp(1, 2, index=i)).optimal_length for i in range(40)}
    assert lengths == {1, 2}


def test_gen_spp_manhattan_histogram():
    """Test start/end pairs follow the uniform distinct-cell distribution"""
    cells = grid_cells(4)
    pairs = list(permutations(cells, 2))
    expected = Counter(abs(a[0] - b[0]) + abs(a[1] - b[1]) for a, b in pairs)

    count = 2000
    observed = Counter(solve_spp(gen_spp(20, 4, index=i)).optimal_length for i in range(count))
    for length, hits in expected.items():
        assert abs(observed[length] / count - hits / len(pairs)) <= 0.035


def test_gen_spp_with_obstacles():
    """Test obstacle layouts keep start and end connected"""
    for index in range(20):
        instance = gen_spp(9, 5, index=index, obstacles=6)
        assert len(instance.obstacles) == 6
        assert instance.start not in instance.obstacles
        solution = solve_spp(instance)
        assert check_path(instance, solution.one_optimal_path).valid


def test_gen_spp_validation():
    with pytest.raises(ValueError):
        gen_spp(1, 1)
    with pytest.raises(ValueError):
        gen_spp(1, 3, obstacles=8)


def test_solve_spp_corner_to_corner(corner_instance):
    """Test 4x4 corner to corner: length 6, 20 optimal paths"""
    solution = solve_spp(corner_instance)
    assert solution.optimal_length == 6
    assert solution.optimal_path_count == 20 == math.comb(6, 3)
    assert check_path(corner_instance, solution.one_optimal_path) == (True, None, 6)


def test_solve_spp_straight_line():
    solution = solve_spp(SppInstanceFactory(grid_n=5, start=(0, 0), end=(0, 4)))
    assert solution.optimal_length == 4
    assert solution.optimal_path_count == 1
    assert solution.one_optimal_path == ((0, 0), (0, 1), (0, 2), (0, 3), (0, 4))


def test_solve_spp_adjacent():
    solution = solve_spp(SppInstanceFactory(start=(1, 1), end=(2, 1)))
    assert (solution.optimal_length, solution.optimal_path_count) == (1, 1)


def test_solve_spp_canonical_path():
    """Test the canonical path takes the smallest predecessor from the end"""
    solution = solve_spp(SppInstanceFactory(grid_n=3, start=(0, 0), end=(1, 1)))
    assert solution.one_optimal_path == ((0, 0), (0, 1), (1, 1))


def test_solve_spp_around_obstacle():
    instance = SppInstanceFactory(grid_n=3, start=(0, 0), end=(2, 0), obstacles=frozenset({(1, 0)}))
    solution = solve_spp(instance)
    assert solution.optimal_length == 4
    assert solution.optimal_path_count == 1


def test_solve_spp_unreachable():
    wall = frozenset({(1, 0), (1, 1), (1, 2)})
    instance = SppInstanceFactory(grid_n=3, start=(0, 0), end=(2, 0), obstacles=wall)
    with pytest.raises(Unreachable):
        solve_spp(instance)


@pytest.mark.parametrize('cells, reason', [
    ([], 'vacío'),
    ([(0, 1), (1, 1)], 'no empieza'),
    ([(0, 0), (1, 0)], 'no termina'),
    ([(0, 0), (1, 1), (2, 2), (3, 3)], '4-conexo'),
    ([(0, 0), (0, 1), (0, 0), (0, 1), (3, 3)], 'revisita'),
    ([(0, 0), (4, 0), (3, 3)], 'fuera'),
])
def test_check_path_rejections(corner_instance, cells, reason):
    """Test every invalid path is rejected with a reason"""
    check = check_path(corner_instance, cells)
    assert not check.valid
    assert reason in check.reason


def test_check_path_obstacle():
    instance = SppInstanceFactory(grid_n=3, start=(0, 0), end=(2, 0), obstacles=frozenset({(1, 0)}))
    check = check_path(instance, [(0, 0), (1, 0), (2, 0)])
    assert not check.valid and 'obstáculo' in check.reason


def test_spp_instance_validation():
    with pytest.raises(ValueError):
        SppInstanceFactory(start=(0, 0), end=(0, 0))
    with pytest.raises(ValueError):
        SppInstanceFactory(end=(4, 4))


# ---------------------------------------------------------------------------
# TSP
# ---------------------------------------------------------------------------

def test_gen_tsp_deterministic():
    assert gen_tsp(3, 4) == gen_tsp(3, 4)
    assert gen_tsp(3, 4, index=2).instance_id == 'tsp4-3-000002'


def test_gen_tsp_separation():
    """Test every instance keeps the minimum separation"""
    for n in (4, 5, 12):
        for index in range(5):
            instance = gen_tsp(4, n, index=index)
            assert len(instance.objects) == n
            assert instance.start_label in instance.labels
            points = [obj.point for obj in instance.objects]
            assert min(math.dist((a.x, a.y), (b.x, b.y)) for a, b in combinations(points, 2)) >= 80


def test_gen_tsp_validation():
    with pytest.raises(ValueError):
        gen_tsp(1, 2)
    with pytest.raises(ValueError):
        gen_tsp(1, 13)


def test_solve_tsp_square(square_instance):
    """Test square corners: 4 x side, canonical orientation"""
    solution = solve_tsp(square_instance)
    assert solution.tour_length == pytest.approx(400)
    assert solution.order == ('A', 'B', 'C', 'D')


def test_solve_tsp_canonical_start():
    instance = TspInstanceFactory(start_label='C')
    solution = solve_tsp(instance)
    assert solution.order == ('C', 'B', 'A', 'D')


def test_solve_tsp_collinear():
    instance = TspInstanceFactory(coords=((0, 0), (500, 0), (1000, 0)))
    solution = solve_tsp(instance)
    assert solution.tour_length == pytest.approx(2000)
    assert solution.order[0] == 'A'


def test_solve_tsp_triangle_any_orientation():
    instance = TspInstanceFactory(coords=((100, 100), (900, 150), (400, 800)))
    solution = solve_tsp(instance)
    assert solution.order == ('A', 'B', 'C')
    assert tour_length(instance, ['A', 'C', 'B']) == pytest.approx(solution.tour_length)


def test_solve_tsp_matches_bruteforce():
    """Test Held-Karp equals the permutation minimum"""
    for n in (5, 6, 7, 8):
        for index in range(3):
            instance = gen_tsp(31, n, index=index)
            assert solve_tsp(instance).tour_length == pytest.approx(brute_tsp(instance).value, rel=1e-9)


def test_solve_tsp_too_large(square_instance):
    with pytest.raises(TooLarge):
        solve_tsp(square_instance, max_objects=3)


def test_tour_length_closes_the_loop(square_instance):
    assert tour_length(square_instance, ['A', 'C', 'B', 'D']) == pytest.approx(200 + 200 * math.sqrt(2))
