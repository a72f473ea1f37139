import itertools
import random
from fractions import Fraction

import pytest

from kcsp import (
    CspInstance,
    Nogood,
    NarrowTracker,
    PartialAssignment,
    PointSet,
    avg_narrow_count,
    critical_points,
    enumerate_solutions,
    isolation_degrees,
    narrowed_domain,
    verify_lemma2,
)
from kcsp.generators import gen_coloring, gen_nqueens
from kcsp.harness import corpus

from bruteforce import brute_avg_narrow, brute_critical_dims, brute_solutions
from conftest import random_instance


def triangle(d=3):
    return gen_coloring([(1, 2), (2, 3), (1, 3)], 3, d)


def pair_forcing():
    return CspInstance(2, 2, [Nogood([(1, 0)]), Nogood([(1, 1), (2, 0)])])


class TestEnumerateSolutions:
    def test_triangle_d3(self):
        sols = enumerate_solutions(triangle())
        assert len(sols) == 6
        assert all(j == 3 for j in sols.isolation)
        assert all(dims == (1, 2, 3) for dims in sols.critical_dims)

    def test_triangle_d2_empty(self):
        assert len(enumerate_solutions(triangle(2))) == 0

    def test_empty_instance_all_solutions(self):
        sols = enumerate_solutions(CspInstance(2, 2))
        assert sols.solutions == ((0, 0), (0, 1), (1, 0), (1, 1))
        assert sols.isolation == (0, 0, 0, 0)

    def test_lexicographic_order(self):
        sols = enumerate_solutions(CspInstance(3, 2, [Nogood([(1, 0)])]))
        assert sols.solutions == ((1, 0, 0), (1, 0, 1), (1, 1, 0), (1, 1, 1))

    def test_arity_zero_kills_everything(self):
        assert len(enumerate_solutions(CspInstance(3, 2, [Nogood([])]))) == 0

    def test_cap_enforced(self):
        with pytest.raises(ValueError, match="cap"):
            enumerate_solutions(CspInstance(10, 2), cap=512)

    def test_matches_reference_on_corpus(self):
        for name, inst in corpus():
            if inst.d**inst.n > 1 << 16:
                continue
            assert enumerate_solutions(inst).solutions == tuple(
                brute_solutions(inst)
            ), name

    def test_matches_reference_on_fuzz(self):
        rng = random.Random(555)
        for _ in range(200):
            inst = random_instance(rng)
            assert enumerate_solutions(inst).solutions == tuple(brute_solutions(inst))

    def test_isolation_of_lookup(self):
        sols = enumerate_solutions(pair_forcing())
        assert sols.solutions == ((1, 1),)
        assert sols.isolation_of((1, 1)) == 2
        with pytest.raises(ValueError):
            sols.isolation_of((0, 0))


class TestCriticalPoints:
    def test_singleton_fully_critical(self):
        S = PointSet.of({(0, 1, 0)}, 3, 2)
        assert critical_points((0, 1, 0), S) == {1, 2, 3}

    def test_full_space_has_no_critical_dims(self):
        points = set(itertools.product(range(2), repeat=2))
        S = PointSet.of(points, 2, 2)
        assert critical_points((0, 0), S) == set()

    def test_two_point_example(self):
        S = PointSet.of({(0, 0), (0, 1)}, 2, 2)
        assert critical_points((0, 0), S) == {1}

    def test_outside_point_rejected(self):
        S = PointSet.of({(0, 0)}, 2, 2)
        with pytest.raises(ValueError):
            critical_points((1, 1), S)

    def test_three_routes_agree_on_fuzz(self):
        # vectorized matrix (via isolation_degrees), the definitional loop
        # in critical_points, and the reference copy in bruteforce
        rng = random.Random(556)
        for _ in range(120):
            n = rng.randint(1, 4)
            d = rng.randint(2, 3)
            universe = list(itertools.product(range(d), repeat=n))
            size = rng.randint(1, min(len(universe), 10))
            points = rng.sample(universe, size)
            S = PointSet.of(points, n, d)
            ordered = sorted(S.points)
            degrees = isolation_degrees(ordered, n, d)
            for X, degree in zip(ordered, degrees):
                literal = critical_points(X, S)
                reference = brute_critical_dims(X, ordered, n, d)
                assert literal == reference
                assert len(literal) == degree

    def test_solution_set_routes_agree_on_corpus(self):
        for name, inst in corpus():
            sols = enumerate_solutions(inst)
            S = sols.as_point_set() if len(sols) else None
            for X, dims in zip(sols.solutions, sols.critical_dims):
                assert set(dims) == critical_points(X, S), name


class TestPointSet:
    def test_validation(self):
        with pytest.raises(ValueError):
            PointSet.of(set(), 2, 2)
        with pytest.raises(ValueError):
            PointSet.of({(0, 5)}, 2, 2)
        with pytest.raises(ValueError):
            PointSet.of({(0,)}, 2, 2)

    def test_membership(self):
        S = PointSet.of({(0, 1)}, 2, 2)
        assert (0, 1) in S and (1, 1) not in S
        assert len(S) == 1


class TestVerifyLemma2:
    def test_singleton_equality(self):
        holds, lhs = verify_lemma2(PointSet.of({(1, 0, 1)}, 3, 2))
        assert holds and lhs == 8

    def test_full_space_equality(self):
        points = set(itertools.product(range(2), repeat=2))
        holds, lhs = verify_lemma2(PointSet.of(points, 2, 2))
        assert holds and lhs == 4

    def test_triangle_solution_set(self):
        S = enumerate_solutions(triangle()).as_point_set()
        holds, lhs = verify_lemma2(S)
        assert holds and lhs == 6 * 27

    def test_bare_collection_needs_n_and_d(self):
        # each point has J = 1 (only its first coordinate is critical)
        holds, lhs = verify_lemma2([(0, 0), (0, 1)], n=2, d=2)
        assert holds and lhs == 2 + 2
        with pytest.raises(ValueError):
            verify_lemma2([(0, 0)])

    def test_holds_on_fuzz(self):
        rng = random.Random(557)
        for _ in range(300):
            n = rng.randint(1, 4)
            d = rng.randint(2, 4)
            universe = list(itertools.product(range(d), repeat=n))
            points = rng.sample(universe, rng.randint(1, min(len(universe), 12)))
            holds, lhs = verify_lemma2(PointSet.of(points, n, d))
            assert holds and lhs >= d**n


class TestNarrowTracker:
    def test_agrees_with_narrowed_domain_along_random_walks(self):
        rng = random.Random(558)
        for _ in range(200):
            inst = random_instance(rng)
            tracker = NarrowTracker(inst)
            tracker.reset()
            pa = PartialAssignment(inst.n)
            order = list(range(1, inst.n + 1))
            rng.shuffle(order)
            for y in order:
                expected = narrowed_domain(inst, pa, y)
                assert tracker.narrowed_domain(y) == expected
                assert tracker.is_narrow(y) == (len(expected) < inst.d)
                value = rng.randrange(inst.d)
                tracker.assign(y, value)
                pa.assign(y, value)

    def test_reset_restores_initial_state(self):
        inst = pair_forcing()
        tracker = NarrowTracker(inst)
        tracker.reset()
        before = tracker.narrowed_domain(1)
        tracker.assign(1, 1)
        tracker.reset()
        assert tracker.narrowed_domain(1) == before == {1}


class TestAvgNarrowCount:
    def test_pair_forcing_exact_average(self):
        result = avg_narrow_count(pair_forcing(), (1, 1))
        assert result.average == Fraction(3, 2)
        assert result.j == 2
        assert result.orders == 2
        assert result.average >= Fraction(result.j, 2)

    def test_empty_instance_zero(self):
        result = avg_narrow_count(CspInstance(3, 2), (0, 1, 0))
        assert result.average == 0 and result.j == 0

    def test_triangle_bound(self):
        inst = triangle()
        for X in enumerate_solutions(inst).solutions:
            result = avg_narrow_count(inst, X)
            assert result.average >= Fraction(result.j, inst.k_max)

    def test_matches_reference_on_fuzz(self):
        rng = random.Random(559)
        checked = 0
        while checked < 40:
            inst = random_instance(rng, max_n=4)
            solutions = brute_solutions(inst)
            if not solutions:
                continue
            X = rng.choice(solutions)
            assert avg_narrow_count(inst, X).average == brute_avg_narrow(inst, X)
            checked += 1

    def test_sampled_mode_brackets_exact_value(self):
        inst = triangle()
        X = enumerate_solutions(inst).solutions[0]
        exact = avg_narrow_count(inst, X).average
        sampled = avg_narrow_count(inst, X, mode="sampled", trials=4000, seed=11)
        low, high = sampled.ci99
        assert low <= float(exact) <= high

    def test_rejects_non_solution_and_large_n(self):
        with pytest.raises(ValueError, match="satisfy"):
            avg_narrow_count(pair_forcing(), (0, 0))
        with pytest.raises(ValueError, match="n <= 8"):
            avg_narrow_count(CspInstance(9, 2), (0,) * 9)
        with pytest.raises(ValueError, match="trials"):
            avg_narrow_count(CspInstance(2, 2), (0, 0), mode="sampled")
        with pytest.raises(ValueError, match="mode"):
            avg_narrow_count(CspInstance(2, 2), (0, 0), mode="guess")


class TestQueensIsolation:
    def test_queens_4_solutions_fully_isolated(self):
        # moving any single queen in a 4-queens solution breaks it
        sols = enumerate_solutions(gen_nqueens(4))
        assert len(sols) == 2
        assert all(j == 4 for j in sols.isolation)
