import unittest
from fractions import Fraction

from arrangement import build_arrangement, build_order_partition
from constructions import gen_convex, gen_random_sgp
from enumeration import (
    CheckStatus,
    census,
    census_oracle,
    cone_points_in_cells,
    distinct_pairs,
    hull_cone,
    in_hull_cone,
    interior_distinctness_check,
    partition_lemma_check,
    split_by_line,
)
from geometry.exceptions import DegenerateInputError, NotValidatedError
from geometry.kernel import RationalPoint
from orders.radial import radial_order

from tests.helpers import COLLINEAR, CONVEX_QUAD, NONCONVEX_QUAD, TRIANGLE, point_set, slow


P = RationalPoint


class CensusTest(unittest.TestCase):
    def test_triangle(self):
        result = census(point_set(TRIANGLE), threads=1)
        # 三个点只有两种循环序
        self.assertEqual(result.rho, 2)
        self.assertEqual(result.order_cells, 4)
        self.assertEqual(sum(result.class_sizes.values()), result.order_cells)
        self.assertIsNone(result.rho_colored)

    def test_oracle_finds_nothing_new(self):
        s = gen_random_sgp(5, seed=3)
        result = census(s, threads=1)
        report = census_oracle(s, result, samples=300, seed=7)
        self.assertEqual(report.sampled, 300)
        self.assertTrue(report.complete)

    def test_single_color(self):
        s = point_set(CONVEX_QUAD).recolored("RRRR")
        result = census(s, threads=1)
        self.assertEqual(result.rho_colored, 1)

    def test_bounds(self):
        for seed in range(5):
            balanced = seed % 2 == 1
            s = gen_random_sgp(4 if balanced else 5, colors="balanced" if balanced else None, seed=seed)
            result = census(s, threads=1)
            self.assertLessEqual(result.rho, result.order_cells)
            self.assertLessEqual(result.order_cells, result.faces)
            if result.rho_colored is not None:
                self.assertLessEqual(result.rho_colored, result.rho)

    def test_convex_orders(self):
        s = gen_convex(5, seed=1)
        result = census(s, threads=1)
        arr = build_arrangement(s)
        self.assertEqual(result.faces, arr.F)
        self.assertLessEqual(result.rho, result.order_cells)

    def test_worker_processes_give_same_result(self):
        s = gen_random_sgp(6, seed=5)
        arr = build_arrangement(s)
        partition = build_order_partition(arr)
        single = census(s, arr, partition, threads=1)
        parallel = census(s, arr, partition, threads=2)
        self.assertEqual(single.per_cell, parallel.per_cell)
        self.assertEqual(single.rho, parallel.rho)

    def test_requires_valid_set(self):
        with self.assertRaises(NotValidatedError):
            census(point_set(COLLINEAR), threads=1)


class AcceptanceCensusTest(unittest.TestCase):
    @slow
    def test_oracle_on_ten_sets(self):
        for k in range(10):
            s = gen_random_sgp(4 + k % 3, seed=400 + k)
            result = census(s, threads=1)
            report = census_oracle(s, result, samples=10000, seed=k)
            self.assertEqual(report.sampled, 10000)
            self.assertTrue(report.complete, f"seed={400 + k} 缺少 {len(report.missing)} 个径向序")
            self.assertLessEqual(result.rho, result.order_cells)
            self.assertLessEqual(result.order_cells, result.faces)


class InteriorDistinctnessTest(unittest.TestCase):
    def test_random_sets(self):
        for seed in range(6):
            report = interior_distinctness_check(gen_random_sgp(5 + seed % 3, seed=seed))
            self.assertEqual(report.status, CheckStatus.PASS, report.message)
            self.assertGreater(report.checked_cells, 0)

    def test_nonconvex_quad(self):
        self.assertTrue(interior_distinctness_check(point_set(NONCONVEX_QUAD)).passed)

    def test_validation_required(self):
        report = interior_distinctness_check(point_set(COLLINEAR))
        self.assertEqual(report.status, CheckStatus.VALIDATION_REQUIRED)
        self.assertFalse(report.passed)

    def test_distinct_pairs(self):
        self.assertTrue(distinct_pairs([1, 2, 3]))
        self.assertFalse(distinct_pairs([1, 2, 1]))


class PartitionLemmaTest(unittest.TestCase):
    def setUp(self):
        self.s = point_set(CONVEX_QUAD)

    def test_separating_line(self):
        p, q = P(Fraction(5, 2), -6), P(Fraction(5, 2), 12)
        left, right = split_by_line(self.s, p, q)
        self.assertEqual(left, [0, 3])
        self.assertEqual(right, [1, 2])
        result = partition_lemma_check(self.s, left, p, q)
        self.assertTrue(result.applicable)
        self.assertTrue(result.distinct)

    def test_same_cell(self):
        # 线段 pq 只穿过张成线段的内部
        p, q = P(Fraction(5, 2), -3), P(Fraction(5, 2), 7)
        self.assertEqual(radial_order(self.s, p), radial_order(self.s, q))
        result = partition_lemma_check(self.s, [0, 3], p, q)
        self.assertFalse(result.applicable)
        self.assertIsNone(result.distinct)

    def test_blocking_half_line(self):
        p, q = P(Fraction(5, 2), -6), P(Fraction(5, 2), 12)
        result = partition_lemma_check(self.s, [0, 1], p, q)
        self.assertFalse(result.applicable)
        self.assertIsNotNone(result.blocking)

    def test_point_on_dividing_line(self):
        with self.assertRaises(DegenerateInputError):
            split_by_line(self.s, P(0, 0), P(1, 1))


class HullConeTest(unittest.TestCase):
    def test_cone_membership(self):
        s = point_set(CONVEX_QUAD)
        apex, _, _ = hull_cone(s, 0)
        self.assertEqual(apex, P(0, 0))
        self.assertTrue(in_hull_cone(s, 0, P(-1, 1)))
        self.assertFalse(in_hull_cone(s, 0, P(1, 1)))
        self.assertFalse(in_hull_cone(s, 0, P(-1, -1)))

    def test_cone_cells(self):
        s = point_set(CONVEX_QUAD)
        arr = build_arrangement(s)
        cells = cone_points_in_cells(s, 0, arr)
        self.assertTrue(cells)
        for _, rep in cells:
            self.assertTrue(in_hull_cone(s, 0, rep))

    def test_not_hull_vertex(self):
        with self.assertRaises(DegenerateInputError):
            hull_cone(point_set(NONCONVEX_QUAD), 3)


if __name__ == "__main__":
    unittest.main()
