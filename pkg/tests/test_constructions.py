import random
import unittest
from fractions import Fraction
from math import comb

from arrangement import crossing_number
from config.settings import Settings
from constructions import (
    GeneratorManager,
    block_in_order,
    gen_convex,
    gen_four_pattern,
    gen_random_sgp,
    is_contiguous,
)
from constructions.circle_pattern import PATTERN, patterns_consecutive_from_origin
from constructions.four_pattern import (
    P1,
    P2,
    T2_CENTER,
    Carrier,
    FourPatternParams,
    build_carriers,
    check_conditions,
    designated_cell_count,
    progression_offsets,
    split_size,
)
from geometry.exceptions import BudgetExceededError, DegenerateInputError
from geometry.kernel import RationalPoint, line_through, squared_distance
from geometry.pointset import Color, intersection_point, validate_strong_general_position
from orders.circular import CircularOrder

from tests.helpers import slow


class HelpersTest(unittest.TestCase):
    def test_contiguous(self):
        order = CircularOrder.from_sequence([0, 1, 2, 3, 4, 5])
        self.assertTrue(is_contiguous(order, [5, 0, 1]))
        self.assertFalse(is_contiguous(order, [0, 2]))
        self.assertTrue(block_in_order(order, [4, 5, 0]))
        self.assertFalse(block_in_order(order, [0, 5, 4]))


class RandomGeneratorTest(unittest.TestCase):
    def test_deterministic(self):
        self.assertEqual(gen_random_sgp(7, seed=3).points, gen_random_sgp(7, seed=3).points)
        self.assertNotEqual(gen_random_sgp(7, seed=3).points, gen_random_sgp(7, seed=4).points)

    def test_valid_and_balanced(self):
        s = gen_random_sgp(8, colors="balanced", seed=2)
        self.assertTrue(validate_strong_general_position(s))
        self.assertTrue(s.is_balanced)
        self.assertEqual(len(s.indices_of(Color.RED)), 4)

    def test_sizes(self):
        self.assertEqual(len(gen_random_sgp(3, seed=0)), 3)
        with self.assertRaises(DegenerateInputError):
            gen_random_sgp(2)
        with self.assertRaises(DegenerateInputError):
            gen_random_sgp(6, colors="balanced")


class ConvexGeneratorTest(unittest.TestCase):
    def test_convex_position(self):
        s = gen_convex(7, seed=1)
        self.assertTrue(validate_strong_general_position(s))
        self.assertEqual(crossing_number(s), comb(7, 4))
        for p in s.points:
            self.assertEqual(p.x * p.x + p.y * p.y, 1)


class CirclePatternTest(unittest.TestCase):
    def setUp(self):
        self.result = GeneratorManager().run_generator("upper2", 8, seed=1, stabilize=False)

    def test_points_on_circles(self):
        s = self.result.points
        self.assertEqual(len(s), 16)
        self.assertTrue(s.is_balanced)
        radii = [Fraction(r) for r in self.result.metadata["radii"]]
        self.assertEqual(len(set(radii)), 4)
        origin = RationalPoint(0, 0)
        for i, rho in enumerate(radii):
            for k in range(4):
                self.assertEqual(squared_distance(s[4 * i + k], origin), rho * rho)
                self.assertEqual(s.colors[4 * i + k], PATTERN[k])

    def test_patterns_from_origin(self):
        self.assertTrue(patterns_consecutive_from_origin(self.result.points, 4))
        self.assertTrue(validate_strong_general_position(self.result.points))

    def test_odd_size(self):
        with self.assertRaises(DegenerateInputError):
            GeneratorManager().run_generator("upper2", 7)

    def test_stabilize_respects_budget(self):
        with self.assertRaises(BudgetExceededError):
            GeneratorManager(Settings(face_budget=10)).run_generator("upper2", 8, seed=1)
        # 不做普查时不受预算限制
        result = GeneratorManager(Settings(face_budget=10)).run_generator("upper2", 8, seed=1, stabilize=False)
        self.assertEqual(len(result.points), 16)


class FourPatternTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.result = GeneratorManager().run_generator("lower4", 20, seed=0)

    def test_split_size(self):
        self.assertEqual(split_size(20), (1, 10))
        self.assertEqual(split_size(38), (2, 18))
        self.assertEqual(designated_cell_count(1), 4)
        self.assertEqual(designated_cell_count(2), 25)
        for n in (18, 21):
            with self.assertRaises(DegenerateInputError):
                split_size(n)

    def test_too_large(self):
        with self.assertRaises(DegenerateInputError):
            GeneratorManager().get_generator("lower4").validate_size(50)

    def test_initial_carriers(self):
        params = FourPatternParams(m=1, r=10, epsilon=Fraction(1, 100), alpha_t=Fraction(1, 100),
                                   delta=Fraction(1, 1000), cluster_spacing=Fraction(1, 1000))
        carriers = build_carriers(params, [Fraction(1, 4), Fraction(1, 3)])
        self.assertEqual(sorted(carriers), ["blue", "green", "red", "yellow"])
        self.assertTrue(all(len(group) == 1 for group in carriers.values()))

    def test_conditions_hold_on_emitted_carriers(self):
        report = check_conditions(self.result.extras["carriers"])
        self.assertTrue(report.ok, report.message)

    def test_conditions_reject_line_missing_disk(self):
        # 红点在正上方、蓝点在正右方，连线几乎水平，远离 B3
        carriers = {
            "blue": [Carrier("blue", P1, Fraction(1, 4), Fraction(0))],
            "red": [Carrier("red", P1, Fraction(1, 100), Fraction(1))],
            "yellow": [Carrier("yellow", P2, Fraction(1, 4), T2_CENTER)],
            "green": [Carrier("green", P2, Fraction(1, 100), T2_CENTER)],
        }
        report = check_conditions(carriers)
        self.assertFalse(report.ok)
        self.assertTrue(report.message.startswith("(1)"), report.message)

    def test_progression_offsets(self):
        offsets = progression_offsets(random.Random(5), 8)
        self.assertEqual(len(offsets), 8)
        self.assertEqual(offsets[0], 0)
        self.assertTrue(all(0 < u < Fraction(1, 2) for u in offsets[1:]))
        self.assertEqual(offsets, progression_offsets(random.Random(5), 8))

    def test_pattern_chords_not_concurrent(self):
        # 黄色图案 6 点：参数和相等的三条弦 (0,5)(1,4)(2,3) 不得共点
        s = self.result.points
        group = self.result.extras["groups"][2]
        self.assertEqual(len(group), 6)
        chords = [line_through(s[group[a]], s[group[b]]) for a, b in ((0, 5), (1, 4), (2, 3))]
        meet = intersection_point(chords[0], chords[1])
        self.assertTrue(meet is None or not chords[2].contains(meet))

    def test_m1(self):
        result = self.result
        s, designated = result.points, result.designated
        self.assertEqual(len(s), 40)
        self.assertTrue(s.is_balanced)
        self.assertEqual(len(designated), 4)
        self.assertTrue(result.extras["report"].ok)
        self.assertEqual(result.extras["report"].distinct_words, 4)
        self.assertEqual(result.metadata["designated_cells"], 4)
        self.assertEqual(result.extras["report"].position_message, "ok")
        self.assertTrue(validate_strong_general_position(s))

    def test_gen_function(self):
        s, designated = gen_four_pattern(22, seed=1)
        self.assertEqual(len(s), 44)
        self.assertEqual(len(designated), 4)

    @slow
    def test_m2(self):
        result = GeneratorManager().run_generator("lower4", 30, seed=0)
        report = result.extras["report"]
        self.assertEqual(len(result.points), 60)
        self.assertEqual(len(result.designated), 25)
        self.assertTrue(report.conditions.ok, report.conditions.message)
        self.assertTrue(report.consecutive and report.cluster and report.separated)
        self.assertEqual(report.distinct_words, 25)
        self.assertTrue(report.strong_general_position, report.position_message)
        self.assertTrue(check_conditions(result.extras["carriers"]).ok)


class ManagerTest(unittest.TestCase):
    def test_registry(self):
        manager = GeneratorManager()
        self.assertEqual(manager.list_generators(), ["random", "convex", "upper2", "lower4"])
        self.assertEqual(manager.get_generator("lower4").expected_points(20), 40)
        with self.assertRaises(ValueError):
            manager.get_generator("spiral")


if __name__ == "__main__":
    unittest.main()
