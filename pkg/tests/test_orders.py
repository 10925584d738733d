import unittest

from arrangement import build_arrangement, interior_face_representatives
from constructions import gen_random_sgp
from geometry.exceptions import (
    DegenerateInputError,
    EmptySequenceError,
    MismatchedIndexSetsError,
    NotInteriorPointError,
    NotObservationPointError,
    UncoloredSetError,
)
from geometry.kernel import RationalPoint
from orders.circular import (
    CircularOrder,
    ColorWord,
    DiffKind,
    adjacent_transposition_diff,
    apply_adjacent_swap,
    canonical_rotation,
    color_word,
)
from orders.radial import is_simple_polygon, radial_order, star_polygonization

from tests.helpers import CONVEX_QUAD, point_set


P = RationalPoint


class CanonicalRotationTest(unittest.TestCase):
    def test_least_rotation(self):
        self.assertEqual(canonical_rotation([3, 1, 2, 1, 2]), ([1, 2, 1, 2, 3], 1))
        self.assertEqual(canonical_rotation("RBB"), (["B", "B", "R"], 1))

    def test_periodic(self):
        rotated, _ = canonical_rotation([2, 1, 2, 1])
        self.assertEqual(rotated, [1, 2, 1, 2])

    def test_empty(self):
        with self.assertRaises(EmptySequenceError):
            canonical_rotation([])

    def test_rotations_compare_equal(self):
        self.assertEqual(CircularOrder.from_sequence([2, 3, 0, 1]), CircularOrder.from_sequence([0, 1, 2, 3]))
        self.assertNotEqual(CircularOrder.from_sequence([0, 1, 2, 3]), CircularOrder.from_sequence([0, 3, 2, 1]))
        self.assertEqual(ColorWord.from_colors("RBRB"), ColorWord.from_colors("BRBR"))


class TranspositionTest(unittest.TestCase):
    def setUp(self):
        self.base = CircularOrder.from_sequence([0, 1, 2, 3])

    def test_same(self):
        diff = adjacent_transposition_diff(self.base, CircularOrder.from_sequence([1, 2, 3, 0]))
        self.assertEqual(diff.kind, DiffKind.SAME)

    def test_swap(self):
        diff = adjacent_transposition_diff(self.base, CircularOrder.from_sequence([0, 2, 1, 3]))
        self.assertEqual(diff.kind, DiffKind.SWAP)
        self.assertEqual(diff.pair, (1, 2))
        self.assertTrue(diff.is_swap_of(2, 1))

    def test_other(self):
        diff = adjacent_transposition_diff(self.base, CircularOrder.from_sequence([0, 3, 2, 1]))
        self.assertEqual(diff.kind, DiffKind.OTHER)

    def test_mismatched(self):
        with self.assertRaises(MismatchedIndexSetsError):
            adjacent_transposition_diff(self.base, CircularOrder.from_sequence([0, 1, 2, 9]))

    def test_apply_swap(self):
        self.assertEqual(apply_adjacent_swap(self.base, 1, 2), CircularOrder.from_sequence([0, 2, 1, 3]))
        self.assertEqual(apply_adjacent_swap(self.base, 3, 0), CircularOrder.from_sequence([3, 1, 2, 0]))
        with self.assertRaises(DegenerateInputError):
            apply_adjacent_swap(self.base, 0, 2)
        with self.assertRaises(MismatchedIndexSetsError):
            apply_adjacent_swap(self.base, 0, 9)


class RadialOrderTest(unittest.TestCase):
    def setUp(self):
        self.s = point_set(CONVEX_QUAD, "RBRB")

    def test_clockwise_inside(self):
        # 点按逆时针给出，绕内部点顺时针读出的是逆序
        self.assertEqual(radial_order(self.s, P(2, 1)), CircularOrder.from_sequence([0, 3, 2, 1]))

    def test_color_word(self):
        self.assertEqual(color_word(radial_order(self.s, P(2, 1)), self.s), ColorWord.from_colors("RBRB"))
        with self.assertRaises(UncoloredSetError):
            color_word(radial_order(self.s, P(2, 1)), point_set(CONVEX_QUAD))

    def test_not_observation_point(self):
        with self.assertRaises(NotObservationPointError):
            radial_order(self.s, P(0, 0))
        with self.assertRaises(NotObservationPointError):
            radial_order(self.s, P(2, 0))

    def test_star_polygonization(self):
        vertices = star_polygonization(self.s, P(2, 1))
        self.assertTrue(is_simple_polygon([self.s[i] for i in vertices]))
        with self.assertRaises(NotInteriorPointError):
            star_polygonization(self.s, P(10, 10))

    def test_star_polygons_of_random_set(self):
        s = gen_random_sgp(6, seed=21)
        reps = interior_face_representatives(s, build_arrangement(s))
        self.assertTrue(reps)
        for _, obs in reps:
            vertices = star_polygonization(s, obs)
            self.assertEqual(sorted(vertices), list(range(6)))
            self.assertTrue(is_simple_polygon([s[i] for i in vertices]))

    def test_simple_polygon(self):
        self.assertTrue(is_simple_polygon([P(0, 0), P(1, 0), P(1, 1), P(0, 1)]))
        self.assertFalse(is_simple_polygon([P(0, 0), P(1, 1), P(1, 0), P(0, 1)]))


if __name__ == "__main__":
    unittest.main()
