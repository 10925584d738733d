import unittest

from constructions import gen_random_sgp
from enumeration import walk_around, walk_radius
from geometry.exceptions import DegenerateInputError
from geometry.kernel import squared_distance
from geometry.pointset import Color

from tests.helpers import CONVEX_QUAD, NONCONVEX_QUAD, point_set, slow


class WalkTest(unittest.TestCase):
    def test_events_and_swaps(self):
        s = point_set(NONCONVEX_QUAD)
        for center in range(len(s)):
            trace = walk_around(s, center)
            self.assertEqual(len(trace.events), len(s) - 1)
            self.assertEqual(len(trace.orders_seen), len(s) - 1)
            self.assertTrue(trace.consecutive_swaps_ok())
            self.assertTrue(trace.composes_to_identity())
            self.assertEqual(trace.words_seen, [])

    def test_observation_points_on_circle(self):
        s = point_set(CONVEX_QUAD, "RBRB")
        trace = walk_around(s, 1)
        self.assertEqual(trace.radius, walk_radius(s, 1))
        for p in trace.observation_points:
            self.assertEqual(squared_distance(p, s[1]), trace.radius * trace.radius)
        self.assertEqual(len(trace.words_seen), 3)

    def test_random_sets(self):
        for seed in range(4):
            s = gen_random_sgp(6, seed=seed)
            trace = walk_around(s, seed % 6)
            self.assertEqual(len(trace.events), 5)
            self.assertTrue(trace.consecutive_swaps_ok())
            self.assertTrue(trace.composes_to_identity())

    def test_balanced_red_centers(self):
        s = gen_random_sgp(8, colors="balanced", seed=1)
        self.assertTrue(s.is_balanced)
        for center in s.indices_of(Color.RED):
            trace = walk_around(s, center)
            self.assertGreaterEqual(trace.distinct_color_words, 4)

    def test_bad_center(self):
        with self.assertRaises(DegenerateInputError):
            walk_around(point_set(CONVEX_QUAD), 4)

    @slow
    def test_balanced_sets_up_to_sixteen(self):
        for k, size in enumerate((8, 12, 16) * 3 + (8,)):
            s = gen_random_sgp(size, colors="balanced", seed=50 + k)
            for center in s.indices_of(Color.RED):
                trace = walk_around(s, center)
                self.assertGreaterEqual(trace.distinct_color_words, size // 2)
                self.assertEqual(len(trace.events), size - 1)
                self.assertTrue(trace.composes_to_identity())


if __name__ == "__main__":
    unittest.main()
