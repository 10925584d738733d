import unittest

from config.settings import Settings
from enumeration import EXPERIMENT_HEADER, growth_experiment
from geometry.exceptions import BudgetExceededError, DegenerateInputError

from tests.helpers import slow


class GrowthExperimentTest(unittest.TestCase):
    def test_random_is_deterministic(self):
        first = growth_experiment("random", [5, 6], seed=3)
        second = growth_experiment("random", [5, 6], seed=3)
        self.assertEqual(first.rows, second.rows)
        self.assertEqual(first.header, EXPERIMENT_HEADER)
        self.assertEqual(first.column("size"), [5, 6])
        self.assertEqual(first.meta["seed"], 3)
        self.assertEqual(len(first.meta["runs"]), 2)
        for row in first.rows:
            size, rho, rho_colored, cells, faces, points, designated = row
            self.assertIsNone(rho_colored)
            self.assertLessEqual(rho, cells)
            self.assertLessEqual(cells, faces)
            self.assertEqual(points, size)
            self.assertIsNone(designated)

    def test_balanced_sizes_are_colored(self):
        table = growth_experiment("convex", [4], seed=1)
        self.assertIsNotNone(table.column("rho_colored")[0])

    def test_lower4_without_census(self):
        table = growth_experiment("lower4", [20], seed=0, with_census=False)
        self.assertEqual(table.column("designated_distinct"), [4])
        self.assertEqual(table.column("points"), [40])
        self.assertIsNone(table.column("rho")[0])
        self.assertFalse(table.meta["census"])

    def test_budget_checked_before_running(self):
        with self.assertRaises(BudgetExceededError):
            growth_experiment("random", [4, 5], settings=Settings(face_budget=20))

    def test_invalid_input(self):
        with self.assertRaises(DegenerateInputError):
            growth_experiment("spiral", [5])
        with self.assertRaises(DegenerateInputError):
            growth_experiment("upper2", [8, 9], with_census=False)

    @slow
    def test_upper2_growth(self):
        table = growth_experiment("upper2", [8, 12, 16], seed=0)
        colored = table.column("rho_colored")
        self.assertTrue(all(value is not None for value in colored))
        self.assertLessEqual(colored[0], colored[-1])
        # colored(16) / colored(8) <= 2^2.5，两边平方后比较整数
        self.assertLessEqual(colored[-1] ** 2, 32 * colored[0] ** 2)
        for rho_colored, rho, cells, faces in zip(colored, table.column("rho"), table.column("order_cells"),
                                                  table.column("F")):
            self.assertLessEqual(rho_colored, rho)
            self.assertLessEqual(rho, cells)
            self.assertLessEqual(cells, faces)


if __name__ == "__main__":
    unittest.main()
