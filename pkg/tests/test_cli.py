import os
import tempfile
import unittest

from cli.main import EXIT_FAILURE, EXIT_OK, main
from cli.output import csv_text, read_csv_meta
from geometry.serialization import load_point_set, load_points, save_point_set

from tests.helpers import COLLINEAR, NONCONVEX_QUAD, point_set


class CliTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def path(self, name):
        return os.path.join(self.tmp.name, name)

    def read(self, name):
        with open(self.path(name), encoding="utf-8") as f:
            return f.read()

    def run_cli(self, *argv):
        return main(["--log-level", "WARNING", *argv])

    def test_gen_is_reproducible(self):
        for name in ("a.json", "b.json"):
            code = self.run_cli("gen", "--kind", "random", "--n", "6", "--seed", "4", "--out", self.path(name))
            self.assertEqual(code, EXIT_OK)
        self.assertEqual(self.read("a.json"), self.read("b.json"))
        s, meta = load_point_set(self.path("a.json"))
        self.assertEqual(len(s), 6)
        self.assertEqual(meta["seed"], 4)
        self.assertEqual(meta["command"], "gen")

    def test_gen_rejects_odd_size(self):
        with self.assertRaises(SystemExit) as ctx:
            self.run_cli("gen", "--kind", "upper2", "--n", "7", "--out", self.path("u.json"))
        self.assertEqual(ctx.exception.code, 2)
        self.assertFalse(os.path.exists(self.path("u.json")))

    def test_gen_lower4_writes_q_points(self):
        code = self.run_cli("gen", "--kind", "lower4", "--n", "20", "--out", self.path("l.json"))
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(load_points(self.path("l.q.json"))), 4)

    def test_verify(self):
        self.run_cli("gen", "--kind", "random", "--n", "6", "--seed", "8", "--out", self.path("s.json"))
        self.assertEqual(self.run_cli("verify", "--in", self.path("s.json")), EXIT_OK)
        self.assertEqual(self.run_cli("verify", "--in", self.path("s.json"), "--checks", "euler,m_identity"),
                         EXIT_OK)
        with self.assertRaises(SystemExit):
            self.run_cli("verify", "--in", self.path("s.json"), "--checks", "nonexistent")

    def test_verify_invalid_set(self):
        save_point_set(self.path("c.json"), point_set(COLLINEAR))
        self.assertEqual(self.run_cli("verify", "--in", self.path("c.json")), EXIT_FAILURE)

    def test_walk_csv(self):
        self.run_cli("gen", "--kind", "random", "--n", "8", "--colors", "balanced", "--out", self.path("b.json"))
        code = self.run_cli("walk", "--in", self.path("b.json"), "--center", "0", "--csv", self.path("w.csv"))
        self.assertEqual(code, EXIT_OK)
        lines = [line for line in self.read("w.csv").splitlines() if not line.startswith("#")]
        self.assertEqual(lines[0], "event,partner,order,color_word")
        self.assertEqual(len(lines) - 1, 7)
        self.assertEqual(read_csv_meta(self.read("w.csv"))["center"], "0")

    def test_walk_invalid_set(self):
        save_point_set(self.path("c.json"), point_set(COLLINEAR))
        code = self.run_cli("walk", "--in", self.path("c.json"), "--center", "0", "--csv", self.path("w.csv"))
        self.assertEqual(code, EXIT_FAILURE)
        self.assertFalse(os.path.exists(self.path("w.csv")))

    def test_partition_outputs(self):
        save_point_set(self.path("q.json"), point_set(NONCONVEX_QUAD))
        code = self.run_cli("partition", "--in", self.path("q.json"), "--csv", self.path("p.csv"),
                            "--svg", self.path("p.svg"))
        self.assertEqual(code, EXIT_OK)
        lines = [line for line in self.read("p.csv").splitlines() if not line.startswith("#")]
        self.assertEqual(lines[0], "n,lines,V,E,F,M,cr,order_cells,interior_order_cells")
        self.assertEqual(lines[1].split(",")[5:7], ["3", "0"])
        svg = self.read("p.svg")
        self.assertTrue(svg.startswith("<svg"))
        self.assertIn('stroke-dasharray="4 3"', svg)
        self.assertIn('class="half-line"', svg)

    def test_orderings_colored_requires_colors(self):
        save_point_set(self.path("q.json"), point_set(NONCONVEX_QUAD))
        self.assertEqual(self.run_cli("orderings", "--in", self.path("q.json"), "--count"), EXIT_OK)
        self.assertEqual(self.run_cli("orderings", "--in", self.path("q.json"), "--colored"), EXIT_FAILURE)

    def test_experiment_csv(self):
        code = self.run_cli("experiment", "--kind", "random", "--sizes", "4,5", "--seed", "2",
                            "--csv", self.path("e.csv"))
        self.assertEqual(code, EXIT_OK)
        text = self.read("e.csv")
        meta = read_csv_meta(text)
        self.assertEqual(meta["kind"], "random")
        self.assertEqual(meta["sizes"], "[4, 5]")
        rows = [line for line in text.splitlines() if not line.startswith("#")]
        self.assertEqual(len(rows), 3)

    def test_missing_file(self):
        self.assertEqual(self.run_cli("partition", "--in", self.path("none.json")), EXIT_FAILURE)

    def test_version(self):
        self.assertEqual(self.run_cli("version"), EXIT_OK)


class CsvTextTest(unittest.TestCase):
    def test_header_and_none(self):
        text = csv_text(("a", "b"), [(1, None)], {"seed": 3, "kind": "x"})
        self.assertEqual(text.splitlines(), ["# seed: 3", "# kind: x", "a,b", "1,"])
        self.assertEqual(read_csv_meta(text), {"seed": "3", "kind": "x"})


if __name__ == "__main__":
    unittest.main()
