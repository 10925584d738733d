import threading
import unittest
from math import comb

from arrangement import (
    EdgeKind,
    UnionFind,
    box_split_edges,
    build_arrangement,
    build_order_partition,
    check_budget,
    classify_edges,
    compute_stats,
    crossing_lower_bound,
    crossing_number,
    interior_face_representatives,
    projected_face_count,
)
from constructions import gen_convex, gen_random_sgp
from geometry.exceptions import BudgetExceededError, NotValidatedError, TooFewPointsError
from geometry.kernel import strictly_inside_convex
from geometry.pointset import convex_hull

from tests.helpers import COLLINEAR, CONVEX_QUAD, NONCONVEX_QUAD, TRIANGLE, point_set, slow


def _stats(s):
    arr = build_arrangement(s)
    op = build_order_partition(arr)
    return arr, op, compute_stats(s, arr, op)


class UnionFindTest(unittest.TestCase):
    def test_components(self):
        uf = UnionFind(6)
        self.assertTrue(uf.union(0, 1))
        self.assertTrue(uf.union(1, 2))
        self.assertFalse(uf.union(0, 2))
        uf.union(4, 5)
        self.assertTrue(uf.connected(0, 2))
        self.assertFalse(uf.connected(2, 3))
        self.assertEqual(uf.num_components, 3)


class TriangleTest(unittest.TestCase):
    def setUp(self):
        self.s = point_set(TRIANGLE)
        self.arr = build_arrangement(self.s)

    def test_counts(self):
        self.assertEqual(len(self.arr.lines), 3)
        # 3 个点 + 6 个盒边交点 + 4 个盒角
        self.assertEqual(self.arr.V, 13)
        self.assertEqual(self.arr.E, 19)
        self.assertEqual(self.arr.F, 8)
        self.assertEqual(self.arr.V - self.arr.E + self.arr.F, 2)

    def test_edge_kinds(self):
        kinds = classify_edges(self.arr)
        counts = {k: list(kinds.values()).count(k) for k in EdgeKind}
        self.assertEqual(counts[EdgeKind.SEGMENT_INTERIOR], 3)
        self.assertEqual(counts[EdgeKind.HALF_LINE], 6)
        self.assertEqual(counts[EdgeKind.BOX_BOUNDARY], 10)
        self.assertEqual(kinds, {e.id: e.kind for e in self.arr.edges})

    def test_order_partition(self):
        op = build_order_partition(self.arr)
        # 中间三角形与三个边外区域合为一个胞腔，三个角区域各自成胞腔
        self.assertEqual(op.cell_count, 4)
        self.assertLessEqual(op.cell_count, self.arr.F)

    def test_representatives_inside_faces(self):
        for face in self.arr.inner_faces():
            self.assertTrue(strictly_inside_convex(self.arr.face_polygon(face.id), face.representative))
            self.assertEqual(self.arr.locate(face.representative), face.id)

    def test_interior_representatives(self):
        hull = [self.s[i] for i in convex_hull(self.s)]
        reps = interior_face_representatives(self.s, self.arr)
        self.assertEqual(len(reps), 1)
        for _, rep in reps:
            self.assertTrue(strictly_inside_convex(hull, rep))


class BuildErrorsTest(unittest.TestCase):
    def test_too_few(self):
        with self.assertRaises(TooFewPointsError):
            build_arrangement(point_set([(0, 0), (1, 0)]))

    def test_not_validated(self):
        with self.assertRaises(NotValidatedError):
            build_arrangement(point_set(COLLINEAR))

    def test_budget(self):
        self.assertEqual(projected_face_count(4), 15)
        check_budget(4, 15)
        with self.assertRaises(BudgetExceededError):
            check_budget(10, 1000)


class BoxCornerTest(unittest.TestCase):
    def test_diagonal_lines_through_corners(self):
        # y=x 与 x+y=6 都经过初始盒角
        s = point_set(NONCONVEX_QUAD)
        built = []
        worker = threading.Thread(target=lambda: built.append(build_arrangement(s)), daemon=True)
        worker.start()
        worker.join(10)
        self.assertEqual(len(built), 1, "排列构建未在 10 秒内完成")
        arr = built[0]
        for corner in arr.box.corners:
            self.assertFalse(any(line.contains(corner) for line in arr.lines))
        self.assertEqual(arr.V - arr.E + arr.F, 2)
        self.assertEqual(box_split_edges(arr), [])


class StatsTest(unittest.TestCase):
    def test_convex_quad(self):
        _, _, st = _stats(point_set(CONVEX_QUAD))
        self.assertEqual(st.cr, 1)
        self.assertEqual(st.M, 1)
        self.assertTrue(st.m_identity_holds)

    def test_nonconvex_quad(self):
        _, _, st = _stats(point_set(NONCONVEX_QUAD))
        self.assertEqual(st.cr, 0)
        self.assertEqual(st.M, 3)
        self.assertTrue(st.m_identity_holds)

    def test_convex_sets(self):
        for n in range(4, 9):
            s = gen_convex(n, seed=n)
            self.assertEqual(crossing_number(s), comb(n, 4))
        _, _, st = _stats(gen_convex(6, seed=2))
        self.assertEqual(st.M, 15)
        self.assertEqual(st.csv_row()[6], 15)

    def test_random_sets(self):
        for seed in range(10):
            n = 4 + seed % 4
            s = gen_random_sgp(n, seed=seed)
            arr, op, st = _stats(s)
            self.assertEqual(st.V - st.E + st.F, 2)
            self.assertTrue(st.m_identity_holds)
            self.assertGreaterEqual(st.cr, st.crossing_lower_bound)
            self.assertGreaterEqual(st.deg4_count, st.deg4_lower_bound)
            self.assertGreaterEqual(st.order_cells, st.cell_lower_bound)
            self.assertLessEqual(op.cell_count, arr.F)
            for v in arr.vertices:
                if v.on_box:
                    continue
                self.assertEqual(len(v.lines), n - 1 if v.site is not None else 2)

    def test_crossing_lower_bound(self):
        self.assertEqual([crossing_lower_bound(n) for n in range(4, 9)], [0, 1, 3, 9, 19])
        # 12 点子集平均
        self.assertEqual(crossing_lower_bound(13), -(-153 * comb(13, 4) // comb(12, 4)))
        for n in range(13, 40):
            self.assertGreaterEqual(crossing_lower_bound(n), comb(n, 4) // 5)
        _, _, st = _stats(gen_random_sgp(6, seed=11))
        self.assertGreaterEqual(st.cr, 3)
        self.assertGreater(st.crossing_ratio, 0)

    def test_interior_cells_nonempty(self):
        s = gen_random_sgp(5, seed=4)
        arr = build_arrangement(s)
        self.assertTrue(interior_face_representatives(s, arr))


class AcceptanceArrangementTest(unittest.TestCase):
    @slow
    def test_thirty_random_sets(self):
        for seed in range(30):
            n = 4 + seed % 5
            arr, _, st = _stats(gen_random_sgp(n, seed=100 + seed))
            self.assertEqual(arr.V - arr.E + arr.F, 2)
            self.assertTrue(st.m_identity_holds)
        for seed in range(30):
            n = 4 + seed % 6
            self.assertTrue(_stats(gen_random_sgp(n, seed=200 + seed))[2].m_identity_holds)


if __name__ == "__main__":
    unittest.main()
