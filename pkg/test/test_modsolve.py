#!/usr/bin/env python
import itertools
import unittest

from delta_modular.exactmat import HnfMatrix, IntMatrix
from delta_modular.hnfspace import HnfEnumConfig, enumerate_hnf
from delta_modular.modsolve import (CandidateColumns, candidate_columns, lift_representatives, prune_parallel,
                                    solve_mod)


def brute_force_solutions(a: HnfMatrix, delta: int):
    rows = a.to_lists()
    return sorted(x for x in itertools.product(range(delta), repeat=a.r)
                  if all(sum(row[j] * x[j] for j in range(a.r)) % delta == 0 for row in rows))


class TestSolveMod(unittest.TestCase):
    def __init__(self, *args, **kwargs):
        super(TestSolveMod, self).__init__(*args, **kwargs)

    def test_examples(self):
        sols = solve_mod(HnfMatrix(IntMatrix([[1, 0], [0, 5]])), 5)
        self.assertEqual(list(sols), [(0, k) for k in range(5)])
        self.assertEqual(list(solve_mod(HnfMatrix(IntMatrix.identity(3)), 1)), [(0, 0, 0)])
        a = HnfMatrix(IntMatrix([[2, 1], [0, 2]]))
        self.assertEqual(list(solve_mod(a, 4)), brute_force_solutions(a, 4))

    def test_determinant_mismatch(self):
        with self.assertRaises(ValueError):
            solve_mod(HnfMatrix(IntMatrix([[1, 0], [0, 5]])), 4)

    def test_brute_force(self):
        for r in (2, 3):
            for delta in range(1, 9):
                for a in enumerate_hnf(HnfEnumConfig(delta, r)):
                    sols = solve_mod(a, delta)
                    self.assertEqual(len(sols), delta)
                    self.assertEqual(list(sols), brute_force_solutions(a, delta), f"{a}")


class TestLifting(unittest.TestCase):
    def __init__(self, *args, **kwargs):
        super(TestLifting, self).__init__(*args, **kwargs)

    def test_generic_examples(self):
        self.assertEqual(set(lift_representatives((0, 0), 3)), {(3, 3), (3, -3)})
        self.assertEqual(set(lift_representatives((1, 2), 3)), {(1, 2), (1, -1)})
        self.assertEqual(len(lift_representatives((1, 2, 0), 3)), 4)

    def test_nongeneric_examples(self):
        self.assertEqual(set(lift_representatives((0, 1), 2, "nongeneric")), {(0, 1), (2, 1), (2, -1)})
        self.assertEqual(set(lift_representatives((0, 0), 1, "nongeneric")),
                         {(0, 1), (1, 0), (1, 1), (1, -1)})
        self.assertEqual(len(lift_representatives((0, 0), 1, "nongeneric", allow_negations=True)), 9)

    def test_invalid(self):
        with self.assertRaises(ValueError):
            lift_representatives((3, 0), 3)
        with self.assertRaises(ValueError):
            lift_representatives((1, 0), 3, "sorted")

    def test_lift_properties(self):
        a = HnfMatrix(IntMatrix([[1, 0, 2], [0, 1, 3], [0, 0, 6]]))
        rows = a.to_lists()
        lifts = [v for x in solve_mod(a, 6) for v in lift_representatives(x, 6)]
        self.assertEqual(len(lifts), 4 * 6)
        self.assertEqual(len(set(lifts)), len(lifts))
        for v in lifts:
            self.assertTrue(all(sum(row[j] * v[j] for j in range(3)) % 6 == 0 for row in rows))
            self.assertTrue(all(0 < abs(c) <= 6 for c in v))
            self.assertGreater(v[0], 0)


class TestCandidates(unittest.TestCase):
    def __init__(self, *args, **kwargs):
        super(TestCandidates, self).__init__(*args, **kwargs)

    def test_prune_parallel(self):
        cands = CandidateColumns([(2, 2), (1, 1), (3, 3), (1, -1), (2, 1)])
        self.assertEqual(list(prune_parallel(cands)), [(1, 1), (1, -1), (2, 1)])
        with self.assertRaises(ValueError):
            prune_parallel(CandidateColumns([(1, 1)], "nongeneric"))

    def test_generic_candidates(self):
        a = HnfMatrix(IntMatrix([[1, 0], [0, 7]]))
        cands = candidate_columns(a, 7)
        self.assertEqual(cands.mode, "generic")
        self.assertEqual(len(cands), len(set(cands)))
        self.assertIn((7, 1), cands.columns)
        for v in cands:
            self.assertEqual(v[0] % 7, 0)
            self.assertTrue(all(0 < abs(c) <= 7 for c in v))

    def test_nongeneric_candidates(self):
        a = HnfMatrix(IntMatrix([[1, 0], [0, 2]]))
        cands = candidate_columns(a, 2, "nongeneric")
        for excluded in ((2, 0), (0, 2), (-2, 0), (0, -2)):
            self.assertNotIn(excluded, cands.columns)
        self.assertIn((0, 1), cands.columns)
        self.assertIn((2, 2), cands.columns)

        cands = candidate_columns(HnfMatrix(IntMatrix.identity(2)), 1, "nongeneric", allow_negations=True)
        self.assertEqual(set(cands), {(0, 0), (-1, 0), (0, -1), (1, 1), (-1, -1), (1, -1), (-1, 1)})


if __name__ == '__main__':
    unittest.main()
