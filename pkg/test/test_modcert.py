#!/usr/bin/env python
import unittest

import numpy as np

from delta_modular.exactmat import IntMatrix, signed_permutation
from delta_modular.families import construct_f1, construct_f2, construct_f3
from delta_modular.modcert import (certify, colex_subsets, is_delta_bound, is_delta_modular, is_generic,
                                   is_totally_generic)
from test_exactmat import random_unimodular


class TestPredicates(unittest.TestCase):
    def __init__(self, *args, **kwargs):
        super(TestPredicates, self).__init__(*args, **kwargs)

    def test_colex_order(self):
        self.assertEqual(list(colex_subsets(4, 2)), [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)])
        self.assertEqual(list(colex_subsets(3, 0)), [()])
        self.assertEqual(len(list(colex_subsets(6, 3))), 20)

    def test_generic(self):
        self.assertTrue(is_generic(IntMatrix.identity(2)))
        self.assertTrue(is_generic(construct_f1(4)))
        self.assertFalse(is_generic(IntMatrix([[1, 0, 1], [0, 1, 0]])))
        with self.assertRaises(ValueError):
            is_generic(IntMatrix([[1, 2], [2, 4]]))

    def test_delta_modular(self):
        self.assertTrue(is_delta_modular(IntMatrix.identity(3), 1))
        self.assertTrue(is_delta_modular(construct_f1(3), 3))
        self.assertFalse(is_delta_modular(construct_f1(3), 4))
        self.assertFalse(is_delta_modular(construct_f1(3), 2))
        with self.assertRaises(ValueError):
            is_delta_modular(IntMatrix.identity(2), 0)

    def test_totally_generic_and_bound(self):
        self.assertTrue(is_totally_generic(IntMatrix([[1, 1], [1, 2]])))
        self.assertFalse(is_totally_generic(IntMatrix([[1, 0], [0, 1]])))
        self.assertTrue(is_delta_bound(IntMatrix([[5]]), 5))
        self.assertFalse(is_delta_bound(IntMatrix([[6]]), 5))
        self.assertFalse(is_delta_bound(IntMatrix([[3, -2], [2, 3]]), 3))
        self.assertTrue(is_delta_bound(IntMatrix([[3, -2], [2, 3]]), 4))


class TestCertify(unittest.TestCase):
    def __init__(self, *args, **kwargs):
        super(TestCertify, self).__init__(*args, **kwargs)

    def test_families(self):
        report = certify(construct_f2(5), 5)
        self.assertEqual(report.columns, 8)
        self.assertEqual(report.rank, 2)
        self.assertTrue(report.is_generic)
        self.assertTrue(report.is_delta_modular)
        self.assertTrue(report.columns_distinct)

        report = certify(construct_f3(8), 8)
        self.assertEqual(report.columns, 12)
        self.assertTrue(report.is_generic)
        self.assertTrue(report.is_delta_modular)

    def test_submodular(self):
        report = certify(construct_f1(3), 4)
        self.assertEqual(report.max_abs_top_minor, 3)
        self.assertTrue(report.is_delta_submodular)
        self.assertFalse(report.is_delta_modular)

    def test_degenerate(self):
        report = certify(IntMatrix([[0, 0], [0, 0]]), 1)
        self.assertEqual(report.rank, 0)
        self.assertFalse(report.is_generic)
        self.assertEqual(report.zero_top_minor_count, 4)

        report = certify(IntMatrix([[1, 1], [1, 1]]), 1)
        self.assertFalse(report.columns_distinct)
        self.assertEqual(report.rank, 1)

    def test_equivalence_invariance(self):
        rng = np.random.default_rng(0)
        a = construct_f2(5)
        nongeneric = IntMatrix([[1, 0, 1, 1], [0, 1, 0, 1]])
        for _ in range(20):
            signs = rng.choice([-1, 1], size=a.cols).tolist()
            perm = rng.permutation(a.cols).tolist()
            b = random_unimodular(rng, 2) @ signed_permutation(a, signs, perm)
            self.assertTrue(is_generic(b))
            self.assertTrue(is_delta_modular(b, 5))
            c = random_unimodular(rng, 2) @ nongeneric
            self.assertFalse(is_generic(c))
            self.assertTrue(is_delta_modular(c, 1))

    def test_as_dict(self):
        d = certify(IntMatrix.identity(2), 1).as_dict()
        self.assertEqual(d["rank"], 2)
        self.assertTrue(d["is_delta_modular"])


if __name__ == '__main__':
    unittest.main()
