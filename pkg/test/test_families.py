#!/usr/bin/env python
import unittest

from delta_modular.boundscalc import moment_curve_delta
from delta_modular.exactmat import IntMatrix
from delta_modular.families import (ConstructionSpec, construct, construct_30s24, construct_basic, construct_f1,
                                    construct_f2, construct_f3, construct_M, construct_vandermonde, f3_parameters)
from delta_modular.modcert import certify


class TestFamilies(unittest.TestCase):
    def __init__(self, *args, **kwargs):
        super(TestFamilies, self).__init__(*args, **kwargs)

    def assertGenericModular(self, a: IntMatrix, delta: int):
        report = certify(a, delta)
        self.assertEqual(report.rank, a.rows)
        self.assertTrue(report.is_generic, f"{a} is not generic")
        self.assertTrue(report.is_delta_modular, f"{a} is not {delta}-modular")
        self.assertTrue(report.columns_distinct)

    def test_basic(self):
        self.assertEqual(construct_basic(3, 2).to_lists(), [[1, 0, 3], [0, 1, 3]])
        for delta in range(1, 6):
            for r in range(1, 5):
                a = construct_basic(delta, r)
                self.assertEqual(a.cols, r + 1)
                self.assertGenericModular(a, delta)

    def test_f1(self):
        self.assertEqual(construct_f1(2).to_lists(), [[1, 0, 1, 1], [0, 1, 1, 2]])
        for delta in range(1, 61):
            a = construct_f1(delta)
            self.assertEqual(a.cols, delta + 2)
            self.assertGenericModular(a, delta)
        with self.assertRaises(ValueError):
            construct_f1(0)

    def test_f2(self):
        self.assertEqual(construct_f2(3).cols, 6)
        for delta in range(3, 61, 2):
            a = construct_f2(delta)
            self.assertEqual(a.cols, delta + 3)
            self.assertGenericModular(a, delta)
        for delta in (1, 4, 10):
            with self.assertRaises(ValueError):
                construct_f2(delta)

    def test_f3(self):
        self.assertEqual(construct_f3(8).columns(),
                         [(0, 1), (1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 5), (2, 7),
                          (3, 7), (3, 8)])
        for delta in (8, 14, 20, 26, 32, 38, 44, 50, 56):
            a = construct_f3(delta)
            self.assertEqual(a.cols, delta + 4)
            self.assertGenericModular(a, delta)
        for delta in (2, 6, 10, 12, 15):
            with self.assertRaises(ValueError):
                f3_parameters(delta)

    def test_30s24(self):
        self.assertEqual(construct_30s24(0).cols, 30)
        self.assertEqual(construct_30s24(1).cols, 59)
        for s in range(3):
            self.assertGenericModular(construct_30s24(s), 30 * s + 24)
        with self.assertRaises(ValueError):
            construct_30s24(13)

    def test_M(self):
        self.assertEqual(construct_M((0,), (3,)).columns(), [(0, 1), (1, 0), (1, 1), (1, 2), (1, 3)])
        self.assertEqual(set(construct_M((0, 5), (5, 5)).columns()), set(construct_f2(5).columns()))
        self.assertEqual(construct_M((2,), (2,)).columns(), [(0, 1), (1, 2)])
        with self.assertRaises(ValueError):
            construct_M((0, 1), (3,))
        with self.assertRaises(ValueError):
            construct_M((4,), (3,))

    def test_vandermonde(self):
        self.assertEqual(construct_vandermonde(3, 2).to_lists(), [[1, 1, 1], [1, 2, 3]])
        for p in (2, 3, 5, 7, 11, 13):
            for r in range(2, min(p, 4) + 1):
                report = certify(construct_vandermonde(p, r), 1)
                self.assertEqual(report.rank, r)
                self.assertTrue(report.is_generic)
                self.assertLessEqual(report.max_abs_top_minor, moment_curve_delta(p, r))
        for p, r in ((4, 2), (3, 4), (5, 1)):
            with self.assertRaises(ValueError):
                construct_vandermonde(p, r)

    def test_construct(self):
        self.assertEqual(construct(ConstructionSpec("f1", delta=2)), construct_f1(2))
        self.assertEqual(construct(ConstructionSpec("basic", delta=2, r=3)), construct_basic(2, 3))
        self.assertEqual(construct(ConstructionSpec("M", a=(0,), b=(3,))), construct_M((0,), (3,)))
        with self.assertRaises(ValueError):
            construct(ConstructionSpec("vandermonde", p=5))
        with self.assertRaises(ValueError):
            ConstructionSpec("f4", delta=2)
        self.assertEqual(construct(ConstructionSpec("30s24", delta=54)), construct_30s24(1))
        self.assertEqual(construct(ConstructionSpec("30s24", delta=24, s=0)), construct_30s24(0))
        with self.assertRaises(ValueError):
            construct(ConstructionSpec("30s24", delta=30))
        with self.assertRaises(ValueError):
            construct(ConstructionSpec("30s24", delta=24, s=1))


if __name__ == '__main__':
    unittest.main()
