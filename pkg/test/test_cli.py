#!/usr/bin/env python
import contextlib
import io
import os
import tempfile
import unittest

from delta_modular.cli import main
from delta_modular.families import construct_f2
from delta_modular.matrix_io import write_matrix


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestCli(unittest.TestCase):
    def __init__(self, *args, **kwargs):
        super(TestCli, self).__init__(*args, **kwargs)

    def test_hnf_count(self):
        self.assertEqual(run("hnf-count", "--delta", "13", "--rank", "4")[:2], (0, "2380\n"))
        self.assertEqual(run("hnf-count", "--delta", "13", "--rank", "4", "--mode", "op")[:2], (0, "84\n"))

    def test_construct(self):
        self.assertEqual(run("construct", "--family", "f1", "--delta", "2")[:2], (0, "2 4\n1 0 1 1\n0 1 1 2\n"))
        code, _, err = run("construct", "--family", "f2", "--delta", "4")
        self.assertEqual(code, 2)
        self.assertIn("error", err)
        self.assertEqual(run("construct", "--family", "vandermonde", "--p", "5")[0], 2)
        code, out, _ = run("construct", "--family", "30s24", "--delta", "54")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("2 59\n"))
        self.assertEqual(run("construct", "--family", "30s24", "--delta", "55")[0], 2)

    def test_verify(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "f2.txt")
            write_matrix(construct_f2(5), path)
            code, out, _ = run("verify", path, "--delta", "5")
            self.assertEqual(code, 0)
            self.assertIn("is_delta_modular=True", out)
            self.assertEqual(run("verify", path, "--delta", "4")[0], 1)

            bad = os.path.join(tmp, "bad.txt")
            with open(bad, "w", encoding="utf-8") as f:
                f.write("2 2\n1 0\n")
            self.assertEqual(run("verify", bad, "--delta", "1")[0], 2)
            self.assertEqual(run("verify", os.path.join(tmp, "missing.txt"), "--delta", "1")[0], 2)

    def test_bounds(self):
        code, out, _ = run("bounds", "--delta", "7", "--rank", "2")
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[1], "7,2,10,f2,12,,")

    def test_compute(self):
        code, out, _ = run("compute", "--delta", "7", "--rank", "2")
        self.assertEqual(code, 0)
        self.assertIn("value=10", out)
        self.assertIn("status=complete", out)
        self.assertEqual(run("compute", "--delta", "7", "--rank", "2", "--cap", "1")[0], 3)
        self.assertEqual(run("compute", "--delta", "0", "--rank", "2")[0], 2)

    def test_oracle(self):
        code, out, _ = run("oracle", "--delta", "2")
        self.assertEqual(code, 0)
        self.assertIn("value=4", out)

    def test_table(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "table.csv")
            self.assertEqual(run("table", "--rank", "2", "--delta-max", "4", "--csv", path)[0], 0)
            with open(path, encoding="utf-8") as f:
                lines = f.read().splitlines()
            self.assertEqual(len(lines), 4)
            self.assertTrue(lines[0].startswith("delta,rank,mode,value"))

    def test_table_incomplete(self):
        self.assertEqual(run("table", "--rank", "2", "--delta-max", "7", "--cap", "1")[0], 3)


if __name__ == '__main__':
    unittest.main()
