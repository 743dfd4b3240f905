#!/usr/bin/env python
import os
import tempfile
import unittest

from delta_modular.exactmat import IntMatrix
from delta_modular.families import construct_f2
from delta_modular.matrix_io import format_matrix, format_witness, parse_matrix, parse_witness, read_matrix, write_matrix


class TestMatrixIO(unittest.TestCase):
    def __init__(self, *args, **kwargs):
        super(TestMatrixIO, self).__init__(*args, **kwargs)

    def test_format(self):
        a = IntMatrix([[1, 0, -3], [0, 1, 3]])
        self.assertEqual(format_matrix(a), "2 3\n1 0 -3\n0 1 3\n")
        self.assertEqual(format_witness(a), "1,0;0,1;-3,3")

    def test_parse(self):
        self.assertEqual(parse_matrix("2 3\n1 0 -3\n\n0 1 3\n"), IntMatrix([[1, 0, -3], [0, 1, 3]]))
        self.assertEqual(parse_witness("1,0;0,1;-3,3"), IntMatrix([[1, 0, -3], [0, 1, 3]]))

    def test_malformed(self):
        for text in ("", "2\n1 0", "2 2\n1 0\n", "2 2\n1 0\n0 x\n", "2 2\n1 0\n0 1 1\n", "0 2\n"):
            with self.assertRaises(ValueError, msg=repr(text)):
                parse_matrix(text)
        for text in ("1,0;0", "1,a"):
            with self.assertRaises(ValueError, msg=text):
                parse_witness(text)

    def test_file(self):
        a = construct_f2(5)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "f2.txt")
            write_matrix(a, path)
            self.assertEqual(read_matrix(path), a)


if __name__ == '__main__':
    unittest.main()
