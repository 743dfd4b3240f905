"""
Plain-text matrix format and the compact witness encoding used in tables.

Matrix format: a header line `r n`, then r lines of n space-separated integers.
Witness encoding: columns joined by `;`, entries of a column joined by `,`.
"""
from pathlib import Path

from delta_modular.exactmat import IntMatrix


def format_matrix(a: IntMatrix) -> str:
    lines = [f"{a.rows} {a.cols}"]
    lines += [" ".join(str(v) for v in row) for row in a.to_lists()]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> IntMatrix:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("Empty matrix text")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"Header must be 'r n', got '{lines[0]}'")
    try:
        r, n = int(header[0]), int(header[1])
    except ValueError:
        raise ValueError(f"Header must contain two integers, got '{lines[0]}'") from None
    if r < 1 or n < 1:
        raise ValueError(f"Matrix dimensions must be positive, got {r}×{n}")
    if len(lines) != r + 1:
        raise ValueError(f"Expected {r} matrix rows, got {len(lines) - 1}")
    rows = []
    for i, line in enumerate(lines[1:], start=1):
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise ValueError(f"Row {i} contains a non-integer entry: '{line}'") from None
        if len(row) != n:
            raise ValueError(f"Row {i} has {len(row)} entries, expected {n}")
        rows.append(row)
    return IntMatrix(rows)


def read_matrix(path) -> IntMatrix:
    return parse_matrix(Path(path).read_text(encoding="utf-8"))


def write_matrix(a: IntMatrix, path):
    Path(path).write_text(format_matrix(a), encoding="utf-8")


def format_witness(a: IntMatrix) -> str:
    return ";".join(",".join(str(v) for v in col) for col in a.columns())


def parse_witness(text: str) -> IntMatrix:
    try:
        columns = [tuple(int(v) for v in col.split(",")) for col in text.split(";")]
    except ValueError:
        raise ValueError(f"Malformed witness '{text}'") from None
    if len({len(c) for c in columns}) != 1:
        raise ValueError(f"Witness columns have different lengths: '{text}'")
    return IntMatrix.from_columns(columns)
