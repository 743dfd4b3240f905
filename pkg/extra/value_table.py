"""Render table CSV rows as a rank × Δ grid."""
import csv
import sys
from typing import Iterable


def summarize(lines: Iterable[str]) -> str:
    rows = list(csv.DictReader(lines))
    deltas = sorted({int(row["delta"]) for row in rows})
    ranks = sorted({int(row["rank"]) for row in rows})
    values = {(int(row["rank"]), int(row["delta"])): row["value"] for row in rows}
    name = {int(row["rank"]): "h" if row["mode"] == "nongeneric" else "g" for row in rows}

    labels = {r: f"{name[r]}(Δ,{r})" for r in ranks}
    n_column_0 = max([len("Δ")] + [len(label) for label in labels.values()])
    widths = [max([len(str(d))] + [len(values.get((r, d), "")) for r in ranks]) for d in deltas]

    double_sep = "=" * n_column_0 + "".join("=+=" + "=" * w for w in widths) + "\n"
    horizontal_sep = "-" * n_column_0 + "".join("-+-" + "-" * w for w in widths) + "\n"
    ret_str = double_sep
    ret_str += f"{'Δ':<{n_column_0}}" + "".join(f" | {d:<{w}}" for d, w in zip(deltas, widths)) + "\n"
    ret_str += double_sep
    for r in ranks:
        ret_str += f"{labels[r]:<{n_column_0}}"
        ret_str += "".join(f" | {values.get((r, d), ''):<{w}}" for d, w in zip(deltas, widths)) + "\n"
        ret_str += horizontal_sep
    return ret_str


if __name__ == '__main__':
    with open(sys.argv[1], encoding="utf-8") as f:
        print(summarize(f), end="")
