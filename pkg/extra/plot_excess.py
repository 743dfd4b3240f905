"""Plot the excess g(Δ,2) - (Δ+2) from a table CSV."""
import csv
import sys
from typing import Iterable

import plotext as plt


def excess_points(lines: Iterable[str]) -> tuple[list[int], list[int]]:
    deltas, excess = [], []
    for row in csv.DictReader(lines):
        if row["rank"] == "2" and row["excess"] != "":
            deltas.append(int(row["delta"]))
            excess.append(int(row["excess"]))
    return deltas, excess


def excess_plot(deltas: list[int], excess: list[int]):
    plt.axes_color('default')
    plt.canvas_color('default')
    plt.ticks_color('default')
    plt.scatter(deltas, excess)
    plt.title("Excess g(Δ,2) - (Δ+2)")
    plt.xlabel("Δ")
    plt.ylabel("excess")
    plt.show()
    plt.clear_figure()


if __name__ == '__main__':
    with open(sys.argv[1], encoding="utf-8") as f:
        excess_plot(*excess_points(f))
