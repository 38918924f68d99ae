"""Exact DP-chromatic numbers of small graphs, next to list-coloring and
degeneracy bounds.

Usage:
    python scripts/chromatic_table.py [--max-t 4]
"""

import argparse
import time

from dpcolor.cover import full_lists, identity_matchings
from dpcolor.graph import Graph, degeneracy, generate
from dpcolor.solver import dp_chromatic, free_edge_count, solve_transversal

GRAPHS = [
    ("P3", generate("path", 3)),
    ("star4", generate("star", 4)),
    ("C3", generate("cycle", 3)),
    ("C4", generate("cycle", 4)),
    ("C5", generate("cycle", 5)),
    ("C6", generate("cycle", 6)),
    ("C8", generate("cycle", 8)),
    ("K4", generate("complete", 4)),
    ("W4", generate("wheel", 4)),
    ("theta(2,2,2)", Graph.from_edges(5, [(0, 1), (1, 4), (0, 2), (2, 4), (0, 3), (3, 4)])),
    ("grid3", generate("grid", 3)),
]


def chromatic_number(g, t_max):
    """Ordinary chromatic number via identity matchings on {1..t}."""
    for t in range(1, t_max + 1):
        lists = full_lists(g, t)
        if solve_transversal(g, lists, identity_matchings(g, lists)) is not None:
            return t
    return None


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-t", type=int, default=4)
    args = p.parse_args()
    print(f"{'graph':14s} {'free':>4s} {'chi':>4s} {'chi_DP':>6s} {'degen+1':>7s} {'searched':>18s} {'time':>7s}")
    for name, g in GRAPHS:
        if free_edge_count(g) > 4:
            print(f"{name:14s} skipped: {free_edge_count(g)} free edges")
            continue
        start = time.perf_counter()
        cert = dp_chromatic(g, args.max_t)
        dt = time.perf_counter() - start
        value = cert.value if cert.value is not None else f">{args.max_t}"
        print(
            f"{name:14s} {free_edge_count(g):4d} {chromatic_number(g, args.max_t):4d} {value!s:>6s} "
            f"{degeneracy(g).degeneracy + 1:7d} {str(cert.searched):>18s} {dt:6.2f}s"
        )


if __name__ == "__main__":
    main()
