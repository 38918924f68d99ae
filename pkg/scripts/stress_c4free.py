"""Stress the constructive DP-4-coloring on planar graphs without 4-cycles.

Usage:
    python scripts/stress_c4free.py [--seeds 1000] [--trees 200] [--max-tree 200] [--seed 0]

Runs the reduce-and-replay colorer on the dodecahedral line graph, the
dodecahedron, short odd/even cycles and random trees, with random maximum
matchings on lists of size 4 (or a random 4..6-subset of a small palette
with --mixed-lists). Every coloring is re-verified.
"""

import argparse
import random
import time
from dataclasses import dataclass

from dpcolor.cover import full_lists, random_matchings, verify_coloring
from dpcolor.graph import generate, random_tree
from dpcolor.solver import color_planar_c4free, reduce, Gadget


@dataclass
class StressConfig:
    seeds: int = 1000
    trees: int = 200
    max_tree: int = 200
    seed: int = 0
    mixed_lists: bool = False


def lists_for(g, rng, cfg):
    if not cfg.mixed_lists:
        return full_lists(g, 4)
    return {v: frozenset(rng.sample(range(1, 9), rng.randint(4, 6))) for v in g.vertices()}


def run(cfg: StressConfig):
    rng = random.Random(cfg.seed)
    hosts = {
        "dodecahedral-line": generate("dodecahedral-line"),
        "dodecahedral": generate("dodecahedral"),
        "C3": generate("cycle", 3),
        "C5": generate("cycle", 5),
        "C7": generate("cycle", 7),
    }
    for name, g in hosts.items():
        gadgets = sum(isinstance(s, Gadget) for s in reduce(g).steps)
        start = time.perf_counter()
        failures = 0
        for _ in range(cfg.seeds):
            lists = lists_for(g, rng, cfg)
            m = random_matchings(g, lists, rng.getrandbits(64))
            if verify_coloring(g, lists, m, color_planar_c4free(g, lists, m)):
                failures += 1
        dt = time.perf_counter() - start
        print(f"{name:18s} n={g.n:3d} gadget steps={gadgets:2d} runs={cfg.seeds} failures={failures} {dt:.2f}s")

    start = time.perf_counter()
    failures = 0
    for _ in range(cfg.trees):
        t = random_tree(rng.randint(1, cfg.max_tree), rng)
        lists = lists_for(t, rng, cfg)
        m = random_matchings(t, lists, rng.getrandbits(64))
        if verify_coloring(t, lists, m, color_planar_c4free(t, lists, m)):
            failures += 1
    print(f"{'random trees':18s} runs={cfg.trees} failures={failures} {time.perf_counter() - start:.2f}s")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--seeds", type=int, default=StressConfig.seeds)
    p.add_argument("--trees", type=int, default=StressConfig.trees)
    p.add_argument("--max-tree", type=int, default=StressConfig.max_tree)
    p.add_argument("--seed", type=int, default=StressConfig.seed)
    p.add_argument("--mixed-lists", action="store_true")
    args = p.parse_args()
    run(StressConfig(args.seeds, args.trees, args.max_tree, args.seed, args.mixed_lists))


if __name__ == "__main__":
    main()
