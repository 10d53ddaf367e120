#!/usr/bin/env python3
"""Benchmark: compiled counting kernel vs the pure-Python twin.

Runs identical workloads through both backends and prints a table.  The
compiled kernel is the one the dispatcher uses whenever masks fit in 64 bits
and counts fit in int64; the pure twin is the fallback and the reference.

Usage: python3 benchmarks/bench_kernels.py
"""

import time

from homvec import enumerate_graphs, fractional_pair
from homvec.homcount import _search_order
from homvec.kernels import MODE_HOM, MODE_ISO, MODE_SUR, compiled, pure


def _instances():
    five = enumerate_graphs(5)
    six = enumerate_graphs(6)
    g4, h4 = fractional_pair(4)

    hom_pairs = [(g, h) for g in five for h in five]
    sur_pairs = [(g, h) for g in enumerate_graphs(4) for h in enumerate_graphs(4)]
    iso_graphs = six[::5]
    dense_pairs = [(h4, d) for d in six if d.n == 6][-40:]

    return [
        ("hom 52x52 types<=5", MODE_HOM, hom_pairs),
        ("sur 18x18 types<=4", MODE_SUR, sur_pairs),
        ("aut sample types<=6", MODE_ISO, [(g, g) for g in iso_graphs]),
        ("hom 8-vertex pattern -> 6-vertex targets", MODE_HOM, dense_pairs),
    ]


def _run(backend, mode, pairs):
    total = 0
    for g, h in pairs:
        total += backend.count_maps(g.n, list(g.masks), _search_order(g), h.n, list(h.masks), mode)
    return total


def main():
    workloads = _instances()
    backends = [("pure", pure)]
    if compiled is not None:
        backends.append(("c", compiled))
    else:
        print("note: compiled kernel not built; timing pure backend only")

    width = max(len(name) for name, _, _ in workloads)
    print(f"{'workload'.ljust(width)}  {'backend':7}  {'seconds':>9}  checksum")
    baselines = {}
    for name, mode, pairs in workloads:
        for label, backend in backends:
            start = time.perf_counter()
            total = _run(backend, mode, pairs)
            elapsed = time.perf_counter() - start
            baselines.setdefault(name, total)
            if baselines[name] != total:
                raise SystemExit(f"backend disagreement on {name}: {baselines[name]} vs {total}")
            print(f"{name.ljust(width)}  {label:7}  {elapsed:9.4f}  {total}")
    print("checksums agree across backends")


if __name__ == "__main__":
    main()
