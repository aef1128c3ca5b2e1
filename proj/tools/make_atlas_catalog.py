#!/usr/bin/env python3
"""Write connected<n>.g6 for n = 1..7 from the networkx graph atlas.

The atlas lists every graph on at most 7 vertices up to isomorphism. For
larger orders use nauty: geng -c <n> > connected<n>.g6
"""
import argparse
import pathlib

import networkx as nx


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("out", type=pathlib.Path, help="output directory")
    ap.add_argument("--max-order", type=int, default=7, choices=range(1, 8))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    by_order = {n: [] for n in range(1, args.max_order + 1)}
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if 1 <= n <= args.max_order and nx.is_connected(g):
            by_order[n].append(nx.to_graph6_bytes(g, header=False).decode().strip())
    for n, lines in by_order.items():
        (args.out / f"connected{n}.g6").write_text("".join(line + "\n" for line in lines))
        print(f"connected{n}.g6: {len(lines)} graphs")


if __name__ == "__main__":
    main()
