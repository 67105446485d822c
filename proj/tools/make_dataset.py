"""Writes the bundled benchmark graph: a seeded Holme-Kim power-law cluster graph.

Usage: python3 tools/make_dataset.py [out_path]
"""
import sys

import networkx as nx

NODES = 5242
EDGES_PER_NODE = 3
TRIANGLE_PROBABILITY = 0.3
SEED = 5242


def main() -> None:
    out = sys.argv[1] if len(sys.argv) > 1 else "data/plc5242.txt"
    graph = nx.powerlaw_cluster_graph(NODES, EDGES_PER_NODE, TRIANGLE_PROBABILITY, seed=SEED)
    with open(out, "w", encoding="ascii", newline="\n") as fh:
        fh.write(f"# powerlaw_cluster_graph n={NODES} m={EDGES_PER_NODE} p={TRIANGLE_PROBABILITY} seed={SEED}\n")
        fh.write(f"# nodes {graph.number_of_nodes()} edges {graph.number_of_edges()}\n")
        for u, v in sorted((min(a, b), max(a, b)) for a, b in graph.edges()):
            fh.write(f"{u} {v}\n")


if __name__ == "__main__":
    main()
