#!/usr/bin/env python3
"""Print the catalog of distance-hereditary obstructions with their stats.

For each member: graph6 string, order, exact linear rank-width, split-tree
degrees, and whether it is the Net or the octahedron.
"""

from lrw1 import oracle
from lrw1.dh import pruning_sequence
from lrw1.graph import is_isomorphic_small, to_graph6
from lrw1.named import net_graph, octahedron_graph
from lrw1.recognizer import dh_obstruction_catalog
from lrw1.splitdec import canonical_decomposition_dh, split_tree


def main() -> None:
    for idx, g in enumerate(dh_obstruction_catalog()):
        tree = split_tree(canonical_decomposition_dh(g, pruning_sequence(g)))
        degrees = sorted(tree.degree(n.id) for n in tree.nodes)
        tag = ""
        if is_isomorphic_small(g, net_graph()):
            tag = "  (Net)"
        elif is_isomorphic_small(g, octahedron_graph()):
            tag = "  (octahedron)"
        print(
            f"[{idx:2d}] {to_graph6(g):<10} n={g.n} m={g.edge_count():2d} "
            f"lrw={oracle.brute_lrw(g)} tree-degrees={degrees}{tag}"
        )


if __name__ == "__main__":
    main()
