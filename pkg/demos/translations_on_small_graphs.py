#!/usr/bin/env python3
"""Tour of exact translations on small graphs.

Enumerates every translation of a few toy graphs, shows the loss spectrum,
and picks out the minimal ones.
"""

from collections import Counter

from graph_shift import (
    EnumerationFilter,
    enumerate_translations,
    make_complete,
    make_grid,
    make_ring,
    minimal_translations,
    pseudo_minimal_translations,
)


def census(name, g):
    ts = enumerate_translations(g)
    print(f"{name}: {len(ts)} translations")
    print("  loss spectrum:", dict(sorted(Counter(m.loss() for m in ts).items())))
    mins = minimal_translations(g, ts)
    print("  minimal:", len(mins), "at loss", sorted({m.loss() for m in mins}))
    pseudo = pseudo_minimal_translations(g, ts)
    print("  pseudo-minimal:", len(pseudo))
    print()


def main():
    census("K3", make_complete(3))
    census("K4", make_complete(4))
    census("ring of 6", make_ring(6))
    census("3x3 grid", make_grid([3, 3]))

    g = make_grid([3, 3])
    for m in enumerate_translations(g, EnumerationFilter(max_loss=1)):
        print("3x3 grid, loss-1 witness (outer ring rotates, center drops):")
        print("  ", m)


if __name__ == "__main__":
    main()
