#!/usr/bin/env python3
"""Effective resistance and the bridge classification behind delta.

A graph is a resistor network: each edge conducts with resistance equal to
its length.  The script prints an exact resistance matrix, then shows how
the engine tells bridges apart from cycle edges (a bridge is exactly an
edge whose endpoints have resistance equal to its length) and how the
bridge sides determine the type index.
"""

from fractions import Fraction

from pmgraph import PmGraph, classify_edges, delta, resistance_matrix

# a 4-cycle with a pendant triangle hung off one corner through a bridge
g = PmGraph.build(
    [("a", 0), ("b", 0), ("c", 0), ("d", 0), ("x", 1), ("y", 0), ("z", 0)],
    [
        ("c1", "a", "b", 1),
        ("c2", "b", "c", 2),
        ("c3", "c", "d", 1),
        ("c4", "d", "a", 2),
        ("br", "a", "x", Fraction(5, 2)),
        ("t1", "x", "y", 1),
        ("t2", "y", "z", 1),
        ("t3", "z", "x", 1),
    ],
)

rm = resistance_matrix(g)
width = max(len(str(rm.get(p, s))) for p in rm.order for s in rm.order)
print("resistance matrix (exact):")
print("      " + "  ".join(f"{v:>{width}}" for v in rm.order))
for p in rm.order:
    row = "  ".join(f"{str(rm.get(p, s)):>{width}}" for s in rm.order)
    print(f"  {p:>3} {row}")

print()
print("edge classification:")
for edge in g.edges:
    info = classify_edges(g)[edge.id]
    r = rm.get(edge.u, edge.v) if edge.u != edge.v else Fraction(0)
    tag = "bridge" if info.is_bridge else "cycle edge"
    print(
        f"  {edge.id:3} length {str(edge.length):>4}  r(endpoints) {str(r):>5}"
        f"  {tag:10} type {info.type_index}"
        + (f"  sides {info.side_genera}" if info.side_genera else "")
    )
    # the resistance test characterizes bridges
    assert info.is_bridge == (edge.u != edge.v and r == edge.length)

print()
d = delta(g)
print("delta by type: " + ", ".join(f"delta{i} = {v}" for i, v in sorted(d.items())))
assert sum(d.values()) == g.total_length
print("the types partition the total length", g.total_length)
