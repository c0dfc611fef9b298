#!/usr/bin/env python3
"""Tour of the invariant engine on two classic total genus 3 graphs.

Builds the complete graph on four vertices and a weighted theta graph by
hand, prints every invariant exactly, and confirms the two linear relations
that tie lambda, phi, epsilon, Z and the total length together.
"""

from fractions import Fraction

from pmgraph import PmGraph, graph_to_text, invariant_set


def banner(text):
    print()
    print(text)
    print("-" * len(text))


def show(g):
    inv = invariant_set(g)
    print(f"ell     = {inv.ell}")
    print(f"g       = {inv.g}   gbar = {inv.gbar}")
    print(f"tau     = {inv.tau}")
    print(f"theta   = {inv.theta}")
    print(f"delta   = " + ", ".join(f"delta{i}={v}" for i, v in sorted(inv.delta.items())))
    print(f"phi     = {inv.phi}")
    print(f"lambda  = {inv.lam}")
    print(f"epsilon = {inv.epsilon}")
    print(f"Z       = {inv.z}")
    assert inv.lam == inv.phi / 21 + (inv.epsilon + inv.ell) / 12
    assert inv.phi == 9 * inv.z - (inv.epsilon + inv.ell) / 4
    print("cross identities hold exactly")
    return inv


banner("tetrahedron, all edge lengths 1")
k4 = PmGraph.build(
    ["1", "2", "3", "4"],
    [
        ("a", "1", "2", 1),
        ("b", "1", "3", 1),
        ("c", "1", "4", 1),
        ("d", "2", "3", 1),
        ("e", "2", "4", 1),
        ("f", "3", "4", 1),
    ],
)
inv = show(k4)
assert inv.tau == Fraction(5, 16)
assert inv.phi == Fraction(17, 48)

banner("theta graph with a weighted vertex")
# two vertices joined by three parallel edges; q = 1 at one end lifts gbar to 3
theta = PmGraph.build(
    [("P", 1), ("S", 0)],
    [("a", "P", "S", Fraction(1, 2)), ("b", "P", "S", 2), ("c", "P", "S", Fraction(3, 4))],
)
show(theta)

banner("the same graph as a text file")
print(graph_to_text(theta), end="")
