#!/usr/bin/env python3
"""Evaluate every genus 3 catalog family at unit lengths.

Prints one row per family with the headline ratios phi/ell, lambda/ell and
epsilon/ell, then cross-checks each row against the independent engine and
points out where the smallest phi/ell in the table occurs.
"""

from fractions import Fraction

from pmgraph import closed_form, cross_check, family, list_families

g3 = [fid for fid in list_families() if fid.startswith("g3.")]

print(f"{'family':8} {'params':28} {'phi/ell':>8} {'lambda/ell':>10} {'eps/ell':>8}")
rows = []
for fid in g3:
    spec = family(fid)
    ones = {name: Fraction(1) for name in spec.params}
    inv = closed_form(fid, ones)
    rows.append((fid, inv))
    print(
        f"{fid:8} {','.join(spec.params):28}"
        f" {str(inv.phi / inv.ell):>8} {str(inv.lam / inv.ell):>10}"
        f" {str(inv.epsilon / inv.ell):>8}"
    )

low_fid, low = min(rows, key=lambda row: row[1].phi / row[1].ell)
print()
print(f"smallest phi/ell at unit lengths: {low.phi / low.ell} on {low_fid}")
assert low_fid == "g3.XIV" and low.phi / low.ell == Fraction(17, 288)
print("which is exactly the global sharp floor 17/288")

print()
print("cross-checking every row against the engine...")
for fid, _ in rows:
    spec = family(fid)
    report = cross_check(fid, {name: Fraction(1) for name in spec.params})
    assert report.passed, (fid, report.mismatches)
print(f"all {len(rows)} rows agree exactly")
