"""Derive generators for the degree-12 transitive action of M11 and write
them to src/socodes/data/m11_12.grp.

M11 has a single conjugacy class of index-12 subgroups, isomorphic to
PSL(2,11) of order 660.  Any order-11 element x lies in exactly one such
subgroup; scanning involutions y until |<x, y>| = 660 finds it.  The coset
action of M11 on that subgroup is the degree-12 representation, with the
standard generators mapped through generator-wise.

Run from the repository root:  python scripts/derive_m11_degree12.py
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from socodes.groups import PermGroup, Perm, OrderExceedsCap, save_group
from socodes.m11 import m11_natural


def main():
    G = m11_natural()
    assert G.order == 7920

    x = next(g for g in G.elements if g.order() == 11)
    involutions = [g for g in G.elements if g.order() == 2]
    print(f"order-11 element: {x}")
    print(f"{len(involutions)} involutions to scan")

    H = None
    hits = 0
    for y in involutions:
        cand = PermGroup(11, [x, y])
        try:
            cand.enumerate(cap=660)
        except OrderExceedsCap:
            continue
        if cand.order == 660:
            hits += 1
            if H is None:
                H = cand
    print(f"involutions generating an order-660 subgroup with x: {hits}")
    assert H is not None

    A = G.coset_action(H)
    assert A.degree == 12
    assert A.is_transitive()
    assert A.order == 7920
    inv12 = next(g for g in A.elements if g.order() == 2)
    print(f"degree-12 action: order {A.order}, involution cycle type {inv12.cycle_type()}")

    out = Path(__file__).resolve().parent.parent / "src" / "socodes" / "data" / "m11_12.grp"
    save_group(out, A, comment="Mathieu group M11, coset action on a PSL(2,11) subgroup, degree 12")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
