"""Chamber posets of small arrangements and the bineighborly test.

The prism arrangement ``x, y, x+y+z, x+y-z`` has a chamber with four walls;
from that base chamber the poset is not semidistributive, and the two pairs
of walls that fail to meet along the chamber are reported.
"""

from crosscut.arrangement import sign_string, witness_dict
from crosscut.catalog import PRISM_CHAMBER, braid, braid_fundamental, fig2, prism4, weak_order
from crosscut.checks import bineighborly_verdicts
from crosscut.poset import is_isomorphic

if __name__ == "__main__":
    A = fig2()
    print("three lines:", [sign_string(c) for c in A.chambers()])
    P = braid(4).chamber_poset(braid_fundamental(4))
    print("braid(4) chambers:", P.n, " weak order:", is_isomorphic(P, weak_order(4)))

    B = prism4()
    print("prism chamber walls:", [B.label(h) for h in B.walls(PRISM_CHAMBER)])
    for c0 in B.chambers():
        v = bineighborly_verdicts(B, c0)
        print(f"  base {sign_string(c0)}: {v}")
    for f in B.bineighborly_failures(PRISM_CHAMBER):
        if f[0] == PRISM_CHAMBER:
            print("  failing pair at ++++:", witness_dict(B, f)["walls"])
