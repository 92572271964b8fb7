"""Search for SB-labellings: found for Boolean and Tamari lattices, none for M3."""

from crosscut.catalog import boolean, fig3, fig3_labelling, m3, tamari
from crosscut.labelling import SB, SB_PRIME, sb_violation, search_sb

if __name__ == "__main__":
    for name, L in (("B3", boolean(3)), ("Tamari(4)", tamari(4)), ("M3", m3())):
        lab = search_sb(L, 3)
        print(f"{name}: SB-labelling with <= 3 labels", "found" if lab else "does not exist")
    L = fig3()
    lab = fig3_labelling(L)
    print("three-style labelling, SB':", sb_violation(L, lab, SB_PRIME) is None)
    v = sb_violation(L, lab, SB)
    print("three-style labelling, SB:", v is None, v.as_dict(L) if v else "")
