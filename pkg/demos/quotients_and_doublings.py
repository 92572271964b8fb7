"""Congruences, quotients and doublings on small lattices."""

from crosscut.catalog import fig6_doublings, fig6_final, hexagon, n5
from crosscut.congruence import all_congruences, is_congruence_normal, principal_congruence, quotient
from crosscut.doubling import classify_doubled_interval, double, doubled_crosscut
from crosscut.lattice import is_crosscut_simplicial
from crosscut.poset import is_isomorphic
from crosscut.simplicial import isomorphic

if __name__ == "__main__":
    H = hexagon()
    theta = principal_congruence(H, "a", "A")
    Q, _ = quotient(H, theta)
    print("hexagon / Cg(a, A):", theta.to_json()["blocks"], " is N5:", is_isomorphic(Q, n5()))
    print("congruences of N5:", [c.to_json()["blocks"] for c in all_congruences(n5())])

    D = double(H, ["a"])
    M = D.lattice
    cases = {}
    for lo in range(M.n):
        for hi in range(M.n):
            if M.lt(lo, hi):
                case = classify_doubled_interval(D, lo, hi)
                assert isomorphic(doubled_crosscut(D, lo, hi), case.predicted)
                cases[case.case] = cases.get(case.case, 0) + 1
    print("hexagon doubled at {a}:", M.n, "elements; intervals per case", dict(sorted(cases.items())))

    seq = fig6_doublings()
    print("doubling sequence sizes:", [L.n for L in seq])
    print("  congruence-normal at every step:", all(is_congruence_normal(L) for L in seq))
    print("  final lattice matches:", is_isomorphic(seq[-1], fig6_final()),
          " crosscut-simplicial:", is_crosscut_simplicial(seq[-1]))
