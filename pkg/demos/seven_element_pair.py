"""Two seven-element lattices: one crosscut-simplicial, one not.

Run with ``python demos/seven_element_pair.py``.
"""

from crosscut.catalog import fig1_left, fig1_right
from crosscut.lattice import crosscut_simplicial_violation, is_join_semidistributive, meet_sd_violation


def show(name, L):
    gamma = L.crosscut_complex()
    print(f"{name}: {L.n} elements, atoms {[L.names[a] for a in L.atoms()]}")
    print("  crosscut complex of [0, 1]:", gamma.to_json(L.name_of)["facets"])
    print("  reduced Euler characteristic:", gamma.reduced_euler(), " mu(0, 1):", L.mobius("0", "1"))
    w = crosscut_simplicial_violation(L)
    print("  crosscut-simplicial:", w is None, "" if w is None else w.as_dict(L))


if __name__ == "__main__":
    show("left", fig1_left())
    R = fig1_right()
    show("right", R)
    print("  right is join-semidistributive:", is_join_semidistributive(R))
    print("  right breaks meet-semidistributivity at", meet_sd_violation(R).as_dict(R)["triple"])
