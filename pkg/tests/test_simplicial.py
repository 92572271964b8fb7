import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crosscut.catalog import hexagon
from crosscut.errors import GroundSetOverlap, InvalidInput, NotAFace, TooLarge
from crosscut.simplicial import SimplicialComplex, find_isomorphism, isomorphic, join

S = SimplicialComplex


def path():
    return S("amb", [("a", "m"), ("m", "b")])


def points(*vs):
    return S(vs, [[v] for v in vs])


def test_void_and_empty_face_differ():
    assert S.void().dim == -2
    assert S([], [[]]).dim == -1
    assert S.void().reduced_euler() == 0
    assert S([], [[]]).reduced_euler() == -1


def test_face_outside_ground_set_rejected():
    with pytest.raises(InvalidInput):
        S("ab", ["abc"])


def test_facets_are_maximal_faces():
    c = S("abc", ["ab", "a", "bc", "b"])
    assert c.facets == {frozenset("ab"), frozenset("bc")}
    assert "a" in c.ground and frozenset("ac") not in c.faces


def test_link_of_vertex_in_triangle_boundary():
    tri = S.boundary("uvw")
    lk = tri.link(["u"])
    assert isomorphic(lk, points(1, 2))


def test_star_is_a_cone():
    tri = S.boundary("uvw")
    for v in "uvw":
        assert tri.star([v]).reduced_euler() == 0


def test_deletion_from_full_simplex():
    assert S.simplex("uvw").deletion(["v"]) == S.simplex("uw")


def test_operations_need_faces():
    with pytest.raises(NotAFace):
        path().link(["a", "b"])


def test_join_of_two_point_pairs_is_square():
    sq = join(points("a", "b"), points("c", "d"))
    assert sq.f_vector() == [1, 4, 4]
    assert sq.reduced_euler() == -1
    assert sq.betti_rational() == [0, 1]


def test_join_needs_disjoint_grounds():
    with pytest.raises(GroundSetOverlap):
        join(points("a"), points("a"))


def test_suspension_of_two_points_is_circle():
    s1 = points("a", "b").suspension("n", "s")
    assert s1.f_vector() == [1, 4, 4]
    assert isomorphic(s1, join(points(1, 2), points(3, 4)))


def test_shape_recognition():
    assert S.simplex("ab").is_full_simplex()
    assert S.boundary("abc").is_simplex_boundary()
    p = path()
    assert not p.is_simplex_boundary()
    assert p.is_pure(1)
    assert not S("abc", ["ab", "c"]).is_pure()


def test_euler_and_betti():
    sphere = S.boundary("abcd")
    assert sphere.reduced_euler() == 1
    assert sphere.betti_rational() == [0, 0, 1]
    two = points("a", "b")
    assert two.reduced_euler() == 1
    assert two.betti_rational() == [1]
    assert path().reduced_euler() == 0
    assert path().betti_rational() == [0, 0]


def test_isomorphism_examples():
    assert isomorphic(S.simplex("abc"), S.simplex([1, 2, 3]))
    assert not isomorphic(path(), points(1, 2, 3))
    L = hexagon()
    assert isomorphic(L.crosscut_complex(), points("n", "s"))


def test_isomorphism_returns_vertex_map():
    f = find_isomorphism(path(), S("xyz", [("x", "y"), ("z", "y")]))
    assert f["m"] == "y"


def test_isomorphism_bound():
    big = S.simplex(range(20))
    with pytest.raises(TooLarge):
        isomorphic(big, big)
    assert isomorphic(big, big, max_vertices=20)


def test_json_round_trip():
    c = S("abcd", ["abc", "cd"])
    assert S.from_json(c.to_json()) == c


# -- random complexes -------------------------------------------------------


@st.composite
def complexes(draw, max_vertices=5):
    n = draw(st.integers(1, max_vertices))
    verts = list(range(n))
    faces = draw(st.lists(st.sets(st.sampled_from(verts), min_size=1), min_size=1, max_size=5))
    return S(verts, faces)


def _closed(c):
    return all(frozenset(g) in c.faces for f in c.faces for g in [f - {v} for v in f])


def _shift(c, k):
    return c.relabel({v: v + k for v in c.vertices})


@settings(max_examples=60, deadline=None)
@given(complexes())
def test_operations_stay_downward_closed(c):
    f = max(c.facets, key=len)
    v = next(iter(f))
    for sub in (c.deletion([v]), c.star([v]), c.link([v]), c.induced(list(c.vertices)[:2])):
        assert _closed(sub)


@settings(max_examples=60, deadline=None)
@given(complexes(4), complexes(4))
def test_join_multiplies_reduced_euler(a, b):
    b = _shift(b, 10)
    assert join(a, b).reduced_euler() == -a.reduced_euler() * b.reduced_euler()


@settings(max_examples=60, deadline=None)
@given(complexes())
def test_cone_and_suspension(c):
    assert c.cone("apex").reduced_euler() == 0
    assert c.suspension("n", "s").reduced_euler() == -c.reduced_euler()


@settings(max_examples=60, deadline=None)
@given(complexes())
def test_betti_numbers_sum_to_euler(c):
    if c.dim >= 0:
        betti = c.betti_rational()
        assert sum((-1) ** d * b for d, b in enumerate(betti)) == c.reduced_euler()


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6))
def test_simplex_boundary_is_a_sphere(n):
    c = S.boundary(range(n))
    assert c.is_simplex_boundary()
    # boundary of an (n-1)-simplex is a sphere of dimension n-2
    assert c.reduced_euler() == (-1) ** n
    if n >= 2:
        betti = c.betti_rational()
        assert betti == [0] * (n - 2) + [1]
