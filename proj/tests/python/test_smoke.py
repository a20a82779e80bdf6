import pytest

import skelex


def test_projective_plane():
    g = skelex.gen_nonorientable_surface(1)
    assert g.vertex_count == 4
    assert skelex.is_pure(g) and skelex.is_good(g)
    info = skelex.classify(g)
    assert info["name"] == "kP2(1)"
    assert info["betti_mod2"] == [1, 1, 1]


def test_round_trip():
    g = skelex.gen_orientable_surface(2)
    assert skelex.parse_graph(skelex.serialize_graph(g)) == g
    assert skelex.nest_counts(g) == [16, 24, 6]


def test_expand_hypercube():
    out = skelex.expand(skelex.gen_cube(3))
    assert out["complete"]
    assert out["cell_counts"] == [16, 32, 24, 8]


def test_prism_refused():
    out = skelex.expand(skelex.gen_prism(skelex.gen_nonorientable_surface(1)))
    assert not out["complete"]
    assert out["obstruction"] == "count-criterion"
    with pytest.raises(ValueError):
        skelex.classify(skelex.gen_prism(skelex.gen_nonorientable_surface(1)))


def test_duality_and_sums():
    assert skelex.isomorphic(skelex.sphere_dual(2), skelex.gen_cube(2))
    torus = skelex.dualize_simplices([[0, 1, 3], [0, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 5], [2, 4, 5], [3, 4, 6],
                                      [3, 5, 6], [0, 4, 5], [0, 4, 6], [1, 5, 6], [0, 1, 5], [0, 2, 6], [1, 2, 6]])
    assert skelex.classify(torus)["name"] == "gT2(1)"
    p = skelex.gen_nonorientable_surface(1)
    assert skelex.classify(skelex.connected_sum(p, 0, skelex.gen_nonorientable_surface(1), 0))["euler"] == 0


def test_census_and_realize():
    entries = skelex.census(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], 2)
    assert [e["name"] for e in entries] == ["kP2(1)"]
    assert skelex.realize(skelex.gen_nonorientable_surface(1))["bounding"] == "doubling required"


def test_errors():
    with pytest.raises(ValueError):
        skelex.parse_graph("{")
    g = skelex.ColoredGraph(2, 2, [(0, 1, "100"), (0, 1, "010")])
    assert skelex.validate(g)
