import itertools

import pytest

import robustgraph as rg


def test_triangle_on_k3():
    g = rg.UndirectedGraph(3, [(0, 1), (1, 2), (2, 0)])
    result = rg.find_triangle_udg(g)
    assert result["outcome"] == "Triangle"
    assert result["witness"] == [0, 1, 2]
    assert result["counters"]["pair_tests"] >= 1


def test_star_is_rejected_with_witness():
    result = rg.find_triangle_udg(rg.star_graph(7))
    assert result["outcome"] == "NotInDomain"
    assert result["reason"] == "HighDegreeNoTriangle"
    assert result["witness"] == list(range(8))


def test_girth_of_c5_and_petersen():
    c5 = rg.UndirectedGraph(5, [(i, (i + 1) % 5) for i in range(5)])
    result = rg.girth_udg(c5)
    assert result["outcome"] == "Girth"
    assert result["girth"] == 5
    assert sorted(result["witness"]) == [0, 1, 2, 3, 4]

    petersen = rg.girth_udg(rg.petersen_graph())
    assert petersen["reason"] == "NonPlanarTriangleFree"
    assert petersen["planarity"] == "LeftRightConflict"


def test_directed_fixtures():
    assert rg.find_directed_triangle(rg.directed_cycle(3))["reason"] == "UniSubgraphCyclic"
    assert rg.find_directed_triangle(rg.bidirected_star(7))["reason"] == "HighBiDegreeNoTriangle"
    single = rg.DirectedGraph(2, [(0, 1)])
    assert rg.find_directed_triangle(single)["outcome"] == "TriangleFree"


def test_generated_graphs_agree_with_oracles():
    sites = rg.random_sites(400, 10.0, seed=42)
    assert len(sites) == 400
    g = rg.unit_disk_graph(sites)
    result = rg.find_triangle_udg(g)
    assert result["outcome"] != "NotInDomain"
    assert (result["outcome"] == "Triangle") == (rg.brute_triangle(g) is not None)

    girth = rg.girth_udg(g)
    assert girth.get("girth") == rg.brute_girth(g)

    tg_sites = rg.random_sites(300, 8.0, rmin=0.5, rmax=2.0, seed=7)
    d = rg.transmission_graph(tg_sites)
    tri = rg.find_directed_triangle(d)
    assert tri["outcome"] != "NotInDomain"
    assert (tri["outcome"] == "Triangle") == (rg.brute_directed_triangle(d) is not None)


def test_planarity():
    k5 = rg.UndirectedGraph(5, list(itertools.combinations(range(5), 2)))
    k4 = rg.UndirectedGraph(4, list(itertools.combinations(range(4), 2)))
    assert not rg.is_planar(k5)
    assert rg.is_planar(k4)


def test_errors_surface_as_value_errors():
    with pytest.raises(rg.GraphError):
        rg.UndirectedGraph(2, [(0, 0)])
    with pytest.raises(ValueError):
        rg.UndirectedGraph(2, [(0, 1), (1, 0)])
    with pytest.raises(rg.NonUnitRadiusError):
        rg.unit_disk_graph([(0.0, 0.0, 1.0), (1.0, 0.0, 2.0)])
    with pytest.raises(ValueError):
        rg.directed_cycle(2)
    with pytest.raises(ValueError):
        rg.star_graph(3).neighbors(9)
