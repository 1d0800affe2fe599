import json

import pytest

pisgenus = pytest.importorskip("pisgenus")


def test_ring_order_and_spec():
    assert pisgenus.ring_order("Z/16 x Z/4") == 64
    assert pisgenus.canonical_spec("Z/16xZ/4") == "Z/16 x Z/4"


def test_bad_spec_raises():
    with pytest.raises(Exception, match="prime power"):
        pisgenus.ring_order("Z/12")


def test_genus_formulas():
    assert pisgenus.kn_genus(7) == 1
    assert pisgenus.kmn_genus(5, 5) == 3


def test_ideal_lattice():
    lat = pisgenus.ideal_lattice("Z/16")
    assert len(lat["ideals"]) == 5
    labels = [i["label"] for i in lat["ideals"]]
    assert "(2)" in labels and "(8)" in labels


def test_pis_graph():
    g = pisgenus.pis_graph("Z/4 x Z/4")
    assert len(g["vertices"]) == 7
    assert len(g["edges"]) == 12


def test_genus_bounds_k5():
    g = {"vertices": [str(i) for i in range(5)],
         "edges": [[i, j] for i in range(5) for j in range(i + 1, 5)]}
    b = pisgenus.genus_bounds(g)
    assert b["lower"] == 1
    assert b["upper"] == 1


def test_find_subdivision():
    gj = pisgenus.pis_graph_json("Z/8 x Z/4")
    w = pisgenus.find_subdivision(gj, "K3,3")
    assert w is not None
    assert w["genus"] == 1
    assert len(w["paths"]) == 9


def test_verify_planar_ring():
    rep = pisgenus.verify("GF(2) x Z/8")
    assert rep["predicted"] == "Planar"
    assert rep["verdict"] == "confirmed"
    assert rep["lower"] == 0 and rep["upper"] == 0


def test_certificate_roundtrip():
    rep = pisgenus.verify("Z/4 x Z/4")
    ok, message = pisgenus.verify_certificate(
        json.dumps(rep["graph"]), json.dumps(rep["certificate"]))
    assert ok, message


def test_predict_class():
    assert pisgenus.predict_class("Z/16 x Z/4") == "Two"
    assert pisgenus.predict_class("Z/8 x Z/4") == "One"
