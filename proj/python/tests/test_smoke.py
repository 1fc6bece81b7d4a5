import pytest

import ctcodes


def test_golay_parameters():
    g = ctcodes.named_code("G24")
    assert g.length == 24
    assert g.dimension == 12
    assert ctcodes.min_distance(g) == 8
    assert ctcodes.covering_radius(g) == 4
    w = ctcodes.weight_distribution(g)
    assert w[8] == 759 and w[12] == 2576


def test_build_from_rows():
    h = ctcodes.Code.linear(7, ["1101000", "0110100", "0011010", "0001101"], "ham")
    assert h.size == 16
    assert "1101000" in h
    assert ctcodes.covering_radius(h) == 1
    assert ctcodes.is_completely_regular(h)
    assert ctcodes.dual(h).dimension == 3


def test_round_trip_text():
    c = ctcodes.named_code("NR15")
    back = ctcodes.parse_code(ctcodes.format_code(c))
    assert back.same_words(c)
    with pytest.raises(ctcodes.CtcError):
        ctcodes.parse_code("m=3 kind=linear\n10x\n")


def test_complete_transitivity():
    c = ctcodes.named_code("G23")
    g = ctcodes.load_group("M23")
    assert g.preserves(c)
    v = ctcodes.verify_ct(c, g)
    assert v["verified"] and v["orbits_per_cell"] == [1, 1, 1, 1]


def test_neighbour_split():
    c = ctcodes.named_code("PD2uPD3")
    g = ctcodes.load_group("PSigmaL3(4)+xDelta")
    assert ctcodes.verify_nt(c, g, 2)["verified"]
    v = ctcodes.verify_nt(c, g, 3)
    assert not v["verified"] and v["split_cell"] == 3


def test_screens_and_graphs():
    assert all(s["pass"] for s in ctcodes.screens())
    cg = ctcodes.coset_graph(ctcodes.named_code("G23"))
    assert cg["distance_regular"] and cg["array"] == "{23,22,21;1,2,3}"
    assert ctcodes.size_obstruction(ctcodes.named_code("H")) == "no"


def test_design_check():
    d = ctcodes.design_check(ctcodes.named_code("G24"), 8, 5)
    assert d["is_design"] and d["lambda"] == 1 and d["blocks"] == 759


def test_group_order_is_exact():
    assert ctcodes.load_group("M24").order() == 244823040
