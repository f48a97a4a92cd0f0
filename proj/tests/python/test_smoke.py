import pytest

import crossfree as cf

WORKED = "12;{1,6},{2,3},{4,12},{5,10},{7,8},{9},{11}"
REDUCED = "8;{1,5,6},{2,3,8},{4,7}"


def test_diagram_roundtrip():
    d = cf.parse_diagram(WORKED)
    assert str(d) == WORKED
    assert d.ground_size == 12
    assert d.arcs[0] == (1, 6)
    assert d.role(9) == "singleton"
    assert d == cf.Diagram.from_blocks(12, d.blocks())


def test_alpha_and_inverse():
    m = cf.parse_diagram(WORKED)
    x = cf.alpha(m)
    assert x == [0, 1, 1, 2, 0, 2, 1, 0]
    seq, osets = cf.alpha_trace(m)
    assert seq == x and osets[4] == [1, 2]
    assert cf.alpha_inv(x) == m


def test_reduce_expand():
    m = cf.parse_diagram(WORKED)
    p = cf.reduce(m)
    assert str(p) == REDUCED
    assert cf.expand(p) == m
    assert cf.count_statistic(m, "neighbor_alignments") == cf.count_statistic(p, "transients") == 2


def test_counts_agree_with_series():
    gf = cf.gf_coefficients(6)
    assert gf[3] == [1, 6, 6, 1]
    for n in range(1, 7):
        for cls in ("P", "S", "CT"):
            assert cf.count_row(cls, n) == gf[n - 1]


def test_patterns():
    d = cf.parse_diagram("4;{1,3},{2,4}")
    assert not cf.avoids(d, ["right-crossing"])
    assert cf.find_patterns(d, "crossing") == [((1, 3), (2, 4))]
    assert cf.matches((1, 4), (2, 3), "right-nesting")


def test_enumerate_and_verify():
    assert [cf.format_sequence(x) for x in cf.enumerate("S", 3, 1)] == ["0,0,1", "0,1,0", "0,1,1"]
    assert [str(d) for d in cf.enumerate("CT", 2, 1)] == ["2;{1,2}"]
    cells = cf.verify(max_n=6, workers=2)
    assert len(cells) == 21 and all(c["ok"] for c in cells)


def test_errors():
    with pytest.raises(cf.NotInClassError):
        cf.alpha(cf.parse_diagram("4;{1,3},{2,4}"))
    with pytest.raises(ValueError):
        cf.parse_diagram("3;{1,2")
    with pytest.raises(ValueError):
        cf.count("Q", 3, 0)


def test_big_coefficients_are_python_ints():
    row = cf.gf_coefficients(40)[-1]
    assert all(isinstance(c, int) for c in row)
    assert sum(row) > 2**64
