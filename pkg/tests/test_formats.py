import random

import pytest

from hyperlap import ParseError, builtin_fixture, parse_cw, parse_hg, serialize
from hyperlap.model import HyperlapError
from hyperlap.random_instances import random_cw, random_hypergraph


def test_parse_minimal_hg():
    h = parse_hg("vertices 2\nedge a 1 2\n")
    assert h.n == 2
    assert h.edges == ((1, 2),)
    assert h.edge_labels == ("a",)


def test_parse_fig1_emission(fig1):
    h = parse_hg(serialize(fig1))
    assert h.n == 4 and h.m == 9


def test_hg_vertex_out_of_range_names_line():
    with pytest.raises(ParseError, match="line 2"):
        parse_hg("vertices 4\nedge a 1 5\n")


def test_hg_duplicate_vertex_in_edge():
    with pytest.raises(ParseError, match="duplicate vertex"):
        parse_hg("vertices 3\nedge a 1 1\n")


def test_hg_duplicate_edge_name():
    with pytest.raises(ParseError, match="duplicate edge name"):
        parse_hg("vertices 3\nedge a 1 2\nedge a 2 3\n")


def test_hg_unknown_keyword():
    with pytest.raises(ParseError, match="unknown keyword"):
        parse_hg("vertices 2\nfrob 1\n")


def test_hg_comments_and_crlf():
    h = parse_hg("# header\r\nvertices 2\r\nedge a 1 2  # trailing\r\n")
    assert h.edges == ((1, 2),)


def test_parse_minimal_cw():
    x = parse_cw("cells 0 2\ncells 1 1\ninc 0 1 1 +1\ninc 0 2 1 -1\n")
    assert x.counts == (2, 1)
    assert x.incidences == (((1, 1, 1), (2, 1, -1)),)


def test_cw_fig2_counts(fig2):
    x = parse_cw(serialize(fig2))
    assert x.counts == (4, 6, 3)
    assert len(x.incidences[0]) == 12
    assert len(x.incidences[1]) == 9


def test_cw_bad_sign_token():
    with pytest.raises(ParseError, match="sign"):
        parse_cw("cells 0 2\ncells 1 6\ninc 0 1 1 0\n")


def test_cw_duplicate_incidence():
    with pytest.raises(ParseError, match="duplicate"):
        parse_cw("cells 0 2\ncells 1 1\ninc 0 1 1 +1\ninc 0 1 1 -1\n")


def test_cw_index_out_of_range():
    with pytest.raises(ParseError, match="out of range"):
        parse_cw("cells 0 2\ncells 1 1\ninc 0 3 1 +1\n")


def test_cw_dimensions_must_ascend():
    with pytest.raises(ParseError, match="ascend"):
        parse_cw("cells 1 2\n")


def test_serialize_empty_hypergraph():
    from hyperlap.model import Hypergraph

    assert serialize(Hypergraph(n=1, edges=())) == "vertices 1\n"


def test_round_trip_fixtures(fig1, fig2):
    assert parse_hg(serialize(fig1)) == fig1
    assert parse_cw(serialize(fig2)) == fig2


def test_round_trip_random_instances():
    rng = random.Random(77)
    for _ in range(100):
        h = random_hypergraph(rng)
        assert parse_hg(serialize(h)) == h
    for _ in range(100):
        x = random_cw(rng)
        assert parse_cw(serialize(x)) == x


def test_fixture_fig1_shape(fig1):
    assert fig1.m == 9
    assert sorted(len(e) for e in fig1.edges) == [2] * 6 + [3] * 3


def test_fixture_fig2_published_sign(fig2):
    assert fig2.sign_table(1)[(6, 1)] == -1


def test_unknown_fixture():
    with pytest.raises(HyperlapError, match="unknown fixture"):
        builtin_fixture("fig3")
