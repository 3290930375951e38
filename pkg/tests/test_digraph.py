import pytest
from hypothesis import given

from italdom.digraph import (
    MAX_ORDER,
    Digraph,
    add_arcs,
    complement_arcs,
    degrees,
    format_edge_list,
    max_underlying_degree,
    new_digraph,
    parse_edge_list,
    remove_arcs,
    underlying_connected,
    underlying_degree,
)
from italdom.errors import GuardError, ParseError

from .strategies import digraphs


def test_masks_mirror_each_other():
    d = new_digraph(4, [(0, 1), (0, 2), (3, 0), (2, 1)])
    assert d.out_neighbors(0) == [1, 2]
    assert d.in_neighbors(1) == [0, 2]
    assert d.in_neighbors(0) == [3]
    assert d.arcs() == [(0, 1), (0, 2), (2, 1), (3, 0)]
    assert d.size == 4
    assert d.max_out_degree == 2
    assert d.max_in_degree == 2


def test_two_cycle_counts_twice_in_underlying_degree():
    d = new_digraph(2, [(0, 1), (1, 0)])
    assert underlying_degree(d, 0) == 2
    assert max_underlying_degree(d) == 2


def test_degrees_record():
    deg = degrees(new_digraph(3, [(0, 1), (0, 2), (1, 2)]))
    assert deg.out == (2, 1, 0)
    assert deg.in_ == (0, 1, 2)
    assert (deg.max_out, deg.max_in) == (2, 2)


@pytest.mark.parametrize("arcs", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_bad_arcs_rejected(arcs):
    with pytest.raises(ValueError):
        new_digraph(3, arcs)


def test_order_guard():
    new_digraph(MAX_ORDER)
    with pytest.raises(GuardError):
        new_digraph(MAX_ORDER + 1)


def test_self_loop_in_masks_rejected():
    with pytest.raises(ValueError):
        Digraph(2, (0b01, 0))


def test_remove_and_add_require_presence():
    d = new_digraph(3, [(0, 1)])
    with pytest.raises(ValueError):
        remove_arcs(d, [(1, 0)])
    with pytest.raises(ValueError):
        add_arcs(d, [(0, 1)])
    assert remove_arcs(d, [(0, 1)]).size == 0
    assert add_arcs(d, [(1, 0)]).has_arc(1, 0)


def test_connectivity_ignores_direction():
    assert underlying_connected(new_digraph(3, [(0, 1), (2, 1)]))
    assert not underlying_connected(new_digraph(3, [(0, 1)]))
    assert underlying_connected(new_digraph(1))


@given(digraphs())
def test_complement_partitions_pairs(d):
    comp = list(complement_arcs(d))
    assert comp == sorted(comp)
    assert not set(comp) & set(d.arcs())
    assert len(comp) + d.size == d.order * (d.order - 1)


@given(digraphs())
def test_edge_list_round_trip(d):
    assert parse_edge_list(format_edge_list(d)) == d


def test_parse_comments_and_blank_lines():
    text = "# a triangle\n3 3\n0 1  # first\n\n1 2\n2 0\n"
    assert parse_edge_list(text).arcs() == [(0, 1), (1, 2), (2, 0)]


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3\n",
        "3 2\n0 1\n",
        "3 1\n0 1\n1 2\n",
        "3 2\n0 1\n0 1\n",
        "3 1\n0 x\n",
        "3 1\n0 3\n",
        "3 1\n1 1\n",
        "0 0\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)


def test_parse_guard():
    with pytest.raises(GuardError):
        parse_edge_list("65 0\n")
