import pytest
from hypothesis import given
from hypothesis import strategies as st

from italdom.errors import GuardError, ParseError
from italdom.families import (
    FamilySpec,
    all_pairs,
    associated_digraph,
    build_family,
    complete_bipartite_digraph,
    complete_digraph,
    corona,
    digraph_from_mask,
    directed_cycle,
    directed_path,
    empty_digraph,
    enumerate_all,
    join_oneway,
    join_twoway,
    parse_family,
    random_digraph,
)


def test_path_and_cycle():
    assert directed_path(4).arcs() == [(0, 1), (1, 2), (2, 3)]
    assert directed_cycle(3).arcs() == [(0, 1), (1, 2), (2, 0)]


def test_complete_and_empty():
    assert complete_digraph(4).size == 12
    assert empty_digraph(5).size == 0


def test_complete_bipartite_sides():
    d = complete_bipartite_digraph(2, 3)
    assert d.size == 12
    assert d.out_neighbors(0) == [2, 3, 4]
    assert d.out_neighbors(4) == [0, 1]


def test_associated_doubles_edges():
    d = associated_digraph([(0, 1), (1, 2)], 3)
    assert d.arcs() == [(0, 1), (1, 0), (1, 2), (2, 1)]


def test_joins():
    g, h = directed_path(2), empty_digraph(2)
    one = join_oneway(g, h)
    assert one.arcs() == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]
    two = join_twoway(g, h)
    assert two.size == 1 + 2 * 4
    assert two.has_arc(3, 1)


def test_corona_keeps_copy_arcs():
    g, h = directed_path(2), directed_path(2)
    c = corona(g, h)
    # 2 centers, then copy of H for center 0 at 2..3 and for center 1 at 4..5
    assert c.order == 6
    assert set(c.arcs()) == {(0, 1), (0, 2), (0, 3), (2, 3), (1, 4), (1, 5), (4, 5)}


def test_random_is_seeded():
    assert random_digraph(6, 0.4, 7) == random_digraph(6, 0.4, 7)
    assert random_digraph(6, 0.0, 1).size == 0
    assert random_digraph(6, 1.0, 1).size == 30


def test_enumeration_counts_and_order():
    assert sum(1 for _ in enumerate_all(3)) == 64
    ds = list(enumerate_all(3))
    assert ds[5] == digraph_from_mask(3, 5)
    assert len(all_pairs(4)) == 12
    with pytest.raises(GuardError):
        next(enumerate_all(6))


@pytest.mark.parametrize(
    "text, order, size",
    [
        ("path:5", 5, 4),
        ("cycle:6", 6, 6),
        ("complete:4", 4, 12),
        ("kbip:3,5", 8, 30),
        ("empty:3", 3, 0),
        ("assoc:3,0-1,1-2", 3, 4),
        ("corona:(empty:2),(empty:2)", 6, 4),
        ("join1:(path:2),(path:2)", 4, 6),
        ("join2:(path:2),(empty:1)", 3, 5),
        ("random:6,0.4,42", 6, None),
    ],
)
def test_family_text(text, order, size):
    d = build_family(text)
    assert d.order == order
    if size is not None:
        assert d.size == size
    spec = parse_family(text)
    assert parse_family(str(spec)) == spec


@pytest.mark.parametrize(
    "text",
    ["", "path", "path:", "path:x", "nosuch:3", "kbip:3", "corona:(path:2)", "join1:(path:2),(path:2)x",
     "random:5,abc,1", "random:5,0.3", "assoc:3,01", "cycle:0"],
)
def test_family_parse_errors(text):
    with pytest.raises(ParseError):
        build_family(text)


def test_spec_validates_arity():
    with pytest.raises(ParseError):
        FamilySpec("path", (1, 2))
    with pytest.raises(ParseError):
        FamilySpec("corona", (), ())


@given(st.integers(1, 4), st.integers(1, 4))
def test_nested_specs_round_trip(a, b):
    spec = parse_family(f"join2:(corona:(path:{a}),(empty:{b})),(cycle:{max(a, 2)})")
    assert parse_family(str(spec)) == spec
    assert spec.build().order == a + a * b + max(a, 2)
